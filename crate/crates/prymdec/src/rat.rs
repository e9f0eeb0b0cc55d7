//! Exact rational scalars and small dense linear algebra over ℚ.
//!
//! Everything in this crate is exact: the scalar type is
//! [`num_rational::BigRational`], aliased to [`Q`].  This module adds the
//! handful of conveniences the rest of the crate needs — integer literals,
//! parsing/printing in `p/q` form, and Gaussian elimination for the small
//! dense systems that arise when descending cyclotomic levels and computing
//! minimal polynomials.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Exact rational number.
pub type Q = BigRational;

/// The rational `n`.
pub fn qi(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

/// The rational `n / d`.  Panics if `d == 0`.
pub fn qr(n: i64, d: i64) -> Q {
    Q::new(BigInt::from(n), BigInt::from(d))
}

/// Canonical text form: `p` for integers, `p/q` otherwise (q > 0, reduced).
pub fn fmt_q(q: &Q) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

/// Parse `p` or `p/q` (optionally signed).  Inverse of [`fmt_q`].
pub fn parse_q(s: &str) -> Result<Q, String> {
    let s = s.trim();
    if let Some((n, d)) = s.split_once('/') {
        let n: BigInt = n.trim().parse().map_err(|e| format!("bad numerator {n:?}: {e}"))?;
        let d: BigInt = d.trim().parse().map_err(|e| format!("bad denominator {d:?}: {e}"))?;
        if d.is_zero() {
            return Err(format!("zero denominator in {s:?}"));
        }
        Ok(Q::new(n, d))
    } else {
        let n: BigInt = s.parse().map_err(|e| format!("bad integer {s:?}: {e}"))?;
        Ok(Q::from_integer(n))
    }
}

/// Reduced row echelon form in place; returns the pivot column of each row.
///
/// Rows may have any length as long as they agree.  Pivots are normalised to
/// 1 and eliminated both above and below, so the result is canonical.
pub fn rref(m: &mut [Vec<Q>]) -> Vec<usize> {
    let rows = m.len();
    if rows == 0 {
        return Vec::new();
    }
    let cols = m[0].len();
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..cols {
        if row == rows {
            break;
        }
        // Find a nonzero pivot in this column at or below `row`.
        let Some(p) = (row..rows).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(row, p);
        let inv = m[row][col].recip();
        for x in m[row].iter_mut() {
            *x *= &inv;
        }
        for r in 0..rows {
            if r != row && !m[r][col].is_zero() {
                let factor = m[r][col].clone();
                for c in 0..cols {
                    let t = &m[row][c] * &factor;
                    m[r][c] -= t;
                }
            }
        }
        pivots.push(col);
        row += 1;
    }
    pivots
}

/// Solve `A · x = b` exactly.  Returns `None` when the system is
/// inconsistent; free variables (if any) are set to zero.
pub fn solve(a: &[Vec<Q>], b: &[Q]) -> Option<Vec<Q>> {
    let rows = a.len();
    assert_eq!(rows, b.len(), "row/rhs mismatch");
    let cols = if rows == 0 { 0 } else { a[0].len() };
    let mut m: Vec<Vec<Q>> = a
        .iter()
        .zip(b)
        .map(|(row, rhs)| {
            let mut r = row.clone();
            r.push(rhs.clone());
            r
        })
        .collect();
    let pivots = rref(&mut m);
    // Inconsistent iff some pivot lands in the RHS column.
    if pivots.contains(&cols) {
        return None;
    }
    let mut x = vec![Q::zero(); cols];
    for (r, &c) in pivots.iter().enumerate() {
        x[c] = m[r][cols].clone();
    }
    Some(x)
}

/// A basis of the right kernel of `A` (each vector has length = #columns).
pub fn kernel(a: &[Vec<Q>]) -> Vec<Vec<Q>> {
    let rows = a.len();
    if rows == 0 {
        return Vec::new();
    }
    let cols = a[0].len();
    let mut m: Vec<Vec<Q>> = a.to_vec();
    let pivots = rref(&mut m);
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![Q::zero(); cols];
            v[f] = Q::one();
            for (r, &c) in pivots.iter().enumerate() {
                v[c] = -m[r][f].clone();
            }
            v
        })
        .collect()
}

/// Dense division of univariate polynomials over ℚ (coefficients ascending).
///
/// Returns `(quotient, remainder)`.  Panics if the divisor is zero.
pub fn poly_div_rem(num: &[Q], den: &[Q]) -> (Vec<Q>, Vec<Q>) {
    let dd = poly_degree(den).expect("division by zero polynomial");
    let mut rem: Vec<Q> = num.to_vec();
    trim(&mut rem);
    if rem.len() <= dd {
        return (vec![], rem);
    }
    let mut quo = vec![Q::zero(); rem.len() - dd];
    let lc = den[dd].clone();
    while let Some(dn) = poly_degree(&rem) {
        if dn < dd {
            break;
        }
        let c = &rem[dn] / &lc;
        let shift = dn - dd;
        for (i, dc) in den.iter().enumerate().take(dd + 1) {
            let t = dc * &c;
            rem[shift + i] -= t;
        }
        quo[shift] = c;
        trim(&mut rem);
    }
    (quo, rem)
}

/// Degree of a dense polynomial, `None` for the zero polynomial.
pub fn poly_degree(p: &[Q]) -> Option<usize> {
    p.iter().rposition(|c| !c.is_zero())
}

/// Drop trailing zero coefficients.
pub fn trim(p: &mut Vec<Q>) {
    while p.last().map(|c| c.is_zero()).unwrap_or(false) {
        p.pop();
    }
}

/// Product of dense univariate polynomials.
pub fn poly_mul(a: &[Q], b: &[Q]) -> Vec<Q> {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut out = vec![Q::zero(); a.len() + b.len() - 1];
    for (i, ai) in a.iter().enumerate() {
        if ai.is_zero() {
            continue;
        }
        for (j, bj) in b.iter().enumerate() {
            let t = ai * bj;
            out[i + j] += t;
        }
    }
    out
}

/// Render a dense ℚ-polynomial in the indeterminate `var`, descending powers.
///
/// Used for minimal polynomials and other univariate certificates.
pub fn fmt_poly(p: &[Q], var: &str) -> String {
    let Some(deg) = poly_degree(p) else {
        return "0".to_string();
    };
    let mut out = String::new();
    for d in (0..=deg).rev() {
        let c = &p[d];
        if c.is_zero() {
            continue;
        }
        let mag = c.abs();
        let lead = out.is_empty();
        if lead {
            if c.is_negative() {
                out.push('-');
            }
        } else if c.is_negative() {
            out.push_str(" - ");
        } else {
            out.push_str(" + ");
        }
        let coeff = fmt_q(&mag);
        if d == 0 {
            out.push_str(&coeff);
        } else {
            if !mag.is_one() {
                out.push_str(&coeff);
                out.push('*');
            }
            out.push_str(var);
            if d > 1 {
                out.push_str(&format!("^{d}"));
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_round_trip() {
        for s in ["0", "7", "-3", "22/7", "-5/9"] {
            let q = parse_q(s).unwrap();
            assert_eq!(fmt_q(&q), s);
        }
        assert_eq!(parse_q("4/6").unwrap(), qr(2, 3));
        assert!(parse_q("1/0").is_err());
        assert!(parse_q("x").is_err());
    }

    #[test]
    fn solve_small_system() {
        // 2x + y = 5, x - y = 1  =>  x = 2, y = 1.
        let a = vec![vec![qi(2), qi(1)], vec![qi(1), qi(-1)]];
        let b = vec![qi(5), qi(1)];
        assert_eq!(solve(&a, &b).unwrap(), vec![qi(2), qi(1)]);
        // Inconsistent system.
        let a = vec![vec![qi(1), qi(1)], vec![qi(2), qi(2)]];
        let b = vec![qi(1), qi(3)];
        assert!(solve(&a, &b).is_none());
    }

    #[test]
    fn kernel_of_rank_one_matrix() {
        let a = vec![vec![qi(1), qi(2), qi(3)]];
        let k = kernel(&a);
        assert_eq!(k.len(), 2);
        for v in &k {
            let dot: Q = v.iter().zip(&a[0]).map(|(x, y)| x * y).sum();
            assert!(dot.is_zero());
        }
    }

    #[test]
    fn dense_division() {
        // (T^2 - 1) / (T - 1) = T + 1 rem 0.
        let num = vec![qi(-1), qi(0), qi(1)];
        let den = vec![qi(-1), qi(1)];
        let (q, r) = poly_div_rem(&num, &den);
        assert_eq!(q, vec![qi(1), qi(1)]);
        assert!(r.is_empty());
    }

    #[test]
    fn poly_formatting() {
        let p = vec![qi(-1), qi(1), qi(2)]; // 2T^2 + T - 1
        assert_eq!(fmt_poly(&p, "T"), "2*T^2 + T - 1");
        assert_eq!(fmt_poly(&[], "T"), "0");
    }
}
