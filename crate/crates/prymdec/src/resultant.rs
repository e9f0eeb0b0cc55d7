//! Resultants, discriminants, and specialised gcds — all exact.
//!
//! The resultant of two polynomials with respect to one variable is the
//! determinant of their Sylvester matrix, whose entries are polynomials in
//! the remaining variables.  Determinants are computed by the fraction-free
//! Bareiss elimination, where every division is exact by the Desnanot–
//! Jacobi identity, so no rational-function arithmetic is ever needed.
//!
//! Discriminants follow the classical convention
//! `disc(f) = (−1)^{d(d−1)/2} · Res(f, f′) / lc(f)`.

use crate::poly::{MPoly, PolyError};

/// The Sylvester matrix of `f` and `g` with respect to `var`.
///
/// Row block one holds the coefficients of `f` shifted `deg g` times, block
/// two the coefficients of `g` shifted `deg f` times; entries are
/// polynomials in the remaining variables.
pub fn sylvester(f: &MPoly, g: &MPoly, var: usize) -> Vec<Vec<MPoly>> {
    let df = f.degree_in(var) as usize;
    let dg = g.degree_in(var) as usize;
    let n = df + dg;
    let fc = f.univariate_coeffs(var);
    let gc = g.univariate_coeffs(var);
    let mut m = vec![vec![MPoly::zero(); n]; n];
    for row in 0..dg {
        for (k, c) in fc.iter().enumerate() {
            // Descending coefficient layout: column j holds the coefficient
            // of var^{n-1-j} in the shifted polynomial.
            m[row][row + df - k] = c.clone();
        }
    }
    for row in 0..df {
        for (k, c) in gc.iter().enumerate() {
            m[dg + row][row + dg - k] = c.clone();
        }
    }
    m
}

/// Determinant by fraction-free Bareiss elimination.
///
/// Works over any integral domain; each interior division by the previous
/// pivot is exact, and a failure of that exactness would indicate a bug,
/// so it is allowed to panic via `expect`.
pub fn bareiss_det(mut m: Vec<Vec<MPoly>>) -> MPoly {
    let n = m.len();
    if n == 0 {
        return MPoly::one();
    }
    let mut sign = false;
    let mut prev = MPoly::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            let Some(swap) = (k + 1..n).find(|&r| !m[r][k].is_zero()) else {
                return MPoly::zero();
            };
            m.swap(k, swap);
            sign = !sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let t = m[i][j].mul(&m[k][k]).sub(&m[i][k].mul(&m[k][j]));
                m[i][j] = t
                    .exact_divide(&prev)
                    .expect("Bareiss interior division is exact over an integral domain");
            }
            m[i][k] = MPoly::zero();
        }
        prev = m[k][k].clone();
    }
    let det = m[n - 1][n - 1].clone();
    if sign {
        det.neg()
    } else {
        det
    }
}

/// Resultant of `f` and `g` with respect to `var`.
///
/// Both inputs must actually involve `var`; the result is a polynomial in
/// the remaining variables.
pub fn resultant(f: &MPoly, g: &MPoly, var: usize) -> MPoly {
    assert!(
        f.degree_in(var) > 0 && g.degree_in(var) > 0,
        "resultant arguments must both involve the chosen variable"
    );
    bareiss_det(sylvester(f, g, var))
}

/// Discriminant of `f` with respect to `var`:
/// `(−1)^{d(d−1)/2} · Res(f, f′) / lc(f)`.
pub fn discriminant(f: &MPoly, var: usize) -> Result<MPoly, PolyError> {
    let d = f.degree_in(var) as u64;
    assert!(d >= 2, "discriminant needs degree at least 2");
    let fp = f.derivative(var);
    let res = resultant(f, &fp, var);
    let lc = f
        .univariate_coeffs(var)
        .pop()
        .expect("nonzero polynomial has a leading coefficient");
    let quo = res.exact_divide(&lc)?;
    if (d * (d - 1) / 2) % 2 == 1 {
        Ok(quo.neg())
    } else {
        Ok(quo)
    }
}

/// Monic gcd of two univariate polynomials whose coefficients are
/// cyclotomic constants (i.e. after full specialisation).
///
/// Returns the monic generator of the ideal (f, g) in ℚ(ζ)[var].
pub fn gcd_univar(f: &MPoly, g: &MPoly, var: usize) -> Result<MPoly, PolyError> {
    for h in [f, g] {
        for c in h.univariate_coeffs(var) {
            if c.as_constant().is_none() {
                return Err(PolyError::NotPolynomial(format!(
                    "gcd requires constant coefficients, got {c}"
                )));
            }
        }
    }
    let mut a = f.clone();
    let mut b = g.clone();
    while !b.is_zero() {
        let (_, r) = a.div_rem_univar(&b, var)?;
        a = b;
        b = r;
    }
    if a.is_zero() {
        return Ok(a);
    }
    let lc = a
        .univariate_coeffs(var)
        .pop()
        .unwrap()
        .as_constant()
        .expect("checked constant coefficients");
    Ok(a.scale(&lc.inv().expect("nonzero leading coefficient")))
}

/// True if the fully specialised univariate polynomial `f` is squarefree.
pub fn is_squarefree(f: &MPoly, var: usize) -> Result<bool, PolyError> {
    let g = gcd_univar(f, &f.derivative(var), var)?;
    Ok(g.total_degree() == Some(0))
}

/// Scale so the leading `var`-coefficient is 1 (constant coefficients only).
pub fn monic(f: &MPoly, var: usize) -> Result<MPoly, PolyError> {
    let lc = f
        .univariate_coeffs(var)
        .pop()
        .ok_or(PolyError::DivisionByZero)?
        .as_constant()
        .ok_or_else(|| PolyError::NotPolynomial("leading coefficient not constant".into()))?;
    Ok(f.scale(&lc.inv().expect("nonzero leading coefficient")))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse;
    use crate::rat::qi;
    use crate::vars::geom;

    fn p(s: &str) -> MPoly {
        parse(s).unwrap()
    }

    #[test]
    fn resultant_of_classic_pair() {
        // Res_x(x^2 - 1, x - 2) = (2)^2 - 1 = 3.
        let r = resultant(&p("x^2 - 1"), &p("x - 2"), geom("x"));
        assert_eq!(r, p("3"));
        // Shared root ⇒ resultant zero.
        let r = resultant(&p("x^2 - 1"), &p("x - 1"), geom("x"));
        assert!(r.is_zero());
    }

    #[test]
    fn discriminant_of_quadratic_and_cubic() {
        // disc(ax² + bx + c) = b² − 4ac, with (a,b,c) = (1, v, t).
        let f = p("x^2 + v*x + t");
        assert_eq!(discriminant(&f, geom("x")).unwrap(), p("v^2 - 4*t"));
        // disc(x³ + px + q) = −4p³ − 27q², with (p,q) = (v, t).
        let f = p("x^3 + v*x + t");
        assert_eq!(
            discriminant(&f, geom("x")).unwrap(),
            p("-4*v^3 - 27*t^2")
        );
    }

    #[test]
    fn bareiss_handles_zero_pivot() {
        // [[0,1],[1,0]] has determinant -1.
        let m = vec![
            vec![MPoly::zero(), MPoly::one()],
            vec![MPoly::one(), MPoly::zero()],
        ];
        assert_eq!(bareiss_det(m), MPoly::int(-1));
        // Singular matrix.
        let m = vec![
            vec![p("v"), p("v")],
            vec![p("t"), p("t")],
        ];
        assert!(bareiss_det(m).is_zero());
    }

    #[test]
    fn specialised_gcd_and_squarefreeness() {
        let f = p("x^3 - x"); // x(x-1)(x+1)
        let g = p("x^2 - 1");
        assert_eq!(gcd_univar(&f, &g, geom("x")).unwrap(), p("x^2 - 1"));
        assert!(is_squarefree(&f, geom("x")).unwrap());
        let sq = p("x^2 - 2*x + 1");
        assert!(!is_squarefree(&sq, geom("x")).unwrap());
        // Scaled inputs still give a monic gcd.
        let f = p("3*x^2 - 3");
        let g = p("6*x - 6");
        assert_eq!(gcd_univar(&f, &g, geom("x")).unwrap(), p("x - 1"));
        let _ = qi(0);
    }
}
