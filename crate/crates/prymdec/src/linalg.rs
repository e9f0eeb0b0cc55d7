//! Exact dense linear algebra over cyclotomic fields.
//!
//! The systems solved here are small (undetermined-coefficient setups and
//! basis matching for differentials), so plain Gaussian elimination with
//! exact [`Cyclo`] arithmetic is the right tool — no pivoting heuristics,
//! no size bounds, just field operations.

use crate::cyclo::Cyclo;

/// Reduced row echelon form in place; returns the pivot column per row.
pub fn rref(m: &mut [Vec<Cyclo>]) -> Vec<usize> {
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
        let Some(p) = (row..rows).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(row, p);
        let inv = m[row][col].inv().expect("nonzero pivot");
        for x in m[row].iter_mut() {
            *x = x.mul(&inv);
        }
        for r in 0..rows {
            if r != row && !m[r][col].is_zero() {
                let factor = m[r][col].clone();
                for c in 0..cols {
                    let t = m[row][c].mul(&factor);
                    m[r][c] = m[r][c].sub(&t);
                }
            }
        }
        pivots.push(col);
        row += 1;
    }
    pivots
}

/// Solve `A·x = b` exactly over the cyclotomics.
///
/// Returns `None` when inconsistent; free variables are set to zero.
pub fn solve(a: &[Vec<Cyclo>], b: &[Cyclo]) -> Option<Vec<Cyclo>> {
    let rows = a.len();
    assert_eq!(rows, b.len(), "row/rhs mismatch");
    let cols = if rows == 0 { 0 } else { a[0].len() };
    let mut m: Vec<Vec<Cyclo>> = a
        .iter()
        .zip(b)
        .map(|(row, rhs)| {
            let mut r = row.clone();
            r.push(rhs.clone());
            r
        })
        .collect();
    let pivots = rref(&mut m);
    if pivots.contains(&cols) {
        return None;
    }
    let mut x = vec![Cyclo::zero(); cols];
    for (r, &c) in pivots.iter().enumerate() {
        x[c] = m[r][cols].clone();
    }
    Some(x)
}

/// A basis of the right kernel of `A`.
pub fn kernel(a: &[Vec<Cyclo>]) -> Vec<Vec<Cyclo>> {
    let rows = a.len();
    if rows == 0 {
        return Vec::new();
    }
    let cols = a[0].len();
    let mut m = a.to_vec();
    let pivots = rref(&mut m);
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![Cyclo::zero(); cols];
            v[f] = Cyclo::one();
            for (r, &c) in pivots.iter().enumerate() {
                v[c] = m[r][f].neg();
            }
            v
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(n: u32, k: i64) -> Cyclo {
        Cyclo::root_of_unity(n, k)
    }

    #[test]
    fn solve_over_gaussian_rationals() {
        // (1 + i)x = 2i  =>  x = 1 + i.
        let a = vec![vec![Cyclo::one().add(&z(4, 1))]];
        let b = vec![z(4, 1).scale(&crate::rat::qi(2))];
        let x = solve(&a, &b).unwrap();
        assert_eq!(x[0], Cyclo::one().add(&z(4, 1)));
    }

    #[test]
    fn inconsistent_system_detected() {
        let a = vec![vec![Cyclo::one()], vec![Cyclo::one()]];
        let b = vec![Cyclo::zero(), Cyclo::one()];
        assert!(solve(&a, &b).is_none());
    }

    #[test]
    fn kernel_vectors_annihilate() {
        // Row (1, ζ₈, ζ₈²): kernel has dimension 2 over ℚ(ζ₈).
        let a = vec![vec![Cyclo::one(), z(8, 1), z(8, 2)]];
        let k = kernel(&a);
        assert_eq!(k.len(), 2);
        for v in &k {
            let mut dot = Cyclo::zero();
            for (x, y) in v.iter().zip(&a[0]) {
                dot = dot.add(&x.mul(y));
            }
            assert!(dot.is_zero());
        }
    }
}
