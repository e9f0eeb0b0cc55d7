//! Zero-residue certification of identities modulo curve relations.
//!
//! The workhorse of the whole crate: a claim like "this coordinate change
//! maps that curve onto this model" is certified by reducing a polynomial
//! expression modulo an ordered list of *relations* (curve equations, each
//! with a designated main variable) and demanding a zero remainder.
//!
//! Reduction uses pseudo-division: when a relation is not monic in its
//! main variable, the remainder is premultiplied by the relation's leading
//! coefficient as many times as needed.  The certificate therefore shows
//! `lc₁^{e₁} ⋯ lc_k^{e_k} · expr ∈ (relations)`, together with the fact
//! that each leading coefficient is a nonzero polynomial — which is
//! exactly the generic-parameter statement the identities claim.  Failures
//! carry the nonzero residue as a witness instead of a bare `false`.

use thiserror::Error;

use crate::cyclo::Cyclo;
use crate::poly::{MPoly, PolyError, Rx};

/// A curve relation together with the variable it eliminates.
#[derive(Clone, Debug)]
pub struct Relation {
    pub poly: MPoly,
    pub main_var: usize,
}

impl Relation {
    pub fn new(poly: MPoly, main_var: usize) -> Self {
        assert!(
            poly.degree_in(main_var) > 0,
            "relation must involve its main variable"
        );
        Relation { poly, main_var }
    }
}

/// Why a certification failed.
#[derive(Debug, Error)]
pub enum ReduceError {
    /// The residue after full reduction is not zero.
    #[error("nonzero residue: {witness}")]
    ResidueNonzero { witness: String },
    /// The residue was expected to be nonzero (a nondegeneracy witness)
    /// but vanished.
    #[error("expected nonzero residue, but the expression vanished")]
    UnexpectedZero,
    /// The ratio of two reduced expressions failed to be a constant.
    #[error("ratio is not a constant on the curve: {detail}")]
    NonConstantRatio { detail: String },
    /// Underlying polynomial arithmetic failed.
    #[error(transparent)]
    Poly(#[from] PolyError),
}

/// Outcome of a successful reduction: the remainder plus, per relation,
/// the leading coefficient and the power of it the expression was
/// premultiplied by.
#[derive(Debug, Clone)]
pub struct Reduction {
    pub remainder: MPoly,
    pub multipliers: Vec<(MPoly, u32)>,
}

/// Reduce `expr` by each relation in order (pseudo-division).
///
/// Order matters: each relation is applied once, so callers list relations
/// so that later reductions do not reintroduce earlier main variables.
pub fn reduce(expr: &MPoly, relations: &[Relation]) -> Reduction {
    let mut rem = expr.clone();
    let mut multipliers = Vec::with_capacity(relations.len());
    for rel in relations {
        let (_, r, pow) = pseudo_div_rem(&rem, &rel.poly, rel.main_var);
        let lc = rel
            .poly
            .univariate_coeffs(rel.main_var)
            .pop()
            .expect("relation involves its main variable");
        multipliers.push((lc, pow));
        rem = r;
    }
    Reduction { remainder: rem, multipliers }
}

/// Pseudo-division of `f` by `g` with respect to `var`:
/// returns `(q, r, e)` with `lc(g)^e · f = q·g + r` and `deg_var r < deg_var g`.
pub fn pseudo_div_rem(f: &MPoly, g: &MPoly, var: usize) -> (MPoly, MPoly, u32) {
    let dg = g.degree_in(var);
    assert!(dg > 0, "pseudo-division needs a divisor involving the variable");
    let g_coeffs = g.univariate_coeffs(var);
    let lc_g = &g_coeffs[dg as usize];
    let mut rem = f.clone();
    let mut quo = MPoly::zero();
    let mut power = 0u32;
    loop {
        let dr = rem.degree_in(var);
        if rem.is_zero() || dr < dg {
            return (quo, rem, power);
        }
        let lc_r = rem.univariate_coeffs(var).pop().expect("nonzero remainder");
        // rem ← lc_g·rem − lc_r·var^{dr−dg}·g  (kills the top var-coefficient).
        let shift = MPoly::var_pow(var, dr - dg);
        rem = rem.mul(lc_g).sub(&lc_r.mul(&shift).mul(g));
        quo = quo.mul(lc_g).add(&lc_r.mul(&shift));
        power += 1;
    }
}

/// Certify that `expr` vanishes identically modulo the relations.
pub fn certify_zero(expr: &MPoly, relations: &[Relation]) -> Result<Reduction, ReduceError> {
    let red = reduce(expr, relations);
    if red.remainder.is_zero() {
        Ok(red)
    } else {
        Err(ReduceError::ResidueNonzero { witness: clip(&red.remainder) })
    }
}

/// Certify that two rational expressions agree on the curve:
/// `lhs.num · rhs.den − rhs.num · lhs.den ≡ 0` modulo the relations.
pub fn certify_equal(lhs: &Rx, rhs: &Rx, relations: &[Relation]) -> Result<Reduction, ReduceError> {
    let cross = lhs.num.mul(&rhs.den).sub(&rhs.num.mul(&lhs.den));
    certify_zero(&cross, relations)
}

/// Certify that `expr` does **not** vanish modulo the relations, returning
/// the nonzero residue as the witness.
pub fn certify_nonzero(expr: &MPoly, relations: &[Relation]) -> Result<MPoly, ReduceError> {
    let red = reduce(expr, relations);
    if red.remainder.is_zero() {
        Err(ReduceError::UnexpectedZero)
    } else {
        Ok(red.remainder)
    }
}

/// Certify that `num/den` is a *constant* on the curve and return it.
///
/// Both parts are reduced; the reduced numerator must be an exact constant
/// multiple of the reduced denominator.
pub fn certify_constant_ratio(
    num: &MPoly,
    den: &MPoly,
    relations: &[Relation],
) -> Result<Cyclo, ReduceError> {
    let n = reduce(num, relations).remainder;
    let d = reduce(den, relations).remainder;
    if d.is_zero() {
        return Err(ReduceError::NonConstantRatio {
            detail: "denominator reduces to zero".to_string(),
        });
    }
    let q = n.exact_divide(&d).map_err(|e| ReduceError::NonConstantRatio {
        detail: e.to_string(),
    })?;
    q.as_constant().ok_or_else(|| ReduceError::NonConstantRatio {
        detail: format!("ratio reduces to the non-constant {}", clip(&q)),
    })
}

/// Human-readable witness, clipped so report lines stay bounded.
pub fn clip(p: &MPoly) -> String {
    let s = p.to_string();
    if s.len() <= 160 {
        s
    } else {
        let head: String = s.chars().take(150).collect();
        format!("{head}… ({} terms)", p.num_terms())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse;
    use crate::vars::geom;

    fn p(s: &str) -> MPoly {
        parse(s).unwrap()
    }

    fn circle_relations() -> Vec<Relation> {
        // w² = 1 − x·z  and the "curve" x² = z.
        vec![
            Relation::new(p("w^2 - 1 + x*z"), geom("w")),
            Relation::new(p("x^2 - z"), geom("x")),
        ]
    }

    #[test]
    fn vanishing_identity_certified() {
        // On {w² = 1 − xz, x² = z}: w² − 1 + x³ ≡ 0.
        let expr = p("w^2 - 1 + x^3");
        let red = certify_zero(&expr, &circle_relations()).unwrap();
        assert!(red.remainder.is_zero());
    }

    #[test]
    fn nonzero_residue_reported() {
        let expr = p("w^2 - 1 + x^3 + 5");
        match certify_zero(&expr, &circle_relations()) {
            Err(ReduceError::ResidueNonzero { witness }) => assert_eq!(witness, "5"),
            other => panic!("expected residue, got {other:?}"),
        }
    }

    #[test]
    fn pseudo_division_tracks_multiplier() {
        // Dividing by 2x − 1 needs premultiplication by 2.
        let f = p("x^2");
        let g = p("2*x - 1");
        let (q, r, e) = pseudo_div_rem(&f, &g, geom("x"));
        // 2^e · x² = q·(2x−1) + r.
        let mut lhs = f.clone();
        for _ in 0..e {
            lhs = lhs.scale_q(&crate::rat::qi(2));
        }
        assert_eq!(lhs, q.mul(&g).add(&r));
        assert_eq!(e, 2);
        assert_eq!(r, p("1"));
    }

    #[test]
    fn equal_on_curve_with_denominators() {
        // On x² = z: x³/x = z (cross-multiplied certification).
        let rels = vec![Relation::new(p("x^2 - z"), geom("x"))];
        let lhs = Rx::new(p("x^3"), p("x"));
        let rhs = Rx::poly(p("z"));
        assert!(certify_equal(&lhs, &rhs, &rels).is_ok());
        let wrong = Rx::poly(p("z + 1"));
        assert!(certify_equal(&lhs, &wrong, &rels).is_err());
    }

    #[test]
    fn constant_ratio_extraction() {
        // On x² = z: (3z)/(x²) is the constant 3.
        let rels = vec![Relation::new(p("x^2 - z"), geom("x"))];
        let c = certify_constant_ratio(&p("3*z"), &p("x^2"), &rels).unwrap();
        assert_eq!(c, Cyclo::int(3));
        // x/1 is not constant.
        assert!(certify_constant_ratio(&p("x"), &p("1"), &rels).is_err());
    }
}
