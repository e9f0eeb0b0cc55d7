//! The nodal plane-curve family, its double cover, and their symmetries.
//!
//! For each degree `n ≥ 4` the family member is the plane curve
//!
//! ```text
//! f_n = x^n + z^n + (n−2)·y^n − n·x·z·y^{n−2}
//!     + Σ_{i=2}^{⌊n/2⌋} a_i·((xz)^i·y^{n−2i} − i·x·z·y^{n−2} + (i−1)·y^n)
//! ```
//!
//! with symbolic parameters `a_i`.  Its geometry is certified here exactly:
//!
//! * the `n` points `(ζ^i : 1 : ζ^{−i})` (ζ a primitive n-th root of unity)
//!   are nodes — value and both first partials vanish identically in the
//!   parameters, and the quadratic Hessian form is nondegenerate;
//! * blowing up a node produces a palindromic binary quadric, so the two
//!   branches through the node are separated by an explicit discriminant;
//! * the double cover `w² = y² − xz` is branched exactly along the node
//!   branches — the conic meets the curve only at the nodes, certified by a
//!   resultant identity;
//! * the maps `α : (x:y:z:w) ↦ (ζx : y : ζ^{−1}z : w)`, `β : (x:y:z:w) ↦
//!   (z : y : x : w)` and the deck map `γ : w ↦ −w` generate an
//!   automorphism group of order `4n` with dihedral relations;
//! * fixed-point loci of the key elements are counted by exact divisions
//!   and resultants, feeding the Riemann–Hurwitz bookkeeping downstream.
//!
//! Everything is phrased in the affine chart `y = 1` (the curve meets
//! `y = 0` in finitely many points, handled separately where they matter).

use num_traits::Zero;

use crate::cyclo::Cyclo;
use crate::poly::{MPoly, Rx};
use crate::rat::{qi, Q};
use crate::reduce::{self, Relation};
use crate::resultant;
use crate::vars::{geom, param};

/// Largest parameter index used by the degree-`n` member: `a_2 … a_{⌊n/2⌋}`.
pub fn param_indices(n: u32) -> Vec<u32> {
    (2..=n / 2).collect()
}

/// The projective family member `f_n(x, y, z)` with symbolic parameters.
pub fn family_proj(n: u32) -> MPoly {
    assert!(n >= 4, "the family starts at degree 4");
    let (x, y, z) = (geom("x"), geom("y"), geom("z"));
    let mut f = MPoly::var_pow(x, n as u16)
        .add(&MPoly::var_pow(z, n as u16))
        .add(&MPoly::var_pow(y, n as u16).scale_q(&qi(n as i64 - 2)));
    let xzy = MPoly::var(x)
        .mul(&MPoly::var(z))
        .mul(&MPoly::var_pow(y, (n - 2) as u16));
    f = f.sub(&xzy.scale_q(&qi(n as i64)));
    for i in param_indices(n) {
        let ai = MPoly::var(param(i));
        let mut block = MPoly::var_pow(x, i as u16)
            .mul(&MPoly::var_pow(z, i as u16))
            .mul(&MPoly::var_pow(y, (n - 2 * i) as u16));
        block = block.sub(&xzy.scale_q(&qi(i as i64)));
        block = block.add(&MPoly::var_pow(y, n as u16).scale_q(&qi(i as i64 - 1)));
        f = f.add(&ai.mul(&block));
    }
    f
}

/// The affine chart `y = 1`: `f̂_n(x, z)`.
pub fn family_affine(n: u32) -> MPoly {
    family_proj(n).substitute_poly(&[(geom("y"), MPoly::one())])
}

/// The double-cover relation in the chart `y = 1`: `w² − (1 − xz)`.
pub fn cover_relation() -> MPoly {
    let (x, z, w) = (geom("x"), geom("z"), geom("w"));
    MPoly::var_pow(w, 2)
        .sub(&MPoly::one())
        .add(&MPoly::var(x).mul(&MPoly::var(z)))
}

/// Relations defining the cover in the chart `y = 1`, in reduction order:
/// first eliminate `w`, then reduce modulo the curve in `x`.
pub fn cover_relations(n: u32) -> Vec<Relation> {
    vec![
        Relation::new(cover_relation(), geom("w")),
        Relation::new(family_affine(n), geom("x")),
    ]
}

/// The `i`-th node `(ζ^i, ζ^{−i})` in the chart `y = 1`.
pub fn node(n: u32, i: u32) -> (Cyclo, Cyclo) {
    (
        Cyclo::root_of_unity(n, i as i64),
        Cyclo::root_of_unity(n, -(i as i64)),
    )
}

/// Evaluate a polynomial in `(x, z)` at a cyclotomic point, leaving the
/// parameters symbolic.
pub fn eval_xz(f: &MPoly, x0: &Cyclo, z0: &Cyclo) -> MPoly {
    f.substitute_poly(&[
        (geom("x"), MPoly::constant(x0.clone())),
        (geom("z"), MPoly::constant(z0.clone())),
    ])
}

/// Certify that all `n` marked points are nodes: the curve and both first
/// partials vanish identically in the parameters, while the Hessian
/// determinant is a nonzero polynomial in them (with a nonzero value at
/// the origin of parameter space as a concrete witness).
pub fn certify_nodes(n: u32) -> Result<String, String> {
    let f = family_affine(n);
    let (x, z) = (geom("x"), geom("z"));
    let fx = f.derivative(x);
    let fz = f.derivative(z);
    let hessian = f
        .derivative(x)
        .derivative(x)
        .mul(&f.derivative(z).derivative(z))
        .sub(&fx.derivative(z).mul(&fx.derivative(z)));
    let mut hess_witness = String::new();
    for i in 0..n {
        let (x0, z0) = node(n, i);
        for (label, g) in [("value", &f), ("d/dx", &fx), ("d/dz", &fz)] {
            let v = eval_xz(g, &x0, &z0);
            if !v.is_zero() {
                return Err(format!(
                    "node {i}: {label} does not vanish, residue {}",
                    reduce::clip(&v)
                ));
            }
        }
        let h = eval_xz(&hessian, &x0, &z0);
        if h.is_zero() {
            return Err(format!("node {i}: Hessian determinant vanishes identically"));
        }
        let at_zero = zero_params(&h, n);
        if at_zero.is_zero() {
            return Err(format!(
                "node {i}: Hessian degenerates at the parameter origin"
            ));
        }
        if i == 0 {
            hess_witness = format!("hessian at node 0: {}", h);
        }
    }
    Ok(format!("{n} nodes certified; {hess_witness}"))
}

/// Specialise all parameters of the degree-`n` member to zero.
pub fn zero_params(f: &MPoly, n: u32) -> MPoly {
    let binds: Vec<(u32, Q)> = param_indices(n).iter().map(|&i| (i, Q::zero())).collect();
    f.specialize(&binds)
}

/// Blow-up data at the node `(1, 1)`: substituting
/// `(x, z) = (1 + x₁, 1 + x₁·s)` makes the curve divisible by `x₁²`; the
/// exceptional restriction (`x₁ = 0`) of the quotient is the binary quadric
/// `p₀ + p₁·s + p₀·s²`.
pub struct NodeChart {
    /// `f̂(1 + x₁, 1 + x₁ s) / x₁²`.
    pub quotient: MPoly,
    /// Constant (and, by symmetry, quadratic) coefficient of the quadric.
    pub p0: MPoly,
    /// Linear coefficient of the quadric.
    pub p1: MPoly,
}

/// Compute the node chart at `(1, 1)` and certify the palindrome shape.
pub fn node_chart(n: u32) -> Result<NodeChart, String> {
    let f = family_affine(n);
    let (x1, s) = (geom("x1"), geom("s"));
    let shifted = f.substitute_poly(&[
        (
            geom("x"),
            MPoly::one().add(&MPoly::var(x1)),
        ),
        (
            geom("z"),
            MPoly::one().add(&MPoly::var(x1).mul(&MPoly::var(s))),
        ),
    ]);
    let quotient = shifted
        .exact_divide(&MPoly::var_pow(x1, 2))
        .map_err(|e| format!("curve is not divisible by x1^2 at the node: {e}"))?;
    let exceptional = quotient.substitute_poly(&[(x1, MPoly::zero())]);
    let coeffs = exceptional.univariate_coeffs(s);
    if coeffs.len() != 3 {
        return Err(format!(
            "exceptional restriction has degree {} in s, expected 2",
            coeffs.len() as i64 - 1
        ));
    }
    if coeffs[0] != coeffs[2] {
        return Err(format!(
            "exceptional quadric is not palindromic: {} vs {}",
            coeffs[0], coeffs[2]
        ));
    }
    Ok(NodeChart {
        quotient,
        p0: coeffs[0].clone(),
        p1: coeffs[1].clone(),
    })
}

/// Certify that the two node branches are separated (distinct tangents):
/// the discriminant `p₁² − 4p₀²` is a nonzero polynomial in the parameters.
pub fn certify_branch_separation(n: u32) -> Result<String, String> {
    let chart = node_chart(n)?;
    let disc = chart.p1.mul(&chart.p1).sub(&chart.p0.mul(&chart.p0).scale_q(&qi(4)));
    if disc.is_zero() {
        return Err("branch discriminant vanishes identically".to_string());
    }
    let at_zero = zero_params(&disc, n);
    if at_zero.is_zero() {
        return Err("branch discriminant vanishes at the parameter origin".to_string());
    }
    Ok(format!(
        "p0 = {}; p1 = {}; branch discriminant p1^2 - 4*p0^2 = {} (at a=0: {})",
        chart.p0, chart.p1, disc, at_zero
    ))
}

/// Certify that the conic `xz = 1` (the vanishing of `1 − xz` in the chart
/// `y = 1`) meets the curve exactly at the nodes, each with multiplicity
/// two: `Res_x(f̂, xz − 1) = c·(z^n − 1)²` for a nonzero constant `c`.
pub fn certify_cover_branch_divisor(n: u32) -> Result<String, String> {
    let f = family_affine(n);
    let (x, z) = (geom("x"), geom("z"));
    let conic = MPoly::var(x).mul(&MPoly::var(z)).sub(&MPoly::one());
    let res = resultant::resultant(&f, &conic, x);
    let zn1 = MPoly::var_pow(z, n as u16).sub(&MPoly::one());
    let target = zn1.mul(&zn1);
    let quo = res
        .exact_divide(&target)
        .map_err(|e| format!("resultant is not divisible by (z^n - 1)^2: {e}"))?;
    let c = quo
        .as_constant()
        .ok_or_else(|| format!("Res/(z^n-1)^2 is not constant: {}", reduce::clip(&quo)))?;
    if c.is_zero() {
        return Err("resultant vanishes identically".to_string());
    }
    Ok(format!("Res_x(curve, xz - 1) = {c} * (z^n - 1)^2"))
}

/// An automorphism of the affine cover chart, given by the images of
/// `x`, `z`, and `w`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoverMap {
    pub x_img: MPoly,
    pub z_img: MPoly,
    pub w_img: MPoly,
}

impl CoverMap {
    pub fn identity() -> Self {
        CoverMap {
            x_img: MPoly::var(geom("x")),
            z_img: MPoly::var(geom("z")),
            w_img: MPoly::var(geom("w")),
        }
    }

    /// Apply the map to a polynomial (substitute the coordinate images).
    pub fn apply(&self, f: &MPoly) -> MPoly {
        f.substitute_poly(&[
            (geom("x"), self.x_img.clone()),
            (geom("z"), self.z_img.clone()),
            (geom("w"), self.w_img.clone()),
        ])
    }

    /// Composition `self ∘ other` (apply `other` first).
    pub fn compose(&self, other: &CoverMap) -> CoverMap {
        CoverMap {
            x_img: other.apply(&self.x_img),
            z_img: other.apply(&self.z_img),
            w_img: other.apply(&self.w_img),
        }
    }
}

/// `α : (x, z, w) ↦ (ζ·x, ζ^{−1}·z, w)`.
pub fn alpha(n: u32) -> CoverMap {
    CoverMap {
        x_img: MPoly::var(geom("x")).scale(&Cyclo::root_of_unity(n, 1)),
        z_img: MPoly::var(geom("z")).scale(&Cyclo::root_of_unity(n, -1)),
        w_img: MPoly::var(geom("w")),
    }
}

/// `β : (x, z, w) ↦ (z, x, w)`.
pub fn beta() -> CoverMap {
    CoverMap {
        x_img: MPoly::var(geom("z")),
        z_img: MPoly::var(geom("x")),
        w_img: MPoly::var(geom("w")),
    }
}

/// The deck involution `γ : w ↦ −w` of the double cover.
pub fn gamma() -> CoverMap {
    CoverMap {
        x_img: MPoly::var(geom("x")),
        z_img: MPoly::var(geom("z")),
        w_img: MPoly::var(geom("w")).neg(),
    }
}

/// The odd part `m` of `n` (so `n = 2^k·m` with `m` odd).
pub fn odd_part(n: u32) -> u32 {
    let mut m = n;
    while m % 2 == 0 {
        m /= 2;
    }
    m
}

/// The twist root `ξ = ζ_n^m` (a primitive `2^k`-th root of unity).
pub fn twist_root(n: u32) -> Cyclo {
    Cyclo::root_of_unity(n, odd_part(n) as i64)
}

/// `σ = β∘α^m : (x, z, w) ↦ (ξ^{−1}·z, ξ·x, w)` with `m` the odd part of `n`.
///
/// For odd `n` this is just `β`; for even `n` it is the reflection whose
/// quotient carries the second Prym factor.
pub fn sigma(n: u32) -> CoverMap {
    let xi = twist_root(n);
    CoverMap {
        x_img: MPoly::var(geom("z")).scale(&xi.inv().expect("root of unity")),
        z_img: MPoly::var(geom("x")).scale(&xi),
        w_img: MPoly::var(geom("w")),
    }
}

/// Certify the automorphism group: generator relations, invariance of the
/// curve and the cover relation, and `4n` pairwise distinct words
/// `γ^c·β^b·α^k`.
pub fn certify_group(n: u32) -> Result<String, String> {
    let a = alpha(n);
    let b = beta();
    let g = gamma();
    let id = CoverMap::identity();

    // α^n = 1, β² = 1, γ² = 1.
    let mut an = id.clone();
    for _ in 0..n {
        an = an.compose(&a);
    }
    if an != id {
        return Err("α^n is not the identity".to_string());
    }
    if b.compose(&b) != id {
        return Err("β² is not the identity".to_string());
    }
    if g.compose(&g) != id {
        return Err("γ² is not the identity".to_string());
    }
    // Dihedral relation β·α·β = α^{−1}, and γ central.
    let mut a_inv = id.clone();
    for _ in 0..n - 1 {
        a_inv = a_inv.compose(&a);
    }
    if b.compose(&a).compose(&b) != a_inv {
        return Err("β·α·β ≠ α^{-1}".to_string());
    }
    if g.compose(&a) != a.compose(&g) || g.compose(&b) != b.compose(&g) {
        return Err("γ is not central".to_string());
    }

    // Invariance of the curve and the cover relation under the generators.
    let f = family_affine(n);
    let cover = cover_relation();
    for (name, m) in [("α", &a), ("β", &b), ("γ", &g), ("σ", &sigma(n))] {
        if m.apply(&f) != f {
            return Err(format!("{name} does not preserve the curve"));
        }
        if m.apply(&cover) != cover {
            return Err(format!("{name} does not preserve the cover relation"));
        }
    }

    // 4n distinct words γ^c β^b α^k.
    let mut words: Vec<CoverMap> = Vec::with_capacity(4 * n as usize);
    for c in 0..2 {
        for bb in 0..2 {
            for k in 0..n {
                let mut word = id.clone();
                for _ in 0..k {
                    word = word.compose(&a);
                }
                if bb == 1 {
                    word = b.compose(&word);
                }
                if c == 1 {
                    word = g.compose(&word);
                }
                words.push(word);
            }
        }
    }
    for i in 0..words.len() {
        for j in i + 1..words.len() {
            if words[i] == words[j] {
                return Err(format!("group words {i} and {j} coincide"));
            }
        }
    }
    Ok(format!(
        "group of order {} with dihedral relations, central deck map, curve and cover invariant",
        4 * n
    ))
}

/// A certified fixed-point count for one automorphism, on the base curve
/// and on the double cover.
#[derive(Clone, Debug)]
pub struct FixedPoints {
    pub base: u32,
    pub cover: u32,
    pub witness: String,
}

/// Fixed points of `β` (the reflection `x ↔ z`).
///
/// Odd `n`: `f̂(x, x) = (x − 1)²·h` with `deg h = n − 2`, plus the point
/// `(1 : 0 : −1)` at infinity; the cover sees two points over each root of
/// `h` and none over infinity (the sheets there are swapped).
/// Even `n`: `f̂(x, x) = (x² − 1)²·h₁` with `deg h₁ = n − 4`.
pub fn beta_fixed(n: u32) -> Result<FixedPoints, String> {
    let f = family_affine(n);
    let x = geom("x");
    let restricted = f.substitute_poly(&[(geom("z"), MPoly::var(x))]);
    let (node_factor, expected_deg) = if n % 2 == 1 {
        // (x − 1)²: the node the reflection axis passes through.
        let lin = MPoly::var(x).sub(&MPoly::one());
        (lin.mul(&lin), n - 2)
    } else {
        // (x² − 1)²: the axis passes through two nodes.
        let quad = MPoly::var_pow(x, 2).sub(&MPoly::one());
        (quad.mul(&quad), n - 4)
    };
    let h = restricted
        .exact_divide(&node_factor)
        .map_err(|e| format!("restriction to x = z is not divisible by the node factor: {e}"))?;
    if h.degree_in(x) as u32 != expected_deg {
        return Err(format!(
            "cofactor degree {} differs from expected {expected_deg}",
            h.degree_in(x)
        ));
    }
    // Roots of h must avoid the nodes on the axis (x = ±1) — otherwise a
    // fixed point would collide with a node.  h(±1) ≠ 0 as parameter
    // polynomials certifies this and also keeps w² = 1 − x² nonzero there.
    for v in [1i64, -1] {
        let val = h.substitute_poly(&[(x, MPoly::int(v))]);
        if val.is_zero() {
            return Err(format!("cofactor vanishes identically at x = {v}"));
        }
        if zero_params(&val, n).is_zero() {
            return Err(format!("cofactor vanishes at x = {v} at the parameter origin"));
        }
    }
    // Separability of the cofactor (distinct fixed points) at the origin.
    let h0 = zero_params(&h, n);
    if !resultant::is_squarefree(&h0, x).map_err(|e| e.to_string())? {
        return Err("cofactor is not squarefree at the parameter origin".to_string());
    }
    let (base, cover, infinity_note) = if n % 2 == 1 {
        // The projective point (1 : 0 : −1) lies on the curve: the terms
        // x^n + z^n cancel and every y-term vanishes.
        let on_curve = family_proj(n).substitute_poly(&[
            (geom("x"), MPoly::one()),
            (geom("y"), MPoly::zero()),
            (geom("z"), MPoly::int(-1)),
        ]);
        if !on_curve.is_zero() {
            return Err("(1 : 0 : -1) is not on the curve".to_string());
        }
        (
            expected_deg + 1,
            2 * expected_deg,
            "; (1:0:-1) fixed on the base, its two cover sheets swapped",
        )
    } else {
        (expected_deg, 2 * expected_deg, "")
    };
    Ok(FixedPoints {
        base,
        cover,
        witness: format!("axis cofactor h = {h}{infinity_note}"),
    })
}

/// Fixed points of `σ = β·α^m` for even `n`.
///
/// The fixed locus is `z = ξ·x`; the restriction `F(x) = f̂(x, ξx)` has
/// degree `n`, is separable, and shares no root with `x^n − 1` (so fixed
/// points avoid the nodes, and both cover sheets are genuinely fixed).
pub fn sigma_fixed(n: u32) -> Result<FixedPoints, String> {
    assert!(n % 2 == 0, "σ-fixed points are only needed for even degrees");
    let f = family_affine(n);
    let x = geom("x");
    let xi = twist_root(n);
    let restricted = f.substitute_poly(&[(geom("z"), MPoly::var(x).scale(&xi))]);
    if restricted.degree_in(x) as u32 != n {
        return Err(format!(
            "σ-axis restriction has degree {}, expected {n}",
            restricted.degree_in(x)
        ));
    }
    // No common root with x^n − 1 (node avoidance).  The resultant is a
    // polynomial in the parameters; its nonvanishing is witnessed at the
    // parameter origin, per the sampling convention for genericity.
    let xn1 = MPoly::var_pow(x, n as u16).sub(&MPoly::one());
    let r0 = zero_params(&restricted, n);
    let res0 = resultant::resultant(&r0, &xn1, x);
    if res0.is_zero() {
        return Err("σ-axis meets a node at the parameter origin".to_string());
    }
    // Separability at the parameter origin.
    if !resultant::is_squarefree(&r0, x).map_err(|e| e.to_string())? {
        return Err("σ-axis restriction is not squarefree at the parameter origin".to_string());
    }
    Ok(FixedPoints {
        base: n,
        cover: 2 * n,
        witness: format!(
            "F(x) = curve restricted to z = ξ·x, deg {n}; Res(F, x^n - 1) at a = 0: {res0}"
        ),
    })
}

/// Behaviour of the rotation `α` (and its power `α^{n/2}` for even `n`).
///
/// Odd `n`: `α` acts freely on base and cover — the only candidate fixed
/// points are the coordinate points, and none lies on the curve.
/// Even `n`: `α^{n/2}` fixes the `n` points of the `y = 0` section on the
/// base; on the cover the sheets over them are swapped, so the action there
/// is free.  The section is `x^n + a_{n/2}(xz)^{n/2} + z^n`, whose
/// separability reduces to the quadratic `T² + a_{n/2}·T + 1` being
/// squarefree.
pub fn alpha_fixed(n: u32) -> Result<FixedPoints, String> {
    let f = family_proj(n);
    // (0 : 1 : 0) must avoid the curve: f(0, 1, 0) = (n−2) + Σ aᵢ(i−1).
    let at_y = f.substitute_poly(&[
        (geom("x"), MPoly::zero()),
        (geom("y"), MPoly::one()),
        (geom("z"), MPoly::zero()),
    ]);
    if at_y.is_zero() || zero_params(&at_y, n).is_zero() {
        return Err("(0 : 1 : 0) lies on the curve".to_string());
    }
    // (1 : 0 : 0) and (0 : 0 : 1) give the monomials x^n and z^n: value 1.
    for (p, q) in [((1, 0, 0), "x"), ((0, 0, 1), "z")] {
        let v = f.substitute_poly(&[
            (geom("x"), MPoly::int(p.0)),
            (geom("y"), MPoly::int(p.1)),
            (geom("z"), MPoly::int(p.2)),
        ]);
        if v.as_q() != Some(qi(1)) {
            return Err(format!("coordinate point on the {q}-axis is on the curve"));
        }
    }
    if n % 2 == 1 {
        return Ok(FixedPoints {
            base: 0,
            cover: 0,
            witness: format!(
                "rotation is free: candidate fixed points off the curve, f(0,1,0) = {at_y}"
            ),
        });
    }
    // Even n: the y = 0 section.
    let section = f.substitute_poly(&[(geom("y"), MPoly::zero())]);
    let expected = MPoly::var_pow(geom("x"), n as u16)
        .add(&MPoly::var_pow(geom("z"), n as u16))
        .add(
            &MPoly::var(param(n / 2)).mul(
                &MPoly::var_pow(geom("x"), (n / 2) as u16)
                    .mul(&MPoly::var_pow(geom("z"), (n / 2) as u16)),
            ),
        );
    if section != expected {
        return Err(format!(
            "y = 0 section is {section}, expected x^n + a_(n/2)*(xz)^(n/2) + z^n"
        ));
    }
    // Separability of the section ⇔ T² + a_{n/2}T + 1 squarefree; its
    // discriminant a² − 4 is a nonzero parameter polynomial.
    let t = geom("t");
    let quad = MPoly::var_pow(t, 2)
        .add(&MPoly::var(param(n / 2)).mul(&MPoly::var(t)))
        .add(&MPoly::one());
    let disc = resultant::discriminant(&quad, t).map_err(|e| e.to_string())?;
    if disc.is_zero() || zero_params(&disc, n).is_zero() {
        return Err("section quadratic is not generically squarefree".to_string());
    }
    Ok(FixedPoints {
        base: n,
        cover: 0,
        witness: format!(
            "y = 0 section has {n} points, quadratic discriminant {disc}; cover sheets over them are swapped"
        ),
    })
}

/// Genus of the (normalised) base curve: `(n² − 5n + 2)/2` for `n ≥ 5`.
pub fn genus_base(n: u32) -> i64 {
    let n = n as i64;
    (n * n - 5 * n + 2) / 2
}

/// Genus of the double cover: `n² − 4n + 1` for `n ≥ 5`.
pub fn genus_cover(n: u32) -> i64 {
    let n = n as i64;
    n * n - 4 * n + 1
}

/// Dimension of the Prym variety: `n(n − 3)/2`.
pub fn prym_dim(n: u32) -> i64 {
    let n = n as i64;
    n * (n - 3) / 2
}

/// Certify the genus bookkeeping of the double cover via Riemann–Hurwitz:
/// `2·g(cover) − 2 = 2·(2·g(base) − 2) + 2n`, with the branch count `2n`
/// from the certified branch divisor.
pub fn certify_cover_genus(n: u32) -> Result<String, String> {
    if n < 5 {
        return Err("genus bookkeeping needs an irreducible curve (degree ≥ 5)".to_string());
    }
    let g = genus_base(n);
    let gt = genus_cover(n);
    let lhs = 2 * gt - 2;
    let rhs = 2 * (2 * g - 2) + 2 * n as i64;
    if lhs != rhs {
        return Err(format!("Riemann–Hurwitz fails: {lhs} ≠ {rhs}"));
    }
    if gt - g != prym_dim(n) {
        return Err(format!(
            "Prym dimension mismatch: {} ≠ {}",
            gt - g,
            prym_dim(n)
        ));
    }
    Ok(format!(
        "g(base) = {g}, g(cover) = {gt}, branch count 2n = {}, Prym dimension {}",
        2 * n,
        prym_dim(n)
    ))
}

/// Evaluate an expression on the cover: reduce modulo the cover relations
/// and certify the result is zero.
pub fn certify_on_cover(n: u32, expr: &Rx) -> Result<(), String> {
    reduce::certify_zero(&expr.num, &cover_relations(n)).map(|_| ()).map_err(|e| e.to_string())
}

/// Result of a [`smoothness_scan`]: either the scan ran and certified that
/// the singular locus is exactly the `n` marked nodes, or it was skipped
/// because its a-priori cost exceeded the configured budget.
#[derive(Clone, Debug)]
pub struct SmoothnessReport {
    pub n: u32,
    /// The fully specialized parameter values the scan ran at.
    pub parameter_values: Vec<(u32, Q)>,
    /// A-priori degree bound for the eliminants, `n(2n − 1)`.
    pub cost: u32,
    pub budget: u32,
    /// `true` when `cost > budget`; no verdict is implied then.
    pub skipped: bool,
    /// Number of singular points found (equals `n` on success).
    pub nodes_found: u32,
    pub witness: String,
}

/// Degree bound for the resultant eliminants of the singular-point system:
/// `deg_z f · deg_x f_x + deg_z f_x · deg_x f ≤ n(2n − 1)`.
pub fn smoothness_cost(n: u32) -> u32 {
    n * (2 * n - 1)
}

/// Scan the degree-`n` member at fully specialized parameters for singular
/// points, chart by chart, and certify that the singular locus is exactly
/// the set of `n` marked nodes.
///
/// Chart `y = 1`: the two eliminants `Res_z(f, f_x)` and `Res_z(f, f_z)`
/// (rigorous since `f` is monic in `z`) confine the `x`-coordinates of
/// singular points; stripping `gcd`s with `xⁿ − 1` must exhaust them.  For
/// each `x = ζᵃ` the exact common root locus in `z` is then computed over
/// the cyclotomic field and must be the single simple point `z = ζ⁻ᵃ`, with
/// nonzero Hessian determinant (an ordinary double point).  The line
/// `y = 0` is covered by the chart `z = 1` (no common root of the partials
/// there) plus the single point `(1 : 0 : 0)`, which is off the curve.
pub fn smoothness_scan(
    n: u32,
    parameter_values: &[(u32, Q)],
    budget: u32,
) -> Result<SmoothnessReport, String> {
    if n < 4 {
        return Err("the family starts at degree 4".to_string());
    }
    let cost = smoothness_cost(n);
    let mut report = SmoothnessReport {
        n,
        parameter_values: parameter_values.to_vec(),
        cost,
        budget,
        skipped: false,
        nodes_found: 0,
        witness: String::new(),
    };
    if cost > budget {
        report.skipped = true;
        report.witness = format!("eliminant degree bound {cost} exceeds budget {budget}");
        return Ok(report);
    }

    let (x, y, z) = (geom("x"), geom("y"), geom("z"));
    let fproj = family_proj(n).specialize(parameter_values);
    for i in param_indices(n) {
        if fproj.degree_in(param(i)) > 0 {
            return Err(format!("parameter a{i} was left symbolic"));
        }
    }

    // Chart y = 1.
    let f = fproj.substitute_poly(&[(y, MPoly::one())]);
    let fx = f.derivative(x);
    let fz = f.derivative(z);
    let h1 = resultant::resultant(&f, &fx, z);
    let h2 = resultant::resultant(&f, &fz, z);
    if h1.is_zero() || h2.is_zero() {
        return Err("an eliminant vanished identically: the member is non-reduced".to_string());
    }
    let mut g = resultant::gcd_univar(&h1, &h2, x).map_err(|e| format!("eliminant gcd: {e}"))?;
    let eliminant_degrees = (h1.degree_in(x), h2.degree_in(x), g.degree_in(x));
    let xn1 = MPoly::var_pow(x, n as u16).sub(&MPoly::one());
    loop {
        let d = resultant::gcd_univar(&g, &xn1, x).map_err(|e| format!("root-of-unity strip: {e}"))?;
        if d.degree_in(x) == 0 {
            break;
        }
        g = g
            .exact_divide(&d)
            .map_err(|e| format!("root-of-unity strip: {e}"))?;
    }
    if g.degree_in(x) > 0 {
        return Err(format!(
            "extra singularity: the eliminant keeps the non-cyclotomic factor {}",
            reduce::clip(&g)
        ));
    }

    // Exact root locus over each admissible x-coordinate.
    let hess = fx.derivative(x).mul(&fz.derivative(z)).sub(&fx.derivative(z).pow(2));
    let mut nodes_found = 0;
    for a in 0..n {
        let (x0, expected_z) = node(n, a);
        let bind = [(x, MPoly::constant(x0.clone()))];
        let fa = f.substitute_poly(&bind);
        let fxa = fx.substitute_poly(&bind);
        let fza = fz.substitute_poly(&bind);
        let mut common = resultant::gcd_univar(&fa, &fxa, z).map_err(|e| e.to_string())?;
        common = resultant::gcd_univar(&common, &fza, z).map_err(|e| e.to_string())?;
        match common.degree_in(z) {
            0 => continue, // no singular point over this root of unity
            1 => {
                let lead = common.coeff(&crate::poly::Mono::var(z, 1));
                let root = common
                    .substitute_poly(&[(z, MPoly::zero())])
                    .as_constant()
                    .ok_or_else(|| "root extraction failed".to_string())?
                    .neg()
                    .mul(&lead.inv().ok_or_else(|| "leading coefficient not invertible".to_string())?);
                if !root.sub(&expected_z).is_zero() {
                    return Err(format!(
                        "extra singularity over x = ζ^{a}: z = {root} instead of ζ^{}",
                        (n - a) % n
                    ));
                }
                let h = eval_xz(&hess, &x0, &expected_z)
                    .as_constant()
                    .ok_or_else(|| "Hessian evaluation failed".to_string())?;
                if h.is_zero() {
                    return Err(format!(
                        "the singular point over x = ζ^{a} is not an ordinary double point"
                    ));
                }
                nodes_found += 1;
            }
            d => {
                return Err(format!(
                    "extra singularity over x = ζ^{a}: common root locus has degree {d}"
                ));
            }
        }
    }
    if nodes_found != n {
        return Err(format!(
            "expected {n} nodes, found {nodes_found}: some marked points are smooth at these parameters"
        ));
    }

    // The line y = 0 in the chart z = 1.
    let g0 = fproj.substitute_poly(&[(y, MPoly::zero()), (z, MPoly::one())]);
    let g1 = fproj.derivative(x).substitute_poly(&[(y, MPoly::zero()), (z, MPoly::one())]);
    let g2 = fproj.derivative(y).substitute_poly(&[(y, MPoly::zero()), (z, MPoly::one())]);
    let mut inf = resultant::gcd_univar(&g0, &g1, x).map_err(|e| e.to_string())?;
    inf = resultant::gcd_univar(&inf, &g2, x).map_err(|e| e.to_string())?;
    if inf.degree_in(x) > 0 {
        return Err(format!(
            "extra singularity on the line at infinity: common factor {}",
            reduce::clip(&inf)
        ));
    }
    let corner = fproj.substitute_poly(&[
        (y, MPoly::zero()),
        (z, MPoly::zero()),
        (x, MPoly::one()),
    ]);
    if corner.is_zero() {
        return Err("the corner point (1 : 0 : 0) unexpectedly lies on the curve".to_string());
    }

    report.nodes_found = nodes_found;
    report.witness = format!(
        "singular locus = the {n} marked nodes, all ordinary; eliminant degrees {}/{}, gcd degree {}; line at infinity clean",
        eliminant_degrees.0, eliminant_degrees.1, eliminant_degrees.2
    );
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse;

    fn p(s: &str) -> MPoly {
        parse(s).unwrap()
    }

    #[test]
    fn quartic_member_matches_hand_expansion() {
        // n = 4: x⁴ + z⁴ + 2y⁴ − 4xzy² + a₂((xz)² − 2xzy² + y⁴).
        let f = family_proj(4);
        let expected = p(
            "x^4 + z^4 + 2*y^4 - 4*x*z*y^2 + a2*x^2*z^2 - 2*a2*x*z*y^2 + a2*y^4",
        );
        assert_eq!(f, expected);
        // Affine chart.
        let fa = family_affine(4);
        assert_eq!(fa, p("x^4 + z^4 + 2 - 4*x*z + a2*x^2*z^2 - 2*a2*x*z + a2"));
    }

    #[test]
    fn all_marked_points_are_nodes() {
        for n in 4..=8 {
            certify_nodes(n).unwrap_or_else(|e| panic!("n = {n}: {e}"));
        }
    }

    #[test]
    fn hessian_witnesses_at_first_node() {
        // Frozen values: 64·a₂ + 128 for n = 4 and 100·a₂ + 375 for n = 5.
        let f4 = family_affine(4);
        let (x, z) = (geom("x"), geom("z"));
        let hess = |f: &MPoly| {
            f.derivative(x)
                .derivative(x)
                .mul(&f.derivative(z).derivative(z))
                .sub(&f.derivative(x).derivative(z).mul(&f.derivative(x).derivative(z)))
        };
        let one = Cyclo::one();
        assert_eq!(eval_xz(&hess(&f4), &one, &one), p("64*a2 + 128"));
        let f5 = family_affine(5);
        assert_eq!(eval_xz(&hess(&f5), &one, &one), p("100*a2 + 375"));
    }

    #[test]
    fn node_chart_palindromes() {
        // Frozen: n = 4: p₀ = a₂ + 6, p₁ = 2(a₂ − 2);
        //         n = 5: p₀ = a₂ + 10, p₁ = 2a₂ − 5.
        let c4 = node_chart(4).unwrap();
        assert_eq!(c4.p0, p("a2 + 6"));
        assert_eq!(c4.p1, p("2*a2 - 4"));
        let c5 = node_chart(5).unwrap();
        assert_eq!(c5.p0, p("a2 + 10"));
        assert_eq!(c5.p1, p("2*a2 - 5"));
        for n in 6..=8 {
            certify_branch_separation(n).unwrap_or_else(|e| panic!("n = {n}: {e}"));
        }
    }

    #[test]
    fn branch_divisor_is_exactly_the_nodes() {
        for n in 4..=7 {
            certify_cover_branch_divisor(n).unwrap_or_else(|e| panic!("n = {n}: {e}"));
        }
    }

    #[test]
    fn group_relations_hold_up_to_degree_eight() {
        for n in 4..=8 {
            certify_group(n).unwrap_or_else(|e| panic!("n = {n}: {e}"));
        }
    }

    #[test]
    fn beta_fixed_point_cofactors_match_frozen_forms() {
        // n = 5: h = 2x³ + (a+4)x² + (2a+6)x + (a+3) with a = a₂.
        let fp5 = beta_fixed(5).unwrap();
        assert_eq!(fp5.base, 4);
        assert_eq!(fp5.cover, 6);
        assert!(fp5.witness.contains("2*x^3 + x^2*a2 + 4*x^2 + 2*x*a2 + 6*x + a2 + 3"));
        // n = 6: h₁ = (a₃+2)x² + (a₂+2a₃+4).
        let fp6 = beta_fixed(6).unwrap();
        assert_eq!(fp6.base, 2);
        assert_eq!(fp6.cover, 4);
        assert!(fp6.witness.contains("x^2*a3 + 2*x^2 + a2 + 2*a3 + 4"));
        // n = 7: h = 2x⁵ + (a₃+4)x⁴ + (2a₃+6)x³ + (a₂+3a₃+8)x² + (2a₂+4a₃+10)x + (a₂+2a₃+5).
        let fp7 = beta_fixed(7).unwrap();
        assert_eq!((fp7.base, fp7.cover), (6, 10));
        // n = 8: h₁ = (a₄+2)x⁴ + (a₃+2a₄+4)x² + (a₂+2a₃+3a₄+6).
        let fp8 = beta_fixed(8).unwrap();
        assert_eq!((fp8.base, fp8.cover), (4, 8));
        assert!(fp8
            .witness
            .contains("x^4*a4 + 2*x^4 + x^2*a3 + 2*x^2*a4 + 4*x^2 + a2 + 2*a3 + 3*a4 + 6"));
    }

    #[test]
    fn sigma_and_alpha_fixed_points() {
        for n in [6u32, 8] {
            let s = sigma_fixed(n).unwrap_or_else(|e| panic!("σ, n = {n}: {e}"));
            assert_eq!((s.base, s.cover), (n, 2 * n));
            let a = alpha_fixed(n).unwrap_or_else(|e| panic!("α, n = {n}: {e}"));
            assert_eq!((a.base, a.cover), (n, 0));
        }
        for n in [5u32, 7] {
            let a = alpha_fixed(n).unwrap();
            assert_eq!((a.base, a.cover), (0, 0));
        }
    }

    #[test]
    fn twist_root_choices() {
        // n = 6: ξ = ζ₆³ = −1; n = 8: ξ = ζ₈; n = 4: ξ = ζ₄.
        assert_eq!(twist_root(6), Cyclo::int(-1));
        assert_eq!(twist_root(8), Cyclo::root_of_unity(8, 1));
        assert_eq!(twist_root(4), Cyclo::root_of_unity(4, 1));
        assert_eq!(odd_part(12), 3);
    }

    #[test]
    fn cover_genus_bookkeeping() {
        for n in 5..=10 {
            certify_cover_genus(n).unwrap_or_else(|e| panic!("n = {n}: {e}"));
        }
        assert_eq!(genus_base(5), 1);
        assert_eq!(genus_cover(5), 6);
        assert_eq!(genus_base(6), 4);
        assert_eq!(genus_cover(6), 13);
        assert_eq!(prym_dim(8), 20);
    }

    #[test]
    fn smoothness_scan_certifies_sample_members() {
        // Parameter origin for degrees 4 and 5, a₂ = 1 for degree 6.
        for (n, params) in [
            (4u32, vec![(2, qi(0))]),
            (5, vec![(2, qi(0))]),
            (6, vec![(2, qi(1)), (3, qi(0))]),
        ] {
            let r = smoothness_scan(n, &params, 256).unwrap_or_else(|e| panic!("n = {n}: {e}"));
            assert!(!r.skipped);
            assert_eq!(r.nodes_found, n, "n = {n}");
            assert_eq!(r.cost, n * (2 * n - 1));
        }
    }

    #[test]
    fn smoothness_scan_respects_budget() {
        let r = smoothness_scan(8, &[(2, qi(0)), (3, qi(0)), (4, qi(0))], 100).unwrap();
        assert!(r.skipped);
        assert_eq!(r.nodes_found, 0);
        assert!(r.witness.contains("budget"));
    }

    #[test]
    fn smoothness_scan_needs_full_specialization() {
        let err = smoothness_scan(6, &[(2, qi(1))], 256).unwrap_err();
        assert!(err.contains("a3"), "{err}");
    }
}
