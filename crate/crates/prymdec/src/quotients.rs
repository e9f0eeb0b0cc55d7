//! Quotient curves of the family and its double cover.
//!
//! Three commuting involutions/rotations act on the cover `C̃ₙ : w² = 1 − xz`
//! over `C⁰ₙ : f̂ₙ(x, z) = 0`, and each quotient admits an explicit plane
//! model that this module reconstructs and certifies:
//!
//! * the **rotation quotient** `Xₙ = C⁰ₙ/⟨α⟩` in the symmetric coordinates
//!   `s = xⁿ`, `t = xz`, where `f̂ₙ` collapses to `s² + s·A(t) + tⁿ = 0` and
//!   completing the square yields the hyperelliptic model `u² = f⁰ₙ(t)` with
//!   `f⁰ₙ = (A²/4 − tⁿ)/(t − 1)²` an exact polynomial division;
//! * the **reflection quotient** `Yₙ = C⁰ₙ/⟨β⟩` in `u = x + z`, `v = xz`,
//!   where `xⁿ + zⁿ = Pₙ(u, v)` is the classical two-variable Newton
//!   recursion and `gₙ = Pₙ + tail` satisfies `gₙ(x + z, xz) = f̂ₙ`;
//! * for even `n`, the **twisted reflection quotient** `Zₙ = C⁰ₙ/⟨σ⟩` with
//!   `σ = βα^m`, in the twisted coordinates `u = x + ξ⁻¹z`, `v = xz` fixed
//!   by `σ`; here `xⁿ + zⁿ = Qₙ(u, v)` has coefficients in a 2-power
//!   cyclotomic field and `Qₙ` is found by solving the linear system of
//!   undetermined coefficients on the support `{uⁱvʲ : i + 2j = n}`.
//!
//! Genus bookkeeping never hardcodes a value: every quotient genus is the
//! unique integer solution of the Riemann–Hurwitz relation
//! `2g(source) − 2 = d·(2g(target) − 2) + r` fed with the certified fixed- or
//! ramification-point counts from [`crate::curves`], and the module refuses
//! to continue when no integer solution exists.

use crate::curves::{self, family_affine, FixedPoints};
use crate::cyclo::Cyclo;
use crate::poly::MPoly;
use crate::rat::{qi, Q};
use crate::resultant;
use crate::vars::{geom, param};
use num_traits::Zero;

/// The parameter tail `(n−2) − n·T + Σᵢ aᵢ·(Tⁱ − i·T + (i−1))` shared by the
/// affine family (at `T = xz`) and every quotient model (at `T = v` or `t`).
pub fn family_tail(n: u32, var: usize) -> MPoly {
    let t = MPoly::var(var);
    let mut out = MPoly::int(n as i64 - 2).sub(&t.scale_q(&qi(n as i64)));
    for i in 2..=(n / 2) {
        let a = MPoly::var(param(i));
        let block = MPoly::var_pow(var, i as u16)
            .sub(&t.scale_q(&qi(i as i64)))
            .add(&MPoly::int(i as i64 - 1));
        out = out.add(&a.mul(&block));
    }
    out
}

/// `A(t) = n(1 − t) − 2 + Σᵢ aᵢ(tⁱ − i·t + i − 1)`, the middle coefficient of
/// the rotation quotient `s² + s·A(t) + tⁿ = 0`.
pub fn a_poly(n: u32) -> MPoly {
    family_tail(n, geom("t"))
}

/// Certify the raw rotation-quotient identity
/// `(s² + s·A(t) + tⁿ)|_{s = xⁿ, t = xz} = xⁿ · f̂ₙ(x, z)` exactly.
pub fn certify_alpha_quotient(n: u32) -> Result<String, String> {
    let x = geom("x");
    let z = geom("z");
    let s = MPoly::var_pow(x, n as u16);
    let t = MPoly::var(x).mul(&MPoly::var(z));
    let a_of_t = a_poly(n).substitute_poly(&[(geom("t"), t.clone())]);
    let lhs = s.mul(&s).add(&s.mul(&a_of_t)).add(&t.pow(n));
    let rhs = s.mul(&family_affine(n));
    if lhs != rhs {
        return Err(format!(
            "rotation-quotient identity fails for n = {n}: difference {}",
            crate::reduce::clip(&lhs.sub(&rhs))
        ));
    }
    Ok(format!(
        "s² + s·A(t) + tⁿ at (s, t) = (xⁿ, xz) equals xⁿ·f̂_{n} exactly"
    ))
}

/// `f⁰ₙ(t) = (A(t)²/4 − tⁿ)/(t − 1)²` — the exactness of the division and the
/// degree `n − 2` are both part of the contract.
pub fn f0_poly(n: u32) -> Result<MPoly, String> {
    let t = geom("t");
    let a = a_poly(n);
    let num = a.mul(&a).scale_q(&qr(1, 4)).sub(&MPoly::var_pow(t, n as u16));
    let den = MPoly::var(t).sub(&MPoly::one()).pow(2);
    let f0 = num
        .exact_divide(&den)
        .map_err(|e| format!("(A²/4 − tⁿ) is not divisible by (t − 1)² for n = {n}: {e}"))?;
    let deg = f0.degree_in(t) as u32;
    if deg != n - 2 {
        return Err(format!(
            "f⁰_{n} has degree {deg} in t, expected {}",
            n - 2
        ));
    }
    Ok(f0)
}

/// Certify that `f⁰ₙ` is separable: its `t`-discriminant is a nonzero
/// polynomial in the parameters, witnessed by a nonzero value at a sample
/// rational parameter point (the origin unless the leading coefficient
/// degenerates there).
pub fn certify_f0_separability(n: u32) -> Result<String, String> {
    let f0 = f0_poly(n)?;
    let t = geom("t");
    let sample = separability_sample(n);
    let at_sample = f0.specialize(&sample);
    if at_sample.degree_in(t) != f0.degree_in(t) {
        return Err(format!(
            "leading coefficient of f⁰_{n} vanishes at the sample point"
        ));
    }
    let disc = resultant::discriminant(&at_sample, t)
        .map_err(|e| format!("discriminant of specialised f⁰_{n} failed: {e}"))?;
    let value = disc
        .as_q()
        .ok_or_else(|| format!("specialised discriminant of f⁰_{n} is not rational"))?;
    if value.is_zero() {
        return Err(format!(
            "f⁰_{n} is inseparable at the sample parameter point"
        ));
    }
    Ok(format!(
        "disc_t f⁰_{n} at {} equals {} ≠ 0",
        fmt_sample(&sample),
        crate::rat::fmt_q(&value)
    ))
}

/// Sample parameter point used for separability witnesses.  The origin works
/// for every degree except `n = 7`, where `disc f⁰₇` happens to vanish at
/// `a₂ = a₃ = 0`, so a nearby rational point is used instead.
pub fn separability_sample(n: u32) -> Vec<(u32, Q)> {
    (2..=(n / 2))
        .map(|i| (i, if n == 7 && i == 2 { qi(1) } else { qi(0) }))
        .collect()
}

fn fmt_sample(sample: &[(u32, Q)]) -> String {
    let parts: Vec<String> = sample
        .iter()
        .map(|(i, q)| format!("a{i}={}", crate::rat::fmt_q(q)))
        .collect();
    format!("({})", parts.join(", "))
}

/// `Pₙ(u, v)` with `Pₙ(x + z, xz) = xⁿ + zⁿ`: `P₀ = 2`, `P₁ = u`,
/// `Pₘ = u·Pₘ₋₁ − v·Pₘ₋₂`.
pub fn newton_p(n: u32) -> MPoly {
    let u = MPoly::var(geom("u"));
    let v = MPoly::var(geom("v"));
    let mut prev = MPoly::int(2);
    let mut cur = u.clone();
    if n == 0 {
        return prev;
    }
    for _ in 1..n {
        let next = u.mul(&cur).sub(&v.mul(&prev));
        prev = cur;
        cur = next;
    }
    cur
}

/// Certify the Newton identity `Pₙ(x + z, xz) = xⁿ + zⁿ`.
pub fn certify_newton_p(n: u32) -> Result<String, String> {
    let x = geom("x");
    let z = geom("z");
    let lhs = newton_p(n).substitute_poly(&[
        (geom("u"), MPoly::var(x).add(&MPoly::var(z))),
        (geom("v"), MPoly::var(x).mul(&MPoly::var(z))),
    ]);
    let rhs = MPoly::var_pow(x, n as u16).add(&MPoly::var_pow(z, n as u16));
    if lhs != rhs {
        return Err(format!("Newton identity fails for n = {n}"));
    }
    Ok(format!("P_{n}(x + z, xz) = xⁿ + zⁿ"))
}

/// `gₙ(u, v) = Pₙ(u, v) + tail(v)` — the plane model of the reflection
/// quotient `Yₙ` (and, after `v → 1 − w²`, of its cover `Ỹₙ`).
pub fn g_poly(n: u32) -> MPoly {
    newton_p(n).add(&family_tail(n, geom("v")))
}

/// Certify `gₙ(x + z, xz) = f̂ₙ(x, z)`.
pub fn certify_beta_quotient(n: u32) -> Result<String, String> {
    let x = geom("x");
    let z = geom("z");
    let lhs = g_poly(n).substitute_poly(&[
        (geom("u"), MPoly::var(x).add(&MPoly::var(z))),
        (geom("v"), MPoly::var(x).mul(&MPoly::var(z))),
    ]);
    if lhs != family_affine(n) {
        return Err(format!("reflection-quotient identity fails for n = {n}"));
    }
    Ok(format!("g_{n}(x + z, xz) = f̂_{n}"))
}

/// `Qₙ(u, v)` with `Qₙ(x + ξ⁻¹z, xz) = xⁿ + zⁿ`, where `ξ = ζₙ^m` has 2-power
/// order.  The coefficients are found by *undetermined coefficients*: the
/// ansatz is supported on `{uⁱvʲ : i + 2j = n}` and matching the expansion of
/// `Σ qⱼ (x + ξ⁻¹z)^{n−2j}(xz)ʲ` against `xⁿ + zⁿ` gives a linear system over
/// `ℚ(ζ_{2^k})`, solved exactly.  The solution is verified by substitution
/// before being returned, so a successful return *is* the certificate.
pub fn twisted_q(n: u32) -> Result<MPoly, String> {
    if n % 2 != 0 {
        return Err(format!("the twisted quotient needs even n, got {n}"));
    }
    let c = curves::twist_root(n)
        .inv()
        .expect("a root of unity is invertible");
    let x = geom("x");
    let z = geom("z");
    let base = MPoly::var(x).add(&MPoly::var(z).scale(&c));
    let xz = MPoly::var(x).mul(&MPoly::var(z));
    let cols: Vec<MPoly> = (0..=(n / 2))
        .map(|j| base.pow(n - 2 * j).mul(&xz.pow(j)))
        .collect();
    // Row for each monomial x^a z^(n−a); right-hand side is xⁿ + zⁿ.
    let mut matrix = Vec::with_capacity(n as usize + 1);
    let mut rhs = Vec::with_capacity(n as usize + 1);
    for a in 0..=n {
        let mut mono = crate::poly::Mono::var(x, a as u16);
        mono.set_exponent(z, (n - a) as u16);
        matrix.push(cols.iter().map(|p| p.coeff(&mono)).collect::<Vec<_>>());
        rhs.push(if a == 0 || a == n {
            Cyclo::one()
        } else {
            Cyclo::zero()
        });
    }
    let sol = crate::linalg::solve(&matrix, &rhs)
        .ok_or_else(|| format!("no twisted Newton polynomial Q_{n} exists on the expected support"))?;
    let u = geom("u");
    let v = geom("v");
    let mut q = MPoly::zero();
    for (j, qj) in sol.iter().enumerate() {
        let mut mono = crate::poly::Mono::var(u, (n - 2 * j as u32) as u16);
        mono.set_exponent(v, j as u16);
        q = q.add(&MPoly::monomial(mono, qj.clone()));
    }
    // Verify the defining identity before handing the polynomial out.
    let subst = q.substitute_poly(&[(u, base), (v, xz)]);
    let target = MPoly::var_pow(x, n as u16).add(&MPoly::var_pow(z, n as u16));
    if subst != target {
        return Err(format!(
            "solved Q_{n} fails its defining identity: difference {}",
            crate::reduce::clip(&subst.sub(&target))
        ));
    }
    Ok(q)
}

/// `hₙ(u, v) = Qₙ(u, v) + tail(v)` — the plane model of the twisted
/// reflection quotient `Zₙ` (even `n`), with coefficients in `ℚ(ζ_{2^k})`.
pub fn h_poly(n: u32) -> Result<MPoly, String> {
    Ok(twisted_q(n)?.add(&family_tail(n, geom("v"))))
}

/// The degree-8 twisted model after the variable rescaling `u → ζ₁₆³·u`,
/// which lands every coefficient back in `ℚ`.  The rationality is checked.
pub fn h8_rescaled() -> Result<MPoly, String> {
    let h = h_poly(8)?;
    let zeta = Cyclo::root_of_unity(16, 3);
    let scaled_u = MPoly::var(geom("u")).scale(&zeta);
    let resc = h.substitute_poly(&[(geom("u"), scaled_u)]);
    for (_, c) in resc.terms() {
        if c.as_q().is_none() {
            return Err(format!(
                "rescaled h₈ should be rational but has coefficient {c}"
            ));
        }
    }
    Ok(resc)
}

/// Certify the twisted-quotient identity and the `σ`-invariance of the
/// twisted coordinates: `u = x + ξ⁻¹z` and `v = xz` are both fixed by
/// `σ : (x, z) ↦ (ξ⁻¹z, ξx)`, and `hₙ(x + ξ⁻¹z, xz) = f̂ₙ`.
pub fn certify_sigma_quotient(n: u32) -> Result<String, String> {
    if n % 2 != 0 {
        return Err(format!("σ-quotient certification needs even n, got {n}"));
    }
    let x = geom("x");
    let z = geom("z");
    let c = curves::twist_root(n)
        .inv()
        .expect("a root of unity is invertible");
    let u_expr = MPoly::var(x).add(&MPoly::var(z).scale(&c));
    let v_expr = MPoly::var(x).mul(&MPoly::var(z));
    let sg = curves::sigma(n);
    for (label, expr) in [("u = x + ξ⁻¹z", &u_expr), ("v = xz", &v_expr)] {
        let pulled = expr.substitute_poly(&[(x, sg.x_img.clone()), (z, sg.z_img.clone())]);
        if pulled != *expr {
            return Err(format!("{label} is not σ-invariant for n = {n}"));
        }
    }
    let h = h_poly(n)?;
    let lhs = h.substitute_poly(&[(geom("u"), u_expr), (geom("v"), v_expr)]);
    if lhs != family_affine(n) {
        return Err(format!("twisted-quotient identity fails for n = {n}"));
    }
    Ok(format!(
        "u, v are σ-invariant and h_{n}(x + ξ⁻¹z, xz) = f̂_{n}"
    ))
}

/// Ramification of the hyperelliptic involution quotient `X̃ₙ → Ẽₙ`
/// (the action `(u, w) ↦ (−u, −w)` on `u² = f⁰ₙ(1 − w²)`).
///
/// An affine fixed point would force `u = w = 0`, hence `f⁰ₙ(1) = 0`; the
/// certificate exhibits `f⁰ₙ(1)` as a polynomial in the parameters that is
/// nonzero (witnessed at the origin), so no affine fixed point exists for
/// generic parameters.  At infinity the two points are fixed exactly when
/// `n` is odd (the leading sheet symmetry `(−1)^{n−1}` is trivial), giving
/// ramification count 2 for odd `n` and 0 for even `n`.
pub fn delta_gamma_ramification(n: u32) -> Result<FixedPoints, String> {
    let f0 = f0_poly(n)?;
    let value = f0.substitute_poly(&[(geom("t"), MPoly::one())]);
    if value.is_zero() {
        return Err(format!(
            "f⁰_{n}(1) vanishes identically; affine fixed points everywhere"
        ));
    }
    let origin: Vec<(u32, Q)> = (2..=(n / 2)).map(|i| (i, qi(0))).collect();
    let at_origin = value
        .specialize(&origin)
        .as_q()
        .ok_or_else(|| format!("f⁰_{n}(1) did not specialise to a rational"))?;
    if at_origin.is_zero() {
        return Err(format!(
            "f⁰_{n}(1) vanishes at the origin; pick a different witness point"
        ));
    }
    let count = if n % 2 == 1 { 2 } else { 0 };
    let infinity = if n % 2 == 1 {
        "the two points at infinity are fixed (odd degree)"
    } else {
        "the two points at infinity are swapped (even degree)"
    };
    Ok(FixedPoints {
        base: count,
        cover: count,
        witness: format!(
            "f⁰_{n}(1) = {} is nonzero (value {} at the origin), so no affine fixed point; {}",
            crate::reduce::clip(&value),
            crate::rat::fmt_q(&at_origin),
            infinity
        ),
    })
}

/// Solve the Riemann–Hurwitz relation `2·g_src − 2 = d·(2·g − 2) + r` for the
/// target genus `g`, refusing non-integral or negative solutions.
pub fn hurwitz_genus(g_src: i64, degree: i64, ramification: i64) -> Result<i64, String> {
    if degree <= 0 {
        return Err(format!("cover degree must be positive, got {degree}"));
    }
    let num = 2 * g_src - 2 - ramification + 2 * degree;
    if num % (2 * degree) != 0 {
        return Err(format!(
            "no integral genus: 2·{g_src} − 2 = {degree}·(2g − 2) + {ramification} has no integer solution"
        ));
    }
    let g = num / (2 * degree);
    if g < 0 {
        return Err(format!(
            "negative genus {g} from (g_src, d, r) = ({g_src}, {degree}, {ramification})"
        ));
    }
    Ok(g)
}

fn genus_pair_base(n: u32) -> i64 {
    curves::genus_base(n)
}

fn genus_pair_cover(n: u32) -> i64 {
    curves::genus_cover(n)
}

/// Genus of the rotation quotient `Xₙ = C⁰ₙ/⟨α⟩` via Riemann–Hurwitz with the
/// certified count of `α`-fixed points on the base.
pub fn genus_x(n: u32) -> Result<i64, String> {
    require_range(n)?;
    let fixed = curves::alpha_fixed(n)?;
    hurwitz_genus(genus_pair_base(n), n as i64, fixed.base as i64)
}

/// Genus of `X̃ₙ = C̃ₙ/⟨α̃⟩` (the `α`-action on the cover is free).
pub fn genus_xtilde(n: u32) -> Result<i64, String> {
    require_range(n)?;
    let fixed = curves::alpha_fixed(n)?;
    hurwitz_genus(genus_pair_cover(n), n as i64, fixed.cover as i64)
}

/// Genus of `Ẽₙ = X̃ₙ/⟨δγ⟩`, the curve whose Jacobian is the common elliptic
/// (or small-genus) factor of the decomposition.
pub fn genus_etilde(n: u32) -> Result<i64, String> {
    require_range(n)?;
    let r = delta_gamma_ramification(n)?;
    hurwitz_genus(genus_xtilde(n)?, 2, r.cover as i64)
}

/// Genus of the reflection quotient `Yₙ = C⁰ₙ/⟨β⟩`.
pub fn genus_y(n: u32) -> Result<i64, String> {
    require_range(n)?;
    let fixed = curves::beta_fixed(n)?;
    hurwitz_genus(genus_pair_base(n), 2, fixed.base as i64)
}

/// Genus of `Ỹₙ = C̃ₙ/⟨β̃⟩`.
pub fn genus_ytilde(n: u32) -> Result<i64, String> {
    require_range(n)?;
    let fixed = curves::beta_fixed(n)?;
    hurwitz_genus(genus_pair_cover(n), 2, fixed.cover as i64)
}

/// Genus of the twisted reflection quotient `Zₙ = C⁰ₙ/⟨σ⟩` (even `n`).
pub fn genus_z(n: u32) -> Result<i64, String> {
    require_range(n)?;
    let fixed = curves::sigma_fixed(n)?;
    hurwitz_genus(genus_pair_base(n), 2, fixed.base as i64)
}

/// Genus of `Z̃ₙ = C̃ₙ/⟨σ̃⟩` (even `n`).
pub fn genus_ztilde(n: u32) -> Result<i64, String> {
    require_range(n)?;
    let fixed = curves::sigma_fixed(n)?;
    hurwitz_genus(genus_pair_cover(n), 2, fixed.cover as i64)
}

fn require_range(n: u32) -> Result<(), String> {
    if n < 5 {
        Err(format!(
            "Hurwitz genus bookkeeping needs n ≥ 5 (n = 4 is handled by its own elliptic chain), got {n}"
        ))
    } else {
        Ok(())
    }
}

/// A certified plane model of one quotient curve.
#[derive(Clone, Debug)]
pub struct QuotientModel {
    /// Short machine name, e.g. `"x_model"`, `"ytilde_model"`.
    pub name: String,
    /// Defining polynomial, written so that the model is `equation = 0`.
    pub equation: MPoly,
    /// Genus, derived via Riemann–Hurwitz from certified fixed-point counts.
    pub genus: i64,
    /// How the model was obtained (human-readable derivation notes).
    pub provenance: Vec<String>,
}

/// `u² = f⁰ₙ(t)`: the hyperelliptic model of the rotation quotient `Xₙ`.
pub fn x_model(n: u32) -> Result<QuotientModel, String> {
    let f0 = f0_poly(n)?;
    let eq = MPoly::var_pow(geom("u"), 2).sub(&f0);
    Ok(QuotientModel {
        name: format!("x{n}"),
        equation: eq,
        genus: genus_x(n)?,
        provenance: vec![
            "rotation quotient in s = xⁿ, t = xz".into(),
            "complete the square: u = s + A(t)/2, u² = A²/4 − tⁿ = (t−1)²·f⁰(t)".into(),
            "rescale u by (t−1) to remove the square factor".into(),
        ],
    })
}

/// `u² = f⁰ₙ(1 − w²)`: the pullback model of `X̃ₙ` on the cover.
pub fn xtilde_model(n: u32) -> Result<QuotientModel, String> {
    let f0 = f0_poly(n)?;
    let one_minus_w2 = MPoly::one().sub(&MPoly::var_pow(geom("w"), 2));
    let eq = MPoly::var_pow(geom("u"), 2).sub(&f0.substitute_poly(&[(geom("t"), one_minus_w2)]));
    Ok(QuotientModel {
        name: format!("xtilde{n}"),
        equation: eq,
        genus: genus_xtilde(n)?,
        provenance: vec!["substitute the cover relation t = xz = 1 − w² into the Xₙ model".into()],
    })
}

/// `U² = W·f⁰ₙ(1 − W)`: the hyperelliptic model of `Ẽₙ = X̃ₙ/⟨δγ⟩`, reached
/// through the invariants `(W, U) = (w², uw)`.
pub fn etilde_model(n: u32) -> Result<QuotientModel, String> {
    let f0 = f0_poly(n)?;
    let w_var = MPoly::var(geom("W"));
    let rhs = w_var.mul(&f0.substitute_poly(&[(geom("t"), MPoly::one().sub(&w_var))]));
    let eq = MPoly::var_pow(geom("U"), 2).sub(&rhs);
    let genus = genus_etilde(n)?;
    // Cross-check: the right-hand side has degree n − 1 in W, so as long as
    // it is separable the hyperelliptic genus ⌊(deg − 1)/2⌋ must agree with
    // the Hurwitz-derived value.
    let deg = rhs.degree_in(geom("W")) as i64;
    if deg != n as i64 - 1 {
        return Err(format!(
            "W·f⁰_{n}(1 − W) has degree {deg}, expected {}",
            n - 1
        ));
    }
    let hyper = (deg - 1) / 2;
    if hyper != genus {
        return Err(format!(
            "hyperelliptic genus {hyper} (degree {deg}) disagrees with Hurwitz genus {genus} for Ẽ_{n}"
        ));
    }
    Ok(QuotientModel {
        name: format!("etilde{n}"),
        equation: eq,
        genus,
        provenance: vec![
            "quotient of X̃ₙ by (u, w) ↦ (−u, −w) in the invariants (W, U) = (w², uw)".into(),
            "U² = w²·u² = W·f⁰(1 − W)".into(),
        ],
    })
}

/// `gₙ(u, v) = 0`: the plane model of the reflection quotient `Yₙ`.
pub fn y_model(n: u32) -> Result<QuotientModel, String> {
    Ok(QuotientModel {
        name: format!("y{n}"),
        equation: g_poly(n),
        genus: genus_y(n)?,
        provenance: vec!["reflection quotient in u = x + z, v = xz".into()],
    })
}

/// `gₙ(u, 1 − w²) = 0`: the plane model of `Ỹₙ`.
pub fn ytilde_model(n: u32) -> Result<QuotientModel, String> {
    let one_minus_w2 = MPoly::one().sub(&MPoly::var_pow(geom("w"), 2));
    Ok(QuotientModel {
        name: format!("ytilde{n}"),
        equation: g_poly(n).substitute_poly(&[(geom("v"), one_minus_w2)]),
        genus: genus_ytilde(n)?,
        provenance: vec!["substitute the cover relation v = 1 − w² into the Yₙ model".into()],
    })
}

/// `hₙ(u, v) = 0`: the plane model of the twisted quotient `Zₙ` (even `n`).
pub fn z_model(n: u32) -> Result<QuotientModel, String> {
    Ok(QuotientModel {
        name: format!("z{n}"),
        equation: h_poly(n)?,
        genus: genus_z(n)?,
        provenance: vec![
            "twisted reflection quotient in u = x + ξ⁻¹z, v = xz".into(),
            "coefficients live in the 2-power cyclotomic field ℚ(ζ_{2^k})".into(),
        ],
    })
}

/// `hₙ(u, 1 − w²) = 0`: the plane model of `Z̃ₙ` (even `n`).
pub fn ztilde_model(n: u32) -> Result<QuotientModel, String> {
    let one_minus_w2 = MPoly::one().sub(&MPoly::var_pow(geom("w"), 2));
    Ok(QuotientModel {
        name: format!("ztilde{n}"),
        equation: h_poly(n)?.substitute_poly(&[(geom("v"), one_minus_w2)]),
        genus: genus_ztilde(n)?,
        provenance: vec!["substitute the cover relation v = 1 − w² into the Zₙ model".into()],
    })
}

/// The degree-4 twisted cover model `W̃₄ : 4u² + u⁴ − 4u²w² + (2 + a₂)w⁴ = 0`
/// in the anti-invariant coordinate `u = x − z`.  Membership is certified by
/// reduction against the cover relation; the genus is 1, witnessed by the
/// elliptic model attached in the degree-4 chain.
pub fn w4_model() -> Result<QuotientModel, String> {
    let u = geom("u");
    let w = geom("w");
    let eq = MPoly::var_pow(u, 2)
        .scale_q(&qi(4))
        .add(&MPoly::var_pow(u, 4))
        .sub(&MPoly::var_pow(u, 2).mul(&MPoly::var_pow(w, 2)).scale_q(&qi(4)))
        .add(&MPoly::var_pow(w, 4).mul(&MPoly::int(2).add(&MPoly::var(param(2)))));
    // Membership: substituting u = x − z and reducing by w² = 1 − xz must
    // reproduce the affine family member exactly.
    let x = geom("x");
    let z = geom("z");
    let substituted = eq.substitute_poly(&[(u, MPoly::var(x).sub(&MPoly::var(z)))]);
    let rel = crate::reduce::Relation::new(curves::cover_relation(), w);
    let diff = substituted.sub(&family_affine(4));
    crate::reduce::certify_zero(&diff, &[rel])
        .map_err(|e| format!("W̃₄ membership fails: {e}"))?;
    Ok(QuotientModel {
        name: "wtilde4".into(),
        equation: eq,
        genus: 1,
        provenance: vec![
            "anti-invariant coordinate u = x − z on the degree-4 cover".into(),
            "membership certified modulo w² = 1 − xz".into(),
            "genus 1 witnessed by the elliptic model in the degree-4 chain".into(),
        ],
    })
}

/// All quotient models available for a given degree, in a stable order.
/// These are the polynomials the golden corpus freezes on disk.
pub fn models_for(n: u32) -> Result<Vec<QuotientModel>, String> {
    if n == 4 {
        let one_minus_w2 = MPoly::one().sub(&MPoly::var_pow(geom("w"), 2));
        let ytilde4 = QuotientModel {
            name: "ytilde4".into(),
            equation: g_poly(4).substitute_poly(&[(geom("v"), one_minus_w2)]),
            genus: 1,
            provenance: vec![
                "substitute the cover relation v = 1 − w² into g₄".into(),
                "genus 1 witnessed by the elliptic model in the degree-4 chain".into(),
            ],
        };
        return Ok(vec![
            QuotientModel {
                name: "y4".into(),
                equation: g_poly(4),
                genus: 0,
                provenance: vec!["reflection quotient in u = x + z, v = xz (rational curve)".into()],
            },
            ytilde4,
            w4_model()?,
        ]);
    }
    let mut out = vec![
        x_model(n)?,
        xtilde_model(n)?,
        etilde_model(n)?,
        y_model(n)?,
        ytilde_model(n)?,
    ];
    if n % 2 == 0 {
        out.push(z_model(n)?);
        out.push(ztilde_model(n)?);
    }
    Ok(out)
}

fn qr(num: i64, den: i64) -> Q {
    crate::rat::qr(num, den)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse;

    fn q(s: &str) -> MPoly {
        parse(s).expect("test polynomial parses")
    }

    #[test]
    fn tail_matches_family() {
        // f̂ₙ = xⁿ + zⁿ + tail(xz) for the whole working range.
        for n in 4..=12 {
            let x = geom("x");
            let z = geom("z");
            let xz = MPoly::var(x).mul(&MPoly::var(z));
            let rebuilt = MPoly::var_pow(x, n as u16)
                .add(&MPoly::var_pow(z, n as u16))
                .add(&family_tail(n, geom("t")).substitute_poly(&[(geom("t"), xz)]));
            assert_eq!(rebuilt, family_affine(n), "n = {n}");
        }
    }

    #[test]
    fn alpha_quotient_identity_holds() {
        for n in 4..=10 {
            certify_alpha_quotient(n).unwrap();
        }
    }

    #[test]
    fn f0_division_is_exact_with_degree_drop() {
        for n in 4..=12 {
            let f0 = f0_poly(n).unwrap();
            assert_eq!(f0.degree_in(geom("t")) as u32, n - 2, "n = {n}");
        }
    }

    #[test]
    fn f0_degree_five_display() {
        // (A²/4 − t⁵)/(t−1)² for n = 5, a = a₂.
        let expected = q("-t^3 + 1/4*a2^2*t^2 - 2*t^2 - 1/2*a2^2*t - 5/2*a2*t - 3*t + 1/4*a2^2 + 3/2*a2 + 9/4");
        assert_eq!(f0_poly(5).unwrap(), expected);
    }

    #[test]
    fn f0_at_one_witnesses() {
        // Frozen values of f⁰ₙ(1), the obstruction to affine fixed points of δγ.
        let cases = [
            (5, "-a2 - 15/4"),
            (6, "-a2 - 3*a3 - 6"),
            (7, "-a2 - 3*a3 - 35/4"),
            (8, "-a2 - 3*a3 - 6*a4 - 12"),
        ];
        for (n, expected) in cases {
            let value = f0_poly(n)
                .unwrap()
                .substitute_poly(&[(geom("t"), MPoly::one())]);
            assert_eq!(value, q(expected), "n = {n}");
        }
    }

    #[test]
    fn f0_separability_samples() {
        // Frozen discriminant values at the sample parameter points.
        let cases = [
            (5u32, "-6075/16"),
            (6, "-55296"),
            (7, "236097585/2"),
            (8, "11609505792"),
        ];
        for (n, expected) in cases {
            let f0 = f0_poly(n).unwrap().specialize(&separability_sample(n));
            let disc = resultant::discriminant(&f0, geom("t")).unwrap();
            assert_eq!(disc.as_q().unwrap(), crate::rat::parse_q(expected).unwrap(), "n = {n}");
            certify_f0_separability(n).unwrap();
        }
    }

    #[test]
    fn newton_identity_and_low_degree_values() {
        for n in 0..=12 {
            certify_newton_p(n).unwrap();
        }
        assert_eq!(newton_p(2), q("u^2 - 2*v"));
        assert_eq!(newton_p(3), q("u^3 - 3*u*v"));
        assert_eq!(newton_p(6), q("u^6 - 6*u^4*v + 9*u^2*v^2 - 2*v^3"));
    }

    #[test]
    fn beta_quotient_identity_holds() {
        for n in 4..=10 {
            certify_beta_quotient(n).unwrap();
        }
    }

    #[test]
    fn twisted_newton_by_ansatz_matches_recursion() {
        // Independent oracle: Qₙ = Pₙ(u, c·v) with c = ξ⁻¹, via the same
        // three-term recursion as Newton's identity.
        for n in [4u32, 6, 8, 12, 16] {
            let c = curves::twist_root(n).inv().unwrap();
            let u = MPoly::var(geom("u"));
            let cv = MPoly::var(geom("v")).scale(&c);
            let mut prev = MPoly::int(2);
            let mut cur = u.clone();
            for _ in 1..n {
                let next = u.mul(&cur).sub(&cv.mul(&prev));
                prev = cur;
                cur = next;
            }
            assert_eq!(twisted_q(n).unwrap(), cur, "n = {n}");
        }
    }

    #[test]
    fn twisted_newton_degree_eight_frozen() {
        // Q₈ = u⁸ − 8c·u⁶v + 20c²·u⁴v² − 16c³·u²v³ − 2v⁴ with c = ζ₈⁻¹.
        let c = Cyclo::root_of_unity(8, -1);
        let u = geom("u");
        let v = geom("v");
        let term = |du: u16, dv: u16, coeff: Cyclo| {
            let mut m = crate::poly::Mono::var(u, du);
            m.set_exponent(v, dv);
            MPoly::monomial(m, coeff)
        };
        let expected = term(8, 0, Cyclo::one())
            .add(&term(6, 1, c.scale(&qi(-8))))
            .add(&term(4, 2, c.pow(2).scale(&qi(20))))
            .add(&term(2, 3, c.pow(3).scale(&qi(-16))))
            .add(&term(0, 4, Cyclo::int(-2)));
        assert_eq!(twisted_q(8).unwrap(), expected);
    }

    #[test]
    fn sigma_quotient_identity_holds() {
        for n in [4u32, 6, 8, 10] {
            certify_sigma_quotient(n).unwrap();
        }
    }

    #[test]
    fn degree_six_twisted_model_is_rational() {
        // ξ = −1 for n = 6, so h₆ is already rational:
        // h₆ = u⁶ + 6u⁴v + 9u²v² + 2v³ + tail.
        let h6 = h_poly(6).unwrap();
        let expected = q("u^6 + 6*u^4*v + 9*u^2*v^2 + 2*v^3")
            .add(&family_tail(6, geom("v")));
        assert_eq!(h6, expected);
    }

    #[test]
    fn rescaled_degree_eight_model() {
        // u → ζ₁₆³u turns −h₈ into the rational polynomial from the chain.
        let resc = h8_rescaled().unwrap();
        let expected = q("u^8 + 8*u^6*v + 20*u^4*v^2 + 16*u^2*v^3 + 2*v^4 + 8*v - 6")
            .sub(&q("a2*v^2 - 2*a2*v + a2"))
            .sub(&q("a3*v^3 - 3*a3*v + 2*a3"))
            .sub(&q("a4*v^4 - 4*a4*v + 3*a4"));
        assert_eq!(resc.neg(), expected);
    }

    #[test]
    fn delta_gamma_counts() {
        for n in 5..=10 {
            let fp = delta_gamma_ramification(n).unwrap();
            let expected = if n % 2 == 1 { 2 } else { 0 };
            assert_eq!(fp.cover, expected, "n = {n}");
        }
    }

    #[test]
    fn hurwitz_solver() {
        assert_eq!(hurwitz_genus(6, 2, 6).unwrap(), 2);
        assert_eq!(hurwitz_genus(13, 6, 0).unwrap(), 3);
        assert!(hurwitz_genus(6, 2, 5).is_err()); // odd ramification, no solution
        assert!(hurwitz_genus(0, 2, 0).is_err()); // genus −1 is rejected
    }

    #[test]
    fn quotient_genus_tables() {
        // The full genus bookkeeping for the working range, derived purely
        // from Riemann–Hurwitz and certified fixed-point counts.
        let table: Vec<(u32, i64, i64, i64, i64, i64)> = vec![
            // n, g(X), g(X̃), g(Ẽ), g(Y), g(Ỹ)
            (5, 1, 2, 1, 0, 2),
            (6, 1, 3, 2, 2, 6),
            (7, 2, 4, 2, 3, 9),
            (8, 2, 5, 3, 6, 15),
            (9, 3, 6, 3, 8, 20),
            (10, 3, 7, 4, 12, 28),
        ];
        for (n, gx, gxt, get, gy, gyt) in table {
            assert_eq!(genus_x(n).unwrap(), gx, "g(X_{n})");
            assert_eq!(genus_xtilde(n).unwrap(), gxt, "g(X̃_{n})");
            assert_eq!(genus_etilde(n).unwrap(), get, "g(Ẽ_{n})");
            assert_eq!(genus_y(n).unwrap(), gy, "g(Y_{n})");
            assert_eq!(genus_ytilde(n).unwrap(), gyt, "g(Ỹ_{n})");
        }
        let even_table: Vec<(u32, i64, i64)> = vec![(6, 1, 4), (8, 5, 13), (10, 11, 26)];
        for (n, gz, gzt) in even_table {
            assert_eq!(genus_z(n).unwrap(), gz, "g(Z_{n})");
            assert_eq!(genus_ztilde(n).unwrap(), gzt, "g(Z̃_{n})");
        }
    }

    #[test]
    fn models_assemble() {
        for n in 5..=8 {
            let models = models_for(n).unwrap();
            let expected = if n % 2 == 0 { 7 } else { 5 };
            assert_eq!(models.len(), expected, "n = {n}");
            for m in &models {
                assert!(!m.equation.is_zero(), "{} is nonzero", m.name);
                assert!(m.genus >= 0);
            }
        }
        let m4 = models_for(4).unwrap();
        assert_eq!(m4.len(), 3);
        assert_eq!(m4[2].name, "wtilde4");
        assert_eq!(m4[2].genus, 1);
    }

    #[test]
    fn degree_four_membership() {
        let w4 = w4_model().unwrap();
        assert_eq!(
            w4.equation,
            q("u^4 - 4*u^2*w^2 + 4*u^2 + a2*w^4 + 2*w^4")
        );
    }
}
