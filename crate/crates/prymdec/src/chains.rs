//! Certification chains for the explicit per-degree quotient models.
//!
//! Each degree `4 ≤ n ≤ 8` has a reference derivation that walks from the
//! plane quotient models of [`crate::quotients`] to small Weierstrass or
//! hyperelliptic equations through explicit birational substitutions.  This
//! module replays every step as an exact polynomial identity:
//!
//! * **pure identities** (parametrizations, recovered coordinates) are
//!   certified as rational expressions with zero numerator, no curve
//!   relation needed;
//! * **on-curve identities** (coordinate bindings, Weierstrass models) are
//!   certified by cross-multiplied reduction against the defining relation,
//!   taken monic in its main variable;
//! * **recorded displays** are re-parsed and compared against the pipeline
//!   polynomial.  A handful of displays are known to disagree with the
//!   certified computation; those checks carry an erratum note, pass only
//!   when the frozen discrepancy is reproduced exactly, and also exhibit the
//!   nonzero residue left by the uncorrected display.
//!
//! The outcome of every step is a [`ModelCheck`], the unit consumed by the
//! report layer.

use crate::curves::family_affine;
use crate::cyclo::Cyclo;
use crate::poly::{parse, MPoly, Mono, Rx};
use crate::quotients::{self, f0_poly, g_poly, h8_rescaled, h_poly};
use crate::rat::qi;
use crate::reduce::{certify_equal, certify_zero, clip, reduce, Relation};
use crate::resultant;
use crate::vars::geom;

/// One replayed derivation step.
#[derive(Clone, Debug)]
pub struct ModelCheck {
    /// Stable identifier, unique per degree, e.g. `"certify_y6_weierstrass"`.
    pub id: &'static str,
    /// Locator tag of the corresponding reference display.
    pub anchor: &'static str,
    /// `Ok(witness)` when the step certifies, `Err(reason)` otherwise.
    pub outcome: Result<String, String>,
    /// A frozen note when the recorded display is known to deviate from the
    /// certified computation (the check then passes *with* errata).
    pub errata: Option<&'static str>,
}

impl ModelCheck {
    fn new(id: &'static str, anchor: &'static str, outcome: Result<String, String>) -> Self {
        ModelCheck { id, anchor, outcome, errata: None }
    }

    fn with_errata(
        id: &'static str,
        anchor: &'static str,
        outcome: Result<String, String>,
        note: &'static str,
    ) -> Self {
        ModelCheck { id, anchor, outcome, errata: Some(note) }
    }
}

/// All certification steps for one degree (empty above 8 — the closed-form
/// pipeline still covers those degrees, but no reference chain exists).
pub fn chain(n: u32) -> Vec<ModelCheck> {
    match n {
        4 => chain4(),
        5 => chain5(),
        6 => chain6(),
        7 => chain7(),
        8 => chain8(),
        _ => Vec::new(),
    }
}

// ---------------------------------------------------------------------------
// small helpers

fn p(src: &str) -> MPoly {
    parse(src).unwrap_or_else(|e| panic!("frozen display `{src}` must parse: {e}"))
}

fn vm(name: &str) -> MPoly {
    MPoly::var(geom(name))
}

fn rx(poly: MPoly) -> Rx {
    Rx::poly(poly)
}

fn frac(num: MPoly, den: MPoly) -> Rx {
    Rx { num, den }
}

/// Certify that a rational expression vanishes identically (pure identity).
fn pure_zero(expr: &Rx, witness: &str) -> Result<String, String> {
    if expr.num.is_zero() {
        Ok(witness.to_string())
    } else {
        Err(format!(
            "expected a pure identity, got numerator {}",
            clip(&expr.num)
        ))
    }
}

/// Certify that two rational expressions agree modulo the given relations.
fn on_curve_equal(
    lhs: &Rx,
    rhs: &Rx,
    rels: &[Relation],
    witness: &str,
) -> Result<String, String> {
    certify_equal(lhs, rhs, rels).map_err(|e| format!("{witness}: {e}"))?;
    Ok(witness.to_string())
}

/// Certify that a recorded display does *not* hold on the curve: the
/// cross-multiplied difference must leave a nonzero residue.
fn expect_residue(lhs: &Rx, rhs: &Rx, rels: &[Relation], label: &str) -> Result<String, String> {
    let cross = lhs.num.mul(&rhs.den).sub(&rhs.num.mul(&lhs.den));
    let red = reduce(&cross, rels);
    if red.remainder.is_zero() {
        return Err(format!(
            "{label}: the uncorrected display certifies after all — erratum entry is stale"
        ));
    }
    Ok(format!("{label}: residue {}", clip(&red.remainder)))
}

/// Compare a pipeline polynomial with a re-parsed recorded display.
fn display_equal(pipeline: &MPoly, display: &MPoly, label: &str) -> Result<String, String> {
    if pipeline == display {
        Ok(format!("{label}: display matches the pipeline polynomial"))
    } else {
        Err(format!(
            "{label}: display differs from pipeline by {}",
            clip(&display.sub(pipeline))
        ))
    }
}

/// Compare `display − pipeline` against a frozen difference.
fn display_delta(
    pipeline: &MPoly,
    display: &MPoly,
    delta: &MPoly,
    label: &str,
) -> Result<String, String> {
    let got = display.sub(pipeline);
    if &got == delta {
        Ok(format!(
            "{label}: display deviates from the pipeline by exactly {}",
            clip(delta)
        ))
    } else {
        Err(format!(
            "{label}: unexpected deviation {} (frozen: {})",
            clip(&got),
            clip(delta)
        ))
    }
}

/// Map every monomial `from^{2i} → to^i`, failing on odd exponents.
fn remap_even(poly: &MPoly, from: usize, to: usize) -> Result<MPoly, String> {
    let mut out = MPoly::zero();
    for (m, c) in poly.terms() {
        let e = m.exponent(from);
        if e % 2 != 0 {
            return Err(format!("odd exponent {e} while halving a variable"));
        }
        let mut m2 = m.clone();
        m2.set_exponent(from, 0);
        m2.set_exponent(to, e / 2);
        out = out.add(&MPoly::monomial(m2, c.clone()));
    }
    Ok(out)
}

fn origin_sample(n: u32) -> Vec<(u32, crate::rat::Q)> {
    (2..=(n / 2)).map(|i| (i, qi(0))).collect()
}

/// Witness that a univariate specialisation is separable (for genus counts
/// of hyperelliptic right-hand sides): nonzero discriminant at the origin.
fn separable_at_origin(rhs: &MPoly, var: usize, n: u32, label: &str) -> Result<String, String> {
    let spec = rhs.specialize(&origin_sample(n));
    let disc = resultant::discriminant(&spec, var).map_err(|e| format!("{label}: {e}"))?;
    let q = disc
        .as_q()
        .ok_or_else(|| format!("{label}: discriminant did not specialise to a rational"))?;
    if num_traits::Zero::is_zero(&q) {
        return Err(format!("{label}: right-hand side is inseparable at the origin"));
    }
    Ok(format!(
        "{label}: discriminant {} ≠ 0 at the parameter origin",
        crate::rat::fmt_q(&q)
    ))
}

// ---------------------------------------------------------------------------
// degree 4

fn chain4() -> Vec<ModelCheck> {
    let mut out = Vec::new();
    let (u, w, x, y_v) = (geom("u"), geom("w"), geom("X"), geom("Y"));

    // Recorded projective family member.
    let fam = p("x^4 + z^4 + 2*y^4 - 4*x*y^2*z + a2*x^2*z^2 - 2*a2*x*y^2*z + a2*y^4");
    out.push(ModelCheck::new(
        "display_family_model",
        "5.5",
        display_equal(&crate::curves::family_proj(4), &fam, "degree-4 family"),
    ));

    // Reflection-quotient cover: g₄(u, 1 − w²).
    let g4t = g_poly(4).substitute_poly(&[(geom("v"), MPoly::one().sub(&vm("w").mul(&vm("w"))))]);
    let g4t_display = p("u^4 + 4*u^2*w^2 - 4*u^2 + a2*w^4 + 2*w^4");
    out.push(ModelCheck::new(
        "display_y4_cover",
        "5.5",
        display_equal(&g4t, &g4t_display, "degree-4 reflection cover"),
    ));

    // Twisted cover membership (in the anti-invariant coordinate u = x − z).
    out.push(ModelCheck::new(
        "certify_w4_membership",
        "5.5",
        quotients::w4_model().map(|m| format!("{} certified, genus {}", m.name, m.genus)),
    ));

    // E₁ : Y² = (a₂+2)X⁴ + 4X² + 1 via (u, w) = (2/Y, 2X/Y) on the
    // reflection cover.
    let e1 = p("a2*X^4 + 2*X^4 + 4*X^2 + 1");
    let quarter_y4 = rx(MPoly::var_pow(y_v, 4).scale_q(&crate::rat::qr(1, 16)));
    let lhs1 = g4t
        .substitute(&[
            (u, frac(MPoly::int(2), vm("Y"))),
            (w, frac(vm("X").scale_q(&qi(2)), vm("Y"))),
        ])
        .mul(&quarter_y4)
        .add(&rx(MPoly::var_pow(y_v, 2).sub(&e1)));
    out.push(ModelCheck::new(
        "certify_e1_model",
        "5.5",
        pure_zero(&lhs1, "g̃₄(2/Y, 2X/Y)·Y⁴/16 + Y² − E₁(X) = 0 identically"),
    ));

    // E₂ : Y² = (a₂+2)X⁴ − 4X² + 1 via (u, w) = (2i/Y, 2iX/Y) on the
    // twisted cover.
    let e2 = p("a2*X^4 + 2*X^4 - 4*X^2 + 1");
    let i_unit = Cyclo::root_of_unity(4, 1);
    let w4 = match quotients::w4_model() {
        Ok(m) => m.equation,
        Err(e) => {
            out.push(ModelCheck::new("certify_e2_model", "5.5", Err(e)));
            return out;
        }
    };
    let lhs2 = w4
        .substitute(&[
            (u, frac(MPoly::int(2).scale(&i_unit), vm("Y"))),
            (w, frac(vm("X").scale_q(&qi(2)).scale(&i_unit), vm("Y"))),
        ])
        .mul(&quarter_y4)
        .add(&rx(MPoly::var_pow(y_v, 2).sub(&e2)));
    out.push(ModelCheck::new(
        "certify_e2_model",
        "5.5",
        pure_zero(&lhs2, "W̃₄(2i/Y, 2iX/Y)·Y⁴/16 + Y² − E₂(X) = 0 identically"),
    ));

    // The recorded isomorphism E₁ ≅ E₂ is X ↦ iX.
    let twisted = e1.substitute_poly(&[(x, vm("X").scale(&i_unit))]);
    out.push(ModelCheck::new(
        "certify_e1_e2_twist",
        "5.5",
        display_equal(&twisted, &e2, "E₁(iX) = E₂(X)"),
    ));

    // Genus-1 witness: both quartic right-hand sides are separable.
    out.push(ModelCheck::new(
        "certify_e_separability",
        "5.5",
        separable_at_origin(&e1, x, 4, "E₁ right-hand side"),
    ));

    out
}

// ---------------------------------------------------------------------------
// degree 5

fn chain5() -> Vec<ModelCheck> {
    let mut out = Vec::new();
    let (s, t, x, big1, big2) = (geom("s"), geom("t"), geom("x"), geom("T1"), geom("T2"));

    // Recorded projective family member (a = a₂).
    let fam = p("x^5 + z^5 + 3*y^5 - 5*x*y^3*z + a2*x^2*y*z^2 - 2*a2*x*y^3*z + a2*y^5");
    out.push(ModelCheck::new(
        "display_family_model",
        "5.1",
        display_equal(&crate::curves::family_proj(5), &fam, "degree-5 family"),
    ));

    // Rotation quotient: s² + A(t)s + t⁵ with A = a(t−1)² − 5t + 3.
    let a_display = p("a2*t^2 - 2*a2*t + a2 - 5*t + 3");
    out.push(ModelCheck::new(
        "display_x5_quadratic",
        "5.1",
        display_equal(&quotients::a_poly(5), &a_display, "middle coefficient A(t)"),
    ));

    // f⁰₅ display.
    let f05 = match f0_poly(5) {
        Ok(f) => f,
        Err(e) => {
            out.push(ModelCheck::new("display_x5_model", "5.1", Err(e)));
            return out;
        }
    };
    let f05_display = p(
        "-t^3 + 1/4*a2^2*t^2 - 2*t^2 - 1/2*a2^2*t - 5/2*a2*t - 3*t + 1/4*a2^2 + 3/2*a2 + 9/4",
    );
    out.push(ModelCheck::new(
        "display_x5_model",
        "5.1",
        display_equal(&f05, &f05_display, "hyperelliptic right-hand side f⁰₅"),
    ));

    // Completing the square: ((t−1)u)² = (s + A/2)² reduces to f⁰₅·(t−1)²
    // modulo the quotient relation s² + As + t⁵ = 0.
    let quad_rel = Relation::new(
        MPoly::var_pow(s, 2)
            .add(&quotients::a_poly(5).mul(&vm("s")))
            .add(&MPoly::var_pow(t, 5)),
        s,
    );
    let shift = vm("s").add(&quotients::a_poly(5).scale_q(&crate::rat::qr(1, 2)));
    let t_minus_1_sq = vm("t").sub(&MPoly::one()).pow(2);
    out.push(ModelCheck::new(
        "certify_x5_square_completion",
        "5.1",
        on_curve_equal(
            &rx(shift.mul(&shift)),
            &rx(f05.mul(&t_minus_1_sq)),
            std::slice::from_ref(&quad_rel),
            "(s + A/2)² = (t−1)²·f⁰₅ on the rotation quotient",
        ),
    ));

    // The recorded substitution u = ((1−t)s + A)/2 does not linearise the
    // quadric: its square leaves a residue against f⁰₅.
    let u_bad = vm("t")
        .neg()
        .add(&MPoly::one())
        .mul(&vm("s"))
        .add(&quotients::a_poly(5))
        .scale_q(&crate::rat::qr(1, 2));
    out.push(ModelCheck::with_errata(
        "display_x5_substitution",
        "5.1",
        expect_residue(
            &rx(u_bad.mul(&u_bad)),
            &rx(f05.clone()),
            std::slice::from_ref(&quad_rel),
            "recorded substitution u = ((1−t)s + A)/2",
        ),
        "the recorded substitution multiplies by (1−t) where the square completion divides: u = (s + A/2)/(t−1) is the map that yields u² = f⁰₅",
    ));

    // Elliptic model E: w⁶·E(1/w²) = f⁰₅(1 − w²) with (x, y) = (1/w², u/w³).
    let e5 = p("-a2*x^3 - 15/4*x^3 + 5/2*a2*x^2 + 10*x^2 + 1/4*a2^2*x - 5*x + 1");
    let w2 = vm("w").mul(&vm("w"));
    let lhs = rx(f05.substitute_poly(&[(t, MPoly::one().sub(&w2))]));
    let rhs = e5
        .substitute(&[(x, frac(MPoly::one(), w2.clone()))])
        .mul(&rx(MPoly::var_pow(geom("w"), 6)));
    out.push(ModelCheck::new(
        "display_e5_model",
        "5.1",
        pure_zero(&lhs.sub(&rhs), "f⁰₅(1 − w²) = w⁶·E(1/w²) identically, so y² = E(x) at (x, y) = (1/w², u/w³)"),
    ));
    out.push(ModelCheck::new(
        "certify_e5_separability",
        "5.1",
        separable_at_origin(&e5, x, 5, "E right-hand side"),
    ));

    // Reflection quotient in (T₁, T₂) = (x + z, xz).
    let g5 = g_poly(5).substitute_poly(&[(geom("u"), vm("T1")), (geom("v"), vm("T2"))]);
    let g5_display =
        p("3 + a2 + T1^5 - 5*T2 - 2*a2*T2 - 5*T1^3*T2 + a2*T2^2 + 5*T1*T2^2");
    out.push(ModelCheck::new(
        "display_y5_model",
        "5.1",
        display_equal(&g5, &g5_display, "rational quintic model of the degree-5 reflection quotient"),
    ));
    let rel_g5 = Relation::new(g5, big1);

    // The auxiliary parameter t₁ satisfies a conic relation on the quintic.
    let t1_expr = frac(
        p("-5 - 2*a2 - 5*T1^3 + 2*a2*T2 + 10*T1*T2"),
        p("-1 + T1 + T1^2"),
    );
    let conic = |t1_val: &Rx, big1_val: &Rx| -> Rx {
        let c1 = rx(p("10 + 4*a2"));
        let c2 = rx(p("-5"));
        let c0 = rx(p("-25 - 8*a2"));
        t1_val
            .mul(t1_val)
            .add(&c1.mul(big1_val))
            .add(&c2.mul(big1_val).mul(big1_val))
            .add(&c0)
    };
    let conic_on_curve = conic(&t1_expr, &rx(vm("T1")));
    out.push(ModelCheck::new(
        "certify_y5_conic",
        "5.1",
        certify_zero(&conic_on_curve.num, std::slice::from_ref(&rel_g5))
            .map(|_| "t₁² + (10 + 4a)T₁ − 5T₁² − 25 − 8a = 0 on the quintic".to_string())
            .map_err(|e| e.to_string()),
    ));

    // Rational point and secant-line parametrization of the conic.
    let at_point = conic(&rx(p("a2 + 5")), &rx(p("a2 + 2")));
    out.push(ModelCheck::new(
        "certify_y5_conic_point",
        "5.1",
        pure_zero(&at_point, "(t₁, T₁) = (a + 5, a + 2) lies on the conic"),
    ));
    let t1x = frac(
        p("25 + 5*a2 - 10*x - 6*a2*x + 5*x^2 + a2*x^2"),
        p("5 - x^2"),
    );
    let big1x = frac(
        p("a2 - 10*x - 2*a2*x + 2*x^2 + a2*x^2"),
        p("-5 + x^2"),
    );
    out.push(ModelCheck::new(
        "certify_y5_parametrization",
        "5.1",
        pure_zero(
            &conic(&t1x, &big1x),
            "the secant parametrization satisfies the conic identically",
        ),
    ));
    let secant = t1x
        .sub(&rx(p("a2 + 5")))
        .sub(&rx(vm("x")).mul(&big1x.sub(&rx(p("a2 + 2")))));
    out.push(ModelCheck::new(
        "certify_y5_secant",
        "5.1",
        pure_zero(
            &secant,
            "t₁ − (a + 5) = x·(T₁ − (a + 2)): x is the secant slope through the rational point",
        ),
    ));

    // Recover T₂ from the t₁ definition and certify the quintic vanishes.
    let t2x = t1x
        .mul(&big1x.mul(&big1x).add(&big1x).sub(&rx(MPoly::one())))
        .add(&rx(p("5 + 2*a2")))
        .add(&rx(p("5")).mul(&big1x).mul(&big1x).mul(&big1x))
        .mul(&rx(p("2*a2")).add(&rx(p("10")).mul(&big1x)).recip());
    let quintic_pulled = g5_display.substitute(&[(big1, big1x.clone()), (big2, t2x.clone())]);
    out.push(ModelCheck::new(
        "certify_y5_t2_recovery",
        "5.1",
        pure_zero(
            &quintic_pulled,
            "(T₁(x), T₂(x)) parametrizes the quintic identically",
        ),
    ));

    // w²-display: w² = 1 − T₂(x) matches the recorded rational function.
    let g_disp = p("5 + 5*a2 + a2^2")
        .mul(&MPoly::var_pow(x, 4))
        .add(&p("5 + a2").mul(&p("5 + 2*a2")).scale_q(&qi(-2)).mul(&MPoly::var_pow(x, 3)))
        .add(&p("50 + 20*a2 + 3*a2^2").scale_q(&qi(2)).mul(&MPoly::var_pow(x, 2)))
        .add(&p("5 + a2").mul(&p("-5 + 2*a2")).scale_q(&qi(-2)).mul(&vm("x")))
        .add(&p("-25 - 5*a2 + a2^2"));
    let w2_display = frac(
        p("-10 - a2 + a2*x").mul(&g_disp).neg(),
        p("x^2 - 5")
            .pow(2)
            .mul(&p("-25 - 5*a2 + 5*x + 3*a2*x")),
    );
    let one_minus_t2 = rx(MPoly::one()).sub(&t2x);
    out.push(ModelCheck::new(
        "certify_y5_w2_display",
        "5.1",
        pure_zero(
            &w2_display.sub(&one_minus_t2),
            "recorded w²(x) equals 1 − T₂(x) identically",
        ),
    ));

    // Weierstrass model y² = h(x) under y = (−25 − 5a + 5x + 3ax)(x² − 5)w.
    let h5 = p("3*a2*x + 5*x - 25 - 5*a2")
        .neg()
        .mul(&p("a2*x - a2 - 10"))
        .mul(&g_disp);
    let y_factor = p("-25 - 5*a2 + 5*x + 3*a2*x").mul(&p("x^2 - 5"));
    let binding = rx(y_factor.mul(&y_factor))
        .mul(&one_minus_t2)
        .sub(&rx(h5.clone()));
    out.push(ModelCheck::new(
        "certify_y5_weierstrass",
        "5.1",
        pure_zero(
            &binding,
            "y = (−25 − 5a + 5x + 3ax)(x² − 5)·w satisfies y² = h(x) with h = −(3ax + 5x − 25 − 5a)(ax − a − 10)·g(x)",
        ),
    ));

    // Frozen discriminant factorization of h.
    let delta_claim = p("a2^2 - 5*a2 - 25")
        .pow(14)
        .mul(&p("15 + 4*a2").pow(2))
        .scale_q(&qi(1_073_741_824)) // 2^30
        .scale_q(&qi(3_125)); // 5^5
    let delta_outcome = resultant::discriminant(&h5, x)
        .map_err(|e| e.to_string())
        .and_then(|d| {
            if d == delta_claim {
                Ok("disc_x h = 2³⁰·5⁵·(15 + 4a)²·(a² − 5a − 25)¹⁴ exactly (unit ratio 1)"
                    .to_string())
            } else {
                Err(format!(
                    "discriminant mismatch: got {}",
                    clip(&d.sub(&delta_claim))
                ))
            }
        });
    out.push(ModelCheck::new("delta_h_identity", "5.1", delta_outcome));

    // Genus-2 witness for the sextic right-hand side.
    out.push(ModelCheck::new(
        "certify_y5_separability",
        "5.1",
        separable_at_origin(&h5, x, 5, "sextic right-hand side h(x)"),
    ));

    out
}

/// Sign pattern of a rational coordinate under `(u, w) ↦ (±u, ±w)`:
/// `Some(true)` if invariant, `Some(false)` if negated, `None` otherwise.
fn parity(coord: &Rx, u: usize, w: usize, flip_u: bool, flip_w: bool) -> Option<bool> {
    let mut binds: Vec<(usize, MPoly)> = Vec::new();
    if flip_u {
        binds.push((u, MPoly::var(u).neg()));
    }
    if flip_w {
        binds.push((w, MPoly::var(w).neg()));
    }
    let num = coord.num.substitute_poly(&binds);
    let den = coord.den.substitute_poly(&binds);
    // Compare num/den with ±coord.num/coord.den by cross-multiplication.
    let cross = num.mul(&coord.den);
    let base = coord.num.mul(&den);
    if cross == base {
        Some(true)
    } else if cross == base.neg() {
        Some(false)
    } else {
        None
    }
}

/// Certify that a hyperelliptic model `(x, y)` splits a Klein four-group:
/// the already-quotiented involution acts trivially, the residual one fixes
/// `x` and negates `y`.  The full quotient is then the rational `x`-line.
fn klein_rational(
    x_coord: &Rx,
    y_coord: &Rx,
    u: usize,
    w: usize,
    witness: &str,
) -> Result<String, String> {
    for (flip_u, flip_w, want_x, want_y) in [
        (true, false, Some(true), Some(true)),   // the quotiented involution
        (false, true, Some(true), Some(false)),  // the residual involution
        (true, true, Some(true), Some(false)),   // their product
    ] {
        if parity(x_coord, u, w, flip_u, flip_w) != want_x
            || parity(y_coord, u, w, flip_u, flip_w) != want_y
        {
            return Err(format!(
                "unexpected parity under (u, w) ↦ ({}u, {}w)",
                if flip_u { "-" } else { "+" },
                if flip_w { "-" } else { "+" }
            ));
        }
    }
    Ok(witness.to_string())
}

// ---------------------------------------------------------------------------
// degree 6

fn chain6() -> Vec<ModelCheck> {
    let mut out = Vec::new();
    let (u, v, w, x, xv, yv, s, t, x1) = (
        geom("u"),
        geom("v"),
        geom("w"),
        geom("x"),
        geom("X"),
        geom("Y"),
        geom("s"),
        geom("t"),
        geom("x1"),
    );

    let fam = p(
        "x^6 + z^6 + 4*y^6 - 6*x*z*y^4 + a2*x^2*z^2*y^2 - 2*a2*x*z*y^4 + a2*y^6 \
         + a3*x^3*z^3 - 3*a3*x*z*y^4 + 2*a3*y^6",
    );
    out.push(ModelCheck::new(
        "display_family_model",
        "5.2",
        display_equal(&crate::curves::family_proj(6), &fam, "degree-6 family"),
    ));

    // f⁰₆ display (built from its recorded factored coefficients).
    let f06 = match f0_poly(6) {
        Ok(f) => f,
        Err(e) => {
            out.push(ModelCheck::new("display_x6_model", "5.2", Err(e)));
            return out;
        }
    };
    let f06_display = p("-2 + a3")
        .mul(&p("2 + a3"))
        .scale_q(&crate::rat::qr(1, 4))
        .mul(&MPoly::var_pow(t, 4))
        .add(
            &p("-4 + a2*a3 + a3^2")
                .scale_q(&crate::rat::qr(1, 2))
                .mul(&MPoly::var_pow(t, 3)),
        )
        .add(
            &p("-12 + a2^2 - 12*a3 - 3*a3^2")
                .scale_q(&crate::rat::qr(1, 4))
                .mul(&MPoly::var_pow(t, 2)),
        )
        .add(
            &p("2 + a2 + a3")
                .mul(&p("4 + a2 + 2*a3"))
                .scale_q(&crate::rat::qr(-1, 2))
                .mul(&vm("t")),
        )
        .add(&p("4 + a2 + 2*a3").pow(2).scale_q(&crate::rat::qr(1, 4)));
    out.push(ModelCheck::new(
        "display_x6_model",
        "5.2",
        display_equal(&f06, &f06_display, "hyperelliptic right-hand side f⁰₆"),
    ));

    // Ẽ₆ display: y² = x·f⁰₆(1 − x) expanded.
    let e6_pipeline = vm("x").mul(&f06.substitute_poly(&[(t, MPoly::one().sub(&vm("x")))]));
    let e6_display = p("-2 + a3")
        .mul(&p("2 + a3"))
        .scale_q(&crate::rat::qr(1, 4))
        .mul(&MPoly::var_pow(x, 5))
        .add(
            &p("12 - a2*a3 - 3*a3^2")
                .scale_q(&crate::rat::qr(1, 2))
                .mul(&MPoly::var_pow(x, 4)),
        )
        .add(
            &p("-60 + a2^2 - 12*a3 + 6*a2*a3 + 9*a3^2")
                .scale_q(&crate::rat::qr(1, 4))
                .mul(&MPoly::var_pow(x, 3)),
        )
        .add(&p("20 + 3*a2 + 10*a3").mul(&MPoly::var_pow(x, 2)))
        .add(&p("-6 - a2 - 3*a3").mul(&vm("x")));
    out.push(ModelCheck::new(
        "display_e6_model",
        "5.2",
        display_equal(&e6_pipeline, &e6_display, "genus-2 model of the common factor"),
    ));

    // ----- reflection side -----
    let g6 = g_poly(6);
    let g6_display = p(
        "u^6 - 6*u^4*v + 9*u^2*v^2 + a3*v^3 - 2*v^3 + a2*v^2 - 2*a2*v - 3*a3*v - 6*v + a2 + 2*a3 + 4",
    );
    out.push(ModelCheck::new(
        "display_y6_model",
        "5.2",
        display_equal(&g6, &g6_display, "sextic model of the degree-6 reflection quotient"),
    ));
    let rel_g6 = Relation::new(g6.clone(), u);

    let d_cubic = p("x^3 - 6*x^2 + 9*x + a3 - 2");
    let e_cubic = p("4*x^3 - 12*x^2 + 6*x - a2*x - 3*a3*x + a3 - 2");
    let xbar = frac(p("u^2 - 1"), p("v - 1"));
    let d_at = d_cubic.substitute(&[(x, xbar.clone())]);
    let e_at = e_cubic.substitute(&[(x, xbar.clone())]);

    // x = (u² − 1)/(v − 1) satisfies u²·D(x) = E(x) on the sextic; squaring
    // gives the recorded Weierstrass model with the corrected binding
    // y = u·D(x).
    out.push(ModelCheck::new(
        "certify_y6_x_function",
        "5.2",
        on_curve_equal(
            &rx(MPoly::var_pow(u, 2)).mul(&d_at),
            &e_at,
            std::slice::from_ref(&rel_g6),
            "u²·D(x) = E(x) on the sextic, x = (u² − 1)/(v − 1)",
        ),
    ));
    let y_good = rx(vm("u")).mul(&d_at);
    out.push(ModelCheck::new(
        "certify_y6_weierstrass",
        "5.2",
        on_curve_equal(
            &y_good.mul(&y_good),
            &d_at.mul(&e_at),
            std::slice::from_ref(&rel_g6),
            "y = u·D(x) satisfies y² = D(x)·E(x) on the sextic",
        ),
    ));

    // The recorded y-binding (a degree-6 numerator over (v − 1)³) does not.
    let n_bad = p(
        "-2 - a3 + 3*u^4 + u^6 + 6*v + 3*a3*v - 6*u^2*v - 6*u^4*v - 3*v^2 - 3*a3*v^2 + 9*u^2*v^2 \
         - 2*v^3 - a3*v^3",
    );
    let y_bad = frac(vm("u").mul(&n_bad), p("v - 1").pow(3));
    out.push(ModelCheck::with_errata(
        "display_y6_binding",
        "5.2",
        expect_residue(
            &y_bad.mul(&y_bad),
            &d_at.mul(&e_at),
            std::slice::from_ref(&rel_g6),
            "recorded y-binding u·N(u, v)/(v − 1)³",
        ),
        "the recorded y-binding does not satisfy y² = D·E on the sextic; the certified binding is y = u·(x³ − 6x² + 9x + a₃ − 2)",
    ));

    // ----- τ₁ quotient of the reflection cover -----
    let g6t = g6.substitute_poly(&[(v, MPoly::one().sub(&MPoly::var_pow(w, 2)))]);
    let rel_g6t = Relation::new(g6t.clone(), u);
    let xbar1 = frac(p("1 - u^2"), p("w^2"));
    let u2m1 = p("u^2 - 1");
    let y1_num = p("2 - a3")
        .mul(&MPoly::var_pow(w, 6))
        .add(&u2m1.scale_q(&qi(9)).mul(&MPoly::var_pow(w, 4)))
        .add(&u2m1.pow(2).scale_q(&qi(6)).mul(&MPoly::var_pow(w, 2)))
        .add(&u2m1.pow(3));
    let ybar1 = frac(y1_num, MPoly::var_pow(w, 5));
    let tau1_first_corrected = p("-3*x^2 + 6*x + 3 + a2 + 3*a3");
    let tau1_first_display = p("3*x^2 - 6*x - 3 - a2 - 3*a3");
    let tau1_rhs = |first: &MPoly| {
        first
            .mul(&d_cubic)
            .substitute(&[(x, xbar1.clone())])
    };
    out.push(ModelCheck::new(
        "certify_tau1_model",
        "5.2",
        on_curve_equal(
            &ybar1.mul(&ybar1),
            &tau1_rhs(&tau1_first_corrected),
            std::slice::from_ref(&rel_g6t),
            "y² = (−3x² + 6x + 3 + a₂ + 3a₃)(x³ − 6x² + 9x + a₃ − 2) on the τ₁ quotient",
        ),
    ));
    out.push(ModelCheck::with_errata(
        "display_tau1_model",
        "5.2",
        expect_residue(
            &ybar1.mul(&ybar1),
            &tau1_rhs(&tau1_first_display),
            std::slice::from_ref(&rel_g6t),
            "recorded τ₁ right-hand side",
        ),
        "the recorded first factor is the negative of the certified one: the model holds with (−3x² + 6x + 3 + a₂ + 3a₃) in place of (3x² − 6x − 3 − a₂ − 3a₃)",
    ));
    let tau1_sep = tau1_first_corrected.mul(&d_cubic);
    out.push(ModelCheck::new(
        "certify_tau1_separability",
        "5.2",
        separable_at_origin(&tau1_sep, x, 6, "τ₁ quintic right-hand side"),
    ));

    // ----- τ₂ quotient (invariants s = uw, t = u²) -----
    // Resort the cover sextic on the support s^{2j}·t^{i−j+3}.
    let g2_split = (|| -> Result<MPoly, String> {
        let mut acc = MPoly::zero();
        for (m, c) in g6t.terms() {
            let (ue, we) = (m.exponent(u), m.exponent(w));
            if ue % 2 != 0 || we % 2 != 0 {
                return Err("cover sextic has an odd exponent".to_string());
            }
            let (i, j) = (ue / 2, we / 2);
            if i + 3 < j {
                return Err("t-exponent went negative in the resorting".to_string());
            }
            let mut m2 = m.clone();
            m2.set_exponent(u, 0);
            m2.set_exponent(w, 0);
            m2.set_exponent(s, 2 * j);
            m2.set_exponent(t, i + 3 - j);
            acc = acc.add(&MPoly::monomial(m2, c.clone()));
        }
        Ok(acc)
    })();
    let g2_split = match g2_split {
        Ok(g) => g,
        Err(e) => {
            out.push(ModelCheck::new("certify_tau2_split", "5.2", Err(e)));
            return out;
        }
    };
    let split_id = g2_split.substitute_poly(&[(s, vm("u").mul(&vm("w"))), (t, MPoly::var_pow(u, 2))]);
    out.push(ModelCheck::new(
        "certify_tau2_split",
        "5.2",
        display_equal(
            &split_id,
            &MPoly::var_pow(u, 6).mul(&g6t),
            "g₂(uw, u²) = u⁶·g̃₆: the resorted polynomial represents the cover sextic",
        ),
    ));

    // Substituting s² = X·t(t − 1) clears to the recorded cubic in X.
    let cubic = p("4 - t + 12*X - 6*t*X + 6*X^2 - 9*t*X^2 - a2*X^2 - 3*a3*X^2 + 2*X^3 - a3*X^3 - 2*t*X^3 + a3*t*X^3");
    let s2_value = vm("X").mul(&vm("t")).mul(&p("t - 1"));
    let g2_at = match remap_even(&g2_split, s, x1) {
        Ok(g) => g.substitute_poly(&[(x1, s2_value)]),
        Err(e) => {
            out.push(ModelCheck::new("certify_tau2_clearing", "5.2", Err(e)));
            return out;
        }
    };
    let cleared = cubic
        .mul(&MPoly::var_pow(t, 3))
        .mul(&p("t - 1").pow(2))
        .neg();
    out.push(ModelCheck::new(
        "certify_tau2_clearing",
        "5.2",
        display_equal(
            &g2_at,
            &cleared,
            "g₂(s, t) at s² = X·t(t − 1) equals −t³(t − 1)² times the recorded cubic",
        ),
    ));

    let big_n = p("-4 - 12*X - 6*X^2 + a2*X^2 + 3*a3*X^2 - 2*X^3 + a3*X^3");
    let big_d = p("-1 - 6*X - 9*X^2 - 2*X^3 + a3*X^3");
    let xbar2 = frac(p("w^2"), p("u^2 - 1"));
    let tbar2 = rx(MPoly::var_pow(u, 2));
    let n_at = big_n.substitute(&[(xv, xbar2.clone())]);
    let d_at2 = big_d.substitute(&[(xv, xbar2.clone())]);

    out.push(ModelCheck::new(
        "certify_tau2_cubic",
        "5.2",
        certify_zero(
            &cubic
                .substitute(&[(xv, xbar2.clone()), (t, tbar2.clone())])
                .num,
            std::slice::from_ref(&rel_g6t),
        )
        .map(|_| "the recorded cubic vanishes at (X, t) = (w²/(u² − 1), u²) on the cover".to_string())
        .map_err(|e| e.to_string()),
    ));
    out.push(ModelCheck::new(
        "certify_tau2_t_solution",
        "5.2",
        pure_zero(
            &cubic.substitute(&[(t, frac(big_n.clone(), big_d.clone()))]),
            "t = N(X)/D(X) solves the recorded cubic identically",
        ),
    ));
    out.push(ModelCheck::new(
        "certify_tau2_t_on_curve",
        "5.2",
        on_curve_equal(
            &tbar2.mul(&d_at2),
            &n_at,
            std::slice::from_ref(&rel_g6t),
            "u²·D(X) = N(X) on the cover",
        ),
    ));

    // Recorded evaluation of s² drops the factor t = N/D.
    let nd_diff = big_n.sub(&big_d).substitute(&[(xv, xbar2.clone())]);
    let s_sq = rx(vm("u").mul(&vm("w")).pow(2));
    out.push(ModelCheck::with_errata(
        "display_tau2_evaluation",
        "5.2",
        expect_residue(
            &s_sq.mul(&d_at2),
            &xbar2.mul(&nd_diff),
            std::slice::from_ref(&rel_g6t),
            "recorded evaluation s² = X(N − D)/D",
        ),
        "the recorded evaluation of s² = X·t(t − 1) omits one factor t = N/D; the certified value is s² = X·N·(N − D)/D²",
    ));
    out.push(ModelCheck::new(
        "certify_tau2_s2",
        "5.2",
        on_curve_equal(
            &s_sq.mul(&d_at2).mul(&d_at2),
            &xbar2.mul(&n_at).mul(&nd_diff),
            std::slice::from_ref(&rel_g6t),
            "s²·D(X)² = X·N·(N − D) on the cover",
        ),
    ));

    // Weierstrass model with Y = s·D(X).
    let y_tau2 = rx(vm("u").mul(&vm("w"))).mul(&d_at2);
    let numt = p("4 + 12*X + 6*X^2 - a2*X^2 - 3*a3*X^2 + 2*X^3 - a3*X^3");
    let f1 = p("3 + 6*X - 3*X^2 - a2*X^2 - 3*a3*X^2");
    let rhs_good = xbar2
        .mul(&numt.substitute(&[(xv, xbar2.clone())]))
        .mul(&f1.substitute(&[(xv, xbar2.clone())]));
    out.push(ModelCheck::new(
        "certify_tau2_weierstrass",
        "5.2",
        on_curve_equal(
            &y_tau2.mul(&y_tau2),
            &rhs_good,
            std::slice::from_ref(&rel_g6t),
            "Y = s·D(X) satisfies Y² = X·(−N)·(D − N) — a sextic right-hand side in X",
        ),
    ));
    let last_bad = p("-2 - 6*X - 9*X^2 - 2*X^3 + a3*X^3"); // D(X) − 1 as recorded
    let mid_bad = p("3*X^2 + a2*X^2 + 3*a3*X^2 - 6*X - 3"); // N − D
    let rhs_bad = xbar2
        .mul(&mid_bad.substitute(&[(xv, xbar2.clone())]))
        .mul(&last_bad.substitute(&[(xv, xbar2.clone())]));
    out.push(ModelCheck::with_errata(
        "display_tau2_model",
        "5.2",
        expect_residue(
            &y_tau2.mul(&y_tau2),
            &rhs_bad,
            std::slice::from_ref(&rel_g6t),
            "recorded τ₂ model X·(N − D)·(D − 1)",
        ),
        "the recorded right-hand side inherits the dropped factor from the s² evaluation and duplicates a constant in its last factor; the certified model is Y² = X·(−N)·(D − N)",
    ));
    let tau2_sep = vm("x").mul(&numt.substitute_poly(&[(xv, vm("x"))])).mul(&f1.substitute_poly(&[(xv, vm("x"))]));
    out.push(ModelCheck::new(
        "certify_tau2_separability",
        "5.2",
        separable_at_origin(&tau2_sep, x, 6, "τ₂ sextic right-hand side"),
    ));

    // The full reflection-cover Klein group has a rational quotient: the τ₁
    // model coordinates are (invariant, anti-invariant) for the residual
    // involution, so the degree-4 quotient is the x-line.
    out.push(ModelCheck::new(
        "certify_y6_klein_rational",
        "5.2",
        klein_rational(
            &xbar1,
            &ybar1,
            u,
            w,
            "the residual involution fixes x and negates y on the τ₁ model, so the Klein-group quotient of the reflection cover is the rational x-line",
        ),
    ));

    // ----- twisted side -----
    let h6 = match h_poly(6) {
        Ok(h) => h,
        Err(e) => {
            out.push(ModelCheck::new("display_z6_model", "5.2", Err(e)));
            return out;
        }
    };
    let h6_display = p(
        "u^6 + 6*u^4*v + 9*u^2*v^2 + 2*v^3 - 6*v + 4 + a2*v^2 - 2*a2*v - 3*a3*v - 6*v + a2 + 2*a3 + 4",
    );
    out.push(ModelCheck::with_errata(
        "display_z6_model",
        "5.2",
        display_delta(
            &h6,
            &h6_display,
            &p("-a3*v^3 - 6*v + 4"),
            "recorded twisted sextic",
        ),
        "the recorded display duplicates the block −6v + 4 and drops the a₃v³ term; the certified polynomial is the twisted Newton sextic plus the parameter tail",
    ));
    let rel_h6 = Relation::new(h6.clone(), u);

    let k_cubic = p("-1 - 6*t - 9*t^2 - 2*t^3 - a3*t^3");
    let m_linear = p("6 + 6*t + a2 + 3*a3 + 3*a3*t");
    let tbar = frac(p("v - 1"), p("u^2 + 3"));
    let k_at = k_cubic.substitute(&[(t, tbar.clone())]);
    let m_at = m_linear.substitute(&[(t, tbar.clone())]);

    // u² = t²·M(t)/K(t) on the twisted sextic.
    out.push(ModelCheck::new(
        "certify_z6_u2",
        "5.2",
        on_curve_equal(
            &rx(MPoly::var_pow(u, 2)).mul(&k_at),
            &tbar.mul(&tbar).mul(&m_at),
            std::slice::from_ref(&rel_h6),
            "u²·K(t) = t²·M(t) on the twisted sextic, t = (v − 1)/(u² + 3)",
        ),
    ));

    // Pure consistency chain on the halved curve: substituting the recovered
    // (u², v) back into the halved sextic gives zero identically.
    let z6_chain = remap_even(&h6, u, x1).and_then(|h1| {
        let x1_expr = frac(MPoly::var_pow(t, 2).mul(&m_linear), k_cubic.clone());
        let v_expr = frac(
            p("1 + 3*t")
                .mul(&k_cubic)
                .add(&MPoly::var_pow(t, 3).mul(&m_linear)),
            k_cubic.clone(),
        );
        pure_zero(
            &h1.substitute(&[(x1, x1_expr), (v, v_expr)]),
            "the parametrization (u², v) = (t²M/K, 1 + 3t + t³M/K) satisfies the halved sextic identically",
        )
    });
    out.push(ModelCheck::new("certify_z6_parametrization", "5.2", z6_chain));

    // Weierstrass model s² = K·M with s = u·K(t)/t.
    let sbar = rx(vm("u")).mul(&k_at).mul(&tbar.recip());
    out.push(ModelCheck::new(
        "certify_z6_weierstrass",
        "5.2",
        on_curve_equal(
            &sbar.mul(&sbar),
            &k_at.mul(&m_at),
            std::slice::from_ref(&rel_h6),
            "s = u·K(t)/t satisfies s² = −{(3a₃ + 6)t + a₂ + 3a₃ + 6}{(a₃ + 2)t³ + 9t² + 6t + 1} = K·M",
        ),
    ));
    let z6_sep = k_cubic.mul(&m_linear);
    out.push(ModelCheck::new(
        "certify_z6_separability",
        "5.2",
        separable_at_origin(&z6_sep, t, 6, "twisted quartic right-hand side"),
    ));

    // ----- σ₁ quotient of the twisted cover -----
    let h6t = h6.substitute_poly(&[(v, MPoly::one().sub(&MPoly::var_pow(w, 2)))]);
    let rel_h6t = Relation::new(h6t.clone(), u);
    let tbar1 = frac(p("w^2").neg(), p("u^2 + 3"));
    let k_at1 = k_cubic.substitute(&[(t, tbar1.clone())]);
    let t_quad = vm("t").mul(&p("-3 - 18*t - 21*t^2 + a2*t^2 + 3*a3*t^2"));
    out.push(ModelCheck::new(
        "certify_sigma1_w2",
        "5.2",
        on_curve_equal(
            &rx(MPoly::var_pow(w, 2)).mul(&k_at1.neg()),
            &t_quad.substitute(&[(t, tbar1.clone())]),
            std::slice::from_ref(&rel_h6t),
            "w²·(1 + 6t + 9t² + (2 + a₃)t³) = t(−3 − 18t + (−21 + a₂ + 3a₃)t²) on the twisted cover",
        ),
    ));
    let wprime = rx(vm("w")).mul(&k_at1.neg());
    let sigma1_rhs = t_quad.mul(&k_cubic.neg());
    out.push(ModelCheck::new(
        "certify_sigma1_model",
        "5.2",
        on_curve_equal(
            &wprime.mul(&wprime),
            &sigma1_rhs.substitute(&[(t, tbar1.clone())]),
            std::slice::from_ref(&rel_h6t),
            "w′ = (1 + 6t + 9t² + (2 + a₃)t³)·w satisfies the recorded sextic model w′² = t(−3 − 18t + (−21 + a₂ + 3a₃)t²)(1 + 6t + 9t² + (2 + a₃)t³)",
        ),
    ));
    out.push(ModelCheck::new(
        "certify_sigma1_separability",
        "5.2",
        separable_at_origin(&sigma1_rhs, t, 6, "σ₁ sextic right-hand side"),
    ));

    // ----- σ₂ quotient (invariants X = uw, Y = w²) -----
    let h2_derived = (|| -> Result<MPoly, String> {
        let mut acc = MPoly::zero();
        for (m, c) in h6t.terms() {
            let (ue, we) = (m.exponent(u), m.exponent(w));
            if ue % 2 != 0 || we % 2 != 0 {
                return Err("twisted cover sextic has an odd exponent".to_string());
            }
            let (i, j) = (ue / 2, we / 2);
            if j + 3 < i {
                return Err("Y-exponent went negative in the resorting".to_string());
            }
            let mut m2 = m.clone();
            m2.set_exponent(u, 0);
            m2.set_exponent(w, 0);
            m2.set_exponent(xv, 2 * i);
            m2.set_exponent(yv, j + 3 - i);
            acc = acc.add(&MPoly::monomial(m2, c.clone()));
        }
        Ok(acc)
    })();
    let h2_display = p(
        "X^6 + 6*X^4*Y + 9*X^2*Y^2 - 6*X^4*Y^2 - 18*X^2*Y^3 + 9*X^2*Y^4 + 6*Y^5 - 2*Y^6 \
         + a2*Y^5 + 3*a3*Y^5 - a3*Y^6",
    );
    let split_outcome = h2_derived.and_then(|h2| {
        display_equal(&h2, &h2_display, "recorded σ₂ split polynomial")?;
        let back = h2.substitute_poly(&[(xv, vm("u").mul(&vm("w"))), (yv, MPoly::var_pow(w, 2))]);
        display_equal(
            &back,
            &MPoly::var_pow(w, 6).mul(&h6t),
            "h₂(uw, w²) = w⁶·h̃₆",
        )
    });
    out.push(ModelCheck::new("certify_sigma2_split", "5.2", split_outcome));

    let x2 = frac(MPoly::var_pow(u, 2), MPoly::var_pow(w, 2));
    let y0 = rx(p("3 + 1/2*a2 + 3/2*a3"));
    let d_sigma = p("x^3 - 6*x^2 + 9*x - 2 - a3");
    let y1 = rx(MPoly::var_pow(w, 2)).mul(&d_sigma.substitute(&[(x, x2.clone())]));
    let y2 = y1.add(&p("3 - 9*x + 3*x^2 + 1/2*a2 + 3/2*a3").substitute(&[(x, x2.clone())]));
    let lam = p("18 + 3*a2 + 9*a3");
    let mq = p("36 + 9*a2 + 18*a3");
    let conic_rhs = rx(lam.clone())
        .mul(&x2)
        .mul(&x2)
        .sub(&rx(mq.clone()).mul(&x2))
        .add(&y0.mul(&y0));
    out.push(ModelCheck::new(
        "certify_sigma2_conic",
        "5.2",
        on_curve_equal(
            &y2.mul(&y2),
            &conic_rhs,
            std::slice::from_ref(&rel_h6t),
            "y₂² = Λx₂² − Mx₂ + y₀² on the twisted cover, with (x₂, y₂)(0) = (0, y₀) the recorded rational point",
        ),
    ));

    let tbar2s = x2.mul(&y2.sub(&y0).recip());
    let q_lin = p("6 + a2 + 3*a3 + 36*t + 9*a2*t + 18*a3*t");
    let lam_t2 = p("18*t^2 + 3*a2*t^2 + 9*a3*t^2 - 1");
    let q_at = q_lin.substitute(&[(t, tbar2s.clone())]);
    let lam_at = lam_t2.substitute(&[(t, tbar2s.clone())]);

    out.push(ModelCheck::new(
        "certify_sigma2_x2",
        "5.2",
        on_curve_equal(
            &x2,
            &tbar2s.mul(&q_at).mul(&lam_at.recip()),
            std::slice::from_ref(&rel_h6t),
            "x₂ = t·q(t)/(Λt² − 1) on the twisted cover, t = x₂/(y₂ − y₀)",
        ),
    ));

    // Pure algebra lemma linking the two recorded forms of x₂.
    let p_cubic = q_lin.mul(&lam_t2);
    let lemma = frac(
        vm("t").mul(&q_lin.pow(3)).mul(&lam_t2),
        p_cubic.pow(2),
    )
    .sub(&frac(vm("t").mul(&q_lin), lam_t2.clone()));
    out.push(ModelCheck::new(
        "certify_sigma2_p_form",
        "5.2",
        pure_zero(
            &lemma,
            "t·q³·(Λt² − 1)/p² = t·q/(Λt² − 1) identically for p = q·(Λt² − 1)",
        ),
    ));

    // Recorded narration squares X = uw where the certified value is X/Y.
    out.push(ModelCheck::with_errata(
        "display_sigma2_ratio",
        "5.2",
        expect_residue(
            &rx(vm("u").mul(&vm("w")).pow(2)),
            &x2,
            std::slice::from_ref(&rel_h6t),
            "recorded narration X² = x₂",
        ),
        "x₂ = X²/Y² = (X/Y)², not X²: the narration omits the normalisation by Y = w²",
    ));

    // Final Weierstrass model with the corrected binding y = (u/w)(Λt² − 1).
    let y_sigma2 = frac(vm("u"), vm("w")).mul(&lam_at);
    let rhs_final = tbar2s.mul(&q_at).mul(&lam_at);
    out.push(ModelCheck::new(
        "certify_sigma2_weierstrass",
        "5.2",
        on_curve_equal(
            &y_sigma2.mul(&y_sigma2),
            &rhs_final,
            std::slice::from_ref(&rel_h6t),
            "y = (u/w)(Λt² − 1) satisfies y² = t·q(t)·(Λt² − 1) — the recorded quartic model",
        ),
    ));
    let y_bad2 = rx(vm("u").mul(&vm("w"))).mul(&lam_at);
    out.push(ModelCheck::with_errata(
        "display_sigma2_binding",
        "5.2",
        expect_residue(
            &y_bad2.mul(&y_bad2),
            &rhs_final,
            std::slice::from_ref(&rel_h6t),
            "recorded binding y = X·p(t)/q(t) = uw·(Λt² − 1)",
        ),
        "the recorded binding uses X = uw where the certified one needs X/Y = u/w, mirroring the X² = x₂ slip",
    ));
    let sigma2_rhs_poly = vm("t").mul(&q_lin).mul(&lam_t2);
    out.push(ModelCheck::new(
        "certify_sigma2_separability",
        "5.2",
        separable_at_origin(&sigma2_rhs_poly, t, 6, "σ₂ quartic right-hand side"),
    ));

    // Twisted-cover Klein quotient is rational for the same structural
    // reason as on the reflection side: the residual involution fixes t̄₁
    // and flips w′.
    out.push(ModelCheck::new(
        "certify_z6_klein_rational",
        "5.2",
        klein_rational(
            &tbar1,
            &wprime,
            u,
            w,
            "the residual involution fixes t and negates w′ on the σ₁ model, so the Klein-group quotient of the twisted cover is the rational t-line",
        ),
    ));

    out
}

// ---------------------------------------------------------------------------
// degree 7

fn chain7() -> Vec<ModelCheck> {
    let mut out = Vec::new();
    let (t, x) = (geom("t"), geom("x"));

    let fam = p(
        "x^7 + z^7 + 5*y^7 - 7*x*z*y^5 + a2*x^2*z^2*y^3 - 2*a2*x*z*y^5 + a2*y^7 \
         + a3*x^3*z^3*y - 3*a3*x*z*y^5 + 2*a3*y^7",
    );
    out.push(ModelCheck::new(
        "display_family_model",
        "5.3",
        display_equal(&crate::curves::family_proj(7), &fam, "degree-7 family"),
    ));

    let f07 = match f0_poly(7) {
        Ok(f) => f,
        Err(e) => {
            out.push(ModelCheck::new("display_x7_model", "5.3", Err(e)));
            return out;
        }
    };
    let quarter = crate::rat::qr(1, 4);
    let half = crate::rat::qr(1, 2);
    let f07_display = MPoly::var_pow(t, 5)
        .neg()
        .add(&p("-8 + a3^2").scale_q(&quarter).mul(&MPoly::var_pow(t, 4)))
        .add(&p("-6 + a2*a3 + a3^2").scale_q(&half).mul(&MPoly::var_pow(t, 3)))
        .add(
            &p("-16 + a2^2 - 14*a3 - 3*a3^2")
                .scale_q(&quarter)
                .mul(&MPoly::var_pow(t, 2)),
        )
        .add(
            &p("2 + a2 + a3")
                .mul(&p("5 + a2 + 2*a3"))
                .scale_q(&crate::rat::qr(-1, 2))
                .mul(&vm("t")),
        )
        .add(&p("5 + a2 + 2*a3").pow(2).scale_q(&quarter));
    out.push(ModelCheck::with_errata(
        "display_x7_model",
        "5.3",
        display_equal(&f07, &f07_display, "hyperelliptic right-hand side f⁰₇"),
        "the linear coefficient is typeset with a doubled sign glyph; the certified reading is the minus sign",
    ));

    // Ẽ₇ display misses its x⁶ term (and inherits another doubled glyph).
    let e7_pipeline = vm("x").mul(&f07.substitute_poly(&[(t, MPoly::one().sub(&vm("x")))]));
    let e7_display = p("-7 + 1/4*a3^2")
        .mul(&MPoly::var_pow(x, 5))
        .add(
            &p("21 - 1/2*a2*a3 - 3/2*a3^2").mul(&MPoly::var_pow(x, 4)),
        )
        .add(
            &p("-35 + 1/4*a2^2 - 7/2*a3 + 3/2*a2*a3 + 9/4*a3^2").mul(&MPoly::var_pow(x, 3)),
        )
        .add(&p("35 + 7/2*a2 + 23/2*a3").mul(&MPoly::var_pow(x, 2)))
        .add(&p("-35/4 - a2 - 3*a3").mul(&vm("x")));
    out.push(ModelCheck::with_errata(
        "display_e7_model",
        "5.3",
        display_delta(
            &e7_pipeline,
            &e7_display,
            &p("-x^6"),
            "genus-2 model of the degree-7 common factor",
        ),
        "the recorded expansion omits the x⁶ term (coefficient 1) and its x⁴ coefficient carries a doubled sign glyph read as minus",
    ));

    let g7 = g_poly(7);
    let g7_display = p(
        "u^7 - 7*u^5*v + 14*u^3*v^2 - 7*u*v^3 + a3*v^3 + a2*v^2 - 2*a2*v - 3*a3*v - 7*v + a2 + 2*a3 + 5",
    );
    out.push(ModelCheck::new(
        "display_y7_model",
        "5.3",
        display_equal(&g7, &g7_display, "septic model of the degree-7 reflection quotient"),
    ));

    out
}

// ---------------------------------------------------------------------------
// degree 8

fn chain8() -> Vec<ModelCheck> {
    let mut out = Vec::new();
    let (u, v, t) = (geom("u"), geom("v"), geom("t"));

    let fam_affine = p(
        "x^8 + z^8 + 6 - 8*x*z + a2*z^2*x^2 - 2*a2*x*z + a2 + a3*z^3*x^3 - 3*a3*x*z + 2*a3 \
         + a4*z^4*x^4 - 4*a4*x*z + 3*a4",
    );
    out.push(ModelCheck::new(
        "display_family_model",
        "5.4",
        display_equal(&family_affine(8), &fam_affine, "degree-8 family (affine chart)"),
    ));

    let f08 = match f0_poly(8) {
        Ok(f) => f,
        Err(e) => {
            out.push(ModelCheck::new("display_x8_model", "5.4", Err(e)));
            return out;
        }
    };
    let f08_display = p("a4*t^2 + 2*t^2 + a3*t + 2*a4*t + 4*t + a2 + 2*a3 + 3*a4 + 6")
        .mul(&p(
            "a4*t^4 - 2*t^4 + a3*t^3 + a2*t^2 - 2*a2*t - 3*a3*t - 4*a4*t - 8*t + a2 + 2*a3 + 3*a4 + 6",
        ))
        .scale_q(&crate::rat::qr(1, 4));
    out.push(ModelCheck::new(
        "display_x8_model",
        "5.4",
        display_equal(&f08, &f08_display, "factored sextic right-hand side f⁰₈"),
    ));

    let g8 = g_poly(8);
    let g8_display = p(
        "u^8 - 8*v - 8*u^6*v + 20*u^4*v^2 - 16*u^2*v^3 + 2*v^4 + 6 + a2 - 2*a2*v + a2*v^2 \
         + 2*a3 - 3*a3*v + a3*v^3 + 3*a4 - 4*a4*v + a4*v^4",
    );
    out.push(ModelCheck::new(
        "display_y8_model",
        "5.4",
        display_equal(&g8, &g8_display, "octic model of the degree-8 reflection quotient"),
    ));

    // Twisted octic, raw coordinates: coefficients in ℚ(ζ₈).
    let h8 = match h_poly(8) {
        Ok(h) => h,
        Err(e) => {
            out.push(ModelCheck::new("display_z8_model_raw", "5.4", Err(e)));
            return out;
        }
    };
    let z8 = |k: i64| Cyclo::root_of_unity(8, k);
    let term = |du: u16, dv: u16, c: Cyclo| {
        let mut m = Mono::var(u, du);
        m.set_exponent(v, dv);
        MPoly::monomial(m, c)
    };
    let tail_bad = p("a2*v^2 - 2*a2*v + a2")
        .add(&p("a3*v^3 - 3*a3*v + 2*a3"))
        .add(&p("a3*v^4 - 4*a3*v + 3*a3")); // the recorded tail repeats a₃
    let h8_raw_display = MPoly::int(-6)
        .add(&term(8, 0, Cyclo::int(-1)))
        .add(&p("8*v"))
        .add(&term(6, 1, z8(-1).scale(&qi(8))))
        .add(&term(4, 2, z8(2).scale(&qi(20))))
        .add(&term(2, 3, z8(1).scale(&qi(-16))))
        .add(&p("2*v^4"))
        .sub(&tail_bad);
    let raw_delta = p("a4*v^4 - 4*a4*v + 3*a4").sub(&p("a3*v^4 - 4*a3*v + 3*a3"));
    let raw_outcome = {
        let got = h8_raw_display.add(&h8);
        if got == raw_delta {
            Ok(format!(
                "recorded raw octic equals −h₈ up to the frozen tail slip {}",
                clip(&raw_delta)
            ))
        } else {
            Err(format!(
                "unexpected deviation {} (frozen: {})",
                clip(&got),
                clip(&raw_delta)
            ))
        }
    };
    out.push(ModelCheck::with_errata(
        "display_z8_model_raw",
        "5.4",
        raw_outcome,
        "the recorded display is the negative of the pipeline octic and its quartic tail block reads a₃ where a₄ is required",
    ));

    // Rescaled coordinates u → ζ₁₆³u: everything rational.
    let h8r = match h8_rescaled() {
        Ok(h) => h,
        Err(e) => {
            out.push(ModelCheck::new("display_z8_model_rescaled", "5.4", Err(e)));
            return out;
        }
    };
    let h8r_display = p("-6 + u^8 + 8*v + 8*u^6*v + 20*u^4*v^2 + 16*u^2*v^3 + 2*v^4").sub(&tail_bad);
    let resc_outcome = {
        let got = h8r_display.add(&h8r);
        if got == raw_delta {
            Ok(format!(
                "recorded rescaled octic equals −h₈(ζ₁₆³u, v) up to the frozen tail slip {}",
                clip(&raw_delta)
            ))
        } else {
            Err(format!(
                "unexpected deviation {} (frozen: {})",
                clip(&got),
                clip(&raw_delta)
            ))
        }
    };
    out.push(ModelCheck::with_errata(
        "display_z8_model_rescaled",
        "5.4",
        resc_outcome,
        "same tail slip as the raw display; the rescaling itself is certified rational by the pipeline",
    ));

    // Folding the hyperelliptic-core involution (u, w) ↦ (−u, −w) of
    // u² = f⁰₈(1 − w²): in the invariants (x, y) = (w², wu) one has
    // y² = x·f⁰₈(1 − x).  Certify the binding on the curve.
    let (w, x) = (geom("w"), geom("x"));
    let xtilde_rel = Relation::new(
        MPoly::var_pow(u, 2).sub(&f08.substitute_poly(&[(
            t,
            MPoly::one().sub(&MPoly::var_pow(w, 2)),
        )])),
        u,
    );
    let y_sq = MPoly::var_pow(w, 2).mul(&MPoly::var_pow(u, 2));
    let rhs8 = vm("x")
        .mul(&f08.substitute_poly(&[(t, MPoly::one().sub(&vm("x")))]))
        .substitute_poly(&[(x, MPoly::var_pow(w, 2))]);
    out.push(ModelCheck::new(
        "certify_e8_model",
        "5.4",
        on_curve_equal(
            &rx(y_sq),
            &rx(rhs8),
            &[xtilde_rel],
            "(wu)² = x·f⁰₈(1 − x) at x = w² on the folded septic core model",
        ),
    ));

    // The right-hand side x·f⁰₈(1 − x) of the degree-8 common factor is
    // separable (genus-3 witness), and the factored display keeps the two
    // factors coprime at the sample point.
    let e8_rhs = vm("t").mul(&f08.substitute_poly(&[(t, MPoly::one().sub(&vm("t")))]));
    out.push(ModelCheck::new(
        "certify_e8_separability",
        "5.4",
        separable_at_origin(&e8_rhs, t, 8, "degree-8 common-factor right-hand side"),
    ));

    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn assert_all_pass(n: u32, expected_errata: &[&str]) {
        let checks = chain(n);
        assert!(!checks.is_empty(), "chain {n} is empty");
        let mut ids = std::collections::BTreeSet::new();
        for c in &checks {
            assert!(
                ids.insert(c.id),
                "duplicate check id {} in chain {n}",
                c.id
            );
            if let Err(e) = &c.outcome {
                panic!("chain {n}, check {}: {e}", c.id);
            }
        }
        let errata: Vec<&str> = checks
            .iter()
            .filter(|c| c.errata.is_some())
            .map(|c| c.id)
            .collect();
        assert_eq!(errata, expected_errata, "errata set for n = {n}");
    }

    #[test]
    fn degree_four_chain_certifies() {
        assert_all_pass(4, &[]);
    }

    #[test]
    fn degree_five_chain_certifies() {
        assert_all_pass(5, &["display_x5_substitution"]);
    }

    #[test]
    fn degree_six_chain_certifies() {
        assert_all_pass(
            6,
            &[
                "display_y6_binding",
                "display_tau1_model",
                "display_tau2_evaluation",
                "display_tau2_model",
                "display_z6_model",
                "display_sigma2_ratio",
                "display_sigma2_binding",
            ],
        );
    }

    #[test]
    fn degree_seven_chain_certifies() {
        assert_all_pass(7, &["display_x7_model", "display_e7_model"]);
    }

    #[test]
    fn degree_eight_chain_certifies() {
        assert_all_pass(8, &["display_z8_model_raw", "display_z8_model_rescaled"]);
    }

    #[test]
    fn out_of_range_chains_are_empty() {
        assert!(chain(3).is_empty());
        assert!(chain(9).is_empty());
    }

    #[test]
    fn delta_h_is_pinned() {
        let checks = chain(5);
        let dh = checks
            .iter()
            .find(|c| c.id == "delta_h_identity")
            .expect("delta_h_identity present");
        assert!(dh.outcome.is_ok());
        assert!(dh.errata.is_none());
    }
}
