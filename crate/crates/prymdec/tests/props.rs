//! Randomized invariant checks for the exact-arithmetic kernel: field and
//! ring axioms, division round-trips, the resultant/gcd link, text
//! round-trips, and serialization stability.

use proptest::prelude::*;
use prymdec::cyclo::{parse_cyclo, phi, Cyclo};
use prymdec::poly::{parse, MPoly, Mono};
use prymdec::rat::{qi, qr, Q};
use prymdec::resultant::{gcd_univar, resultant};
use prymdec::vars::geom;

fn arb_q() -> impl Strategy<Value = Q> {
    (-20i64..=20, 1i64..=10).prop_map(|(n, d)| qr(n, d))
}

/// A cyclotomic element at one of the supported small levels.
fn arb_cyclo() -> impl Strategy<Value = Cyclo> {
    prop::sample::select(vec![1u32, 2, 3, 4, 5, 6, 8, 12, 16]).prop_flat_map(|level| {
        prop::collection::vec(arb_q(), phi(level)).prop_map(move |coords| {
            let zeta = Cyclo::root_of_unity(level, 1);
            let mut acc = Cyclo::zero();
            let mut power = Cyclo::one();
            for c in coords {
                acc = acc.add(&power.scale(&c));
                power = power.mul(&zeta);
            }
            acc
        })
    })
}

/// A sparse polynomial in x, z, w with rational coefficients.
fn arb_poly() -> impl Strategy<Value = MPoly> {
    let term = (arb_q(), 0u16..=3, 0u16..=3, 0u16..=2).prop_map(|(c, ex, ez, ew)| {
        let mut m = Mono::var(geom("x"), ex);
        m.set_exponent(geom("z"), ez);
        m.set_exponent(geom("w"), ew);
        MPoly::monomial(m, Cyclo::from_q(c))
    });
    prop::collection::vec(term, 0..5)
        .prop_map(|terms| terms.into_iter().fold(MPoly::zero(), |acc, t| acc.add(&t)))
}

/// A univariate polynomial in x of bounded degree with small integer
/// coefficients.
fn arb_univar() -> impl Strategy<Value = MPoly> {
    prop::collection::vec(-5i64..=5, 1..=5).prop_map(|coeffs| {
        let x = geom("x");
        let mut acc = MPoly::zero();
        for (e, c) in coeffs.into_iter().enumerate() {
            acc = acc.add(&MPoly::var_pow(x, e as u16).scale_q(&qi(c)));
        }
        acc
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn cyclotomic_field_axioms(a in arb_cyclo(), b in arb_cyclo(), c in arb_cyclo()) {
        prop_assert!(a.add(&b).sub(&b.add(&a)).is_zero());
        prop_assert!(a.mul(&b).sub(&b.mul(&a)).is_zero());
        prop_assert!(a.add(&b).add(&c).sub(&a.add(&b.add(&c))).is_zero());
        prop_assert!(a.mul(&b).mul(&c).sub(&a.mul(&b.mul(&c))).is_zero());
        prop_assert!(a.mul(&b.add(&c)).sub(&a.mul(&b).add(&a.mul(&c))).is_zero());
    }

    #[test]
    fn cyclotomic_inverses_and_conjugation(a in arb_cyclo(), b in arb_cyclo()) {
        if let Some(inv) = a.inv() {
            prop_assert!(a.mul(&inv).is_one());
        } else {
            prop_assert!(a.is_zero());
        }
        prop_assert!(a.mul(&b).conj().sub(&a.conj().mul(&b.conj())).is_zero());
    }

    #[test]
    fn cyclotomic_text_round_trips(a in arb_cyclo()) {
        let text = a.to_string();
        let back = parse_cyclo(&text).unwrap();
        prop_assert!(a.sub(&back).is_zero(), "`{text}` re-parsed as `{back}`");
    }

    #[test]
    fn polynomial_ring_axioms(p in arb_poly(), q in arb_poly(), r in arb_poly()) {
        prop_assert_eq!(p.add(&q), q.add(&p));
        prop_assert_eq!(p.mul(&q), q.mul(&p));
        prop_assert_eq!(p.mul(&q).mul(&r), p.mul(&q.mul(&r)));
        prop_assert_eq!(p.mul(&q.add(&r)), p.mul(&q).add(&p.mul(&r)));
    }

    #[test]
    fn exact_division_round_trips(p in arb_poly(), q in arb_poly()) {
        if !q.is_zero() {
            let product = p.mul(&q);
            let back = product.exact_divide(&q).unwrap();
            prop_assert_eq!(back, p);
        }
    }

    #[test]
    fn polynomial_text_round_trips(p in arb_poly()) {
        let text = p.to_string();
        let back = parse(&text).unwrap();
        prop_assert_eq!(back, p);
    }

    #[test]
    fn evaluation_is_a_ring_homomorphism(p in arb_poly(), q in arb_poly(),
                                         vx in arb_q(), vz in arb_q(), vw in arb_q()) {
        let binds = [(geom("x") as u32, vx), (geom("z") as u32, vz), (geom("w") as u32, vw)];
        // `specialize` targets parameter indices, so bind geometry variables
        // through `substitute_poly` with constants.
        let consts: Vec<(usize, MPoly)> = binds
            .iter()
            .map(|(v, q)| (*v as usize, MPoly::from_q(q.clone())))
            .collect();
        let ev = |f: &MPoly| f.substitute_poly(&consts).as_q().unwrap();
        prop_assert_eq!(ev(&p.add(&q)), ev(&p) + ev(&q));
        prop_assert_eq!(ev(&p.mul(&q)), ev(&p) * ev(&q));
    }

    #[test]
    fn resultant_vanishes_exactly_on_common_factors(f in arb_univar(), g in arb_univar()) {
        let x = geom("x");
        if f.degree_in(x) > 0 && g.degree_in(x) > 0 {
            let res = resultant(&f, &g, x);
            let gcd = gcd_univar(&f, &g, x).unwrap();
            prop_assert_eq!(res.is_zero(), gcd.degree_in(x) > 0);
        }
    }

    #[test]
    fn shared_root_forces_zero_resultant(f in arb_univar(), g in arb_univar(), root in -4i64..=4) {
        let x = geom("x");
        let linear = MPoly::var(x).sub(&MPoly::int(root));
        let ff = f.mul(&linear);
        let gg = g.mul(&linear);
        if ff.degree_in(x) > 0 && gg.degree_in(x) > 0 {
            prop_assert!(resultant(&ff, &gg, x).is_zero());
        }
    }
}

#[test]
fn ledger_and_report_serialization_round_trip() {
    for n in [4u32, 6, 8] {
        let ledger = prymdec::decomp::build_ledger(n).unwrap();
        let text = ledger.to_json();
        let back: prymdec::decomp::DecompositionLedger = serde_json::from_str(&text).unwrap();
        assert_eq!(back, ledger);
    }
    let opts = prymdec::report::RunOptions { range: (4, 4), ..Default::default() };
    let report = prymdec::report::run(&opts);
    let back: prymdec::report::Report = serde_json::from_str(&report.to_json()).unwrap();
    assert_eq!(back, report);
}
