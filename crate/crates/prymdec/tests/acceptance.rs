//! End-to-end acceptance gate.
//!
//! Each criterion below is an exact symbolic check — no tolerances, no
//! sampled shortcuts beyond the explicitly budgeted ones.  The single test
//! prints one `PASS`/`FAIL` line per criterion (run with `--nocapture` to
//! see them on success) and fails if any criterion does.

use prymdec::poly::{parse, MPoly};
use prymdec::rat::qr;
use prymdec::vars::geom;
use prymdec::{chains, curves, decomp, diffs, quotients};

type Criterion = fn() -> Result<String, String>;

/// 1. The degree-5 core model: `(A²/4 − t⁵) ÷ (t − 1)²` divides exactly and
/// equals the recorded cubic display.
fn quintic_core_model() -> Result<String, String> {
    let t = geom("t");
    let a = quotients::a_poly(5);
    let num = a.mul(&a).scale_q(&qr(1, 4)).sub(&MPoly::var_pow(t, 5));
    let den = MPoly::var(t).sub(&MPoly::one()).pow(2);
    let quotient = num
        .exact_divide(&den)
        .map_err(|e| format!("division is not exact: {e}"))?;
    if quotient != quotients::f0_poly(5)? {
        return Err("division result disagrees with the pipeline's core model".into());
    }
    let display = parse(
        "-t^3 + 1/4*a2^2*t^2 - 2*t^2 - 1/2*a2^2*t - 5/2*a2*t - 3*t + 1/4*a2^2 + 3/2*a2 + 9/4",
    )
    .map_err(|e| format!("frozen display must parse: {e}"))?;
    if quotient != display {
        return Err("division result disagrees with the recorded display".into());
    }
    let chain5 = chains::chain(5);
    let rec = chain5
        .iter()
        .find(|c| c.id == "display_x5_model")
        .ok_or("display check missing from the degree-5 chain")?;
    match (&rec.outcome, rec.errata) {
        (Ok(_), None) => Ok("(A²/4 − t⁵)/(t − 1)² is exact and matches the display".into()),
        (Ok(_), Some(e)) => Err(format!("display check unexpectedly carries an erratum: {e}")),
        (Err(e), _) => Err(e.clone()),
    }
}

/// 2. The degree-5 sextic discriminant identity, with any normalization
/// discrepancy recorded and constant in the parameter.
fn sextic_discriminant() -> Result<String, String> {
    let chain5 = chains::chain(5);
    let rec = chain5
        .iter()
        .find(|c| c.id == "delta_h_identity")
        .ok_or("discriminant check missing from the degree-5 chain")?;
    if rec.errata.is_some() {
        return Err("discriminant check should certify without errata".into());
    }
    rec.outcome.clone()
}

/// 3. Golden-model suite: every recorded display for degrees 4–8 certifies
/// with zero residue; the set of checks passing *with errata* is exactly the
/// frozen list of known display typos.
fn golden_model_suite() -> Result<String, String> {
    let expected_errata: &[(u32, &str)] = &[
        (5, "display_x5_substitution"),
        (6, "display_y6_binding"),
        (6, "display_tau1_model"),
        (6, "display_tau2_evaluation"),
        (6, "display_tau2_model"),
        (6, "display_z6_model"),
        (6, "display_sigma2_ratio"),
        (6, "display_sigma2_binding"),
        (7, "display_x7_model"),
        (7, "display_e7_model"),
        (8, "display_z8_model_raw"),
        (8, "display_z8_model_rescaled"),
    ];
    let mut errata = Vec::new();
    let mut total = 0usize;
    for n in 4..=8 {
        for check in chains::chain(n) {
            total += 1;
            if let Err(e) = &check.outcome {
                return Err(format!("degree {n}, {}: {e}", check.id));
            }
            if check.errata.is_some() {
                errata.push((n, check.id));
            }
        }
    }
    let mut expected: Vec<(u32, &str)> = expected_errata.to_vec();
    expected.sort_unstable();
    errata.sort_unstable();
    if errata != expected {
        return Err(format!(
            "errata set drifted: got {errata:?}, expected {expected:?}"
        ));
    }
    Ok(format!(
        "{total} model checks certify, {} with recorded display errata",
        errata.len()
    ))
}

/// 4. Every printed genus square is reproduced from fixed-point counts and
/// the Hurwitz formula (the ledger builder hard-errors on any mismatch, and
/// the closed forms are cross-checked against the computed genera).
fn genus_squares() -> Result<String, String> {
    let mut squares = 0usize;
    for n in 5..=8 {
        let ledger = decomp::build_ledger(n)?;
        let mut seen = 0usize;
        for c in &ledger.checks {
            if c.id.starts_with("hurwitz_square") {
                if c.status != "pass" {
                    return Err(format!("degree {n}, {}: status {}", c.id, c.status));
                }
                seen += 1;
            }
        }
        if seen == 0 {
            return Err(format!("degree {n} records no genus squares"));
        }
        if !ledger.checks.iter().any(|c| c.id == "genus_closed_forms" && c.status == "pass") {
            return Err(format!("degree {n} is missing the closed-form cross-check"));
        }
        squares += seen;
    }
    Ok(format!("{squares} commutative genus squares reproduced for degrees 5–8"))
}

/// 5. Identity families: the reflection power sums for 1 ≤ m ≤ 32, the
/// twisted power sums for even m ≤ 16, node and gradient vanishing
/// identically in the parameters for 4 ≤ n ≤ 12, and the palindromic
/// exceptional conic for 4 ≤ n ≤ 12.
fn identity_families() -> Result<String, String> {
    for m in 1..=32 {
        quotients::certify_newton_p(m).map_err(|e| format!("power sum {m}: {e}"))?;
    }
    for m in (4..=16).step_by(2) {
        quotients::twisted_q(m).map_err(|e| format!("twisted power sum {m}: {e}"))?;
    }
    for n in 4..=12 {
        curves::certify_nodes(n).map_err(|e| format!("nodes at degree {n}: {e}"))?;
        curves::node_chart(n).map_err(|e| format!("blow-up at degree {n}: {e}"))?;
    }
    Ok("power sums to 32, twisted to 16, nodes and palindromes to 12".into())
}

/// 6. Dimension ledgers: factor dimensions tile n(n−3)/2 for 4 ≤ n ≤ 10;
/// the degree-4/5/6 ledgers have the recorded shapes; real-multiplication
/// degrees equal φ(n)/2 with the recorded minimal polynomials at n = 5, 8.
fn dimension_ledgers() -> Result<String, String> {
    for n in 4..=10 {
        let ledger = decomp::build_ledger(n)?;
        let expected = curves::prym_dim(n);
        if ledger.factor_dim_sum() != expected {
            return Err(format!(
                "degree {n}: factors sum to {}, expected {expected}",
                ledger.factor_dim_sum()
            ));
        }
    }
    let shapes: &[(u32, &[i64])] = &[(4, &[1, 1]), (5, &[1, 2, 2]), (6, &[1, 2, 2, 2, 2])];
    for (n, want) in shapes {
        let ledger = decomp::build_ledger(*n)?;
        let mut dims = Vec::new();
        for f in &ledger.factors {
            for _ in 0..f.multiplicity {
                dims.push(f.dim);
            }
        }
        dims.sort_unstable();
        if dims != *want {
            return Err(format!("degree {n}: dimension multiset {dims:?}, expected {want:?}"));
        }
    }
    for (n, poly) in [(5u32, "T^2 + T - 1"), (8, "T^2 - 2")] {
        let rm = decomp::rm_metadata(n)?;
        if rm.display != poly {
            return Err(format!("degree {n}: minimal polynomial {}, expected {poly}", rm.display));
        }
        if rm.degree != phi_half(n) {
            return Err(format!("degree {n}: field degree {} ≠ φ({n})/2", rm.degree));
        }
    }
    for n in 4..=10 {
        let rm = decomp::rm_metadata(n)?;
        if rm.degree != phi_half(n) {
            return Err(format!("degree {n}: field degree {} ≠ φ({n})/2", rm.degree));
        }
    }
    Ok("ledgers tile for degrees 4–10 with the recorded shapes and fields".into())
}

fn phi_half(n: u32) -> usize {
    prymdec::cyclo::phi(n) / 2
}

/// 7. Differential bookkeeping: basis counts for 5 ≤ n ≤ 12, rotation
/// eigenvalues by concrete pullback for 5 ≤ n ≤ 8, reflection balance for
/// odd degrees, the middle anti-invariant cancellation at n = 6, 8, and
/// anti-invariant cardinalities equal to the Prym dimension for 5 ≤ n ≤ 12.
fn differential_bookkeeping() -> Result<String, String> {
    for n in 5..=12 {
        let c = diffs::basis_counts(n)?;
        if c.dim_base + c.dim_prym != c.dim_cover {
            return Err(format!("degree {n}: counts do not tile"));
        }
        let cardinality = diffs::prym_basis(n).len() as i64;
        if cardinality != curves::prym_dim(n) {
            return Err(format!(
                "degree {n}: {cardinality} anti-invariant forms, Prym dimension {}",
                curves::prym_dim(n)
            ));
        }
    }
    for n in 5..=8 {
        diffs::certify_pullbacks(n).map_err(|e| format!("pullbacks at degree {n}: {e}"))?;
    }
    for n in [5u32, 7, 9, 11] {
        let r = diffs::eigenspace_table(n)?;
        if r.beta_split.0 != r.beta_split.1 {
            return Err(format!("degree {n}: unbalanced reflection split {:?}", r.beta_split));
        }
    }
    for n in [6u32, 8] {
        let r = diffs::eigenspace_table(n)?;
        let expected = quotients::genus_ztilde(n)? - quotients::genus_z(n)?;
        if r.prym_z_dim != Some(expected) {
            return Err(format!(
                "degree {n}: twisted block {:?}, expected {expected} after the middle cancellation",
                r.prym_z_dim
            ));
        }
    }
    Ok("counts, eigenvalues, balance, cancellation, and cardinalities all certify".into())
}

/// 8. The isogeny statements themselves are out of desk-scale reach and are
/// recorded as paper-asserted ledger entries, never as verified checks.
fn isogeny_bookkeeping() -> Result<String, String> {
    for n in 4..=10 {
        let ledger = decomp::build_ledger(n)?;
        let entry = ledger
            .checks
            .iter()
            .find(|c| c.id == "isogeny_status")
            .ok_or_else(|| format!("degree {n}: no isogeny entry"))?;
        if entry.status != "paper-asserted" {
            return Err(format!(
                "degree {n}: isogeny entry has status `{}`, expected `paper-asserted`",
                entry.status
            ));
        }
    }
    Ok("isogeny statements recorded as paper-asserted for degrees 4–10".into())
}

#[test]
fn acceptance_criteria() {
    let criteria: &[(&str, Criterion)] = &[
        ("1 quintic core model", quintic_core_model),
        ("2 sextic discriminant", sextic_discriminant),
        ("3 golden-model suite", golden_model_suite),
        ("4 genus squares", genus_squares),
        ("5 identity families", identity_families),
        ("6 dimension ledgers", dimension_ledgers),
        ("7 differential bookkeeping", differential_bookkeeping),
        ("8 isogeny bookkeeping", isogeny_bookkeeping),
    ];
    let mut failed = Vec::new();
    for (label, run) in criteria {
        match run() {
            Ok(note) => println!("criterion {label}: PASS — {note}"),
            Err(e) => {
                println!("criterion {label}: FAIL — {e}");
                failed.push(*label);
            }
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
