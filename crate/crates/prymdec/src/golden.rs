//! Golden-corpus management: canonical on-disk snapshots of the quotient
//! models under `corpus/n{N}/{model}.poly`.
//!
//! Each file holds a short header (`# model:`, `# anchor:`, `# genus:`)
//! followed by the canonical rendering of the defining polynomial.  The
//! corpus is a regression net for the derivation pipeline: a check passes
//! only when the stored equation parses, re-renders to the identical bytes,
//! and still matches the freshly derived model.  Set `PRYMDEC_REGEN_CORPUS=1`
//! (or run the `build` subcommand) to rewrite the snapshots after an
//! intentional pipeline change.

use crate::poly::{parse, MPoly};
use crate::quotients::{models_for, QuotientModel};
use std::fs;
use std::path::{Path, PathBuf};

/// Degrees with corpus snapshots: the explicitly worked-out members.
pub const CORPUS_DEGREES: [u32; 5] = [4, 5, 6, 7, 8];

/// Locator tag of the section where the models of degree `n` are displayed.
pub fn anchor_for(n: u32) -> &'static str {
    match n {
        4 => "5.5",
        5 => "5.1",
        6 => "5.2",
        7 => "5.3",
        8 => "5.4",
        _ => "4",
    }
}

/// Root of the on-disk corpus: `$PRYMDEC_CORPUS`, or the workspace default.
pub fn corpus_root() -> PathBuf {
    if let Ok(dir) = std::env::var("PRYMDEC_CORPUS") {
        return PathBuf::from(dir);
    }
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../..").join("corpus")
}

/// True when the environment asks for snapshot regeneration.
pub fn regen_requested() -> bool {
    std::env::var("PRYMDEC_REGEN_CORPUS").map(|v| v == "1").unwrap_or(false)
}

/// Canonical file body for one model.
pub fn render(model: &QuotientModel, n: u32) -> String {
    format!(
        "# model: {}\n# anchor: {}\n# genus: {}\n{}\n",
        model.name,
        anchor_for(n),
        model.genus,
        model.equation
    )
}

/// Check one stored body against the freshly derived model.
///
/// Three layers: the equation line must parse, must re-render to the exact
/// stored bytes (canonical-form stability), and must equal the pipeline's
/// polynomial (derivation stability).  The genus header must match too.
pub fn check_body(model: &QuotientModel, n: u32, body: &str) -> Result<String, String> {
    let mut genus_line = None;
    let mut equation_line = None;
    for line in body.lines() {
        if let Some(rest) = line.strip_prefix("# genus:") {
            genus_line = Some(rest.trim().to_string());
        } else if !line.starts_with('#') && !line.trim().is_empty() {
            if equation_line.is_some() {
                return Err("more than one equation line in the snapshot".to_string());
            }
            equation_line = Some(line.to_string());
        }
    }
    let genus: i64 = genus_line
        .ok_or_else(|| "snapshot lacks a genus header".to_string())?
        .parse()
        .map_err(|e| format!("unreadable genus header: {e}"))?;
    if genus != model.genus {
        return Err(format!("stored genus {genus}, derived genus {}", model.genus));
    }
    let stored = equation_line.ok_or_else(|| "snapshot lacks an equation line".to_string())?;
    let parsed: MPoly =
        parse(&stored).map_err(|e| format!("stored equation does not parse: {e}"))?;
    let rerendered = parsed.to_string();
    if rerendered != stored {
        return Err(format!(
            "canonical form drifted: stored {stored:?}, re-rendered {rerendered:?}"
        ));
    }
    if parsed != model.equation {
        return Err(format!(
            "stored equation differs from the derived model (derived: {})",
            model.equation
        ));
    }
    if body != render(model, n) {
        return Err("snapshot headers differ from the canonical rendering".to_string());
    }
    Ok(format!("{} round-trips and matches the pipeline", model.name))
}

/// Outcome of one golden-file comparison.
#[derive(Clone, Debug)]
pub struct GoldenOutcome {
    /// Model name, also the file stem.
    pub model: String,
    pub outcome: Result<String, String>,
}

/// Verify every snapshot of degree `n` under `root`.
pub fn verify_corpus_at(root: &Path, n: u32) -> Result<Vec<GoldenOutcome>, String> {
    let models = models_for(n)?;
    let dir = root.join(format!("n{n}"));
    let mut out = Vec::new();
    for model in &models {
        let path = dir.join(format!("{}.poly", model.name));
        let outcome = match fs::read_to_string(&path) {
            Ok(body) => check_body(model, n, &body),
            Err(e) => Err(format!(
                "cannot read {} ({e}); regenerate with the build subcommand or PRYMDEC_REGEN_CORPUS=1",
                path.display()
            )),
        };
        out.push(GoldenOutcome { model: model.name.clone(), outcome });
    }
    Ok(out)
}

/// Verify the snapshots of degree `n` under the default corpus root.
pub fn verify_corpus(n: u32) -> Result<Vec<GoldenOutcome>, String> {
    verify_corpus_at(&corpus_root(), n)
}

/// Write (or rewrite) the snapshots of degree `n` under `root`.
pub fn write_corpus_at(root: &Path, n: u32) -> Result<Vec<PathBuf>, String> {
    let models = models_for(n)?;
    let dir = root.join(format!("n{n}"));
    fs::create_dir_all(&dir).map_err(|e| format!("cannot create {}: {e}", dir.display()))?;
    let mut written = Vec::new();
    for model in &models {
        let path = dir.join(format!("{}.poly", model.name));
        fs::write(&path, render(model, n)).map_err(|e| format!("cannot write {}: {e}", path.display()))?;
        written.push(path);
    }
    Ok(written)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bodies_round_trip_for_all_corpus_degrees() {
        for n in CORPUS_DEGREES {
            for model in models_for(n).unwrap() {
                let body = render(&model, n);
                check_body(&model, n, &body)
                    .unwrap_or_else(|e| panic!("n = {n}, model {}: {e}", model.name));
            }
        }
    }

    #[test]
    fn tampered_bodies_are_rejected() {
        let model = &models_for(5).unwrap()[0];
        let body = render(model, 5);
        // Flip the genus header.
        let bad = body.replace("# genus:", "# genus: 9");
        assert!(check_body(model, 5, &bad).is_err());
        // Damage the equation (still parseable, no longer the same poly).
        let bad = body.replace("u^2", "u^3");
        let err = check_body(model, 5, &bad).unwrap_err();
        assert!(err.contains("differs") || err.contains("drifted"), "{err}");
        // Non-canonical but equal rendering must be flagged as drift.
        let bad = body.replace("u^2", "1*u^2");
        let err = check_body(model, 5, &bad).unwrap_err();
        assert!(err.contains("drifted"), "{err}");
    }

    #[test]
    fn snapshots_on_disk_verify_or_regenerate() {
        let root = corpus_root();
        for n in CORPUS_DEGREES {
            if regen_requested() {
                write_corpus_at(&root, n).unwrap_or_else(|e| panic!("n = {n}: {e}"));
            }
            let outcomes = verify_corpus_at(&root, n).unwrap_or_else(|e| panic!("n = {n}: {e}"));
            assert!(!outcomes.is_empty());
            for o in outcomes {
                if let Err(e) = o.outcome {
                    panic!("n = {n}, model {}: {e}", o.model);
                }
            }
        }
    }
}
