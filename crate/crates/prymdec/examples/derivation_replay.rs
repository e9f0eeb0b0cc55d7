//! Replay the recorded derivation chain of one degree step by step: every
//! displayed model identity is re-certified by exact reduction against the
//! curve relations, and known display typos surface as errata notes.
//!
//! Run with `cargo run --example derivation_replay -- [degree]` (default 5).

use prymdec::chains;

fn main() {
    let n: u32 = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(5);
    let checks = chains::chain(n);
    if checks.is_empty() {
        println!("no recorded derivation chain at degree {n} (available: 4-8)");
        return;
    }
    let mut failures = 0usize;
    for check in &checks {
        match (&check.outcome, check.errata) {
            (Ok(witness), None) => println!("[ok]      {:<32} {witness}", check.id),
            (Ok(witness), Some(note)) => {
                println!("[errata]  {:<32} {witness}", check.id);
                println!("          erratum: {note}");
            }
            (Err(reason), _) => {
                println!("[FAILED]  {:<32} {reason}", check.id);
                failures += 1;
            }
        }
    }
    println!();
    println!("{} steps, {failures} failures", checks.len());
}
