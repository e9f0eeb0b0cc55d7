//! Build the isogeny-decomposition ledger of one degree: certified factor
//! dimensions, multiplicities, real-multiplication fields, and the
//! distinction between machine-verified checks and paper-asserted entries.
//!
//! Run with `cargo run --example decomposition_ledger -- [degree]` (default 6).

use prymdec::decomp;

fn main() {
    let n: u32 = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(6);
    let ledger = decomp::build_ledger(n).unwrap();

    println!("degree {n}: total dimension {}", ledger.total_dim);
    for f in &ledger.factors {
        let mult = if f.multiplicity == 1 {
            String::new()
        } else {
            format!("  x{}", f.multiplicity)
        };
        let rm = if f.rm_minpoly == "none" {
            String::new()
        } else {
            format!("  [RM by a root of {}]", f.rm_minpoly)
        };
        println!("  {:<22} dim {}{mult}{rm}", f.name, f.dim);
    }
    println!();
    for c in &ledger.checks {
        match &c.witness {
            Some(w) => println!("  {:<28} {:<16} {w}", c.id, c.status),
            None => println!("  {:<28} {}", c.id, c.status),
        }
    }
    println!();
    println!("JSON form:\n{}", ledger.to_json());
}
