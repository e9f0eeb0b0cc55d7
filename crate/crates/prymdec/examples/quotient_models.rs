//! Derive every quotient-curve model of one degree from scratch and print
//! the certified equations, genera, and provenance notes.
//!
//! Run with `cargo run --example quotient_models -- [degree]` (default 6).

use prymdec::quotients;

fn main() {
    let n: u32 = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(6);

    // The raw quotient identities behind the models: the rotation quotient
    // in (s, t) = (xⁿ, xz), the reflection quotient in (u, v) = (x+z, xz),
    // and (for even degree) the twisted reflection quotient.
    println!("{}", quotients::certify_alpha_quotient(n).unwrap());
    println!("{}", quotients::certify_beta_quotient(n).unwrap());
    if n % 2 == 0 {
        println!("{}", quotients::certify_sigma_quotient(n).unwrap());
    }
    println!();

    for model in quotients::models_for(n).unwrap() {
        println!("model {}  (genus {})", model.name, model.genus);
        println!("  {}", model.equation);
        for note in &model.provenance {
            println!("  . {note}");
        }
        println!();
    }
}
