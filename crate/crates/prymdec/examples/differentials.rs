//! Differential bookkeeping on the normalized curves: the monomial bases of
//! regular differentials, concrete pullbacks under the symmetry group, and
//! the eigenspace dimension tables that drive the decomposition.
//!
//! Run with `cargo run --example differentials -- [degree]` (default 6).

use prymdec::curves::{alpha, beta, gamma};
use prymdec::diffs::{self, DiffIndex};

fn main() {
    let n: u32 = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(6);

    let counts = diffs::basis_counts(n).unwrap();
    println!(
        "degree {n}: {} base forms + {} anti-invariant forms = {} on the cover",
        counts.dim_base, counts.dim_prym, counts.dim_cover
    );

    // A few concrete pullbacks: the rotation acts diagonally, the deck
    // involution negates exactly the anti-invariant block, and the
    // reflection permutes indices with computed signs.
    let sample = DiffIndex::TildeOmega(1, 0);
    for (label, map) in [("alpha", alpha(n)), ("beta", beta()), ("gamma", gamma())] {
        let image = diffs::pullback(n, &map, &sample).unwrap();
        println!("{label}* omega~(1,0) = {} * {:?}", image.scalar, image.target);
    }
    println!();

    if (5..=8).contains(&n) {
        println!("{}", diffs::certify_pullbacks(n).unwrap());
    }
    if n >= 5 {
        let table = diffs::eigenspace_table(n).unwrap();
        println!("rotation-fixed block:   {}", table.alpha_fixed_dim);
        println!("reflection split:       {:?}", table.beta_split);
        println!("reflection Prym block:  {}", table.prym_y_dim);
        if let Some(z) = table.prym_z_dim {
            println!("twisted Prym block:     {z}");
        }
        println!("rotation eigenvalues (exponent, multiplicity): {:?}", table.alpha_multiset);
    }
}
