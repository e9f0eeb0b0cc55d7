//! Tour of the symmetric nodal family: defining equations, marked nodes,
//! the dihedral-times-deck symmetry group, and the genus bookkeeping.
//!
//! Run with `cargo run --example family_tour`.

use prymdec::curves;

fn main() {
    for n in 4..=7 {
        println!("== degree {n} ==");
        println!("projective member:  {}", curves::family_proj(n));

        // The n marked nodes sit at (ζⁱ, ζ⁻ⁱ) in the affine chart; both the
        // equation and its gradient vanish there identically in the
        // parameters.
        let (x0, z0) = curves::node(n, 1);
        println!("sample node:        (x, z) = ({x0}, {z0})");
        println!("node certificate:   {}", curves::certify_nodes(n).unwrap());

        // Rotation, reflection, and the deck involution of the double cover,
        // with their defining relations.
        println!("group certificate:  {}", curves::certify_group(n).unwrap());

        // The closed genus formulas need an irreducible member, so they start
        // at degree 5; the quartic degenerates into a pair of elliptic curves.
        if n >= 5 {
            let g = curves::genus_base(n);
            let g_tilde = curves::genus_cover(n);
            println!(
                "genera:             base {g}, cover {g_tilde}, difference {} = n(n-3)/2",
                curves::prym_dim(n)
            );
            println!("cover certificate:  {}", curves::certify_cover_genus(n).unwrap());
        } else {
            println!("genera:             prym dimension {} (reducible member)", curves::prym_dim(n));
        }
        println!();
    }

    // The scan below certifies at a concrete parameter point that the only
    // singular points are the n marked nodes; its cost is budgeted because
    // the eliminant degrees grow quadratically.
    let scan = curves::smoothness_scan(5, &[(2, prymdec::rat::qi(0))], 256).unwrap();
    println!("smoothness scan at degree 5: {}", scan.witness);
}
