//! The exact-arithmetic kernel underneath everything else: cyclotomic
//! numbers in the power basis, sparse multivariate polynomials, reduction
//! against curve relations, and Bareiss resultants.
//!
//! Run with `cargo run --example exact_arithmetic`.

use prymdec::cyclo::Cyclo;
use prymdec::poly::{parse, MPoly};
use prymdec::rat::fmt_poly;
use prymdec::reduce::{certify_zero, Relation};
use prymdec::resultant::discriminant;
use prymdec::vars::geom;

fn main() {
    // Cyclotomic numbers: ζ₅ + ζ₅⁻¹ is a root of T² + T − 1, the golden
    // ratio's minimal polynomial up to sign.
    let zeta = Cyclo::root_of_unity(5, 1);
    let trace = zeta.add(&zeta.conj());
    println!("z5 + z5^-1          = {trace}");
    println!("minimal polynomial  = {}", fmt_poly(&trace.minimal_polynomial(), "T"));

    // Inverses are exact: (1 + ζ₈)⁻¹ · (1 + ζ₈) = 1.
    let a = Cyclo::one().add(&Cyclo::root_of_unity(8, 1));
    let product = a.mul(&a.inv().unwrap());
    println!("(1 + z8)(1 + z8)^-1 = {product}");
    println!();

    // Sparse polynomials parse from and print to a canonical form.
    let p = parse("x^2*z - 2*x*z + z^3 - 1/2").unwrap();
    println!("p                   = {p}");
    println!("dp/dz               = {}", p.derivative(geom("z")));

    // Reduction certifies membership in the ideal of a relation: w² − 1 + xz
    // vanishes on the double cover, so (w² − 1 + xz)·(x + w) reduces to zero.
    let cover = Relation::new(parse("w^2 - 1 + x*z").unwrap(), geom("w"));
    let member = parse("w^2 - 1 + x*z").unwrap().mul(&parse("x + w").unwrap());
    println!("ideal membership    : {}", certify_zero(&member, &[cover]).is_ok());
    println!();

    // Discriminants via fraction-free determinants stay exact with symbolic
    // coefficients: disc_x(x² + bx + c) = b² − 4c, written in two of the
    // family's parameter names.
    let (b, c) = (MPoly::var(prymdec::vars::param(2)), MPoly::var(prymdec::vars::param(3)));
    let quad = MPoly::var_pow(geom("x"), 2)
        .add(&b.mul(&MPoly::var(geom("x"))))
        .add(&c);
    println!("disc(x^2 + a2*x + a3) = {}", discriminant(&quad, geom("x")).unwrap());
}
