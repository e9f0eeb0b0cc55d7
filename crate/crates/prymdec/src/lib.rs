//! Exact symbolic verification of Prym variety decompositions for a family
//! of highly symmetric nodal plane curves.
//!
//! For each degree `n ≥ 4` the crate builds a plane curve with `n` nodes in
//! special position, the double cover branched over them, and the full
//! automorphism group of that cover; it then derives the quotient curves,
//! certifies explicit models and coordinate maps for them by exact
//! polynomial identities, pins down the action on holomorphic
//! differentials, and assembles the resulting isogeny decomposition of the
//! associated Prym variety into a machine-readable ledger.
//!
//! Every check is exact: coefficients live in cyclotomic fields, identities
//! are certified by zero remainders, and failures carry witnesses.  Nothing
//! is floating point, nothing is probabilistic.
//!
//! Layering, bottom to top:
//!
//! * [`rat`], [`cyclo`], [`linalg`] — exact scalars: rationals, cyclotomic
//!   fields ℚ(ζ_N), and dense linear algebra over both;
//! * [`vars`], [`poly`], [`resultant`] — sparse multivariate polynomials
//!   over those scalars, with exact division, substitution, resultants and
//!   discriminants;
//! * [`curves`] — the nodal plane-curve family, its double cover, and the
//!   automorphism group;
//! * [`quotients`] — quotient curve models (hyperelliptic and otherwise)
//!   with certified coordinate maps;
//! * [`reduce`] — the identity-certification engine (zero-residue checks
//!   modulo curve relations);
//! * [`diffs`] — holomorphic differentials and the induced group action;
//! * [`decomp`] — dimension bookkeeping and the decomposition ledger;
//! * [`golden`], [`report`] — golden-file corpus and the check runner /
//!   JSON report layer used by the command-line tool.

pub mod cyclo;
pub mod linalg;
pub mod poly;
pub mod chains;
pub mod decomp;
pub mod diffs;
pub mod golden;
pub mod report;
pub mod quotients;
pub mod rat;
pub mod curves;
pub mod reduce;
pub mod resultant;
pub mod vars;
