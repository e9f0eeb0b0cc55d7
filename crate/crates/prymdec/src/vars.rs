//! The fixed variable table shared by every polynomial in the crate.
//!
//! All multivariate polynomials use one global, ordered list of variables:
//! seventeen geometric coordinates (projective and chart coordinates on the
//! curves, their covers, and the various quotient models), followed by the
//! deformation parameters `a2 … a16` of the plane-curve family.  A fixed
//! table keeps monomial orderings, printing, and parsing globally
//! consistent without threading a context object through every call.

use once_cell::sync::Lazy;

/// Geometric coordinate names, most significant first.
pub const GEOMETRIC: [&str; 17] = [
    "x", "y", "z", "w", "u", "v", "s", "t", "X", "Y", "U", "W", "x1", "s1", "t1", "T1", "T2",
];

/// Smallest parameter index: the family has parameters `a2, a3, …`.
pub const PARAM_MIN: u32 = 2;

/// Largest supported parameter index (enough for curves up to degree 33).
pub const PARAM_MAX: u32 = 16;

/// Total number of variables in the table.
pub const COUNT: usize = GEOMETRIC.len() + (PARAM_MAX - PARAM_MIN + 1) as usize;

static NAMES: Lazy<Vec<String>> = Lazy::new(|| {
    let mut names: Vec<String> = GEOMETRIC.iter().map(|s| s.to_string()).collect();
    for i in PARAM_MIN..=PARAM_MAX {
        names.push(format!("a{i}"));
    }
    names
});

/// The name of variable `idx`.
pub fn name(idx: usize) -> &'static str {
    NAMES[idx].as_str()
}

/// Look up a variable by name.
pub fn index_of(name: &str) -> Option<usize> {
    NAMES.iter().position(|n| n == name)
}

/// Index of the geometric coordinate `name`; panics if unknown.
///
/// Convenience for call sites that use the well-known coordinates.
pub fn geom(name: &str) -> usize {
    index_of(name).unwrap_or_else(|| panic!("unknown variable {name:?}"))
}

/// Index of the family parameter `a{i}`.
pub fn param(i: u32) -> usize {
    assert!(
        (PARAM_MIN..=PARAM_MAX).contains(&i),
        "parameter index {i} outside supported range {PARAM_MIN}..={PARAM_MAX}"
    );
    GEOMETRIC.len() + (i - PARAM_MIN) as usize
}

/// True if `idx` refers to a family parameter rather than a coordinate.
pub fn is_param(idx: usize) -> bool {
    idx >= GEOMETRIC.len()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn table_layout() {
        assert_eq!(COUNT, 32);
        assert_eq!(name(0), "x");
        assert_eq!(name(16), "T2");
        assert_eq!(name(param(2)), "a2");
        assert_eq!(name(param(16)), "a16");
        assert_eq!(index_of("w"), Some(3));
        assert_eq!(index_of("a5"), Some(GEOMETRIC.len() + 3));
        assert_eq!(index_of("nope"), None);
        assert!(is_param(param(7)));
        assert!(!is_param(geom("T1")));
    }
}
