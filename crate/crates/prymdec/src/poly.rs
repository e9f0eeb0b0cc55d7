//! Sparse multivariate polynomials with exact cyclotomic coefficients.
//!
//! Polynomials are maps from monomials (exponent vectors over the global
//! variable table in [`crate::vars`]) to nonzero [`Cyclo`] coefficients,
//! ordered by graded lexicographic order.  Everything downstream — curve
//! equations, quotient models, differentials, resultants — is built from
//! this type, and every algorithm on it is exact:
//!
//! * `exact_divide` performs leading-term division and reports the first
//!   obstruction as a witness when the division is not exact;
//! * `div_rem_univar` divides with remainder with respect to one chosen
//!   variable (used to reduce modulo curve relations);
//! * `substitute` maps variables to rational expressions and returns a
//!   numerator/denominator pair with the denominator fully tracked.
//!
//! The text form (`Display`/[`parse`]) is canonical — terms in descending
//! order, fixed variable order inside each monomial — and round-trips
//! exactly, which is what makes golden-file comparisons byte-stable.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_traits::{One, Signed};
use thiserror::Error;

use crate::cyclo::{parse_cyclo, Cyclo};
use crate::rat::{fmt_q, parse_q, Q};
use crate::vars;

/// Errors from exact polynomial arithmetic and parsing.
#[derive(Debug, Error)]
pub enum PolyError {
    /// An exact division failed; the witness is the offending leading term.
    #[error("not divisible: stuck at remainder leading term {lead}")]
    NotDivisible { lead: String },
    /// Division by the zero polynomial.
    #[error("division by zero polynomial")]
    DivisionByZero,
    /// A rational expression failed to simplify to a polynomial.
    #[error("expression is not polynomial: {0}")]
    NotPolynomial(String),
    /// Text that does not match the canonical polynomial grammar.
    #[error("parse error: {0}")]
    Parse(String),
}

/// A monomial: exponents for every variable in the global table.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Mono(Vec<u16>);

impl Mono {
    /// The unit monomial (all exponents zero).
    pub fn unit() -> Self {
        Mono(vec![0; vars::COUNT])
    }

    /// The monomial `var^e`.
    pub fn var(idx: usize, e: u16) -> Self {
        let mut m = Mono::unit();
        m.0[idx] = e;
        m
    }

    pub fn exponent(&self, idx: usize) -> u16 {
        self.0[idx]
    }

    pub fn set_exponent(&mut self, idx: usize, e: u16) {
        self.0[idx] = e;
    }

    pub fn total_degree(&self) -> u32 {
        self.0.iter().map(|&e| e as u32).sum()
    }

    pub fn is_unit(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Mono) -> Mono {
        Mono(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// Divide by `other`, or `None` if some exponent would go negative.
    pub fn try_div(&self, other: &Mono) -> Option<Mono> {
        let mut out = Vec::with_capacity(self.0.len());
        for (a, b) in self.0.iter().zip(&other.0) {
            if a < b {
                return None;
            }
            out.push(a - b);
        }
        Some(Mono(out))
    }
}

/// Graded lexicographic order: total degree first, then lexicographic with
/// earlier table variables more significant.
impl Ord for Mono {
    fn cmp(&self, other: &Self) -> Ordering {
        match self.total_degree().cmp(&other.total_degree()) {
            Ordering::Equal => {
                for (a, b) in self.0.iter().zip(&other.0) {
                    match a.cmp(b) {
                        Ordering::Equal => continue,
                        ord => return ord,
                    }
                }
                Ordering::Equal
            }
            ord => ord,
        }
    }
}

impl PartialOrd for Mono {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Mono {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_unit() {
            return write!(f, "1");
        }
        let mut first = true;
        for (idx, &e) in self.0.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            write!(f, "{}", vars::name(idx))?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

/// A sparse multivariate polynomial over the cyclotomic numbers.
///
/// Invariant: no stored coefficient is zero.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct MPoly {
    terms: BTreeMap<Mono, Cyclo>,
}

impl MPoly {
    pub fn zero() -> Self {
        MPoly { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        MPoly::constant(Cyclo::one())
    }

    pub fn int(n: i64) -> Self {
        MPoly::constant(Cyclo::int(n))
    }

    pub fn from_q(q: Q) -> Self {
        MPoly::constant(Cyclo::from_q(q))
    }

    pub fn constant(c: Cyclo) -> Self {
        let mut p = MPoly::zero();
        p.insert(Mono::unit(), c);
        p
    }

    /// The single variable `idx`.
    pub fn var(idx: usize) -> Self {
        MPoly::monomial(Mono::var(idx, 1), Cyclo::one())
    }

    /// The power `var^e`.
    pub fn var_pow(idx: usize, e: u16) -> Self {
        MPoly::monomial(Mono::var(idx, e), Cyclo::one())
    }

    /// A single term `c · m`.
    pub fn monomial(m: Mono, c: Cyclo) -> Self {
        let mut p = MPoly::zero();
        p.insert(m, c);
        p
    }

    /// Add `c · m` into the polynomial, keeping the no-zero invariant.
    fn insert(&mut self, m: Mono, c: Cyclo) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e.get().add(&c);
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .get(&Mono::unit())
                .map(Cyclo::is_one)
                .unwrap_or(false)
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in ascending monomial order.
    pub fn terms(&self) -> impl Iterator<Item = (&Mono, &Cyclo)> {
        self.terms.iter()
    }

    /// The coefficient of monomial `m` (zero if absent).
    pub fn coeff(&self, m: &Mono) -> Cyclo {
        self.terms.get(m).cloned().unwrap_or_else(Cyclo::zero)
    }

    /// Leading (greatest) term, `None` for zero.
    pub fn leading(&self) -> Option<(&Mono, &Cyclo)> {
        self.terms.iter().next_back()
    }

    /// Total degree, `None` for the zero polynomial.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(Mono::total_degree).max()
    }

    /// Largest exponent of `var` appearing in any term.
    pub fn degree_in(&self, var: usize) -> u16 {
        self.terms.keys().map(|m| m.exponent(var)).max().unwrap_or(0)
    }

    /// Indices of variables that actually occur.
    pub fn vars_used(&self) -> Vec<usize> {
        (0..vars::COUNT)
            .filter(|&v| self.terms.keys().any(|m| m.exponent(v) > 0))
            .collect()
    }

    /// The polynomial as a constant, if it is one.
    pub fn as_constant(&self) -> Option<Cyclo> {
        match self.terms.len() {
            0 => Some(Cyclo::zero()),
            1 => self.terms.get(&Mono::unit()).cloned(),
            _ => None,
        }
    }

    /// The polynomial as a rational constant, if it is one.
    pub fn as_q(&self) -> Option<Q> {
        self.as_constant().and_then(|c| c.as_q())
    }

    pub fn add(&self, other: &MPoly) -> MPoly {
        let mut out = self.clone();
        for (m, c) in other.terms() {
            out.insert(m.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &MPoly) -> MPoly {
        let mut out = self.clone();
        for (m, c) in other.terms() {
            out.insert(m.clone(), c.neg());
        }
        out
    }

    pub fn neg(&self) -> MPoly {
        MPoly {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), c.neg())).collect(),
        }
    }

    pub fn mul(&self, other: &MPoly) -> MPoly {
        let mut out = MPoly::zero();
        for (ma, ca) in self.terms() {
            for (mb, cb) in other.terms() {
                out.insert(ma.mul(mb), ca.mul(cb));
            }
        }
        out
    }

    /// Multiply by a cyclotomic scalar.
    pub fn scale(&self, c: &Cyclo) -> MPoly {
        if c.is_zero() {
            return MPoly::zero();
        }
        MPoly {
            terms: self.terms.iter().map(|(m, k)| (m.clone(), k.mul(c))).collect(),
        }
    }

    /// Multiply by a rational scalar.
    pub fn scale_q(&self, q: &Q) -> MPoly {
        self.scale(&Cyclo::from_q(q.clone()))
    }

    pub fn pow(&self, e: u32) -> MPoly {
        let mut acc = MPoly::one();
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Exact division: returns `q` with `self = q · g`, or the first
    /// obstruction.  Greedy leading-term reduction is a complete decision
    /// procedure here: if `self` is a multiple of `g`, every intermediate
    /// remainder is too, so its leading term stays divisible by `lt(g)`.
    pub fn exact_divide(&self, g: &MPoly) -> Result<MPoly, PolyError> {
        let Some((gm, gc)) = g.leading() else {
            return Err(PolyError::DivisionByZero);
        };
        let gc_inv = gc.inv().expect("leading coefficient of nonzero polynomial");
        let gm = gm.clone();
        let mut rem = self.clone();
        let mut quo = MPoly::zero();
        while let Some((rm, rc)) = rem.leading() {
            let Some(m) = rm.try_div(&gm) else {
                return Err(PolyError::NotDivisible {
                    lead: format!("{}*{}", rc.minimal(), rm),
                });
            };
            let c = rc.mul(&gc_inv);
            let step = MPoly::monomial(m, c);
            rem = rem.sub(&step.mul(g));
            quo = quo.add(&step);
        }
        Ok(quo)
    }

    /// Derivative with respect to `var`.
    pub fn derivative(&self, var: usize) -> MPoly {
        let mut out = MPoly::zero();
        for (m, c) in self.terms() {
            let e = m.exponent(var);
            if e == 0 {
                continue;
            }
            let mut m2 = m.clone();
            m2.set_exponent(var, e - 1);
            out.insert(m2, c.scale(&crate::rat::qi(e as i64)));
        }
        out
    }

    /// Coefficients of powers of `var`, ascending; each entry is free of `var`.
    pub fn univariate_coeffs(&self, var: usize) -> Vec<MPoly> {
        let d = self.degree_in(var) as usize;
        let mut out = vec![MPoly::zero(); d + 1];
        for (m, c) in self.terms() {
            let e = m.exponent(var) as usize;
            let mut m2 = m.clone();
            m2.set_exponent(var, 0);
            out[e].insert(m2, c.clone());
        }
        out
    }

    /// Rebuild a polynomial from ascending coefficients of `var`.
    pub fn from_univariate_coeffs(var: usize, coeffs: &[MPoly]) -> MPoly {
        let mut out = MPoly::zero();
        for (e, c) in coeffs.iter().enumerate() {
            out = out.add(&c.mul(&MPoly::var_pow(var, e as u16)));
        }
        out
    }

    /// Division with remainder with respect to `var`: `self = q·g + r` with
    /// `deg_var(r) < deg_var(g)`.  Each reduction step divides the top
    /// `var`-coefficient of the remainder exactly by the top coefficient of
    /// `g`; if that division is not exact the error carries the obstruction.
    pub fn div_rem_univar(&self, g: &MPoly, var: usize) -> Result<(MPoly, MPoly), PolyError> {
        if g.is_zero() {
            return Err(PolyError::DivisionByZero);
        }
        let dg = g.degree_in(var);
        let g_coeffs = g.univariate_coeffs(var);
        let lc_g = &g_coeffs[dg as usize];
        let mut rem = self.clone();
        let mut quo = MPoly::zero();
        loop {
            let dr = rem.degree_in(var);
            if rem.is_zero() || dr < dg {
                return Ok((quo, rem));
            }
            let lc_r = rem.univariate_coeffs(var).pop().expect("nonzero remainder");
            let c = lc_r.exact_divide(lc_g)?;
            let step = c.mul(&MPoly::var_pow(var, dr - dg));
            rem = rem.sub(&step.mul(g));
            quo = quo.add(&step);
        }
    }

    /// Substitute polynomials for variables (no denominators).
    pub fn substitute_poly(&self, binds: &[(usize, MPoly)]) -> MPoly {
        let rx_binds: Vec<(usize, Rx)> =
            binds.iter().map(|(v, p)| (*v, Rx::poly(p.clone()))).collect();
        let rx = self.substitute(&rx_binds);
        debug_assert!(rx.den.is_one());
        rx.num
    }

    /// Substitute rational expressions for variables.
    ///
    /// The result is `num/den` where `den` is the product of the binding
    /// denominators raised to the degrees they are needed in — tracked
    /// exactly, never cancelled silently.
    pub fn substitute(&self, binds: &[(usize, Rx)]) -> Rx {
        // Degree of each bound variable in `self`.
        let degs: Vec<u16> = binds.iter().map(|(v, _)| self.degree_in(*v)).collect();
        // Power tables for numerators and denominators.
        let num_pows: Vec<Vec<MPoly>> = binds
            .iter()
            .zip(&degs)
            .map(|((_, rx), &d)| power_table(&rx.num, d))
            .collect();
        let den_pows: Vec<Vec<MPoly>> = binds
            .iter()
            .zip(&degs)
            .map(|((_, rx), &d)| power_table(&rx.den, d))
            .collect();
        let mut den_total = MPoly::one();
        for (pows, &d) in den_pows.iter().zip(&degs) {
            den_total = den_total.mul(&pows[d as usize]);
        }
        let mut num_total = MPoly::zero();
        for (mono, coeff) in self.terms() {
            let mut rest = mono.clone();
            let mut term = MPoly::constant(coeff.clone());
            for (i, (v, _)) in binds.iter().enumerate() {
                let e = mono.exponent(*v);
                rest.set_exponent(*v, 0);
                term = term.mul(&num_pows[i][e as usize]);
                term = term.mul(&den_pows[i][(degs[i] - e) as usize]);
            }
            term = term.mul(&MPoly::monomial(rest, Cyclo::one()));
            num_total = num_total.add(&term);
        }
        Rx { num: num_total, den: den_total }
    }

    /// Specialise family parameters to rational values.
    pub fn specialize(&self, params: &[(u32, Q)]) -> MPoly {
        let binds: Vec<(usize, MPoly)> = params
            .iter()
            .map(|(i, q)| (vars::param(*i), MPoly::from_q(q.clone())))
            .collect();
        self.substitute_poly(&binds)
    }
}

fn power_table(p: &MPoly, max: u16) -> Vec<MPoly> {
    let mut out = Vec::with_capacity(max as usize + 1);
    out.push(MPoly::one());
    for _ in 0..max {
        let next = out.last().unwrap().mul(p);
        out.push(next);
    }
    out
}

/// A quotient of polynomials (denominator tracked, never implicitly reduced).
#[derive(Clone, Debug)]
pub struct Rx {
    pub num: MPoly,
    pub den: MPoly,
}

impl Rx {
    /// A polynomial viewed as a rational expression.
    pub fn poly(p: MPoly) -> Self {
        Rx { num: p, den: MPoly::one() }
    }

    pub fn new(num: MPoly, den: MPoly) -> Self {
        assert!(!den.is_zero(), "rational expression with zero denominator");
        Rx { num, den }
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// Extract a polynomial by exact division of numerator by denominator.
    pub fn to_poly(&self) -> Result<MPoly, PolyError> {
        self.num.exact_divide(&self.den)
    }

    pub fn add(&self, other: &Rx) -> Rx {
        Rx {
            num: self.num.mul(&other.den).add(&other.num.mul(&self.den)),
            den: self.den.mul(&other.den),
        }
    }

    pub fn sub(&self, other: &Rx) -> Rx {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Rx {
        Rx { num: self.num.neg(), den: self.den.clone() }
    }

    pub fn mul(&self, other: &Rx) -> Rx {
        Rx { num: self.num.mul(&other.num), den: self.den.mul(&other.den) }
    }

    /// Reciprocal; panics on zero.
    pub fn recip(&self) -> Rx {
        assert!(!self.num.is_zero(), "reciprocal of zero expression");
        Rx { num: self.den.clone(), den: self.num.clone() }
    }
}

impl fmt::Display for MPoly {
    /// Canonical text: terms in descending graded-lex order; rational
    /// coefficients stream their sign (`- 2*x*y`), cyclotomic coefficients
    /// print parenthesised (`+ (1 - z4)*x`); unit coefficients are omitted
    /// on non-constant monomials.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut out = String::new();
        for (m, c) in self.terms.iter().rev() {
            let constant_term = m.is_unit();
            match c.as_q() {
                Some(q) => {
                    let mag = q.abs();
                    if out.is_empty() {
                        if q.is_negative() {
                            out.push('-');
                        }
                    } else if q.is_negative() {
                        out.push_str(" - ");
                    } else {
                        out.push_str(" + ");
                    }
                    if constant_term {
                        out.push_str(&fmt_q(&mag));
                    } else {
                        if !mag.is_one() {
                            out.push_str(&fmt_q(&mag));
                            out.push('*');
                        }
                        out.push_str(&m.to_string());
                    }
                }
                None => {
                    if !out.is_empty() {
                        out.push_str(" + ");
                    }
                    out.push_str(&c.minimal().to_string());
                    if !constant_term {
                        out.push('*');
                        out.push_str(&m.to_string());
                    }
                }
            }
        }
        write!(f, "{out}")
    }
}

impl FromStr for MPoly {
    type Err = PolyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse(s)
    }
}

/// Parse the canonical polynomial text form (inverse of `Display`).
pub fn parse(s: &str) -> Result<MPoly, PolyError> {
    let s = s.trim();
    if s.is_empty() {
        return Err(PolyError::Parse("empty input".to_string()));
    }
    if s == "0" {
        return Ok(MPoly::zero());
    }
    let mut acc = MPoly::zero();
    for (sign, term) in split_terms(s)? {
        let p = parse_term(term)?;
        acc = if sign { acc.add(&p) } else { acc.sub(&p) };
    }
    Ok(acc)
}

/// Split into signed terms at depth-0 `+`/`-` signs.
fn split_terms(s: &str) -> Result<Vec<(bool, &str)>, PolyError> {
    let mut out = Vec::new();
    let mut depth = 0usize;
    let mut sign = true;
    let mut start = 0usize;
    let mut seen_content = false;
    for (i, ch) in s.char_indices() {
        match ch {
            '(' => depth += 1,
            ')' => {
                depth = depth
                    .checked_sub(1)
                    .ok_or_else(|| PolyError::Parse(format!("unbalanced parentheses in {s:?}")))?;
            }
            '+' | '-' if depth == 0 => {
                if seen_content {
                    out.push((sign, s[start..i].trim()));
                    sign = ch == '+';
                    seen_content = false;
                } else if ch == '-' {
                    sign = !sign;
                }
                start = i + 1;
                continue;
            }
            _ => {}
        }
        if !ch.is_whitespace() {
            seen_content = true;
        }
    }
    if depth != 0 {
        return Err(PolyError::Parse(format!("unbalanced parentheses in {s:?}")));
    }
    if !seen_content {
        return Err(PolyError::Parse(format!("dangling sign in {s:?}")));
    }
    out.push((sign, s[start..].trim()));
    Ok(out)
}

/// Parse one unsigned term: `*`-separated factors, each a rational, a
/// parenthesised cyclotomic constant, or `var[^exp]`.
fn parse_term(term: &str) -> Result<MPoly, PolyError> {
    let mut acc = MPoly::one();
    for factor in split_factors(term)? {
        let factor = factor.trim();
        if factor.is_empty() {
            return Err(PolyError::Parse(format!("empty factor in {term:?}")));
        }
        if factor.starts_with('(') {
            let c = parse_cyclo(factor).map_err(PolyError::Parse)?;
            acc = acc.scale(&c);
        } else if factor.starts_with(|c: char| c.is_ascii_digit()) {
            let q = parse_q(factor).map_err(PolyError::Parse)?;
            acc = acc.scale_q(&q);
        } else {
            let (name, exp) = match factor.split_once('^') {
                Some((n, e)) => {
                    let exp: u16 = e.trim().parse().map_err(|err| {
                        PolyError::Parse(format!("bad exponent in {factor:?}: {err}"))
                    })?;
                    (n.trim(), exp)
                }
                None => (factor, 1),
            };
            let idx = vars::index_of(name)
                .ok_or_else(|| PolyError::Parse(format!("unknown variable {name:?}")))?;
            acc = acc.mul(&MPoly::var_pow(idx, exp));
        }
    }
    Ok(acc)
}

/// Split a term into factors at depth-0 `*`.
fn split_factors(s: &str) -> Result<Vec<&str>, PolyError> {
    let mut out = Vec::new();
    let mut depth = 0usize;
    let mut start = 0usize;
    for (i, ch) in s.char_indices() {
        match ch {
            '(' => depth += 1,
            ')' => {
                depth = depth
                    .checked_sub(1)
                    .ok_or_else(|| PolyError::Parse(format!("unbalanced parentheses in {s:?}")))?;
            }
            '*' if depth == 0 => {
                out.push(&s[start..i]);
                start = i + 1;
            }
            _ => {}
        }
    }
    out.push(&s[start..]);
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::{qi, qr};
    use crate::vars::geom;

    fn p(s: &str) -> MPoly {
        parse(s).unwrap_or_else(|e| panic!("parse {s:?}: {e}"))
    }

    #[test]
    fn graded_lex_ordering() {
        let x = Mono::var(geom("x"), 1);
        let y = Mono::var(geom("y"), 1);
        let x2 = Mono::var(geom("x"), 2);
        assert!(x > y, "same degree: earlier variable wins");
        assert!(x2 > x, "higher degree wins");
        assert!(x2 > y);
        let mut xy = Mono::var(geom("x"), 1);
        xy.set_exponent(geom("y"), 1);
        let y2 = Mono::var(geom("y"), 2);
        assert!(xy > y2, "ties in degree break lexicographically");
        assert_eq!(x2.cmp(&xy), Ordering::Greater);
    }

    #[test]
    fn arithmetic_and_display() {
        let f = p("x^2 - 2*x*z + z^2");
        let g = p("x - z");
        assert_eq!(g.mul(&g), f);
        assert_eq!(f.to_string(), "x^2 - 2*x*z + z^2");
        assert_eq!(MPoly::zero().to_string(), "0");
        let h = p("3/2*y^3 - y + 1/2");
        assert_eq!(h.to_string(), "3/2*y^3 - y + 1/2");
    }

    #[test]
    fn cyclotomic_coefficients_display_and_parse() {
        let z4 = Cyclo::root_of_unity(4, 1);
        let f = MPoly::var(geom("x")).scale(&z4).add(&MPoly::int(-1));
        let text = f.to_string();
        assert_eq!(text, "(z4)*x - 1");
        assert_eq!(p(&text), f);
        let g = MPoly::var(geom("u"))
            .scale(&z4.neg())
            .add(&MPoly::var_pow(geom("u"), 2));
        assert_eq!(g.to_string(), "u^2 + (-z4)*u");
        assert_eq!(p(&g.to_string()), g);
    }

    #[test]
    fn parse_round_trip_samples() {
        for s in [
            "x^2 - 2*x*z + z^2",
            "0",
            "-x + 1",
            "a2*x*z - 2*a2 + 7/3",
            "x^4 + z^4 + 2*y^4 - 4*x*z*y^2 + a2*x^2*z^2",
            "(z8)*w^2 - (1 - z8^2)*u + 5",
        ] {
            let f = p(s);
            assert_eq!(p(&f.to_string()), f, "round trip through {s:?}");
        }
    }

    #[test]
    fn exact_division_and_witness() {
        let f = p("x^3 - z^3");
        let g = p("x - z");
        let q = f.exact_divide(&g).unwrap();
        assert_eq!(q, p("x^2 + x*z + z^2"));
        let bad = p("x^3 - z^3 + 1");
        match bad.exact_divide(&g) {
            Err(PolyError::NotDivisible { lead }) => assert_eq!(lead, "1*1"),
            other => panic!("expected NotDivisible, got {other:?}"),
        }
    }

    #[test]
    fn univariate_division_with_remainder() {
        // Reduce x^4 modulo x^2 - v (in the variable x): remainder v^2.
        let f = p("x^4");
        let g = p("x^2 - v");
        let (q, r) = f.div_rem_univar(&g, geom("x")).unwrap();
        assert_eq!(r, p("v^2"));
        assert_eq!(q.mul(&g).add(&r), f);
        // Non-monic divisor with invertible (constant) leading coefficient.
        let f2 = p("2*v*x^2 + x");
        let g2 = p("2*x - 1");
        let (q2, r2) = f2.div_rem_univar(&g2, geom("x")).unwrap();
        assert_eq!(q2.mul(&g2).add(&r2), f2);
        assert!(r2.degree_in(geom("x")) < 1);
        // A leading coefficient that fails to divide surfaces as an error.
        let f3 = p("a2*v*x^2 + x");
        let g3 = p("a2*x - 1");
        assert!(matches!(
            f3.div_rem_univar(&g3, geom("x")),
            Err(PolyError::NotDivisible { .. })
        ));
    }

    #[test]
    fn substitution_tracks_denominators() {
        // f(x) = x^2 + 1 at x = u/w  =>  (u^2 + w^2) / w^2.
        let f = p("x^2 + 1");
        let bind = Rx::new(MPoly::var(geom("u")), MPoly::var(geom("w")));
        let rx = f.substitute(&[(geom("x"), bind)]);
        assert_eq!(rx.num, p("u^2 + w^2"));
        assert_eq!(rx.den, p("w^2"));
        // Polynomial substitution composes.
        let g = p("x*z - 1");
        let out = g.substitute_poly(&[(geom("x"), p("t + 1")), (geom("z"), p("t - 1"))]);
        assert_eq!(out, p("t^2 - 2"));
    }

    #[test]
    fn specialisation_and_derivative() {
        let f = p("a2*x^2 + a3*x + 1");
        assert_eq!(f.specialize(&[(2, qi(1)), (3, qr(1, 2))]), p("x^2 + 1/2*x + 1"));
        assert_eq!(f.derivative(geom("x")), p("2*a2*x + a3"));
    }

    #[test]
    fn univariate_coefficient_views() {
        let f = p("x^2*v + x*v^2 + x + 3");
        let cs = f.univariate_coeffs(geom("x"));
        assert_eq!(cs.len(), 3);
        assert_eq!(cs[0], p("3"));
        assert_eq!(cs[1], p("v^2 + 1"));
        assert_eq!(cs[2], p("v"));
        assert_eq!(MPoly::from_univariate_coeffs(geom("x"), &cs), f);
    }
}
