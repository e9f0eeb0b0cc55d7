//! Exact arithmetic in cyclotomic fields ℚ(ζ_N).
//!
//! An element is stored as its coordinate vector on the power basis
//! `1, ζ, …, ζ^{φ(N)−1}` of ℚ(ζ_N), i.e. as a ℚ-polynomial reduced modulo
//! the N-th cyclotomic polynomial Φ_N.  Elements of different levels
//! interoperate: binary operations lift both operands to the least common
//! multiple level, and equality is mathematical (ζ₂ equals −1, ζ₈² equals
//! ζ₄, …).  Printing always descends to the smallest field containing the
//! element, so the text form is canonical.
//!
//! The design keeps every operation exact and certificate-friendly:
//! inverses come from the extended Euclidean algorithm against Φ_N, Galois
//! twists act on exponents, and minimal polynomials are found as the first
//! linear dependency among powers — all over ℚ with no floating point.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, RwLock};

use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use once_cell::sync::Lazy;

use crate::rat::{self, fmt_q, parse_q, poly_degree, poly_div_rem, poly_mul, qi, Q};

/// Euler's totient φ(n).
pub fn phi(n: u32) -> usize {
    let mut n = n as u64;
    let mut result = n;
    let mut p = 2u64;
    while p * p <= n {
        if n % p == 0 {
            while n % p == 0 {
                n /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if n > 1 {
        result -= result / n;
    }
    result as usize
}

/// Divisors of `n` in increasing order.
pub fn divisors(n: u32) -> Vec<u32> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n % d == 0 {
            small.push(d);
            if d != n / d {
                large.push(n / d);
            }
        }
        d += 1;
    }
    large.reverse();
    small.extend(large);
    small
}

static CYCLOTOMIC_CACHE: Lazy<RwLock<HashMap<u32, Arc<Vec<Q>>>>> =
    Lazy::new(|| RwLock::new(HashMap::new()));

/// The N-th cyclotomic polynomial Φ_N, dense ascending coefficients.
///
/// Computed by exact division: Φ_N = (T^N − 1) / ∏_{d|N, d<N} Φ_d.
pub fn cyclotomic(n: u32) -> Arc<Vec<Q>> {
    assert!(n >= 1, "cyclotomic level must be positive");
    if let Some(p) = CYCLOTOMIC_CACHE.read().unwrap().get(&n) {
        return p.clone();
    }
    let mut num = vec![Q::zero(); n as usize + 1];
    num[0] = qi(-1);
    num[n as usize] = Q::one();
    let mut den = vec![Q::one()];
    for d in divisors(n) {
        if d < n {
            den = poly_mul(&den, &cyclotomic(d));
        }
    }
    let (quo, rem) = poly_div_rem(&num, &den);
    debug_assert!(rem.is_empty(), "T^{n} - 1 must be divisible by its proper cyclotomic factors");
    debug_assert_eq!(poly_degree(&quo), Some(phi(n)));
    let arc = Arc::new(quo);
    CYCLOTOMIC_CACHE.write().unwrap().insert(n, arc.clone());
    arc
}

/// An element of the cyclotomic field ℚ(ζ_level).
///
/// Invariant: `c.len() == phi(level)` (coordinates on the power basis).
/// The level is *not* kept minimal — equality and `Display` take care of
/// identifying elements across levels.
#[derive(Clone, Debug)]
pub struct Cyclo {
    level: u32,
    c: Vec<Q>,
}

impl Cyclo {
    /// Zero (at level 1).
    pub fn zero() -> Self {
        Cyclo { level: 1, c: vec![Q::zero()] }
    }

    /// One (at level 1).
    pub fn one() -> Self {
        Cyclo { level: 1, c: vec![Q::one()] }
    }

    /// Embed a rational number.
    pub fn from_q(q: Q) -> Self {
        Cyclo { level: 1, c: vec![q] }
    }

    /// The integer `n` as a cyclotomic element.
    pub fn int(n: i64) -> Self {
        Cyclo::from_q(qi(n))
    }

    /// ζ_n^k, the k-th power of a chosen primitive n-th root of unity.
    pub fn root_of_unity(n: u32, k: i64) -> Self {
        assert!(n >= 1);
        let e = k.rem_euclid(n as i64) as usize;
        let mut dense = vec![Q::zero(); e + 1];
        dense[e] = Q::one();
        Cyclo::reduce(n, dense)
    }

    /// Build an element of ℚ(ζ_level) from arbitrary dense ζ-coefficients.
    fn reduce(level: u32, dense: Vec<Q>) -> Self {
        let modulus = cyclotomic(level);
        let (_, mut rem) = poly_div_rem(&dense, &modulus);
        rem.resize(phi(level), Q::zero());
        Cyclo { level, c: rem }
    }

    /// The level N of the ambient field ℚ(ζ_N) this element is stored in.
    pub fn level(&self) -> u32 {
        self.level
    }

    /// Power-basis coordinates at the stored level (length φ(level)).
    pub fn coords(&self) -> &[Q] {
        &self.c
    }

    pub fn is_zero(&self) -> bool {
        self.c.iter().all(Q::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.c[0].is_one() && self.c[1..].iter().all(Q::is_zero)
    }

    /// Re-express at level `m` (requires `level | m`): ζ_N ↦ ζ_m^{m/N}.
    pub fn lift(&self, m: u32) -> Cyclo {
        if m == self.level {
            return self.clone();
        }
        assert!(
            m % self.level == 0,
            "cannot lift level {} into level {m}",
            self.level
        );
        let stride = (m / self.level) as usize;
        let mut dense = vec![Q::zero(); (phi(self.level) - 1) * stride + 1];
        for (j, cj) in self.c.iter().enumerate() {
            dense[j * stride] = cj.clone();
        }
        Cyclo::reduce(m, dense)
    }

    fn common_level(a: &Cyclo, b: &Cyclo) -> u32 {
        a.level.lcm(&b.level)
    }

    pub fn add(&self, other: &Cyclo) -> Cyclo {
        let m = Cyclo::common_level(self, other);
        let mut a = self.lift(m);
        let b = other.lift(m);
        for (x, y) in a.c.iter_mut().zip(&b.c) {
            *x += y;
        }
        a
    }

    pub fn sub(&self, other: &Cyclo) -> Cyclo {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Cyclo {
        Cyclo { level: self.level, c: self.c.iter().map(|x| -x.clone()).collect() }
    }

    pub fn mul(&self, other: &Cyclo) -> Cyclo {
        let m = Cyclo::common_level(self, other);
        let a = self.lift(m);
        let b = other.lift(m);
        Cyclo::reduce(m, poly_mul(&a.c, &b.c))
    }

    /// Multiply by a rational scalar.
    pub fn scale(&self, q: &Q) -> Cyclo {
        Cyclo { level: self.level, c: self.c.iter().map(|x| x * q).collect() }
    }

    /// Multiplicative inverse, `None` for zero.
    ///
    /// Runs the extended Euclidean algorithm on (self, Φ_N) in ℚ[T]; since
    /// Φ_N is irreducible the gcd is a nonzero constant, and the Bézout
    /// coefficient of `self` is the inverse.
    pub fn inv(&self) -> Option<Cyclo> {
        if self.is_zero() {
            return None;
        }
        let modulus = cyclotomic(self.level);
        // Invariants: r0 = u0 * self (mod Φ), r1 = u1 * self (mod Φ).
        let mut r0: Vec<Q> = modulus.to_vec();
        let mut r1: Vec<Q> = self.c.clone();
        rat::trim(&mut r1);
        let mut u0: Vec<Q> = vec![];
        let mut u1: Vec<Q> = vec![Q::one()];
        while poly_degree(&r1).is_some() {
            let (q, r) = poly_div_rem(&r0, &r1);
            let qu = poly_mul(&q, &u1);
            let mut u = u0.clone();
            u.resize(u.len().max(qu.len()), Q::zero());
            for (i, v) in qu.iter().enumerate() {
                u[i] -= v;
            }
            rat::trim(&mut u);
            r0 = std::mem::replace(&mut r1, r);
            u0 = std::mem::replace(&mut u1, u);
            if poly_degree(&r0) == Some(0) {
                break;
            }
        }
        // After the loop r0 is the gcd (a nonzero constant) with r0 = u0·self mod Φ.
        let g = r0[0].clone();
        debug_assert!(poly_degree(&r0) == Some(0));
        let inv_g = g.recip();
        let coeffs: Vec<Q> = u0.iter().map(|c| c * &inv_g).collect();
        Some(Cyclo::reduce(self.level, coeffs))
    }

    /// Integer power (negative exponents via the inverse).
    pub fn pow(&self, k: i64) -> Cyclo {
        if k < 0 {
            return self
                .inv()
                .expect("cannot raise zero to a negative power")
                .pow(-k);
        }
        let mut base = self.clone();
        let mut k = k as u64;
        let mut acc = Cyclo::one();
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            k >>= 1;
        }
        acc
    }

    /// Galois twist ζ ↦ ζ^k (requires gcd(k, level) = 1).
    pub fn galois(&self, k: u32) -> Cyclo {
        let n = self.level;
        assert_eq!(
            n.gcd(&k),
            1,
            "ζ ↦ ζ^{k} is a field automorphism only when gcd(k, {n}) = 1"
        );
        let mut dense = vec![Q::zero(); n as usize];
        for (j, cj) in self.c.iter().enumerate() {
            dense[(j * k as usize) % n as usize] += cj;
        }
        Cyclo::reduce(n, dense)
    }

    /// Complex conjugation ζ ↦ ζ⁻¹ (the identity on level ≤ 2).
    pub fn conj(&self) -> Cyclo {
        if self.level <= 2 {
            self.clone()
        } else {
            self.galois(self.level - 1)
        }
    }

    /// Rewrite at the smallest level whose field contains this element.
    pub fn minimal(&self) -> Cyclo {
        for d in divisors(self.level) {
            if let Some(x) = self.try_descend(d) {
                return x;
            }
        }
        self.clone()
    }

    /// Try to express this element in ℚ(ζ_d) ⊆ ℚ(ζ_level).
    fn try_descend(&self, d: u32) -> Option<Cyclo> {
        if d == self.level {
            return Some(self.clone());
        }
        let n = phi(self.level);
        let k = phi(d);
        // Columns: coordinates (at the current level) of the ℚ(ζ_d) basis.
        let mut a = vec![vec![Q::zero(); k]; n];
        for j in 0..k {
            let basis = Cyclo::root_of_unity(d, j as i64).lift(self.level);
            for i in 0..n {
                a[i][j] = basis.c[i].clone();
            }
        }
        let x = rat::solve(&a, &self.c)?;
        // `solve` zero-fills free variables, so verify the candidate.
        let mut cand = Cyclo { level: d, c: x };
        cand.c.resize(k, Q::zero());
        if cand.lift(self.level).c == self.c {
            Some(cand)
        } else {
            None
        }
    }

    /// The element as a rational number, if it is one.
    pub fn as_q(&self) -> Option<Q> {
        let m = self.minimal();
        if m.level == 1 {
            Some(m.c[0].clone())
        } else {
            None
        }
    }

    /// True if the element lies in ℚ.
    pub fn is_rational(&self) -> bool {
        self.as_q().is_some()
    }

    /// Monic minimal polynomial over ℚ, dense ascending coefficients.
    ///
    /// Found as the first linear dependency among `1, e, e², …` — the
    /// matrix of power coordinates is solved exactly at each degree.
    pub fn minimal_polynomial(&self) -> Vec<Q> {
        let n = phi(self.level);
        let mut powers: Vec<Vec<Q>> = vec![Cyclo::one().lift(self.level).c];
        let mut cur = Cyclo::one().lift(self.level);
        for k in 1..=n {
            cur = cur.mul(self);
            // Solve  Σ x_i · e^i = e^k  for x over ℚ.
            let rows = n;
            let mut a = vec![vec![Q::zero(); k]; rows];
            for (j, p) in powers.iter().enumerate() {
                for i in 0..rows {
                    a[i][j] = p[i].clone();
                }
            }
            if let Some(x) = rat::solve(&a, &cur.c) {
                // Check (free variables are zero-filled by `solve`).
                let mut residual = cur.c.clone();
                for (j, p) in powers.iter().enumerate() {
                    for i in 0..rows {
                        let t = &p[i] * &x[j];
                        residual[i] -= t;
                    }
                }
                if residual.iter().all(Q::is_zero) {
                    let mut mp = vec![Q::zero(); k + 1];
                    for (j, xj) in x.iter().enumerate() {
                        mp[j] = -xj.clone();
                    }
                    mp[k] = Q::one();
                    return mp;
                }
            }
            powers.push(cur.c.clone());
        }
        unreachable!("every element of a number field of degree {n} satisfies a polynomial of degree <= {n}")
    }
}

impl PartialEq for Cyclo {
    fn eq(&self, other: &Self) -> bool {
        let m = Cyclo::common_level(self, other);
        self.lift(m).c == other.lift(m).c
    }
}

impl Eq for Cyclo {}

/// A total order on cyclotomic elements (used only to make polynomial term
/// maps and printed output deterministic; it has no arithmetic meaning).
impl PartialOrd for Cyclo {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Cyclo {
    fn cmp(&self, other: &Self) -> Ordering {
        let m = Cyclo::common_level(self, other);
        let a = self.lift(m);
        let b = other.lift(m);
        for (x, y) in a.c.iter().zip(&b.c) {
            match x.cmp(y) {
                Ordering::Equal => continue,
                ord => return ord,
            }
        }
        Ordering::Equal
    }
}

/// Render power-basis coordinates as a sum of `zN^j` terms.
fn render_sum(level: u32, coords: &[Q]) -> String {
    let var = format!("z{level}");
    let mut out = String::new();
    for (j, cj) in coords.iter().enumerate() {
        if cj.is_zero() {
            continue;
        }
        let mag = cj.abs();
        if out.is_empty() {
            if cj.is_negative() {
                out.push('-');
            }
        } else if cj.is_negative() {
            out.push_str(" - ");
        } else {
            out.push_str(" + ");
        }
        if j == 0 {
            out.push_str(&fmt_q(&mag));
        } else {
            if !mag.is_one() {
                out.push_str(&fmt_q(&mag));
                out.push('*');
            }
            out.push_str(&var);
            if j > 1 {
                out.push_str(&format!("^{j}"));
            }
        }
    }
    out
}

impl Cyclo {
    /// Render at the forced level `m` instead of the minimal one: rationals
    /// stay bare, everything else becomes a parenthesised sum in `zm`.
    /// Errors when the element does not live in the level-`m` field.
    pub fn fmt_at_level(&self, m: u32) -> Result<String, String> {
        let min = self.minimal();
        if min.level == 1 {
            return Ok(fmt_q(&min.c[0]));
        }
        if m % min.level != 0 {
            return Err(format!(
                "coefficient {self} lives at level {}, which does not divide {m}",
                min.level
            ));
        }
        Ok(format!("({})", render_sum(m, &min.lift(m).c)))
    }
}

impl fmt::Display for Cyclo {
    /// Canonical text: a bare rational, or a parenthesised sum
    /// `(c0 + c1*zN + c2*zN^2 + …)` at the minimal level N.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let m = self.minimal();
        if m.level == 1 {
            return write!(f, "{}", fmt_q(&m.c[0]));
        }
        write!(f, "({})", render_sum(m.level, &m.c))
    }
}

/// Parse the canonical text forms produced by `Display`:
/// a rational `p/q`, or a parenthesised sum of terms `c`, `c*zN^j`, `zN^j`.
pub fn parse_cyclo(s: &str) -> Result<Cyclo, String> {
    let s = s.trim();
    let inner = if let Some(stripped) = s.strip_prefix('(') {
        stripped
            .strip_suffix(')')
            .ok_or_else(|| format!("unbalanced parentheses in {s:?}"))?
    } else {
        return parse_q(s).map(Cyclo::from_q);
    };
    let mut acc = Cyclo::zero();
    for (sign, term) in split_signed_terms(inner)? {
        let t = parse_cyclo_term(term)?;
        acc = if sign { acc.add(&t) } else { acc.sub(&t) };
    }
    Ok(acc)
}

/// Split `a + b - c` into signed chunks (true = `+`).  No nested parens.
fn split_signed_terms(s: &str) -> Result<Vec<(bool, &str)>, String> {
    let s = s.trim();
    if s.is_empty() {
        return Err("empty term list".to_string());
    }
    let mut out = Vec::new();
    let mut sign = true;
    let mut start = 0;
    let bytes = s.as_bytes();
    let mut i = 0;
    // A leading sign belongs to the first term.
    if bytes[0] == b'+' || bytes[0] == b'-' {
        sign = bytes[0] == b'+';
        start = 1;
        i = 1;
    }
    while i < bytes.len() {
        let b = bytes[i];
        if (b == b'+' || b == b'-')
            && i > start
            && bytes[i - 1] == b' '
            && i + 1 < bytes.len()
            && bytes[i + 1] == b' '
        {
            out.push((sign, s[start..i].trim()));
            sign = b == b'+';
            start = i + 1;
        }
        i += 1;
    }
    out.push((sign, s[start..].trim()));
    Ok(out)
}

fn parse_cyclo_term(term: &str) -> Result<Cyclo, String> {
    let term = term.trim();
    if term.is_empty() {
        return Err("empty term".to_string());
    }
    let (coeff_str, root_str) = match term.split_once('*') {
        Some((c, r)) => (Some(c.trim()), Some(r.trim())),
        None => {
            if term.starts_with('z') {
                (None, Some(term))
            } else {
                (Some(term), None)
            }
        }
    };
    let coeff = match coeff_str {
        Some(c) => parse_q(c)?,
        None => Q::one(),
    };
    let root = match root_str {
        None => Cyclo::one(),
        Some(r) => {
            let body = r
                .strip_prefix('z')
                .ok_or_else(|| format!("expected root-of-unity token, got {r:?}"))?;
            let (level_str, exp) = match body.split_once('^') {
                Some((l, e)) => {
                    let e: i64 = e
                        .trim()
                        .parse()
                        .map_err(|err| format!("bad exponent in {r:?}: {err}"))?;
                    (l.trim(), e)
                }
                None => (body.trim(), 1),
            };
            let level: u32 = level_str
                .parse()
                .map_err(|err| format!("bad level in {r:?}: {err}"))?;
            if level == 0 {
                return Err(format!("root-of-unity level must be positive in {r:?}"));
            }
            Cyclo::root_of_unity(level, exp)
        }
    };
    Ok(root.scale(&coeff))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::fmt_poly;

    #[test]
    fn totient_and_divisors() {
        assert_eq!(phi(1), 1);
        assert_eq!(phi(12), 4);
        assert_eq!(phi(16), 8);
        assert_eq!(phi(5), 4);
        assert_eq!(divisors(12), vec![1, 2, 3, 4, 6, 12]);
    }

    #[test]
    fn twelfth_cyclotomic_polynomial() {
        // Φ₁₂ = T⁴ − T² + 1.
        let p = cyclotomic(12);
        assert_eq!(fmt_poly(&p, "T"), "T^4 - T^2 + 1");
    }

    #[test]
    fn roots_of_unity_collapse_across_levels() {
        // ζ₂ = −1 and ζ₈² = ζ₄ as mathematical identities.
        assert_eq!(Cyclo::root_of_unity(2, 1), Cyclo::int(-1));
        assert_eq!(
            Cyclo::root_of_unity(8, 1).pow(2),
            Cyclo::root_of_unity(4, 1)
        );
        // ζ₅ · ζ₅⁴ = 1.
        let z5 = Cyclo::root_of_unity(5, 1);
        assert!(z5.mul(&z5.pow(4)).is_one());
        // 1 + ζ₅ + ζ₅² + ζ₅³ + ζ₅⁴ = 0.
        let mut s = Cyclo::one();
        for k in 1..5 {
            s = s.add(&z5.pow(k));
        }
        assert!(s.is_zero());
    }

    #[test]
    fn inverses_and_galois() {
        let z5 = Cyclo::root_of_unity(5, 1);
        let x = Cyclo::one().add(&z5).add(&z5.pow(3).scale(&qi(2)));
        let inv = x.inv().unwrap();
        assert!(x.mul(&inv).is_one());
        assert_eq!(z5.galois(2), z5.pow(2));
        assert_eq!(z5.conj(), z5.pow(4));
        assert!(Cyclo::zero().inv().is_none());
    }

    #[test]
    fn minimal_polynomial_of_real_subfield_generators() {
        // ζ₅ + ζ₅⁻¹ has minimal polynomial T² + T − 1.
        let z5 = Cyclo::root_of_unity(5, 1);
        let e = z5.add(&z5.conj());
        assert_eq!(fmt_poly(&e.minimal_polynomial(), "T"), "T^2 + T - 1");
        // ζ₈ + ζ₈⁻¹ = √2 has minimal polynomial T² − 2.
        let z8 = Cyclo::root_of_unity(8, 1);
        let e = z8.add(&z8.conj());
        assert_eq!(fmt_poly(&e.minimal_polynomial(), "T"), "T^2 - 2");
        // A rational has a degree-1 minimal polynomial.
        assert_eq!(fmt_poly(&Cyclo::int(3).minimal_polynomial(), "T"), "T - 3");
    }

    #[test]
    fn display_descends_to_minimal_level() {
        // ζ₁₀^5 = −1: printing must not mention level 10.
        let x = Cyclo::root_of_unity(10, 5);
        assert_eq!(x.to_string(), "-1");
        // ζ₁₆² = ζ₈ prints at level 8.
        let x = Cyclo::root_of_unity(16, 2);
        assert_eq!(x.to_string(), "(z8)");
        let y = Cyclo::root_of_unity(5, 1).scale(&qi(-2)).add(&Cyclo::one());
        assert_eq!(y.to_string(), "(1 - 2*z5)");
    }

    #[test]
    fn parse_round_trip() {
        let samples = [
            Cyclo::int(7),
            Cyclo::from_q(crate::rat::qr(-3, 4)),
            Cyclo::root_of_unity(8, 3),
            Cyclo::root_of_unity(5, 1)
                .scale(&crate::rat::qr(2, 3))
                .add(&Cyclo::int(-1)),
            Cyclo::root_of_unity(16, 7).sub(&Cyclo::root_of_unity(16, 1)),
        ];
        for x in &samples {
            let text = x.to_string();
            let back = parse_cyclo(&text).unwrap();
            assert_eq!(&back, x, "round trip failed for {text}");
        }
    }

    #[test]
    fn rationality_detection() {
        let z8 = Cyclo::root_of_unity(8, 1);
        let sqrt2 = z8.add(&z8.conj());
        assert!(!sqrt2.is_rational());
        assert_eq!(sqrt2.mul(&sqrt2).as_q(), Some(qi(2)));
    }
}
