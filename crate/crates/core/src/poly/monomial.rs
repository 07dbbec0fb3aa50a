//! Packed monomials and monomial orders.
//!
//! A monomial in at most 15 variables is a `u128`: byte `i < 15` holds the exponent of
//! variable `i`, byte 15 the total degree. Exponents and degree stay below 128, so products
//! and divisibility tests work bytewise without carries.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

pub const MAX_VARS: usize = 15;
pub const MAX_DEGREE: u32 = 127;

const DEG_SHIFT: u32 = 120;
const LOW_MASK: u128 = (1u128 << DEG_SHIFT) - 1;
const LOW7: u128 = 0x7f7f_7f7f_7f7f_7f7f_7f7f_7f7f_7f7f_7f;
const HIGH_BITS: u128 = 0x8080_8080_8080_8080_8080_8080_8080_8080;

#[derive(Clone, Copy, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct Monomial(u128);

impl Monomial {
    pub const ONE: Monomial = Monomial(0);

    /// `None` if there are too many variables or the degree exceeds [`MAX_DEGREE`].
    pub fn from_exponents(exps: &[u32]) -> Option<Self> {
        if exps.len() > MAX_VARS {
            return None;
        }
        let deg: u32 = exps.iter().sum();
        if deg > MAX_DEGREE {
            return None;
        }
        let mut m = (deg as u128) << DEG_SHIFT;
        for (i, &e) in exps.iter().enumerate() {
            m |= (e as u128) << (8 * i);
        }
        Some(Monomial(m))
    }

    pub fn var(i: usize) -> Self {
        assert!(i < MAX_VARS);
        Monomial((1u128 << DEG_SHIFT) | (1u128 << (8 * i)))
    }

    #[inline]
    pub fn raw(self) -> u128 {
        self.0
    }

    #[inline]
    pub fn degree(self) -> u32 {
        (self.0 >> DEG_SHIFT) as u32
    }

    #[inline]
    pub fn exponent(self, i: usize) -> u32 {
        ((self.0 >> (8 * i)) & 0xff) as u32
    }

    pub fn exponents(self, nvars: usize) -> Vec<u32> {
        (0..nvars).map(|i| self.exponent(i)).collect()
    }

    /// Highest variable index with a nonzero exponent, plus one.
    pub fn support_len(self) -> usize {
        let low = self.0 & LOW_MASK;
        if low == 0 {
            0
        } else {
            (127 - low.leading_zeros() as usize) / 8 + 1
        }
    }

    #[inline]
    pub fn checked_mul(self, other: Self) -> Option<Self> {
        if self.degree() + other.degree() > MAX_DEGREE {
            None
        } else {
            Some(Monomial(self.0 + other.0))
        }
    }

    /// Product; panics past [`MAX_DEGREE`].
    #[inline]
    pub fn mul(self, other: Self) -> Self {
        self.checked_mul(other).expect("monomial degree exceeds 127")
    }

    #[inline]
    pub fn divides(self, other: Self) -> bool {
        // bytewise other >= self, via borrow-free subtraction against a guard bit
        ((other.0 | HIGH_BITS) - self.0) & HIGH_BITS == HIGH_BITS
    }

    /// `other / self`, assuming [`Monomial::divides`].
    #[inline]
    pub fn quotient_of(self, other: Self) -> Self {
        debug_assert!(self.divides(other));
        Monomial(other.0 - self.0)
    }

    pub fn lcm(self, other: Self) -> Self {
        let mut m = 0u128;
        let mut deg = 0u128;
        for i in 0..MAX_VARS {
            let e = self.exponent(i).max(other.exponent(i)) as u128;
            deg += e;
            m |= e << (8 * i);
        }
        Monomial(m | (deg << DEG_SHIFT))
    }

    pub fn gcd(self, other: Self) -> Self {
        let mut m = 0u128;
        let mut deg = 0u128;
        for i in 0..MAX_VARS {
            let e = self.exponent(i).min(other.exponent(i)) as u128;
            deg += e;
            m |= e << (8 * i);
        }
        Monomial(m | (deg << DEG_SHIFT))
    }

    pub fn coprime(self, other: Self) -> bool {
        (0..MAX_VARS).all(|i| self.exponent(i) == 0 || other.exponent(i) == 0)
    }

    /// Same monomial with variable `i` set to exponent `e`.
    pub fn with_exponent(self, i: usize, e: u32) -> Option<Self> {
        let old = self.exponent(i);
        let deg = self.degree() - old + e;
        if deg > MAX_DEGREE {
            return None;
        }
        let low = (self.0 & LOW_MASK & !(0xffu128 << (8 * i))) | ((e as u128) << (8 * i));
        Some(Monomial(low | ((deg as u128) << DEG_SHIFT)))
    }

    /// Degree-reverse-lexicographic key: ascending keys mean ascending monomials.
    #[inline]
    fn grevlex_key(self) -> u128 {
        (self.0 & !LOW_MASK) | (LOW7 - (self.0 & LOW_MASK))
    }

    #[inline]
    fn lex_key(self) -> u128 {
        (self.0 & LOW_MASK).swap_bytes()
    }

    fn restrict(self, lo: usize, hi: usize) -> Self {
        let mut m = 0u128;
        let mut deg = 0u128;
        for i in lo..hi.min(MAX_VARS) {
            let e = self.exponent(i) as u128;
            deg += e;
            m |= e << (8 * i);
        }
        Monomial(m | (deg << DEG_SHIFT))
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.exponents(self.support_len()))
    }
}

/// Orders on monomials. Variable 0 is the largest variable.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum MonomialOrder {
    Grevlex,
    Lex,
    /// Block order eliminating the first `k` variables: grevlex on the block `[0, k)`,
    /// ties broken by grevlex on the rest.
    Elimination(usize),
}

impl MonomialOrder {
    /// A totally ordered key; `key(a) < key(b)` iff `a < b`.
    #[inline]
    pub fn key(self, m: Monomial) -> (u128, u128) {
        match self {
            MonomialOrder::Grevlex => (m.grevlex_key(), 0),
            MonomialOrder::Lex => (m.lex_key(), 0),
            MonomialOrder::Elimination(k) => {
                (m.restrict(0, k).grevlex_key(), m.restrict(k, MAX_VARS).grevlex_key())
            }
        }
    }

    #[inline]
    pub fn cmp(self, a: Monomial, b: Monomial) -> Ordering {
        match self {
            MonomialOrder::Grevlex => a.grevlex_key().cmp(&b.grevlex_key()),
            MonomialOrder::Lex => a.lex_key().cmp(&b.lex_key()),
            MonomialOrder::Elimination(_) => self.key(a).cmp(&self.key(b)),
        }
    }

    pub fn name(self) -> String {
        match self {
            MonomialOrder::Grevlex => "grevlex".into(),
            MonomialOrder::Lex => "lex".into(),
            MonomialOrder::Elimination(k) => format!("elim{k}"),
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        match s {
            "grevlex" => Some(MonomialOrder::Grevlex),
            "lex" => Some(MonomialOrder::Lex),
            _ => s.strip_prefix("elim")?.parse().ok().filter(|&k| k <= MAX_VARS).map(MonomialOrder::Elimination),
        }
    }
}
