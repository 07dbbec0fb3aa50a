//! Exact arithmetic: `Q(zeta_21)`, prime fields, and the residue map between them.

pub mod cyclotomic;
pub mod intpoly;
pub mod prime_field;
pub mod reduction;

use std::fmt::Debug;
use std::hash::Hash;

use thiserror::Error;

pub use cyclotomic::CyclotomicNumber;
pub use intpoly::{cyclotomic_polynomial, IntPoly};
pub use prime_field::{PrimeField, PrimeFieldElement};
pub use reduction::{split_primes, ReductionMap};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ArithError {
    #[error("inverse of zero")]
    ZeroInverse,
    #[error("{0} is not a supported prime")]
    NotPrime(u32),
    #[error("Phi_21({r}) != 0 mod {p}")]
    NotARoot { p: u32, r: u32 },
    #[error("denominator {denominator} is divisible by {p}")]
    BadDenominator { p: u32, denominator: String },
    #[error("malformed cyclotomic number: {0}")]
    Malformed(String),
}

/// A field context. Elements are plain values; the context carries any parameters
/// (such as the modulus) needed to operate on them.
pub trait Field: Clone + Debug + Send + Sync {
    type Elem: Clone + PartialEq + Eq + Hash + Debug + Send + Sync;

    /// Whether elimination should be run fraction-free (Bareiss) over this field.
    const FRACTION_FREE: bool;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn from_i64(&self, v: i64) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn inv(&self, a: &Self::Elem) -> Option<Self::Elem>;

    fn div(&self, a: &Self::Elem, b: &Self::Elem) -> Option<Self::Elem> {
        self.inv(b).map(|bi| self.mul(a, &bi))
    }
}

/// `Q(zeta_21)` as a [`Field`] context.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct CyclotomicField;

impl Field for CyclotomicField {
    type Elem = CyclotomicNumber;
    const FRACTION_FREE: bool = true;

    fn zero(&self) -> CyclotomicNumber {
        CyclotomicNumber::zero()
    }
    fn one(&self) -> CyclotomicNumber {
        CyclotomicNumber::one()
    }
    fn from_i64(&self, v: i64) -> CyclotomicNumber {
        CyclotomicNumber::from_int(v)
    }
    fn is_zero(&self, a: &CyclotomicNumber) -> bool {
        a.is_zero()
    }
    fn add(&self, a: &CyclotomicNumber, b: &CyclotomicNumber) -> CyclotomicNumber {
        a + b
    }
    fn sub(&self, a: &CyclotomicNumber, b: &CyclotomicNumber) -> CyclotomicNumber {
        a - b
    }
    fn neg(&self, a: &CyclotomicNumber) -> CyclotomicNumber {
        -a
    }
    fn mul(&self, a: &CyclotomicNumber, b: &CyclotomicNumber) -> CyclotomicNumber {
        a * b
    }
    fn inv(&self, a: &CyclotomicNumber) -> Option<CyclotomicNumber> {
        a.inverse().ok()
    }
}

impl Field for PrimeField {
    type Elem = u32;
    const FRACTION_FREE: bool = false;

    fn zero(&self) -> u32 {
        0
    }
    fn one(&self) -> u32 {
        1
    }
    fn from_i64(&self, v: i64) -> u32 {
        PrimeField::from_i64(self, v)
    }
    fn is_zero(&self, a: &u32) -> bool {
        *a == 0
    }
    fn add(&self, a: &u32, b: &u32) -> u32 {
        PrimeField::add(self, *a, *b)
    }
    fn sub(&self, a: &u32, b: &u32) -> u32 {
        PrimeField::sub(self, *a, *b)
    }
    fn neg(&self, a: &u32) -> u32 {
        PrimeField::neg(self, *a)
    }
    fn mul(&self, a: &u32, b: &u32) -> u32 {
        PrimeField::mul(self, *a, *b)
    }
    fn inv(&self, a: &u32) -> Option<u32> {
        PrimeField::inv(self, *a)
    }
}
