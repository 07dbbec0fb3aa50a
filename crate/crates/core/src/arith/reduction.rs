use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use super::cyclotomic::{CyclotomicNumber, PHI21};
use super::intpoly::{cyclotomic_polynomial, eval_mod};
use super::{ArithError, PrimeField};

/// The residue map `Z[zeta_21]_(q) -> F_p` for the prime `q = (p, zeta_21 - r)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "ReductionMapRepr", into = "ReductionMapRepr")]
pub struct ReductionMap {
    field: PrimeField,
    root: u32,
    /// `root^i mod p` for `i < 12`.
    #[serde(skip)]
    powers: [u32; 12],
}

#[derive(Serialize, Deserialize)]
struct ReductionMapRepr {
    p: u32,
    r: u32,
}

impl TryFrom<ReductionMapRepr> for ReductionMap {
    type Error = ArithError;
    fn try_from(v: ReductionMapRepr) -> Result<Self, ArithError> {
        ReductionMap::new(v.p, v.r)
    }
}

impl From<ReductionMap> for ReductionMapRepr {
    fn from(m: ReductionMap) -> Self {
        ReductionMapRepr { p: m.prime(), r: m.root() }
    }
}

impl Default for ReductionMap {
    fn default() -> Self {
        ReductionMap::new(127, 25).expect("Phi_21(25) = 0 mod 127")
    }
}

impl ReductionMap {
    /// Accepts `(p, r)` only if `p` is prime and `Phi_21(r) = 0 mod p`.
    pub fn new(p: u32, r: u32) -> Result<Self, ArithError> {
        let field = PrimeField::new(p)?;
        let r = r % p;
        if eval_mod(&cyclotomic_polynomial(21), r as u64, p as u64) != 0 {
            return Err(ArithError::NotARoot { p, r });
        }
        let mut powers = [0u32; 12];
        let mut acc = 1u32;
        for slot in powers.iter_mut() {
            *slot = acc;
            acc = field.mul(acc, r);
        }
        Ok(ReductionMap { field, root: r, powers })
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn prime(&self) -> u32 {
        self.field.modulus()
    }

    pub fn root(&self) -> u32 {
        self.root
    }

    /// Image of a cyclotomic number; fails if `p` divides the denominator.
    pub fn reduce(&self, a: &CyclotomicNumber) -> Result<u32, ArithError> {
        let f = self.field;
        let (num, den): (Vec<u32>, u32) = match a.small_parts() {
            Some((num, den)) => (num.iter().map(|&c| f.from_i64(c)).collect(), f.from_i64(den)),
            None => {
                let (num, den) = a.big_parts();
                (num.iter().map(|c| f.from_bigint(c)).collect(), f.from_bigint(&den))
            }
        };
        let den_inv = f.inv(den).ok_or_else(|| ArithError::BadDenominator {
            p: self.prime(),
            denominator: a.denominator().to_string(),
        })?;
        let acc = num
            .iter()
            .zip(self.powers.iter())
            .fold(0u32, |acc, (&c, &rp)| f.add(acc, f.mul(c, rp)));
        Ok(f.mul(acc, den_inv))
    }
}

/// Every `(p, r)` with `p` prime in `[lo, hi)` such that `Phi_21` splits completely mod `p`
/// (equivalently `p = 1 mod 21`), paired with the smallest root `r`.
pub fn split_primes(lo: u32, hi: u32) -> Vec<(u32, u32)> {
    let phi: Vec<BigInt> = PHI21.iter().map(|&c| BigInt::from(c)).collect();
    (lo.max(2)..hi)
        .filter(|&p| p % 21 == 1 && PrimeField::new(p).is_ok())
        .filter_map(|p| {
            (2..p).find(|&r| eval_mod(&phi, r as u64, p as u64) == 0).map(|r| (p, r))
        })
        .collect()
}
