use num_bigint::BigInt;
use num_integer::Integer;
use serde::{Deserialize, Serialize};

use super::ArithError;

/// The prime field `F_p` for a word-sized prime. Elements are plain `u32` residues in `[0, p)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "u32", into = "u32")]
pub struct PrimeField {
    p: u32,
}

/// A residue tagged with its modulus, for callers that want a self-describing value.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PrimeFieldElement {
    pub value: u32,
    pub p: u32,
}

fn is_prime(n: u32) -> bool {
    if n < 2 {
        return false;
    }
    let n = n as u64;
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

impl PrimeField {
    /// Largest modulus accepted; keeps products of two residues inside `u64` with room to spare.
    pub const MAX_PRIME: u32 = (1 << 31) - 1;

    pub fn new(p: u32) -> Result<Self, ArithError> {
        if !is_prime(p) || p > Self::MAX_PRIME {
            return Err(ArithError::NotPrime(p));
        }
        Ok(PrimeField { p })
    }

    #[inline]
    pub fn modulus(&self) -> u32 {
        self.p
    }

    #[inline]
    pub fn add(&self, a: u32, b: u32) -> u32 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }

    #[inline]
    pub fn sub(&self, a: u32, b: u32) -> u32 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }

    #[inline]
    pub fn neg(&self, a: u32) -> u32 {
        if a == 0 {
            0
        } else {
            self.p - a
        }
    }

    #[inline]
    pub fn mul(&self, a: u32, b: u32) -> u32 {
        ((a as u64 * b as u64) % self.p as u64) as u32
    }

    pub fn pow(&self, mut base: u32, mut exp: u64) -> u32 {
        let mut acc = 1 % self.p;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            exp >>= 1;
        }
        acc
    }

    /// Multiplicative inverse via Fermat; `None` for zero.
    pub fn inv(&self, a: u32) -> Option<u32> {
        if a % self.p == 0 {
            None
        } else {
            Some(self.pow(a, self.p as u64 - 2))
        }
    }

    #[inline]
    pub fn from_i64(&self, v: i64) -> u32 {
        v.rem_euclid(self.p as i64) as u32
    }

    pub fn from_bigint(&self, v: &BigInt) -> u32 {
        let r = v.mod_floor(&BigInt::from(self.p));
        u32::try_from(r).expect("residue below p")
    }

    /// Signed representative in `(-p/2, p/2]`, used for display.
    pub fn signed(&self, a: u32) -> i64 {
        if a > self.p / 2 {
            a as i64 - self.p as i64
        } else {
            a as i64
        }
    }

    pub fn element(&self, v: i64) -> PrimeFieldElement {
        PrimeFieldElement { value: self.from_i64(v), p: self.p }
    }
}

impl TryFrom<u32> for PrimeField {
    type Error = ArithError;
    fn try_from(p: u32) -> Result<Self, Self::Error> {
        PrimeField::new(p)
    }
}

impl From<PrimeField> for u32 {
    fn from(f: PrimeField) -> u32 {
        f.p
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_composites() {
        assert!(PrimeField::new(127).is_ok());
        assert!(matches!(PrimeField::new(126), Err(ArithError::NotPrime(126))));
        assert!(PrimeField::new(1).is_err());
        assert!(PrimeField::new(0).is_err());
    }

    #[test]
    fn inverse_and_pow() {
        let f = PrimeField::new(127).unwrap();
        for a in 1..127 {
            assert_eq!(f.mul(a, f.inv(a).unwrap()), 1);
        }
        assert_eq!(f.inv(0), None);
        assert_eq!(f.pow(25, 21), 1);
        assert_eq!(f.from_i64(-1), 126);
        assert_eq!(f.signed(126), -1);
    }
}
