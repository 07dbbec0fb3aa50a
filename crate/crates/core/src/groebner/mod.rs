//! Gröbner bases over `F_p`, Hilbert series of homogeneous ideals, and emptiness of
//! affine charts.

pub mod buchberger;
pub mod checkpoint;
pub mod hilbert;

use std::collections::BTreeMap;

use sha2::{Digest, Sha256};
use thiserror::Error;

use crate::poly::{MultiPoly, PolyError, PolyFile};

pub use buchberger::{buchberger, is_groebner_basis, resume, GbConfig, GbStats, GroebnerBasis, DEFAULT_DEGREE_BUDGET};
pub use checkpoint::{Checkpoint, CHECKPOINT_VERSION};
pub use hilbert::{hilbert_data, hilbert_from_numerator, monomial_numerator, HilbertData};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GroebnerError {
    #[error("sugar degree {degree} exceeds budget {budget} (checkpoint: {checkpoint:?})")]
    DegreeBudgetExceeded { degree: u32, budget: u32, checkpoint: Option<String> },
    #[error("no generators")]
    EmptyInput,
    #[error("generators from different rings")]
    RingMismatch,
    #[error("basis is not homogeneous")]
    NotHomogeneous,
    #[error("checkpoint: {0}")]
    Checkpoint(String),
    #[error("io: {0}")]
    Io(String),
    #[error(transparent)]
    Poly(#[from] PolyError),
}

/// Hex sha256 over the JSON forms of the generators, in order.
pub fn ideal_hash(gens: &[MultiPoly]) -> String {
    let mut h = Sha256::new();
    for g in gens {
        h.update(serde_json::to_vec(&PolyFile::from_poly(g)).expect("serializes"));
        h.update(b"\n");
    }
    hex::encode(h.finalize())
}

/// Echelon basis of the linear span: distinct leading monomials, monic.
pub fn linear_reduce(gens: &[MultiPoly]) -> Vec<MultiPoly> {
    let mut by_lm: BTreeMap<(u128, u128), MultiPoly> = BTreeMap::new();
    for g in gens {
        let mut f = g.clone();
        while let Some(lm) = f.leading_monomial() {
            let key = f.ring().order.key(lm);
            match by_lm.get(&key) {
                Some(b) => f = f.sub(&b.scale(f.leading_coefficient().expect("nonzero"))),
                None => {
                    by_lm.insert(key, f.monic());
                    break;
                }
            }
        }
    }
    by_lm.into_values().rev().collect()
}

/// Gröbner basis of `(gens, t x_c - 1)` in one extra variable `t`.
pub fn localization(gens: &[MultiPoly], c: usize, config: &GbConfig) -> Result<GroebnerBasis, GroebnerError> {
    let ring = *gens.first().ok_or(GroebnerError::EmptyInput)?.ring();
    if c >= ring.nvars {
        return Err(PolyError::Shape(format!("chart {c} out of range")).into());
    }
    let big = ring.with_nvars(ring.nvars + 1)?;
    let mut lifted = gens.iter().map(|g| g.into_ring(&big)).collect::<Result<Vec<_>, _>>()?;
    lifted.push(big.var(ring.nvars).mul(&big.var(c)).sub(&big.one()));
    buchberger(&lifted, config)
}

/// Whether `V(gens)` misses the open set `x_c != 0`: adjoins `t` and tests `1` against
/// `(gens, t x_c - 1)`.
pub fn localized_trivial(gens: &[MultiPoly], c: usize, config: &GbConfig) -> Result<bool, GroebnerError> {
    Ok(localization(gens, c, config)?.is_unit())
}
