//! JSON checkpoints of a running Buchberger computation.

use std::collections::BTreeSet;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::poly::{MultiPoly, PolyFile};

use super::buchberger::{Engine, GbStats, Pair, Reducer};
use super::GroebnerError;

pub const CHECKPOINT_VERSION: u32 = 1;

/// Largest checkpoint file read back.
pub const MAX_CHECKPOINT_BYTES: u64 = 1 << 30;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Checkpoint {
    pub version: u32,
    pub source_hash: String,
    pub polys: Vec<PolyFile>,
    pub sugar: Vec<u32>,
    pub active: Vec<bool>,
    /// `(sugar, i, j)`; the lcm key is recomputed on load.
    pub pairs: Vec<(u32, u32, u32)>,
    pub stats: GbStats,
    pub unit: bool,
}

impl Checkpoint {
    pub(crate) fn from_engine(e: &Engine) -> Self {
        Checkpoint {
            version: CHECKPOINT_VERSION,
            source_hash: e.source_hash.clone(),
            polys: e.red.polys.iter().map(PolyFile::from_poly).collect(),
            sugar: e.red.sugar.clone(),
            active: e.active.clone(),
            pairs: e.pairs.iter().map(|p| (p.sugar, p.i, p.j)).collect(),
            stats: e.stats.clone(),
            unit: e.unit,
        }
    }

    pub(crate) fn to_engine(&self) -> Result<Engine, GroebnerError> {
        let bad = |m: &str| GroebnerError::Checkpoint(m.to_owned());
        if self.version != CHECKPOINT_VERSION {
            return Err(bad("unsupported version"));
        }
        let n = self.polys.len();
        if n == 0 || self.sugar.len() != n || self.active.len() != n {
            return Err(bad("inconsistent lengths"));
        }
        let polys: Vec<MultiPoly> = self
            .polys
            .iter()
            .map(|f| f.to_poly().map_err(|e| GroebnerError::Checkpoint(e.to_string())))
            .collect::<Result<_, _>>()?;
        let ring = *polys[0].ring();
        if polys.iter().any(|f| *f.ring() != ring || f.is_zero()) {
            return Err(bad("polynomials must be nonzero and share one ring"));
        }
        let mut red = Reducer::new(ring);
        for (f, &s) in polys.into_iter().zip(&self.sugar) {
            red.push(f, s);
        }
        let mut pairs = BTreeSet::new();
        for &(sugar, i, j) in &self.pairs {
            if i >= j || j as usize >= n {
                return Err(bad("pair index out of range"));
            }
            let l = red.lms[i as usize].lcm(red.lms[j as usize]);
            pairs.insert(Pair { sugar, key: ring.order.key(l), i, j });
        }
        Ok(Engine {
            red,
            active: self.active.clone(),
            pairs,
            stats: self.stats.clone(),
            source_hash: self.source_hash.clone(),
            unit: self.unit,
        })
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("serializes")
    }

    pub fn parse(text: &str) -> Result<Self, GroebnerError> {
        let c: Checkpoint = serde_json::from_str(text).map_err(|e| GroebnerError::Checkpoint(e.to_string()))?;
        c.to_engine()?;
        Ok(c)
    }

    /// Atomic write through a temporary file.
    pub fn write(&self, path: &Path) -> Result<(), GroebnerError> {
        let tmp = path.with_extension("tmp");
        std::fs::write(&tmp, self.to_json()).map_err(|e| GroebnerError::Io(e.to_string()))?;
        std::fs::rename(&tmp, path).map_err(|e| GroebnerError::Io(e.to_string()))
    }

    pub fn read(path: &Path) -> Result<Self, GroebnerError> {
        let meta = std::fs::metadata(path).map_err(|e| GroebnerError::Io(e.to_string()))?;
        if meta.len() > MAX_CHECKPOINT_BYTES {
            return Err(GroebnerError::Checkpoint("file too large".into()));
        }
        let text = std::fs::read_to_string(path).map_err(|e| GroebnerError::Io(e.to_string()))?;
        Self::parse(&text)
    }
}
