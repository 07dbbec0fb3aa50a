//! JSON matrix files: `{field: "cyclotomic21"|"fp", p?, rows, cols, entries: [...]}` with
//! `entries` in row-major order. Cyclotomic entries are 13-tuples of decimal strings, prime
//! field entries are integers in `[0, p)`.

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::arith::{CyclotomicField, CyclotomicNumber, PrimeField};

use super::{LinalgError, Matrix};

pub const FIELD_CYCLOTOMIC: &str = "cyclotomic21";
pub const FIELD_FP: &str = "fp";

/// Upper bound on `rows * cols` accepted from a file.
pub const MAX_ENTRIES: usize = 1 << 20;

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct MatrixFile {
    pub field: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub p: Option<u32>,
    pub rows: usize,
    pub cols: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub label: Option<String>,
    pub entries: Vec<Value>,
}

#[derive(Debug, Clone, PartialEq)]
pub enum AnyMatrix {
    Cyclotomic(Matrix<CyclotomicField>),
    Fp(Matrix<PrimeField>),
}

impl MatrixFile {
    pub fn from_cyclotomic(m: &Matrix<CyclotomicField>, label: Option<&str>) -> Self {
        MatrixFile {
            field: FIELD_CYCLOTOMIC.into(),
            p: None,
            rows: m.rows(),
            cols: m.cols(),
            label: label.map(str::to_owned),
            entries: m
                .entries()
                .iter()
                .map(|e| Value::Array(e.to_strings().into_iter().map(Value::String).collect()))
                .collect(),
        }
    }

    pub fn from_fp(m: &Matrix<PrimeField>, label: Option<&str>) -> Self {
        MatrixFile {
            field: FIELD_FP.into(),
            p: Some(m.field().modulus()),
            rows: m.rows(),
            cols: m.cols(),
            label: label.map(str::to_owned),
            entries: m.entries().iter().map(|&e| Value::from(e)).collect(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("matrix file serializes")
    }

    pub fn parse(text: &str) -> Result<Self, LinalgError> {
        serde_json::from_str(text).map_err(|e| LinalgError::Schema(e.to_string()))
    }

    pub fn decode(&self) -> Result<AnyMatrix, LinalgError> {
        let n = self
            .rows
            .checked_mul(self.cols)
            .filter(|&n| n <= MAX_ENTRIES)
            .ok_or_else(|| LinalgError::Schema("matrix too large".into()))?;
        if n != self.entries.len() {
            return Err(LinalgError::Schema(format!(
                "{}x{} matrix with {} entries",
                self.rows,
                self.cols,
                self.entries.len()
            )));
        }
        match self.field.as_str() {
            FIELD_CYCLOTOMIC => {
                if self.p.is_some() {
                    return Err(LinalgError::Schema("cyclotomic matrix must not carry p".into()));
                }
                let mut entries = Vec::with_capacity(n);
                for v in &self.entries {
                    let parts: Vec<&str> = v
                        .as_array()
                        .ok_or_else(|| LinalgError::Schema("cyclotomic entry must be an array".into()))?
                        .iter()
                        .map(|x| x.as_str().ok_or_else(|| LinalgError::Schema("expected string".into())))
                        .collect::<Result<_, _>>()?;
                    entries.push(
                        CyclotomicNumber::from_strings(&parts)
                            .map_err(|e| LinalgError::Schema(e.to_string()))?,
                    );
                }
                Ok(AnyMatrix::Cyclotomic(Matrix::from_entries(&CyclotomicField, self.rows, self.cols, entries)))
            }
            FIELD_FP => {
                let p = self.p.ok_or_else(|| LinalgError::Schema("fp matrix needs p".into()))?;
                let field = PrimeField::new(p).map_err(|e| LinalgError::Schema(e.to_string()))?;
                let entries = self
                    .entries
                    .iter()
                    .map(|v| {
                        v.as_u64()
                            .filter(|&x| x < p as u64)
                            .map(|x| x as u32)
                            .ok_or_else(|| LinalgError::Schema(format!("bad residue {v}")))
                    })
                    .collect::<Result<Vec<u32>, _>>()?;
                Ok(AnyMatrix::Fp(Matrix::from_entries(&field, self.rows, self.cols, entries)))
            }
            other => Err(LinalgError::Schema(format!("unknown field {other:?}"))),
        }
    }
}

/// Parse and decode in one step.
pub fn parse_matrix(text: &str) -> Result<AnyMatrix, LinalgError> {
    MatrixFile::parse(text)?.decode()
}
