//! Multivariate polynomials over `F_p`.

pub mod det;
pub mod io;
pub mod monomial;
pub mod multipoly;

use thiserror::Error;

pub use det::{det_poly_matrix, minors, subsets, DetAlgorithm, PolyMatrix, SimplexInterpolator};
pub use io::{parse_poly, poly_from_json, poly_to_json, PolyFile};
pub use monomial::{Monomial, MonomialOrder, MAX_DEGREE, MAX_VARS};
pub use multipoly::{jacobian_generators, MultiPoly, PolyRing};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PolyError {
    #[error("not divisible; remainder {remainder}")]
    NotDivisible { remainder: String },
    #[error("division by zero")]
    DivisionByZero,
    #[error("{0} variables not supported")]
    TooManyVariables(usize),
    #[error("polynomials from different rings")]
    RingMismatch,
    #[error("shape: {0}")]
    Shape(String),
    #[error("parse: {0}")]
    Parse(String),
}
