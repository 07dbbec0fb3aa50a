//! Dense exact linear algebra, the third exterior power functor and the volume pairing.

pub mod io;
pub mod matrix;
pub mod wedge;

use thiserror::Error;

pub use io::{parse_matrix, AnyMatrix, MatrixFile};
pub use matrix::{KernelRank, Matrix};
pub use wedge::{
    symplectic_form, symplectic_gram, symplectic_pairing, wedge_cube, wedge_vectors,
    TripleBasisIndex, TRIPLES, WEDGE3_DIM,
};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LinalgError {
    #[error("matrix file: {0}")]
    Schema(String),
}
