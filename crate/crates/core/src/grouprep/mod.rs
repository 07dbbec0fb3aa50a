//! The group `3.A7` inside `GL_6(Q(zeta_21))`, its action on the third exterior power,
//! and the two invariant Lagrangian subspaces.

pub mod characters;
pub mod group;
pub mod lagrangian;
pub mod words;

use thiserror::Error;

pub use characters::{i_sqrt7, inner_product, table1, table_row, CharacterRow, COLUMN_WORDS, NUM_CLASSES};
pub use group::{enumerate_group, generator_hash, generators, ClassInfo, GroupCache, GroupData, DEFAULT_ELEMENT_BOUND};
pub use lagrangian::{
    build_lagrangians, build_projector, character_of_subrep, class_sums, extract_lagrangian, pairing_matrix,
    ClassSums, LagrangianBasis, LagrangianPair, LagrangianSummary, LAGRANGIAN_DIM,
};
pub use words::Word;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GroupError {
    #[error("group exceeds {0} elements")]
    ExplosionGuard(usize),
    #[error("generator {0} has a determinant that is not a root of unity")]
    NonUnitDeterminant(usize),
    #[error("generator {0} is not an invertible 6x6 matrix")]
    BadGenerator(usize),
    #[error("representative words occupy {0} classes instead of {1}")]
    ColumnMismatch(usize, usize),
    #[error("projector for {0} is not idempotent")]
    NotIdempotent(String),
    #[error("subspace {0} is not Lagrangian: {1}")]
    NotLagrangian(String, String),
    #[error("subspace {0} is not invariant under generator {1}")]
    NotInvariant(String, usize),
    #[error("subspace {0} does not carry a representation at column {1}")]
    NotARepresentation(String, usize),
    #[error("bad word: {0}")]
    BadWord(String),
    #[error("word {0} is not in the enumerated group")]
    UnknownElement(String),
    #[error("cache: {0}")]
    Cache(String),
}
