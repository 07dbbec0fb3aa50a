//! Isotypic projectors on the third exterior power and the invariant Lagrangians.

use num_bigint::BigInt;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::arith::{CyclotomicField, CyclotomicNumber};
use crate::linalg::{symplectic_gram, wedge_cube, AnyMatrix, LinalgError, Matrix, MatrixFile, WEDGE3_DIM};

use super::characters::{table_row, CharacterRow, COLUMN_WORDS, NUM_CLASSES};
use super::group::GroupData;
use super::words::Word;
use super::GroupError;

type QMatrix = Matrix<CyclotomicField>;

/// Half of the dimension of the exterior cube.
pub const LAGRANGIAN_DIM: usize = 10;

/// `S_C = sum of wedge_cube(g)` over the full preimage of each class, in column order.
#[derive(Clone, Debug)]
pub struct ClassSums {
    pub group_order: usize,
    pub sums: Vec<QMatrix>,
}

pub fn class_sums(g: &GroupData) -> ClassSums {
    let q = CyclotomicField;
    let columns: Vec<usize> =
        (0..g.order()).map(|i| g.column_of(i).expect("class partition has run")).collect();
    let zero = || vec![Matrix::zeros(&q, WEDGE3_DIM, WEDGE3_DIM); NUM_CLASSES];
    let sums = (0..g.order())
        .into_par_iter()
        .fold(zero, |mut acc, i| {
            acc[columns[i]].add_assign(&wedge_cube(&g.elements[i]));
            acc
        })
        .reduce(zero, |mut a, b| {
            for (x, y) in a.iter_mut().zip(&b) {
                x.add_assign(y);
            }
            a
        });
    ClassSums { group_order: g.order(), sums }
}

/// `P = dim(chi)/|G| * sum_C conj(chi(C)) S_C`, checked to be idempotent.
pub fn build_projector(sums: &ClassSums, chi: &CharacterRow) -> Result<QMatrix, GroupError> {
    let q = CyclotomicField;
    let mut p = Matrix::zeros(&q, WEDGE3_DIM, WEDGE3_DIM);
    for (s, v) in sums.sums.iter().zip(&chi.values) {
        if !v.is_zero() {
            p.add_assign(&s.scale(&v.conj()));
        }
    }
    let factor = chi.dimension().div_int(&BigInt::from(sums.group_order));
    let p = p.scale(&factor);
    if p.mul(&p) != p {
        return Err(GroupError::NotIdempotent(chi.name.clone()));
    }
    Ok(p)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LagrangianBasis {
    pub label: String,
    /// `20 x 10`; the columns span the subspace.
    pub basis: QMatrix,
}

impl LagrangianBasis {
    pub fn to_json(&self) -> String {
        MatrixFile::from_cyclotomic(&self.basis, Some(&self.label)).to_json()
    }

    pub fn from_json(text: &str) -> Result<Self, LinalgError> {
        let file = MatrixFile::parse(text)?;
        let label = file.label.clone().unwrap_or_default();
        match file.decode()? {
            AnyMatrix::Cyclotomic(m) if m.rows() == WEDGE3_DIM && m.cols() == LAGRANGIAN_DIM => {
                Ok(LagrangianBasis { label, basis: m })
            }
            _ => Err(LinalgError::Schema("expected a 20x10 cyclotomic matrix".into())),
        }
    }

    /// `B^T omega B`.
    pub fn isotropy_defect(&self) -> QMatrix {
        pairing_matrix(&self.basis, &self.basis)
    }

    /// Verifies rank, isotropy and invariance under the given generators of `GL_6`.
    pub fn verify(&self, gens: &[QMatrix]) -> Result<(), GroupError> {
        let rank = self.basis.rank();
        if self.basis.rows() != WEDGE3_DIM || rank != LAGRANGIAN_DIM {
            return Err(GroupError::NotLagrangian(self.label.clone(), format!("rank {rank}")));
        }
        if !self.isotropy_defect().is_zero() {
            return Err(GroupError::NotLagrangian(self.label.clone(), "B^T omega B != 0".into()));
        }
        for (k, g) in gens.iter().enumerate() {
            let image = wedge_cube(g).mul(&self.basis);
            if self.basis.hstack(&image).rank() != LAGRANGIAN_DIM {
                return Err(GroupError::NotInvariant(self.label.clone(), k));
            }
        }
        Ok(())
    }
}

/// `B1^T omega B2`.
pub fn pairing_matrix(b1: &QMatrix, b2: &QMatrix) -> QMatrix {
    b1.transpose().mul(&symplectic_gram(&CyclotomicField)).mul(b2)
}

/// Column space of an idempotent, taken as the kernel of `I - P`.
pub fn extract_lagrangian(p: &QMatrix, label: &str, gens: &[QMatrix]) -> Result<LagrangianBasis, GroupError> {
    let q = CyclotomicField;
    let kr = Matrix::identity(&q, p.rows()).sub(p).kernel_and_rank();
    let basis = Matrix::from_columns(&q, p.rows(), &kr.kernel);
    let b = LagrangianBasis { label: label.to_owned(), basis };
    b.verify(gens)?;
    Ok(b)
}

/// Character of the representation carried by an invariant subspace, on the table columns.
pub fn character_of_subrep(b: &LagrangianBasis, g: &GroupData) -> Result<CharacterRow, GroupError> {
    let basis = &b.basis;
    let dim = basis.cols();
    let pivots = basis.transpose().kernel_and_rank().pivots;
    let all: Vec<usize> = (0..dim).collect();
    let square_inv = basis
        .select(&pivots, &all)
        .inverse()
        .ok_or_else(|| GroupError::NotARepresentation(b.label.clone(), 0))?;
    let mut values = Vec::with_capacity(NUM_CLASSES);
    for (col, w) in COLUMN_WORDS.iter().enumerate() {
        let image = wedge_cube(&g.eval_word(&Word::parse(w)?)?).mul(basis);
        let m = square_inv.mul(&image.select(&pivots, &all));
        if basis.mul(&m) != image {
            return Err(GroupError::NotARepresentation(b.label.clone(), col));
        }
        values.push(m.trace());
    }
    Ok(CharacterRow::new(&b.label, values))
}

/// Both Lagrangians with their projectors and characters. `A1` carries the row `V10`,
/// whose value at the class of `ab` is `-(1 - i sqrt 7)/2`; `A2` carries `V10'`.
#[derive(Clone, Debug)]
pub struct LagrangianPair {
    pub a1: LagrangianBasis,
    pub a2: LagrangianBasis,
    pub p1: QMatrix,
    pub p2: QMatrix,
    pub chi1: CharacterRow,
    pub chi2: CharacterRow,
}

/// Project with the two ten-dimensional rows, extract and identify the subspaces.
pub fn build_lagrangians(g: &GroupData, sums: &ClassSums) -> Result<LagrangianPair, GroupError> {
    let rows = [table_row("V10").expect("row"), table_row("V10'").expect("row")];
    let mut out = Vec::new();
    for (row, label) in rows.iter().zip(["A1", "A2"]) {
        let p = build_projector(sums, row)?;
        let b = extract_lagrangian(&p, label, &g.generators)?;
        let chi = character_of_subrep(&b, g)?;
        if chi.values != row.values {
            return Err(GroupError::NotARepresentation(label.into(), 0));
        }
        out.push((b, p, chi));
    }
    let (a2, p2, chi2) = out.pop().expect("two");
    let (a1, p1, chi1) = out.pop().expect("two");
    Ok(LagrangianPair { a1, a2, p1, p2, chi1, chi2 })
}

/// Artifact summary written next to the Lagrangian files.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct LagrangianSummary {
    pub group_order: usize,
    pub quotient_order: usize,
    pub class_sizes: Vec<usize>,
    pub labeling: String,
    pub chi_a1: Vec<Vec<String>>,
    pub chi_a2: Vec<Vec<String>>,
}

impl LagrangianSummary {
    pub fn new(g: &GroupData, pair: &LagrangianPair) -> Self {
        let enc = |c: &CharacterRow| c.values.iter().map(CyclotomicNumber::to_strings).collect();
        LagrangianSummary {
            group_order: g.order(),
            quotient_order: g.quotient_order(),
            class_sizes: g.class_sizes(),
            labeling: "A1 carries V10 (value -(1 - i sqrt 7)/2 at the class of ab), A2 carries V10'".into(),
            chi_a1: enc(&pair.chi1),
            chi_a2: enc(&pair.chi2),
        }
    }
}
