//! EPW sextics of Lagrangians in `∧³ F_p⁶`: chart matrices, the sextic equation, and
//! certificates for its singular locus, `Y[3]` and decomposable vectors.

pub mod certify;
pub mod report;

use thiserror::Error;

use crate::arith::{ArithError, PrimeField, ReductionMap};
use crate::grouprep::{LagrangianBasis, LAGRANGIAN_DIM};
use crate::groebner::GroebnerError;
use crate::linalg::wedge::{symplectic_gram, TripleBasisIndex, DIM, WEDGE3_DIM};
use crate::linalg::Matrix;
use crate::poly::{det_poly_matrix, DetAlgorithm, Monomial, MonomialOrder, MultiPoly, PolyError, PolyMatrix, PolyRing};

pub use certify::{
    certify_singular_locus, certify_singular_locus_from, certify_y3_empty, grassmannian_probe, plucker_quadrics, ChartVerdict, ProbeResult,
    SingularLocus, Y3Result,
};
pub use report::{
    certify, rank_spot_check, sha256_hex, SpotCheck, summarize, CertReport, CertifyOptions, ClaimVerdicts, ReportError, ReportSummary, SexticData,
    SummaryRow, REPORT_VERSION,
};

pub type FpMatrix = Matrix<PrimeField>;

/// Order to which the chart variable divides the 10x10 determinant.
pub const CHART_VALUATION: u32 = 4;
pub const SEXTIC_DEGREE: u32 = 6;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum EpwError {
    #[error("entry ({0}, {1}) has a denominator divisible by p")]
    BadDenominator(usize, usize),
    #[error("reduction drops the rank to {0}")]
    RankCollapse(usize),
    #[error("reduced basis is not isotropic")]
    NotIsotropic,
    #[error("chart {0} out of range 1..=6")]
    BadChart(usize),
    #[error("determinant vanishes identically")]
    DegenerateDeterminant,
    #[error("x{chart}^{expected} does not divide the determinant (valuation {valuation})")]
    NotDivisible { chart: usize, expected: u32, valuation: u32 },
    #[error("expected a 20x10 basis, got {0}x{1}")]
    Shape(usize, usize),
    #[error(transparent)]
    Arith(#[from] ArithError),
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    Groebner(#[from] GroebnerError),
}

/// Residue of every entry; checks rank 10 and isotropy mod `p`.
pub fn reduce_lagrangian(b: &LagrangianBasis, map: &ReductionMap) -> Result<FpMatrix, EpwError> {
    let field = map.field();
    let m = b.basis.try_map(&field, |x| map.reduce(x)).map_err(|_| {
        let bad = (0..b.basis.rows() * b.basis.cols())
            .find(|&k| map.reduce(b.basis.get(k / b.basis.cols(), k % b.basis.cols())).is_err())
            .unwrap_or(0);
        EpwError::BadDenominator(bad / b.basis.cols(), bad % b.basis.cols())
    })?;
    check_lagrangian(&m)?;
    Ok(m)
}

/// Rank 10 and `Bᵀ ω B = 0`.
pub fn check_lagrangian(m: &FpMatrix) -> Result<(), EpwError> {
    if m.rows() != WEDGE3_DIM || m.cols() != LAGRANGIAN_DIM {
        return Err(EpwError::Shape(m.rows(), m.cols()));
    }
    let rank = m.rank();
    if rank != LAGRANGIAN_DIM {
        return Err(EpwError::RankCollapse(rank));
    }
    if !m.transpose().mul(&symplectic_gram(m.field())).mul(m).is_zero() {
        return Err(EpwError::NotIsotropic);
    }
    Ok(())
}

/// `F_v = v ∧ ∧²V`, the 10-dimensional subspace of forms killed by `v`.
pub fn fiber_lagrangian(field: &PrimeField, v: &[u32]) -> FpMatrix {
    let mut cols = Vec::new();
    for i in 0..DIM {
        for j in i + 1..DIM {
            let mut w = vec![0u32; WEDGE3_DIM];
            for (m, &x) in v.iter().enumerate() {
                if let Some((pos, s)) = TripleBasisIndex::wedge(m, i, j) {
                    w[pos] = field.add(w[pos], field.mul(x, field.from_i64(s as i64)));
                }
            }
            cols.push(w);
        }
    }
    // 15 spanning vectors; keep an independent set
    let all = Matrix::from_columns(field, WEDGE3_DIM, &cols);
    let kr = all.kernel_and_rank();
    Matrix::from_columns(field, WEDGE3_DIM, &kr.pivots.iter().map(|&p| cols[p].clone()).collect::<Vec<_>>())
}

/// `dim (A ∩ B)` for subspaces given by column spans.
pub fn intersection_dim(a: &FpMatrix, b: &FpMatrix) -> usize {
    a.rank() + b.rank() - a.hstack(b).rank()
}

/// The 10 column index pairs `i < j` avoiding the (0-based) chart variable.
pub fn chart_pairs(chart: usize) -> Vec<(usize, usize)> {
    let rest: Vec<usize> = (0..DIM).filter(|&i| i != chart).collect();
    let mut out = Vec::new();
    for (k, &i) in rest.iter().enumerate() {
        for &j in &rest[k + 1..] {
            out.push((i, j));
        }
    }
    out
}

/// Linear-form matrix `(k, (i, j)) ↦ ω(a_k, v ∧ e_i ∧ e_j)` on the chart `x_c ≠ 0`.
#[derive(Clone, Debug)]
pub struct ChartMatrix {
    /// 1-based.
    pub chart: usize,
    pub matrix: PolyMatrix,
}

impl ChartMatrix {
    pub fn eval(&self, v: &[u32]) -> FpMatrix {
        self.matrix.eval(v)
    }
}

/// Ring `F_p[x1..x6]`, grevlex.
pub fn sextic_ring(field: PrimeField) -> PolyRing {
    PolyRing::new(field, DIM, MonomialOrder::Grevlex).expect("six variables")
}

pub fn chart_matrix(a: &FpMatrix, chart: usize) -> Result<ChartMatrix, EpwError> {
    if !(1..=DIM).contains(&chart) {
        return Err(EpwError::BadChart(chart));
    }
    let field = *a.field();
    let ring = sextic_ring(field);
    // rows of aᵀ ω
    let pa = a.transpose().mul(&symplectic_gram(&field));
    let pairs = chart_pairs(chart - 1);
    let matrix = PolyMatrix::from_fn(&ring, LAGRANGIAN_DIM, pairs.len(), |k, col| {
        let (i, j) = pairs[col];
        let coeffs: Vec<u32> = (0..DIM)
            .map(|m| match TripleBasisIndex::wedge(m, i, j) {
                Some((pos, s)) => field.mul(*pa.get(k, pos), field.from_i64(s as i64)),
                None => 0,
            })
            .collect();
        ring.linear_form(&coeffs)
    });
    Ok(ChartMatrix { chart, matrix })
}

/// Scales so the coefficient of the lex-largest monomial is 1.
pub fn normalize(f: &MultiPoly) -> MultiPoly {
    let lex = MonomialOrder::Lex;
    match f.terms().iter().max_by(|a, b| lex.cmp(a.0, b.0)) {
        None => f.clone(),
        Some(&(_, c)) => f.scale(f.ring().field.inv(c).expect("nonzero")),
    }
}

/// `λ` with `g = λ f`, if it exists and is nonzero.
pub fn proportionality(f: &MultiPoly, g: &MultiPoly) -> Option<u32> {
    let (&(m, a), field) = (f.terms().first()?, f.ring().field);
    let lambda = field.mul(g.coefficient(m), field.inv(a)?);
    (lambda != 0 && f.scale(lambda) == *g).then_some(lambda)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Sextic {
    pub chart: usize,
    /// Exact order of `x_c` in the determinant.
    pub valuation: u32,
    pub determinant_degree: u32,
    pub poly: MultiPoly,
}

/// `det(chart matrix) / x_c⁴`, normalized.
pub fn epw_sextic(a: &FpMatrix, chart: usize, alg: DetAlgorithm) -> Result<Sextic, EpwError> {
    let cm = chart_matrix(a, chart)?;
    let d = det_poly_matrix(&cm.matrix, alg)?;
    if d.is_zero() {
        return Err(EpwError::DegenerateDeterminant);
    }
    let ring = *d.ring();
    let c = chart - 1;
    let valuation = d.variable_valuation(c);
    let divisor = ring.term(Monomial::var(c).with_exponent(c, CHART_VALUATION).expect("small"), 1);
    let f = d.exact_divide(&divisor).map_err(|_| EpwError::NotDivisible {
        chart,
        expected: CHART_VALUATION,
        valuation,
    })?;
    Ok(Sextic { chart, valuation, determinant_degree: d.degree().unwrap_or(0), poly: normalize(&f) })
}

/// `λ` with `f(g·v) = λ f(v)`, if any.
pub fn equivariance_scalar(f: &MultiPoly, g: &FpMatrix) -> Option<u32> {
    let rows: Vec<Vec<u32>> = (0..g.rows()).map(|i| g.row(i).to_vec()).collect();
    proportionality(f, &f.substitute_linear(&rows))
}

/// `span{e_T : 1 ∈ T} = F_{e_1}`, spanned by decomposable vectors.
pub fn control_lagrangian(field: &PrimeField) -> FpMatrix {
    let cols: Vec<Vec<u32>> = (0..WEDGE3_DIM)
        .filter(|&t| TripleBasisIndex::triples()[t][0] == 0)
        .map(|t| (0..WEDGE3_DIM).map(|s| u32::from(s == t)).collect())
        .collect();
    Matrix::from_columns(field, WEDGE3_DIM, &cols)
}

/// Entrywise residue of a cyclotomic matrix.
pub fn reduce_matrix(m: &Matrix<crate::arith::CyclotomicField>, map: &ReductionMap) -> Result<FpMatrix, EpwError> {
    Ok(m.try_map(&map.field(), |x| map.reduce(x))?)
}
