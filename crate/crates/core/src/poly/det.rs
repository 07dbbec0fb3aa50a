//! Matrices of polynomials: determinants and minors.
//!
//! Two determinant algorithms are available. `Laplace` expands along rows with memoization
//! over column subsets. `Interpolation` evaluates scalar determinants on a simplex grid of
//! points and recovers the coefficients by Newton divided differences, one variable at a time.

use std::collections::{HashMap, HashSet};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::arith::PrimeField;
use crate::linalg::Matrix;

use super::monomial::Monomial;
use super::multipoly::{MultiPoly, PolyRing};
use super::PolyError;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum DetAlgorithm {
    Laplace,
    #[default]
    Interpolation,
}

/// Largest size accepted by the subset recursion.
pub const MAX_DET_SIZE: usize = 12;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyMatrix {
    ring: PolyRing,
    rows: usize,
    cols: usize,
    entries: Vec<MultiPoly>,
}

impl PolyMatrix {
    pub fn from_fn(ring: &PolyRing, rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> MultiPoly) -> Self {
        let entries = (0..rows * cols).map(|k| f(k / cols, k % cols)).collect::<Vec<_>>();
        assert!(entries.iter().all(|e| e.ring() == ring));
        PolyMatrix { ring: *ring, rows, cols, entries }
    }

    pub fn ring(&self) -> &PolyRing {
        &self.ring
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &MultiPoly {
        &self.entries[r * self.cols + c]
    }

    pub fn entries(&self) -> &[MultiPoly] {
        &self.entries
    }

    pub fn select(&self, rows: &[usize], cols: &[usize]) -> Self {
        PolyMatrix::from_fn(&self.ring, rows.len(), cols.len(), |r, c| self.get(rows[r], cols[c]).clone())
    }

    pub fn eval(&self, point: &[u32]) -> Matrix<PrimeField> {
        Matrix::from_entries(&self.ring.field, self.rows, self.cols, self.entries.iter().map(|e| e.eval(point)).collect())
    }

    /// Common degree of all nonzero entries, if they are all homogeneous of one degree.
    pub fn uniform_degree(&self) -> Option<u32> {
        let mut deg = None;
        for e in self.entries.iter().filter(|e| !e.is_zero()) {
            let d = e.homogeneous_degree()?;
            if *deg.get_or_insert(d) != d {
                return None;
            }
        }
        Some(deg.unwrap_or(0))
    }

    /// Bound on the total degree of any `k x k` minor.
    fn degree_bound(&self, k: usize) -> u32 {
        let mut row_max: Vec<u32> =
            (0..self.rows).map(|r| (0..self.cols).filter_map(|c| self.get(r, c).degree()).max().unwrap_or(0)).collect();
        row_max.sort_unstable_by(|a, b| b.cmp(a));
        row_max.iter().take(k).sum()
    }
}

/// `det(M)`.
pub fn det_poly_matrix(m: &PolyMatrix, alg: DetAlgorithm) -> Result<MultiPoly, PolyError> {
    if m.rows != m.cols {
        return Err(PolyError::Shape(format!("{}x{} matrix has no determinant", m.rows, m.cols)));
    }
    if m.rows > MAX_DET_SIZE {
        return Err(PolyError::Shape(format!("{0}x{0} exceeds the supported size", m.rows)));
    }
    let all: Vec<usize> = (0..m.rows).collect();
    match alg {
        DetAlgorithm::Laplace => Ok(laplace_minors(m, &all, m.rows).remove(&full_mask(m.cols)).unwrap_or_else(|| m.ring.zero())),
        DetAlgorithm::Interpolation => {
            let mut out = interpolate_minors(m, &[(all.clone(), all)])?;
            Ok(out.pop().expect("one minor"))
        }
    }
}

fn full_mask(n: usize) -> u32 {
    ((1u64 << n) - 1) as u32
}

/// Determinants of `rows` (in order) against every column subset of size `k`, keyed by
/// column bitmask. Expansion along the last row of each prefix.
fn laplace_minors(m: &PolyMatrix, rows: &[usize], k: usize) -> HashMap<u32, MultiPoly> {
    let mut stage: HashMap<u32, MultiPoly> = HashMap::from([(0u32, m.ring.one())]);
    for (depth, &r) in rows.iter().take(k).enumerate() {
        let masks: Vec<u32> = (0..(1u32 << m.cols)).filter(|s| s.count_ones() as usize == depth + 1).collect();
        let next: Vec<(u32, MultiPoly)> = masks
            .par_iter()
            .map(|&s| {
                let mut acc = m.ring.zero();
                let mut pos = 0;
                for j in 0..m.cols {
                    if s & (1 << j) == 0 {
                        continue;
                    }
                    let e = m.get(r, j);
                    if let (false, Some(sub)) = (e.is_zero(), stage.get(&(s & !(1 << j)))) {
                        let t = e.mul(sub);
                        acc = if (depth + pos) % 2 == 0 { acc.add(&t) } else { acc.sub(&t) };
                    }
                    pos += 1;
                }
                (s, acc)
            })
            .filter(|(_, p)| !p.is_zero())
            .collect();
        stage = next.into_iter().collect();
    }
    stage
}

/// All `k x k` minors, deduplicated, zeros dropped, in order of first appearance
/// (row subsets lexicographic, then column subsets lexicographic).
pub fn minors(m: &PolyMatrix, k: usize, alg: DetAlgorithm) -> Result<Vec<MultiPoly>, PolyError> {
    if k == 0 || k > m.rows.min(m.cols) || k > MAX_DET_SIZE {
        return Err(PolyError::Shape(format!("no {k}x{k} minors of a {}x{} matrix", m.rows, m.cols)));
    }
    let row_sets = subsets(m.rows, k);
    let col_sets = subsets(m.cols, k);
    let all: Vec<Option<MultiPoly>> = match alg {
        DetAlgorithm::Laplace => row_sets
            .par_iter()
            .flat_map_iter(|rs| {
                let table = laplace_minors(m, rs, k);
                col_sets.iter().map(move |cs| table.get(&cs.iter().fold(0u32, |a, &c| a | (1 << c))).cloned()).collect::<Vec<_>>()
            })
            .collect(),
        DetAlgorithm::Interpolation => {
            let pairs: Vec<(Vec<usize>, Vec<usize>)> = row_sets
                .iter()
                .flat_map(|rs| col_sets.iter().map(move |cs| (rs.clone(), cs.clone())))
                .collect();
            interpolate_minors(m, &pairs)?.into_iter().map(Some).collect()
        }
    };
    let mut seen = HashSet::new();
    Ok(all.into_iter().flatten().filter(|p| !p.is_zero() && seen.insert(p.clone())).collect())
}

/// Index subsets of `{0..n}` of size `k`, lexicographic.
pub fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, k, &mut Vec::new(), &mut out);
    out
}

/// Interpolation grid for polynomials of total degree at most `degree` in `nvars` variables:
/// the points `(alpha_1, .., alpha_n)` with `|alpha| <= degree`.
pub struct SimplexInterpolator {
    field: PrimeField,
    degree: u32,
    monomials: Vec<Monomial>,
    /// For each variable, the lines of grid indices parallel to its axis, by increasing exponent.
    lines: Vec<Vec<Vec<usize>>>,
}

impl SimplexInterpolator {
    pub fn new(field: PrimeField, nvars: usize, degree: u32) -> Result<Self, PolyError> {
        if degree >= field.modulus() {
            return Err(PolyError::Shape(format!("degree {degree} needs more than p nodes")));
        }
        let mut monomials = Vec::new();
        let mut cur = vec![0u32; nvars];
        fn go(i: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Monomial>) {
            if i == cur.len() {
                out.push(Monomial::from_exponents(cur).expect("small"));
                return;
            }
            for e in 0..=left {
                cur[i] = e;
                go(i + 1, left - e, cur, out);
            }
            cur[i] = 0;
        }
        go(0, degree, &mut cur, &mut monomials);
        let index: HashMap<Monomial, usize> = monomials.iter().enumerate().map(|(i, m)| (*m, i)).collect();
        let lines = (0..nvars)
            .map(|v| {
                monomials
                    .iter()
                    .filter(|m| m.exponent(v) == 0)
                    .map(|m| {
                        let len = degree - m.degree();
                        (0..=len).map(|e| index[&m.with_exponent(v, e).expect("small")]).collect()
                    })
                    .collect()
            })
            .collect();
        Ok(SimplexInterpolator { field, degree, monomials, lines })
    }

    pub fn len(&self) -> usize {
        self.monomials.len()
    }

    pub fn is_empty(&self) -> bool {
        self.monomials.is_empty()
    }

    /// Grid point `i`; node `j` on each axis is the residue `j`.
    pub fn point(&self, i: usize) -> Vec<u32> {
        let n = self.lines.len();
        self.monomials[i].exponents(n)
    }

    /// Monomial coefficients of the unique polynomial of degree at most `degree` taking
    /// `values[i]` at `point(i)`.
    pub fn interpolate(&self, values: &[u32]) -> Vec<(Monomial, u32)> {
        assert_eq!(values.len(), self.len());
        let f = self.field;
        let inv: Vec<u32> = (0..=self.degree).map(|k| f.inv(k).unwrap_or(0)).collect();
        let mut c = values.to_vec();
        let mut buf = Vec::with_capacity(self.degree as usize + 1);
        // Newton coefficients: divided differences along every axis, nodes 0, 1, 2, ..
        for lines in &self.lines {
            for line in lines {
                buf.clear();
                buf.extend(line.iter().map(|&i| c[i]));
                for k in 1..buf.len() {
                    for j in (k..buf.len()).rev() {
                        buf[j] = f.mul(f.sub(buf[j], buf[j - 1]), inv[k]);
                    }
                }
                for (slot, &i) in line.iter().enumerate() {
                    c[i] = buf[slot];
                }
            }
        }
        // Newton basis prod_{j<k} (x - j) to monomials, Horner from the top
        for lines in &self.lines {
            for line in lines {
                let len = line.len();
                let mut mono = vec![0u32; len];
                for k in (0..len).rev() {
                    for e in (1..len).rev() {
                        mono[e] = f.sub(mono[e - 1], f.mul(mono[e], k as u32));
                    }
                    mono[0] = f.sub(c[line[k]], f.mul(mono[0], k as u32));
                }
                for (slot, &i) in line.iter().enumerate() {
                    c[i] = mono[slot];
                }
            }
        }
        self.monomials.iter().zip(c).filter(|(_, v)| *v != 0).map(|(m, v)| (*m, v)).collect()
    }
}

/// Determinants of the given `(rows, cols)` submatrices by evaluation and interpolation,
/// sharing the evaluations of `m` across all of them.
fn interpolate_minors(m: &PolyMatrix, pairs: &[(Vec<usize>, Vec<usize>)]) -> Result<Vec<MultiPoly>, PolyError> {
    let ring = m.ring;
    let f = ring.field;
    let k = pairs.first().map_or(0, |p| p.0.len());
    let homogeneous = m.uniform_degree();
    let (vars, degree) = match homogeneous {
        // dehomogenize at the last variable when every minor is homogeneous of degree k*e
        Some(e) if ring.nvars > 1 => (ring.nvars - 1, e * k as u32),
        _ => (ring.nvars, m.degree_bound(k)),
    };
    let grid = SimplexInterpolator::new(f, vars, degree)?;
    // values[point][pair]
    let values: Vec<Vec<u32>> = (0..grid.len())
        .into_par_iter()
        .map(|i| {
            let mut pt = grid.point(i);
            pt.resize(ring.nvars, 1);
            let full = m.eval(&pt);
            pairs.iter().map(|(r, c)| full.select(r, c).determinant()).collect()
        })
        .collect();
    let polys = (0..pairs.len())
        .into_par_iter()
        .map(|j| {
            let column: Vec<u32> = values.iter().map(|row| row[j]).collect();
            let terms = grid.interpolate(&column);
            let terms = match homogeneous {
                Some(_) if ring.nvars > 1 => terms
                    .into_iter()
                    .map(|(mo, c)| (mo.with_exponent(ring.nvars - 1, degree - mo.degree()).expect("small"), c))
                    .collect(),
                _ => terms,
            };
            ring.from_terms(terms)
        })
        .collect();
    Ok(polys)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn ring() -> PolyRing {
        PolyRing::standard(127).unwrap()
    }

    fn random_linear(r: &PolyRing, rng: &mut ChaCha8Rng) -> MultiPoly {
        let c: Vec<u32> = (0..r.nvars).map(|_| rng.gen_range(0..127)).collect();
        r.linear_form(&c)
    }

    #[test]
    fn interpolator_recovers_polynomials() {
        let f = PrimeField::new(127).unwrap();
        let r = PolyRing::new(f, 3, super::super::MonomialOrder::Grevlex).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let g = (0..4).fold(r.one(), |acc, _| acc.mul(&random_linear(&r, &mut rng).add(&r.constant(rng.gen_range(0..127)))));
        let grid = SimplexInterpolator::new(f, 3, 4).unwrap();
        assert_eq!(grid.len(), 35);
        let vals: Vec<u32> = (0..grid.len()).map(|i| g.eval(&grid.point(i))).collect();
        assert_eq!(r.from_terms(grid.interpolate(&vals)), g);
    }

    #[test]
    fn diagonal_and_repeated_rows() {
        let r = ring();
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        let ls: Vec<MultiPoly> = (0..5).map(|_| random_linear(&r, &mut rng)).collect();
        let m = PolyMatrix::from_fn(&r, 5, 5, |i, j| if i == j { ls[i].clone() } else { r.zero() });
        let prod = ls.iter().fold(r.one(), |a, b| a.mul(b));
        for alg in [DetAlgorithm::Laplace, DetAlgorithm::Interpolation] {
            assert_eq!(det_poly_matrix(&m, alg).unwrap(), prod);
        }
        let rows: Vec<MultiPoly> = (0..4).map(|_| random_linear(&r, &mut rng)).collect();
        let m = PolyMatrix::from_fn(&r, 4, 4, |i, j| {
            let i = if i == 3 { 0 } else { i };
            rows[i].mul_term(Monomial::ONE, (j + 1) as u32).add(&r.var(j).scale(i as u32))
        });
        for alg in [DetAlgorithm::Laplace, DetAlgorithm::Interpolation] {
            assert!(det_poly_matrix(&m, alg).unwrap().is_zero());
        }
    }

    /// Independent oracle: interpolation over the full simplex in all six variables, with
    /// scalar determinants, against the memoized expansion.
    #[test]
    fn random_linear_4x4_against_interpolation_oracle() {
        let r = ring();
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..3 {
            let m = PolyMatrix::from_fn(&r, 4, 4, |_, _| random_linear(&r, &mut rng));
            let laplace = det_poly_matrix(&m, DetAlgorithm::Laplace).unwrap();
            let grid = SimplexInterpolator::new(r.field, 6, 4).unwrap();
            assert_eq!(grid.len(), 210);
            let vals: Vec<u32> = (0..grid.len()).map(|i| m.eval(&grid.point(i)).determinant()).collect();
            assert_eq!(r.from_terms(grid.interpolate(&vals)), laplace);
            assert_eq!(det_poly_matrix(&m, DetAlgorithm::Interpolation).unwrap(), laplace);
            assert_eq!(laplace.homogeneous_degree(), Some(4));
        }
    }

    #[test]
    fn non_homogeneous_entries() {
        let r = ring();
        let mut rng = ChaCha8Rng::seed_from_u64(4);
        let m = PolyMatrix::from_fn(&r, 3, 3, |i, j| {
            random_linear(&r, &mut rng).pow((i + j) as u32 % 3).add(&r.constant(rng.gen_range(0..127)))
        });
        let a = det_poly_matrix(&m, DetAlgorithm::Laplace).unwrap();
        let b = det_poly_matrix(&m, DetAlgorithm::Interpolation).unwrap();
        assert_eq!(a, b);
        for _ in 0..20 {
            let pt: Vec<u32> = (0..6).map(|_| rng.gen_range(0..127)).collect();
            assert_eq!(a.eval(&pt), m.eval(&pt).determinant());
        }
    }

    #[test]
    fn minor_examples() {
        let r = ring();
        let m = PolyMatrix::from_fn(&r, 2, 2, |i, j| r.var(2 * i + j));
        let expect = r.var(0).mul(&r.var(3)).sub(&r.var(1).mul(&r.var(2)));
        for alg in [DetAlgorithm::Laplace, DetAlgorithm::Interpolation] {
            assert_eq!(minors(&m, 2, alg).unwrap(), vec![expect.clone()]);
        }
        assert_eq!(subsets(10, 8).len().pow(2), 2025);
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let m = PolyMatrix::from_fn(&r, 4, 5, |_, _| random_linear(&r, &mut rng));
        let a = minors(&m, 3, DetAlgorithm::Laplace).unwrap();
        let b = minors(&m, 3, DetAlgorithm::Interpolation).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.len(), 40);
        let sq = m.select(&[0, 1, 2, 3], &[0, 1, 2, 3]);
        assert_eq!(minors(&sq, 4, DetAlgorithm::Laplace).unwrap(), vec![det_poly_matrix(&sq, DetAlgorithm::Laplace).unwrap()]);
    }
}
