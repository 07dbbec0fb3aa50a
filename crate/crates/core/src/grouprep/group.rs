//! Breadth-first enumeration of a finitely generated matrix group over `Q(zeta_21)`,
//! its center, the central quotient and conjugacy classes of the quotient.

use std::collections::{HashMap, VecDeque};

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::arith::{CyclotomicField, CyclotomicNumber};
use crate::linalg::{Matrix, MatrixFile};

use super::words::Word;
use super::GroupError;

type QMatrix = Matrix<CyclotomicField>;

/// Enumeration stops with an error beyond this many elements.
pub const DEFAULT_ELEMENT_BOUND: usize = 20_000;

/// The two generators of `3.A7` in `GL_6`, with `xi = zeta_21^7`.
pub fn generators() -> [QMatrix; 2] {
    let q = CyclotomicField;
    let xi = CyclotomicNumber::xi3();
    let xi2 = &xi * &xi;
    let n = |v: i64| CyclotomicNumber::from_int(v);
    let one = n(1);
    let alpha = vec![
        vec![n(1), n(0), n(0), n(0), n(0), n(0)],
        vec![n(0), xi2, n(0), n(0), n(0), n(0)],
        vec![n(0), n(0), n(1), n(0), n(0), n(0)],
        vec![n(0), n(0), n(0), n(0), n(0), n(1)],
        vec![&xi - &one, n(0), &one - &xi, -&xi, xi.clone(), n(1)],
        vec![n(2), n(0), n(-1), n(-1), n(0), n(-1)],
    ];
    let beta = vec![
        vec![n(0), n(1), n(0), n(0), n(0), n(0)],
        vec![n(0), n(0), n(1), n(0), n(0), n(0)],
        vec![n(0), n(0), n(0), n(1), n(0), n(0)],
        vec![n(0), n(0), n(0), n(0), n(1), n(0)],
        vec![n(1), n(0), n(0), n(0), n(0), n(0)],
        vec![n(-1), n(1), -&xi, n(0), xi.clone(), n(1)],
    ];
    [Matrix::from_rows(&q, alpha), Matrix::from_rows(&q, beta)]
}

/// A conjugacy class of the central quotient.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassInfo {
    /// Quotient indices of the members, ascending.
    pub members: Vec<usize>,
    /// Column of the character table whose representative word lies in this class.
    pub column: Option<usize>,
}

impl ClassInfo {
    pub fn size(&self) -> usize {
        self.members.len()
    }
}

#[derive(Clone, Debug)]
pub struct GroupData {
    pub generators: Vec<QMatrix>,
    inverses: Vec<QMatrix>,
    pub elements: Vec<QMatrix>,
    index: HashMap<QMatrix, usize>,
    /// BFS tree: element `i > 0` is `elements[parent[i].0] * generators[parent[i].1]`.
    parent: Vec<(usize, usize)>,
    /// Indices of the scalar elements.
    pub center: Vec<usize>,
    /// Quotient index of every element.
    pub quotient_of: Vec<usize>,
    /// Canonical element of each coset of the center.
    pub quotient_reps: Vec<usize>,
    /// Empty until [`GroupData::class_partition`] has run.
    pub classes: Vec<ClassInfo>,
}

fn is_scalar(m: &QMatrix) -> bool {
    let d = m.get(0, 0);
    (0..m.rows()).all(|r| (0..m.cols()).all(|c| if r == c { m.get(r, c) == d } else { m.get(r, c).is_zero() }))
}

/// Ordering key of a matrix: numerators and denominator of its first nonzero entry.
fn first_entry_key(m: &QMatrix) -> (Vec<num_bigint::BigInt>, num_bigint::BigInt) {
    let e = m.entries().iter().find(|e| !e.is_zero()).expect("invertible matrix");
    (e.numerators().to_vec(), e.denominator())
}

fn root_of_unity(x: &CyclotomicNumber) -> bool {
    // roots of unity in Q(zeta_21) have order dividing 42
    x.pow(42).is_one()
}

pub fn enumerate_group(gens: &[QMatrix], bound: usize) -> Result<GroupData, GroupError> {
    let q = CyclotomicField;
    let mut inverses = Vec::with_capacity(gens.len());
    for (i, g) in gens.iter().enumerate() {
        if g.rows() != g.cols() {
            return Err(GroupError::BadGenerator(i));
        }
        if !root_of_unity(&g.determinant()) {
            return Err(GroupError::NonUnitDeterminant(i));
        }
        inverses.push(g.inverse().ok_or(GroupError::BadGenerator(i))?);
    }
    let n = gens.first().map_or(6, |g| g.rows());
    let id = Matrix::identity(&q, n);
    let mut elements = vec![id.clone()];
    let mut parent = vec![(0, 0)];
    let mut index = HashMap::from([(id, 0usize)]);
    let mut queue = VecDeque::from([0usize]);
    while let Some(i) = queue.pop_front() {
        for (k, g) in gens.iter().enumerate() {
            let prod = elements[i].mul(g);
            if index.contains_key(&prod) {
                continue;
            }
            if elements.len() >= bound {
                return Err(GroupError::ExplosionGuard(bound));
            }
            index.insert(prod.clone(), elements.len());
            queue.push_back(elements.len());
            elements.push(prod);
            parent.push((i, k));
        }
    }
    let center: Vec<usize> = (0..elements.len()).filter(|&i| is_scalar(&elements[i])).collect();

    let mut quotient_of = vec![usize::MAX; elements.len()];
    let mut quotient_reps = Vec::new();
    for i in 0..elements.len() {
        if quotient_of[i] != usize::MAX {
            continue;
        }
        let coset: Vec<usize> = center.iter().map(|&z| index[&elements[z].mul(&elements[i])]).collect();
        let rep = *coset.iter().min_by_key(|&&j| first_entry_key(&elements[j])).expect("nonempty center");
        for &j in &coset {
            quotient_of[j] = quotient_reps.len();
        }
        quotient_reps.push(rep);
    }

    Ok(GroupData {
        generators: gens.to_vec(),
        inverses,
        elements,
        index,
        parent,
        center,
        quotient_of,
        quotient_reps,
        classes: Vec::new(),
    })
}

impl GroupData {
    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn quotient_order(&self) -> usize {
        self.quotient_reps.len()
    }

    pub fn lookup(&self, m: &QMatrix) -> Option<usize> {
        self.index.get(m).copied()
    }

    /// Product of generator powers; `ab` is `alpha * beta`.
    pub fn eval_word(&self, w: &Word) -> Result<QMatrix, GroupError> {
        let n = self.elements[0].rows();
        let mut acc = Matrix::identity(&CyclotomicField, n);
        for &(g, e) in &w.syllables {
            let m = if e >= 0 { self.generators.get(g) } else { self.inverses.get(g) };
            let m = m.ok_or_else(|| GroupError::BadWord(w.to_string()))?;
            for _ in 0..e.unsigned_abs() {
                acc = acc.mul(m);
            }
        }
        Ok(acc)
    }

    pub fn word_index(&self, w: &Word) -> Result<usize, GroupError> {
        let m = self.eval_word(w)?;
        self.lookup(&m).ok_or_else(|| GroupError::UnknownElement(w.to_string()))
    }

    /// Multiplicative order of an element.
    pub fn element_order(&self, i: usize) -> usize {
        let g = &self.elements[i];
        let mut acc = g.clone();
        let mut k = 1;
        while self.lookup(&acc) != Some(0) {
            acc = acc.mul(g);
            k += 1;
        }
        k
    }

    /// Partition the central quotient into conjugacy classes (orbits under conjugation by
    /// the generators) and attach each column word to the class containing it.
    pub fn class_partition(mut self, column_words: &[&str]) -> Result<GroupData, GroupError> {
        let m = self.quotient_order();
        let mut class_of = vec![usize::MAX; m];
        let mut classes: Vec<ClassInfo> = Vec::new();
        for start in 0..m {
            if class_of[start] != usize::MAX {
                continue;
            }
            let id = classes.len();
            class_of[start] = id;
            let mut members = vec![start];
            let mut stack = vec![start];
            while let Some(x) = stack.pop() {
                let xm = &self.elements[self.quotient_reps[x]];
                for (g, gi) in self.generators.iter().zip(&self.inverses) {
                    let y = g.mul(xm).mul(gi);
                    let yq = self.quotient_of[self.index[&y]];
                    if class_of[yq] == usize::MAX {
                        class_of[yq] = id;
                        members.push(yq);
                        stack.push(yq);
                    }
                }
            }
            members.sort_unstable();
            classes.push(ClassInfo { members, column: None });
        }
        let mut used = Vec::new();
        for (col, w) in column_words.iter().enumerate() {
            let w = Word::parse(w)?;
            let c = class_of[self.quotient_of[self.word_index(&w)?]];
            if !used.contains(&c) {
                used.push(c);
                classes[c].column = Some(col);
            }
        }
        if used.len() != column_words.len() || classes.len() != column_words.len() {
            return Err(GroupError::ColumnMismatch(used.len(), column_words.len()));
        }
        classes.sort_by_key(|c| c.column);
        self.classes = classes;
        Ok(self)
    }

    /// Sizes of the classes in column order.
    pub fn class_sizes(&self) -> Vec<usize> {
        self.classes.iter().map(ClassInfo::size).collect()
    }

    /// Column of the class of an element.
    pub fn column_of(&self, i: usize) -> Option<usize> {
        let q = self.quotient_of[i];
        self.classes.iter().find(|c| c.members.binary_search(&q).is_ok()).and_then(|c| c.column)
    }

    /// All element indices whose image in the quotient lies in the class at `column`.
    pub fn lift_of_column(&self, column: usize) -> Vec<usize> {
        let class = self.classes.iter().find(|c| c.column == Some(column)).expect("column assigned");
        (0..self.order()).filter(|&i| class.members.binary_search(&self.quotient_of[i]).is_ok()).collect()
    }

    pub fn to_cache(&self) -> GroupCache {
        GroupCache {
            generator_hash: generator_hash(&self.generators),
            parent: self.parent.clone(),
            classes: self.classes.clone(),
        }
    }

    /// Rebuild from a cache entry by replaying the BFS tree.
    pub fn from_cache(gens: &[QMatrix], cache: &GroupCache) -> Result<GroupData, GroupError> {
        if cache.generator_hash != generator_hash(gens) {
            return Err(GroupError::Cache("generator hash mismatch".into()));
        }
        let g = enumerate_group(gens, cache.parent.len().max(1) + 1)?;
        if g.parent != cache.parent {
            return Err(GroupError::Cache("BFS tree differs".into()));
        }
        let m = g.quotient_order();
        let mut seen = vec![false; m];
        for c in &cache.classes {
            for &x in &c.members {
                if x >= m || std::mem::replace(&mut seen[x], true) {
                    return Err(GroupError::Cache("classes do not partition the quotient".into()));
                }
            }
        }
        if seen.iter().any(|s| !s) {
            return Err(GroupError::Cache("classes do not cover the quotient".into()));
        }
        Ok(GroupData { classes: cache.classes.clone(), ..g })
    }
}

/// Serializable summary of an enumeration; element matrices are recomputed on load.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupCache {
    pub generator_hash: String,
    pub parent: Vec<(usize, usize)>,
    pub classes: Vec<ClassInfo>,
}

/// SHA-256 over the JSON encoding of the generators.
pub fn generator_hash(gens: &[QMatrix]) -> String {
    let mut h = Sha256::new();
    for g in gens {
        h.update(MatrixFile::from_cyclotomic(g, None).to_json().as_bytes());
    }
    hex::encode(h.finalize())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trivial_and_cyclic_groups() {
        let q = CyclotomicField;
        let g = enumerate_group(&[Matrix::identity(&q, 6)], 10).unwrap();
        assert_eq!(g.order(), 1);
        let xi = Matrix::identity(&q, 6).scale(&CyclotomicNumber::xi3());
        let g = enumerate_group(&[xi], 10).unwrap();
        assert_eq!(g.order(), 3);
        assert_eq!(g.center.len(), 3);
        assert_eq!(g.quotient_order(), 1);
    }

    #[test]
    fn guards() {
        let q = CyclotomicField;
        let two = Matrix::identity(&q, 2).scale(&CyclotomicNumber::from_int(2));
        assert_eq!(enumerate_group(&[two], 100).unwrap_err(), GroupError::NonUnitDeterminant(0));
        let [a, b] = generators();
        assert_eq!(enumerate_group(&[a, b], 100).unwrap_err(), GroupError::ExplosionGuard(100));
    }
}
