use std::fmt;

use crate::arith::Field;

/// Dense row-major matrix over a [`Field`] context.
#[derive(Clone)]
pub struct Matrix<F: Field> {
    field: F,
    rows: usize,
    cols: usize,
    entries: Vec<F::Elem>,
}

impl<F: Field> PartialEq for Matrix<F> {
    fn eq(&self, other: &Self) -> bool {
        self.rows == other.rows && self.cols == other.cols && self.entries == other.entries
    }
}

impl<F: Field> Eq for Matrix<F> {}

impl<F: Field> std::hash::Hash for Matrix<F> {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.rows.hash(state);
        self.cols.hash(state);
        self.entries.hash(state);
    }
}

impl<F: Field> fmt::Debug for Matrix<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for r in 0..self.rows {
            writeln!(f, "  {:?}", self.row(r))?;
        }
        write!(f, "]")
    }
}

/// Result of [`Matrix::kernel_and_rank`].
#[derive(Clone, Debug)]
pub struct KernelRank<F: Field> {
    pub rank: usize,
    /// Pivot column of each nonzero row of the echelon form.
    pub pivots: Vec<usize>,
    /// Kernel basis; each vector has a 1 at its free column and 0 at the other free columns.
    pub kernel: Vec<Vec<F::Elem>>,
}

impl<F: Field> Matrix<F> {
    pub fn zeros(field: &F, rows: usize, cols: usize) -> Self {
        Matrix { field: field.clone(), rows, cols, entries: vec![field.zero(); rows * cols] }
    }

    pub fn identity(field: &F, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.entries[i * n + i] = field.one();
        }
        m
    }

    pub fn from_entries(field: &F, rows: usize, cols: usize, entries: Vec<F::Elem>) -> Self {
        assert_eq!(entries.len(), rows * cols, "entry count does not match shape");
        Matrix { field: field.clone(), rows, cols, entries }
    }

    pub fn from_rows(field: &F, rows: Vec<Vec<F::Elem>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Matrix { field: field.clone(), rows: r, cols: c, entries: rows.into_iter().flatten().collect() }
    }

    pub fn from_fn(field: &F, rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> F::Elem) -> Self {
        let entries = (0..rows * cols).map(|k| f(k / cols, k % cols)).collect();
        Matrix { field: field.clone(), rows, cols, entries }
    }

    pub fn from_columns(field: &F, rows: usize, columns: &[Vec<F::Elem>]) -> Self {
        Self::from_fn(field, rows, columns.len(), |r, c| columns[c][r].clone())
    }

    #[inline]
    pub fn field(&self) -> &F {
        &self.field
    }
    #[inline]
    pub fn rows(&self) -> usize {
        self.rows
    }
    #[inline]
    pub fn cols(&self) -> usize {
        self.cols
    }
    #[inline]
    pub fn entries(&self) -> &[F::Elem] {
        &self.entries
    }
    #[inline]
    pub fn get(&self, r: usize, c: usize) -> &F::Elem {
        &self.entries[r * self.cols + c]
    }
    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: F::Elem) {
        self.entries[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[F::Elem] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vec<F::Elem> {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(&self.field, self.cols, self.rows, |r, c| self.get(c, r).clone())
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|e| self.field.is_zero(e))
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn map<G: Field>(&self, field: &G, f: impl Fn(&F::Elem) -> G::Elem) -> Matrix<G> {
        Matrix {
            field: field.clone(),
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(f).collect(),
        }
    }

    pub fn try_map<G: Field, E>(
        &self,
        field: &G,
        f: impl Fn(&F::Elem) -> Result<G::Elem, E>,
    ) -> Result<Matrix<G>, E> {
        let entries = self.entries.iter().map(f).collect::<Result<Vec<_>, E>>()?;
        Ok(Matrix { field: field.clone(), rows: self.rows, cols: self.cols, entries })
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let entries =
            self.entries.iter().zip(&other.entries).map(|(a, b)| self.field.add(a, b)).collect();
        Matrix { field: self.field.clone(), rows: self.rows, cols: self.cols, entries }
    }

    pub fn add_assign(&mut self, other: &Self) {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        for (a, b) in self.entries.iter_mut().zip(&other.entries) {
            if !self.field.is_zero(b) {
                *a = self.field.add(a, b);
            }
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let entries =
            self.entries.iter().zip(&other.entries).map(|(a, b)| self.field.sub(a, b)).collect();
        Matrix { field: self.field.clone(), rows: self.rows, cols: self.cols, entries }
    }

    pub fn scale(&self, s: &F::Elem) -> Self {
        let entries = self.entries.iter().map(|a| self.field.mul(a, s)).collect();
        Matrix { field: self.field.clone(), rows: self.rows, cols: self.cols, entries }
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "inner dimensions differ");
        let f = &self.field;
        let mut out = Self::zeros(f, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if f.is_zero(a) {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if f.is_zero(b) {
                        continue;
                    }
                    let idx = i * other.cols + j;
                    out.entries[idx] = f.add(&out.entries[idx], &f.mul(a, b));
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[F::Elem]) -> Vec<F::Elem> {
        assert_eq!(self.cols, v.len());
        let f = &self.field;
        (0..self.rows)
            .map(|i| {
                self.row(i).iter().zip(v).fold(f.zero(), |acc, (a, b)| {
                    if f.is_zero(a) || f.is_zero(b) {
                        acc
                    } else {
                        f.add(&acc, &f.mul(a, b))
                    }
                })
            })
            .collect()
    }

    pub fn trace(&self) -> F::Elem {
        assert!(self.is_square());
        (0..self.rows).fold(self.field.zero(), |acc, i| self.field.add(&acc, self.get(i, i)))
    }

    /// Submatrix with the given rows and columns, in the given order.
    pub fn select(&self, rows: &[usize], cols: &[usize]) -> Self {
        Self::from_fn(&self.field, rows.len(), cols.len(), |r, c| self.get(rows[r], cols[c]).clone())
    }

    pub fn hstack(&self, other: &Self) -> Self {
        assert_eq!(self.rows, other.rows);
        Self::from_fn(&self.field, self.rows, self.cols + other.cols, |r, c| {
            if c < self.cols {
                self.get(r, c).clone()
            } else {
                other.get(r, c - self.cols).clone()
            }
        })
    }

    pub fn vstack(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.cols);
        let mut entries = self.entries.clone();
        entries.extend(other.entries.iter().cloned());
        Matrix { field: self.field.clone(), rows: self.rows + other.rows, cols: self.cols, entries }
    }

    /// Row echelon form with deterministic pivoting (first nonzero entry in column scan order).
    ///
    /// Over fraction-free fields this is Bareiss elimination: every intermediate entry is a
    /// minor of the input. Returns the echelon matrix, pivot columns, and the determinant sign
    /// flips from row swaps.
    fn echelon(&self) -> (Self, Vec<usize>, bool) {
        let f = &self.field;
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut negate = false;
        let mut prev_inv = f.one();
        let mut row = 0;
        for col in 0..m.cols {
            if row == m.rows {
                break;
            }
            let Some(p) = (row..m.rows).find(|&r| !f.is_zero(m.get(r, col))) else {
                continue;
            };
            if p != row {
                for c in 0..m.cols {
                    m.entries.swap(p * m.cols + c, row * m.cols + c);
                }
                negate = !negate;
            }
            let piv = m.get(row, col).clone();
            if F::FRACTION_FREE {
                for r in row + 1..m.rows {
                    let lead = m.get(r, col).clone();
                    for c in col + 1..m.cols {
                        let a = f.mul(&piv, m.get(r, c));
                        let b = if f.is_zero(&lead) { f.zero() } else { f.mul(&lead, m.get(row, c)) };
                        let v = f.sub(&a, &b);
                        let v = if f.is_zero(&v) { v } else { f.mul(&v, &prev_inv) };
                        m.set(r, c, v);
                    }
                    m.set(r, col, f.zero());
                }
                prev_inv = f.inv(&piv).expect("pivot is nonzero");
            } else {
                let inv = f.inv(&piv).expect("pivot is nonzero");
                for r in row + 1..m.rows {
                    let lead = m.get(r, col).clone();
                    if f.is_zero(&lead) {
                        continue;
                    }
                    let factor = f.mul(&lead, &inv);
                    for c in col + 1..m.cols {
                        let b = m.get(row, c);
                        if f.is_zero(b) {
                            continue;
                        }
                        let v = f.sub(m.get(r, c), &f.mul(&factor, b));
                        m.set(r, c, v);
                    }
                    m.set(r, col, f.zero());
                }
            }
            pivots.push(col);
            row += 1;
        }
        (m, pivots, negate)
    }

    pub fn rank(&self) -> usize {
        self.echelon().1.len()
    }

    /// Exact determinant. Panics on non-square input.
    pub fn determinant(&self) -> F::Elem {
        assert!(self.is_square(), "determinant of a non-square matrix");
        let f = &self.field;
        let n = self.rows;
        if n == 0 {
            return f.one();
        }
        let (e, pivots, negate) = self.echelon();
        if pivots.len() < n {
            return f.zero();
        }
        let d = if F::FRACTION_FREE {
            // Bareiss: the last pivot is the determinant
            e.get(n - 1, n - 1).clone()
        } else {
            (0..n).fold(f.one(), |acc, i| f.mul(&acc, e.get(i, i)))
        };
        if negate {
            f.neg(&d)
        } else {
            d
        }
    }

    /// Rank and a kernel basis, by echelon form followed by back substitution.
    pub fn kernel_and_rank(&self) -> KernelRank<F> {
        let f = &self.field;
        let (e, pivots, _) = self.echelon();
        let rank = pivots.len();
        let is_pivot = {
            let mut v = vec![false; self.cols];
            for &p in &pivots {
                v[p] = true;
            }
            v
        };
        let mut kernel = Vec::with_capacity(self.cols - rank);
        for free in (0..self.cols).filter(|&c| !is_pivot[c]) {
            let mut v = vec![f.zero(); self.cols];
            v[free] = f.one();
            for (i, &pc) in pivots.iter().enumerate().rev() {
                // e[i][pc] * v[pc] + sum_{c > pc} e[i][c] v[c] = 0
                let mut s = f.zero();
                for c in pc + 1..self.cols {
                    let a = e.get(i, c);
                    if f.is_zero(a) || f.is_zero(&v[c]) {
                        continue;
                    }
                    s = f.add(&s, &f.mul(a, &v[c]));
                }
                if !f.is_zero(&s) {
                    v[pc] = f.neg(&f.div(&s, e.get(i, pc)).expect("pivot is nonzero"));
                }
            }
            kernel.push(v);
        }
        #[cfg(debug_assertions)]
        for v in &kernel {
            debug_assert!(self.mul_vec(v).iter().all(|x| f.is_zero(x)), "kernel vector check");
        }
        KernelRank { rank, pivots, kernel }
    }

    /// Inverse of a square matrix, `None` if singular.
    pub fn inverse(&self) -> Option<Self> {
        assert!(self.is_square());
        let n = self.rows;
        let f = &self.field;
        // Gauss-Jordan on [M | I]
        let mut a = self.hstack(&Self::identity(f, n));
        for col in 0..n {
            let p = (col..n).find(|&r| !f.is_zero(a.get(r, col)))?;
            if p != col {
                for c in 0..2 * n {
                    a.entries.swap(p * 2 * n + c, col * 2 * n + c);
                }
            }
            let inv = f.inv(a.get(col, col))?;
            for c in 0..2 * n {
                let v = f.mul(a.get(col, c), &inv);
                a.set(col, c, v);
            }
            for r in 0..n {
                if r == col {
                    continue;
                }
                let lead = a.get(r, col).clone();
                if f.is_zero(&lead) {
                    continue;
                }
                for c in 0..2 * n {
                    let b = a.get(col, c);
                    if f.is_zero(b) {
                        continue;
                    }
                    let v = f.sub(a.get(r, c), &f.mul(&lead, b));
                    a.set(r, c, v);
                }
            }
        }
        let cols: Vec<usize> = (n..2 * n).collect();
        let rows: Vec<usize> = (0..n).collect();
        Some(a.select(&rows, &cols))
    }
}
