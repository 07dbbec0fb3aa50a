//! The third exterior power of a six-dimensional space.
//!
//! Basis vectors `e_T` are indexed by the 20 triples `T = {i < j < k}` of `{0..5}` in
//! lexicographic order. Human-facing output uses 1-based labels (`e_123` is index 0).

use crate::arith::Field;

use super::Matrix;

pub const DIM: usize = 6;
pub const WEDGE3_DIM: usize = 20;

/// The fixed ordered basis of triples.
#[derive(Clone, Copy, Debug)]
pub struct TripleBasisIndex;

const fn build_triples() -> [[usize; 3]; WEDGE3_DIM] {
    let mut out = [[0usize; 3]; WEDGE3_DIM];
    let mut n = 0;
    let mut i = 0;
    while i < DIM {
        let mut j = i + 1;
        while j < DIM {
            let mut k = j + 1;
            while k < DIM {
                out[n] = [i, j, k];
                n += 1;
                k += 1;
            }
            j += 1;
        }
        i += 1;
    }
    out
}

pub const TRIPLES: [[usize; 3]; WEDGE3_DIM] = build_triples();

impl TripleBasisIndex {
    pub fn triples() -> &'static [[usize; 3]; WEDGE3_DIM] {
        &TRIPLES
    }

    /// Position of a sorted triple.
    pub fn position(t: [usize; 3]) -> usize {
        TRIPLES.iter().position(|&x| x == t).expect("sorted triple of distinct indices < 6")
    }

    /// `e_a ^ e_b ^ e_c = sign * e_T`; `None` if two indices coincide.
    pub fn wedge(a: usize, b: usize, c: usize) -> Option<(usize, i8)> {
        if a == b || b == c || a == c {
            return None;
        }
        let mut t = [a, b, c];
        let sign = permutation_sign_sort(&mut t);
        Some((Self::position(t), sign))
    }

    /// 1-based label such as `"124"`.
    pub fn label(pos: usize) -> String {
        TRIPLES[pos].iter().map(|i| char::from(b'1' + *i as u8)).collect()
    }
}

/// Sorts in place and returns the sign of the sorting permutation.
fn permutation_sign_sort(v: &mut [usize]) -> i8 {
    let mut sign = 1i8;
    for i in 0..v.len() {
        for j in 0..v.len() - 1 - i {
            if v[j] > v[j + 1] {
                v.swap(j, j + 1);
                sign = -sign;
            }
        }
    }
    sign
}

/// `vol(e_S ^ e_T)`: zero unless `S` and `T` are disjoint, else the sign of `(S, T)`.
pub fn symplectic_pairing(s: usize, t: usize) -> i8 {
    let (a, b) = (TRIPLES[s], TRIPLES[t]);
    if a.iter().any(|x| b.contains(x)) {
        return 0;
    }
    let mut perm = [a[0], a[1], a[2], b[0], b[1], b[2]];
    permutation_sign_sort(&mut perm)
}

/// Gram matrix of the volume pairing on the triple basis.
pub fn symplectic_gram<F: Field>(field: &F) -> Matrix<F> {
    Matrix::from_fn(field, WEDGE3_DIM, WEDGE3_DIM, |s, t| {
        field.from_i64(symplectic_pairing(s, t) as i64)
    })
}

/// `omega(u, w)` for coordinate vectors on the triple basis.
pub fn symplectic_form<F: Field>(field: &F, u: &[F::Elem], w: &[F::Elem]) -> F::Elem {
    let mut acc = field.zero();
    for s in 0..WEDGE3_DIM {
        if field.is_zero(&u[s]) {
            continue;
        }
        // the partner of s is its complement
        let comp: Vec<usize> = (0..DIM).filter(|i| !TRIPLES[s].contains(i)).collect();
        let t = TripleBasisIndex::position([comp[0], comp[1], comp[2]]);
        if field.is_zero(&w[t]) {
            continue;
        }
        let term = field.mul(&u[s], &w[t]);
        acc = if symplectic_pairing(s, t) > 0 { field.add(&acc, &term) } else { field.sub(&acc, &term) };
    }
    acc
}

fn det3<F: Field>(f: &F, g: &Matrix<F>, r: [usize; 3], c: [usize; 3]) -> F::Elem {
    let e = |i: usize, j: usize| g.get(r[i], c[j]);
    let term = |a: (usize, usize), b: (usize, usize), d: (usize, usize)| {
        let x = e(a.0, a.1);
        let y = e(b.0, b.1);
        let z = e(d.0, d.1);
        if f.is_zero(x) || f.is_zero(y) || f.is_zero(z) {
            None
        } else {
            Some(f.mul(&f.mul(x, y), z))
        }
    };
    let mut acc = f.zero();
    for (pos, sign) in [
        ([(0, 0), (1, 1), (2, 2)], true),
        ([(0, 1), (1, 2), (2, 0)], true),
        ([(0, 2), (1, 0), (2, 1)], true),
        ([(0, 2), (1, 1), (2, 0)], false),
        ([(0, 0), (1, 2), (2, 1)], false),
        ([(0, 1), (1, 0), (2, 2)], false),
    ] {
        if let Some(t) = term(pos[0], pos[1], pos[2]) {
            acc = if sign { f.add(&acc, &t) } else { f.sub(&acc, &t) };
        }
    }
    acc
}

/// The induced map on the third exterior power: entry `(S, T)` is the 3x3 minor of `g`
/// with rows `S` and columns `T`.
pub fn wedge_cube<F: Field>(g: &Matrix<F>) -> Matrix<F> {
    assert!(g.rows() == DIM && g.cols() == DIM, "wedge_cube expects a 6x6 matrix");
    let f = g.field();
    Matrix::from_fn(f, WEDGE3_DIM, WEDGE3_DIM, |s, t| det3(f, g, TRIPLES[s], TRIPLES[t]))
}

/// Coordinates of `x ^ y ^ z` on the triple basis.
pub fn wedge_vectors<F: Field>(field: &F, x: &[F::Elem], y: &[F::Elem], z: &[F::Elem]) -> Vec<F::Elem> {
    let cols: Vec<Vec<F::Elem>> = vec![x.to_vec(), y.to_vec(), z.to_vec()];
    let m = Matrix::from_fn(field, DIM, 3, |r, c| cols[c][r].clone());
    TRIPLES.iter().map(|s| det3(field, &m, *s, [0, 1, 2])).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::PrimeField;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn pos(label: &str) -> usize {
        let v: Vec<usize> = label.bytes().map(|b| (b - b'1') as usize).collect();
        TripleBasisIndex::position([v[0], v[1], v[2]])
    }

    #[test]
    fn triple_order() {
        assert_eq!(TRIPLES[0], [0, 1, 2]);
        assert_eq!(TRIPLES[19], [3, 4, 5]);
        assert_eq!(TripleBasisIndex::label(1), "124");
        assert_eq!(TripleBasisIndex::wedge(2, 1, 0), Some((0, -1)));
        assert_eq!(TripleBasisIndex::wedge(1, 1, 0), None);
    }

    #[test]
    fn gram_examples() {
        assert_eq!(symplectic_pairing(pos("123"), pos("456")), 1);
        assert_eq!(symplectic_pairing(pos("124"), pos("356")), -1);
        assert_eq!(symplectic_pairing(pos("123"), pos("145")), 0);
        let f = PrimeField::new(127).unwrap();
        let w = symplectic_gram(&f);
        let neg = w.map(&f, |x| f.neg(*x));
        assert_eq!(w.transpose(), neg);
        assert_eq!(w.rank(), 20);
        let d = w.determinant();
        assert!(d == 1 || d == 126);
    }

    #[test]
    fn wedge_cube_examples() {
        let f = PrimeField::new(127).unwrap();
        assert_eq!(wedge_cube(&Matrix::identity(&f, 6)), Matrix::identity(&f, 20));
        let d = [2u32, 3, 5, 7, 11, 13];
        let g = Matrix::from_fn(&f, 6, 6, |r, c| if r == c { d[r] } else { 0 });
        let w = wedge_cube(&g);
        for (s, t) in TRIPLES.iter().enumerate() {
            for u in 0..20 {
                let expect = if u == s { f.mul(f.mul(d[t[0]], d[t[1]]), d[t[2]]) } else { 0 };
                assert_eq!(*w.get(s, u), expect);
            }
        }
    }

    fn random6(f: &PrimeField, rng: &mut ChaCha8Rng) -> Matrix<PrimeField> {
        Matrix::from_fn(f, 6, 6, |_, _| rng.gen_range(0..127))
    }

    #[test]
    fn functorial_and_symplectic_similitude() {
        let f = PrimeField::new(127).unwrap();
        let omega = symplectic_gram(&f);
        let mut rng = ChaCha8Rng::seed_from_u64(99);
        for _ in 0..20 {
            let g = random6(&f, &mut rng);
            let h = random6(&f, &mut rng);
            assert_eq!(wedge_cube(&g.mul(&h)), wedge_cube(&g).mul(&wedge_cube(&h)));
            let phi = wedge_cube(&g);
            let lhs = phi.transpose().mul(&omega).mul(&phi);
            assert_eq!(lhs, omega.scale(&g.determinant()));
        }
    }

    #[test]
    fn wedge_vectors_matches_basis() {
        let f = PrimeField::new(127).unwrap();
        let e = |i: usize| (0..6).map(|j| u32::from(i == j)).collect::<Vec<_>>();
        let v = wedge_vectors(&f, &e(1), &e(0), &e(2));
        assert_eq!(v[0], 126);
        assert!(v[1..].iter().all(|&x| x == 0));
        let a: Vec<u32> = (0..20).map(|i| i as u32 + 1).collect();
        let b: Vec<u32> = (0..20).map(|i| (i * i) as u32 % 127).collect();
        let gram = symplectic_gram(&f);
        let direct = gram.mul_vec(&b).iter().zip(&a).fold(0, |acc, (x, y)| f.add(acc, f.mul(*x, *y)));
        assert_eq!(symplectic_form(&f, &a, &b), direct);
    }
}
