//! Hilbert series of monomial ideals, and projective dimension and degree read off from them.

use serde::{Deserialize, Serialize};

use crate::poly::{Monomial, MAX_VARS};

use super::buchberger::GroebnerBasis;
use super::GroebnerError;

/// `HS(t) = numerator(t) / (1 - t)^nvars`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HilbertData {
    pub nvars: usize,
    /// Coefficients of the numerator, ascending powers of `t`.
    pub numerator: Vec<i64>,
    pub krull_dimension: i64,
    /// Dimension of the projective zero locus; `-1` when it is empty.
    pub projective_dimension: i64,
    /// Leading coefficient of the Hilbert polynomial times `dim!`; 0 for the unit ideal.
    pub degree: i64,
}

impl HilbertData {
    pub fn is_empty_locus(&self) -> bool {
        self.projective_dimension < 0
    }

    /// Hilbert function values `H(0..=up_to)` from the series.
    pub fn hilbert_function(&self, up_to: usize) -> Vec<i64> {
        // expand numerator / (1-t)^n as a power series
        let mut series = vec![0i64; up_to + 1];
        for (i, &c) in self.numerator.iter().enumerate().take(up_to + 1) {
            series[i] = c;
        }
        for _ in 0..self.nvars {
            for k in 1..=up_to {
                series[k] += series[k - 1];
            }
        }
        series
    }
}

fn poly_mul(a: &[i64], b: &[i64]) -> Vec<i64> {
    let mut out = vec![0i64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

fn poly_add(a: &mut Vec<i64>, b: &[i64], shift: usize) {
    if a.len() < b.len() + shift {
        a.resize(b.len() + shift, 0);
    }
    for (i, &y) in b.iter().enumerate() {
        a[i + shift] += y;
    }
}

fn trim(mut v: Vec<i64>) -> Vec<i64> {
    while v.len() > 1 && *v.last().unwrap() == 0 {
        v.pop();
    }
    v
}

fn minimize(mut gens: Vec<Monomial>) -> Vec<Monomial> {
    gens.sort_by_key(|m| (m.degree(), *m));
    gens.dedup();
    let mut out: Vec<Monomial> = Vec::with_capacity(gens.len());
    for m in gens {
        if !out.iter().any(|g| g.divides(m)) {
            out.push(m);
        }
    }
    out
}

/// Numerator of the Hilbert series of `S / (gens)`, by pivoting on a variable power:
/// `N(I) = N(I + (p)) + t^deg(p) N(I : p)`.
pub fn monomial_numerator(gens: &[Monomial]) -> Vec<i64> {
    numerator_rec(minimize(gens.to_vec()))
}

fn numerator_rec(gens: Vec<Monomial>) -> Vec<i64> {
    if gens.is_empty() {
        return vec![1];
    }
    if gens.iter().any(|m| *m == Monomial::ONE) {
        return vec![0];
    }
    let pairwise_coprime = gens.iter().enumerate().all(|(i, a)| gens[i + 1..].iter().all(|b| a.coprime(*b)));
    if pairwise_coprime {
        return trim(gens.iter().fold(vec![1], |acc, m| {
            let mut f = vec![0i64; m.degree() as usize + 1];
            f[0] = 1;
            f[m.degree() as usize] -= 1;
            poly_mul(&acc, &f)
        }));
    }
    // pivot: the variable occurring in most generators, to the exponent it has in some
    // non-pure-power generator; such a power never lies in a minimal ideal
    let mut count = [0usize; MAX_VARS];
    for m in &gens {
        for (v, c) in count.iter_mut().enumerate() {
            if m.exponent(v) > 0 {
                *c += 1;
            }
        }
    }
    let mixed = gens.iter().find(|m| (0..MAX_VARS).filter(|&v| m.exponent(v) > 0).count() > 1).expect("mixed");
    let var = (0..MAX_VARS).filter(|&v| mixed.exponent(v) > 0).max_by_key(|&v| (count[v], std::cmp::Reverse(v))).unwrap();
    let e = mixed.exponent(var);
    let pivot = Monomial::ONE.with_exponent(var, e).expect("small");

    let mut plus = gens.clone();
    plus.push(pivot);
    let left = numerator_rec(minimize(plus));
    let quotient: Vec<Monomial> = gens
        .iter()
        .map(|m| m.with_exponent(var, m.exponent(var).saturating_sub(e)).expect("smaller"))
        .collect();
    let right = numerator_rec(minimize(quotient));
    let mut out = left;
    poly_add(&mut out, &right, e as usize);
    trim(out)
}

/// Dimension and degree from a numerator over `(1-t)^nvars`.
pub fn hilbert_from_numerator(nvars: usize, numerator: Vec<i64>) -> HilbertData {
    if numerator.iter().all(|&c| c == 0) {
        return HilbertData { nvars, numerator, krull_dimension: -1, projective_dimension: -1, degree: 0 };
    }
    let mut q = numerator.clone();
    let mut k = 0usize;
    // divide by (1 - t) while t = 1 is a root
    while q.iter().sum::<i64>() == 0 && k < nvars {
        // q(t) = (1 - t) r(t): r_i = sum_{j <= i} q_j
        let mut r = Vec::with_capacity(q.len() - 1);
        let mut acc = 0;
        for &c in &q[..q.len() - 1] {
            acc += c;
            r.push(acc);
        }
        q = trim(r);
        k += 1;
    }
    let krull = (nvars - k) as i64;
    HilbertData { nvars, numerator, krull_dimension: krull, projective_dimension: krull - 1, degree: q.iter().sum() }
}

/// Hilbert data of the ideal with this Gröbner basis (via its leading monomial ideal).
pub fn hilbert_data(gb: &GroebnerBasis) -> Result<HilbertData, GroebnerError> {
    if gb.basis.iter().any(|g| !g.is_homogeneous()) {
        return Err(GroebnerError::NotHomogeneous);
    }
    Ok(hilbert_from_numerator(gb.ring.nvars, monomial_numerator(&gb.leading_monomials())))
}
