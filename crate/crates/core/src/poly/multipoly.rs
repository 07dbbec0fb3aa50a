//! Sparse multivariate polynomials over `F_p`.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::arith::PrimeField;

use super::monomial::{Monomial, MonomialOrder, MAX_VARS};
use super::PolyError;

/// Coefficient field, number of variables and monomial order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PolyRing {
    pub field: PrimeField,
    pub nvars: usize,
    pub order: MonomialOrder,
}

impl PolyRing {
    pub fn new(field: PrimeField, nvars: usize, order: MonomialOrder) -> Result<Self, PolyError> {
        if nvars == 0 || nvars > MAX_VARS {
            return Err(PolyError::TooManyVariables(nvars));
        }
        if let MonomialOrder::Elimination(k) = order {
            if k > nvars {
                return Err(PolyError::Parse(format!("elimination block {k} exceeds {nvars} variables")));
            }
        }
        Ok(PolyRing { field, nvars, order })
    }

    /// `F_p[x1..x6]` with grevlex.
    pub fn standard(p: u32) -> Result<Self, PolyError> {
        let field = PrimeField::new(p).map_err(|e| PolyError::Parse(e.to_string()))?;
        Self::new(field, 6, MonomialOrder::Grevlex)
    }

    pub fn p(&self) -> u32 {
        self.field.modulus()
    }

    pub fn with_order(self, order: MonomialOrder) -> Self {
        PolyRing { order, ..self }
    }

    pub fn with_nvars(self, nvars: usize) -> Result<Self, PolyError> {
        PolyRing::new(self.field, nvars, self.order)
    }

    pub fn zero(&self) -> MultiPoly {
        MultiPoly { ring: *self, terms: Vec::new() }
    }

    pub fn constant(&self, c: u32) -> MultiPoly {
        self.term(Monomial::ONE, c)
    }

    pub fn one(&self) -> MultiPoly {
        self.constant(1)
    }

    pub fn var(&self, i: usize) -> MultiPoly {
        assert!(i < self.nvars, "variable x{} outside ring", i + 1);
        self.term(Monomial::var(i), 1)
    }

    pub fn term(&self, m: Monomial, c: u32) -> MultiPoly {
        let c = c % self.p();
        let terms = if c == 0 { Vec::new() } else { vec![(m, c)] };
        MultiPoly { ring: *self, terms }
    }

    /// `sum_i coeffs[i] * x_i`.
    pub fn linear_form(&self, coeffs: &[u32]) -> MultiPoly {
        self.from_terms(coeffs.iter().enumerate().map(|(i, &c)| (Monomial::var(i), c)).collect())
    }

    /// Sorts, merges equal monomials and drops zero coefficients.
    pub fn from_terms(&self, mut terms: Vec<(Monomial, u32)>) -> MultiPoly {
        let f = self.field;
        let order = self.order;
        terms.sort_by(|a, b| order.cmp(b.0, a.0));
        let mut out: Vec<(Monomial, u32)> = Vec::with_capacity(terms.len());
        for (m, c) in terms {
            let c = c % f.modulus();
            match out.last_mut() {
                Some(last) if last.0 == m => last.1 = f.add(last.1, c),
                _ => out.push((m, c)),
            }
        }
        out.retain(|t| t.1 != 0);
        MultiPoly { ring: *self, terms: out }
    }

    fn from_map(&self, map: HashMap<Monomial, u64>) -> MultiPoly {
        let p = self.p() as u64;
        let terms = map.into_iter().map(|(m, c)| (m, (c % p) as u32)).collect();
        self.from_terms(terms)
    }
}

/// Terms are kept sorted strictly descending under the ring's order, with nonzero coefficients.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MultiPoly {
    ring: PolyRing,
    terms: Vec<(Monomial, u32)>,
}

impl MultiPoly {
    pub fn ring(&self) -> &PolyRing {
        &self.ring
    }

    pub fn terms(&self) -> &[(Monomial, u32)] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<(Monomial, u32)> {
        self.terms
    }

    /// Trusts that `terms` are already sorted, merged and nonzero.
    pub(crate) fn from_sorted(ring: PolyRing, terms: Vec<(Monomial, u32)>) -> Self {
        debug_assert!(terms.windows(2).all(|w| ring.order.cmp(w[0].0, w[1].0) == Ordering::Greater));
        debug_assert!(terms.iter().all(|t| t.1 != 0 && t.1 < ring.p()));
        MultiPoly { ring, terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|t| t.0 == Monomial::ONE)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn leading_monomial(&self) -> Option<Monomial> {
        self.terms.first().map(|t| t.0)
    }

    pub fn leading_coefficient(&self) -> Option<u32> {
        self.terms.first().map(|t| t.1)
    }

    /// Total degree; `None` for zero.
    pub fn degree(&self) -> Option<u32> {
        self.terms.iter().map(|t| t.0.degree()).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        self.homogeneous_degree().is_some() || self.is_zero()
    }

    /// The common degree of all terms, if there is one.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let d = self.terms.first()?.0.degree();
        self.terms.iter().all(|t| t.0.degree() == d).then_some(d)
    }

    pub fn coefficient(&self, m: Monomial) -> u32 {
        self.terms.iter().find(|t| t.0 == m).map_or(0, |t| t.1)
    }

    fn check_ring(&self, other: &Self) {
        assert_eq!(self.ring, other.ring, "polynomials from different rings");
    }

    pub fn scale(&self, c: u32) -> Self {
        let f = self.ring.field;
        let c = c % f.modulus();
        if c == 0 {
            return self.ring.zero();
        }
        MultiPoly { ring: self.ring, terms: self.terms.iter().map(|&(m, a)| (m, f.mul(a, c))).collect() }
    }

    /// Divide by the leading coefficient.
    pub fn monic(&self) -> Self {
        match self.leading_coefficient() {
            None => self.clone(),
            Some(c) => self.scale(self.ring.field.inv(c).expect("nonzero")),
        }
    }

    /// `c * m * self`.
    pub fn mul_term(&self, m: Monomial, c: u32) -> Self {
        let f = self.ring.field;
        let c = c % f.modulus();
        if c == 0 {
            return self.ring.zero();
        }
        MultiPoly { ring: self.ring, terms: self.terms.iter().map(|&(t, a)| (t.mul(m), f.mul(a, c))).collect() }
    }

    fn merge(&self, other: &Self, negate: bool) -> Self {
        self.check_ring(other);
        let f = self.ring.field;
        let order = self.ring.order;
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        let b = |c: u32| if negate { f.neg(c) } else { c };
        while i < self.terms.len() && j < other.terms.len() {
            let (ma, ca) = self.terms[i];
            let (mb, cb) = other.terms[j];
            match order.cmp(ma, mb) {
                Ordering::Greater => {
                    out.push((ma, ca));
                    i += 1;
                }
                Ordering::Less => {
                    out.push((mb, b(cb)));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = f.add(ca, b(cb));
                    if c != 0 {
                        out.push((ma, c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.terms[i..]);
        out.extend(other.terms[j..].iter().map(|&(m, c)| (m, b(c))));
        MultiPoly { ring: self.ring, terms: out }
    }

    pub fn add(&self, other: &Self) -> Self {
        self.merge(other, false)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.merge(other, true)
    }

    pub fn neg(&self) -> Self {
        let f = self.ring.field;
        MultiPoly { ring: self.ring, terms: self.terms.iter().map(|&(m, c)| (m, f.neg(c))).collect() }
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.check_ring(other);
        if self.is_zero() || other.is_zero() {
            return self.ring.zero();
        }
        let (small, big) = if self.len() <= other.len() { (self, other) } else { (other, self) };
        if small.len() == 1 {
            let (m, c) = small.terms[0];
            return big.mul_term(m, c);
        }
        let p = self.ring.p() as u64;
        let mut acc: HashMap<Monomial, u64> = HashMap::with_capacity(self.len() * other.len() / 2 + 1);
        for &(ma, ca) in &small.terms {
            for &(mb, cb) in &big.terms {
                let e = acc.entry(ma.mul(mb)).or_insert(0);
                *e = (*e + ca as u64 * cb as u64) % p;
            }
        }
        self.ring.from_map(acc)
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = self.ring.one();
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// `d/dx_i`.
    pub fn derivative(&self, i: usize) -> Self {
        let f = self.ring.field;
        let terms = self
            .terms
            .iter()
            .filter_map(|&(m, c)| {
                let e = m.exponent(i);
                if e == 0 {
                    return None;
                }
                let c = f.mul(c, e % f.modulus());
                (c != 0).then(|| (m.with_exponent(i, e - 1).expect("lower degree"), c))
            })
            .collect();
        self.ring.from_terms(terms)
    }

    pub fn eval(&self, point: &[u32]) -> u32 {
        assert!(point.len() >= self.ring.nvars);
        let f = self.ring.field;
        let n = self.ring.nvars;
        let maxdeg = self.degree().unwrap_or(0) as usize;
        // powers[i][e] = point[i]^e
        let powers: Vec<Vec<u32>> = (0..n)
            .map(|i| {
                let mut v = Vec::with_capacity(maxdeg + 1);
                let mut acc = 1u32;
                for _ in 0..=maxdeg {
                    v.push(acc);
                    acc = f.mul(acc, point[i] % f.modulus());
                }
                v
            })
            .collect();
        self.terms.iter().fold(0u32, |acc, &(m, c)| {
            let mut t = c;
            for (i, pw) in powers.iter().enumerate() {
                let e = m.exponent(i) as usize;
                if e > 0 {
                    t = f.mul(t, pw[e]);
                }
            }
            f.add(acc, t)
        })
    }

    /// Substitute `x_i -> sum_j a[i][j] x_j`.
    pub fn substitute_linear(&self, a: &[Vec<u32>]) -> Self {
        let n = self.ring.nvars;
        assert_eq!(a.len(), n);
        let maxdeg = self.degree().unwrap_or(0);
        let forms: Vec<MultiPoly> = a.iter().map(|row| self.ring.linear_form(row)).collect();
        let powers: Vec<Vec<MultiPoly>> = forms
            .iter()
            .map(|l| {
                let mut v = vec![self.ring.one()];
                for k in 0..maxdeg as usize {
                    let next = v[k].mul(l);
                    v.push(next);
                }
                v
            })
            .collect();
        let mut out = self.ring.zero();
        for &(m, c) in &self.terms {
            let mut t = self.ring.constant(c);
            for (i, pw) in powers.iter().enumerate() {
                let e = m.exponent(i) as usize;
                if e > 0 {
                    t = t.mul(&pw[e]);
                }
            }
            out = out.add(&t);
        }
        out
    }

    /// Multivariate division by one polynomial: `self = q * g + r` where no term of `r` is
    /// divisible by the leading monomial of `g`.
    pub fn div_rem(&self, g: &Self) -> (Self, Self) {
        self.check_ring(g);
        let (lm, lc) = g.terms.first().copied().expect("division by zero polynomial");
        let f = self.ring.field;
        let lc_inv = f.inv(lc).expect("nonzero");
        if g.len() == 1 {
            let (q, r): (Vec<_>, Vec<_>) = self.terms.iter().partition(|t| lm.divides(t.0));
            let q = q.into_iter().map(|(m, c)| (lm.quotient_of(m), f.mul(c, lc_inv))).collect();
            return (MultiPoly::from_sorted(self.ring, q), MultiPoly::from_sorted(self.ring, r));
        }
        let mut q = Vec::new();
        let mut r = Vec::new();
        let mut cur = self.clone();
        while let Some(&(m, c)) = cur.terms.first() {
            if lm.divides(m) {
                let s = lm.quotient_of(m);
                let k = f.mul(c, lc_inv);
                q.push((s, k));
                cur = cur.sub(&g.mul_term(s, k));
            } else {
                r.push((m, c));
                cur.terms.remove(0);
            }
        }
        (MultiPoly::from_sorted(self.ring, q), MultiPoly::from_sorted(self.ring, r))
    }

    /// `q` with `self = q * g`, or the nonzero remainder as witness.
    pub fn exact_divide(&self, g: &Self) -> Result<Self, PolyError> {
        if g.is_zero() {
            return Err(PolyError::DivisionByZero);
        }
        let (q, r) = self.div_rem(g);
        if r.is_zero() {
            Ok(q)
        } else {
            Err(PolyError::NotDivisible { remainder: r.to_string() })
        }
    }

    /// Reinterpret in another ring with at least as many variables (re-sorting terms).
    pub fn into_ring(&self, ring: &PolyRing) -> Result<Self, PolyError> {
        if ring.field != self.ring.field {
            return Err(PolyError::RingMismatch);
        }
        if self.terms.iter().any(|t| t.0.support_len() > ring.nvars) {
            return Err(PolyError::RingMismatch);
        }
        Ok(ring.from_terms(self.terms.clone()))
    }

    /// Largest `k` such that `x_i^k` divides every term.
    pub fn variable_valuation(&self, i: usize) -> u32 {
        self.terms.iter().map(|t| t.0.exponent(i)).min().unwrap_or(0)
    }
}

impl fmt::Debug for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl Add for &MultiPoly {
    type Output = MultiPoly;
    fn add(self, rhs: &MultiPoly) -> MultiPoly {
        MultiPoly::add(self, rhs)
    }
}

impl Sub for &MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: &MultiPoly) -> MultiPoly {
        MultiPoly::sub(self, rhs)
    }
}

impl Mul for &MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: &MultiPoly) -> MultiPoly {
        MultiPoly::mul(self, rhs)
    }
}

impl Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        MultiPoly::neg(self)
    }
}

/// The six partial derivatives.
pub fn jacobian_generators(f: &MultiPoly) -> Vec<MultiPoly> {
    (0..f.ring().nvars).map(|i| f.derivative(i)).collect()
}
