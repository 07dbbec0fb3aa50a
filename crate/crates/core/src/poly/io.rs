//! Text form `3*x1^2*x4 + 1*x2 + 5` (terms in descending order, coefficients in `[0, p)`)
//! and a JSON exponent-vector form.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::arith::PrimeField;

use super::monomial::{Monomial, MonomialOrder, MAX_DEGREE};
use super::multipoly::{MultiPoly, PolyRing};
use super::PolyError;

/// Longest text accepted by [`parse_poly`].
pub const MAX_TEXT: usize = 1 << 24;

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let n = self.ring().nvars;
        for (k, &(m, c)) in self.terms().iter().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{c}")?;
            for i in 0..n {
                match m.exponent(i) {
                    0 => {}
                    1 => write!(f, "*x{}", i + 1)?,
                    e => write!(f, "*x{}^{e}", i + 1)?,
                }
            }
        }
        Ok(())
    }
}

fn parse_uint(s: &str, what: &str) -> Result<u64, PolyError> {
    if s.is_empty() || s.len() > 19 || !s.bytes().all(|b| b.is_ascii_digit()) {
        return Err(PolyError::Parse(format!("bad {what} {s:?}")));
    }
    s.parse().map_err(|_| PolyError::Parse(format!("bad {what} {s:?}")))
}

fn parse_term(ring: &PolyRing, text: &str, negative: bool) -> Result<(Monomial, u32), PolyError> {
    let f = ring.field;
    let mut coeff = if negative { f.neg(1) } else { 1 };
    let mut exps = vec![0u32; ring.nvars];
    for factor in text.split('*') {
        let factor = factor.trim();
        if let Some(var) = factor.strip_prefix('x') {
            let (idx, e) = match var.split_once('^') {
                Some((i, e)) => (parse_uint(i.trim(), "variable")?, parse_uint(e.trim(), "exponent")?),
                None => (parse_uint(var.trim(), "variable")?, 1),
            };
            if idx == 0 || idx > ring.nvars as u64 {
                return Err(PolyError::Parse(format!("variable x{idx} outside ring")));
            }
            let slot = &mut exps[idx as usize - 1];
            *slot = slot
                .checked_add(u32::try_from(e).unwrap_or(u32::MAX))
                .filter(|&v| v <= MAX_DEGREE)
                .ok_or_else(|| PolyError::Parse("exponent too large".into()))?;
        } else {
            let c = parse_uint(factor, "coefficient")?;
            coeff = f.mul(coeff, (c % f.modulus() as u64) as u32);
        }
    }
    let m = Monomial::from_exponents(&exps).ok_or_else(|| PolyError::Parse("degree too large".into()))?;
    Ok((m, coeff))
}

/// Accepts the [`Display`](fmt::Display) form and, more loosely, `-` separators, implicit
/// unit coefficients and factors in any order.
pub fn parse_poly(ring: &PolyRing, text: &str) -> Result<MultiPoly, PolyError> {
    if text.len() > MAX_TEXT {
        return Err(PolyError::Parse("text too long".into()));
    }
    let t = text.trim();
    if t.is_empty() {
        return Err(PolyError::Parse("empty polynomial".into()));
    }
    let mut terms = Vec::new();
    let mut negative = false;
    let mut start = 0;
    let bytes = t.as_bytes();
    let mut push = |s: &str, neg: bool| -> Result<(), PolyError> {
        let s = s.trim();
        if s.is_empty() {
            return Err(PolyError::Parse("empty term".into()));
        }
        terms.push(parse_term(ring, s, neg)?);
        Ok(())
    };
    let mut i = 0;
    // a leading sign belongs to the first term
    if matches!(bytes.first(), Some(b'-') | Some(b'+')) {
        negative = bytes[0] == b'-';
        i = 1;
        start = 1;
    }
    while i < bytes.len() {
        if (bytes[i] == b'+' || bytes[i] == b'-') && i > start && bytes[i - 1] != b'^' {
            push(&t[start..i], negative)?;
            negative = bytes[i] == b'-';
            start = i + 1;
        }
        i += 1;
    }
    push(&t[start..], negative)?;
    Ok(ring.from_terms(terms))
}

/// JSON form: `{"p": 127, "nvars": 6, "order": "grevlex", "terms": [[c, [e1, ..]], ..]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolyFile {
    pub p: u32,
    pub nvars: usize,
    pub order: String,
    pub terms: Vec<(u32, Vec<u32>)>,
}

impl PolyFile {
    pub fn from_poly(f: &MultiPoly) -> Self {
        let r = f.ring();
        PolyFile {
            p: r.p(),
            nvars: r.nvars,
            order: r.order.name(),
            terms: f.terms().iter().map(|&(m, c)| (c, m.exponents(r.nvars))).collect(),
        }
    }

    pub fn ring(&self) -> Result<PolyRing, PolyError> {
        let field = PrimeField::new(self.p).map_err(|e| PolyError::Parse(e.to_string()))?;
        let order =
            MonomialOrder::parse(&self.order).ok_or_else(|| PolyError::Parse(format!("order {:?}", self.order)))?;
        PolyRing::new(field, self.nvars, order)
    }

    pub fn to_poly(&self) -> Result<MultiPoly, PolyError> {
        let ring = self.ring()?;
        let mut terms = Vec::with_capacity(self.terms.len());
        for (c, e) in &self.terms {
            if *c >= ring.p() {
                return Err(PolyError::Parse(format!("coefficient {c} not reduced")));
            }
            if e.len() != ring.nvars {
                return Err(PolyError::Parse("exponent vector length".into()));
            }
            if e.iter().any(|&x| x > MAX_DEGREE) {
                return Err(PolyError::Parse("degree too large".into()));
            }
            let m = Monomial::from_exponents(e).ok_or_else(|| PolyError::Parse("degree too large".into()))?;
            terms.push((m, *c));
        }
        Ok(ring.from_terms(terms))
    }
}

pub fn poly_to_json(f: &MultiPoly) -> String {
    serde_json::to_string(&PolyFile::from_poly(f)).expect("serializes")
}

pub fn poly_from_json(text: &str) -> Result<MultiPoly, PolyError> {
    let file: PolyFile = serde_json::from_str(text).map_err(|e| PolyError::Parse(e.to_string()))?;
    file.to_poly()
}
