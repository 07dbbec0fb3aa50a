//! Dense univariate integer polynomials, ascending coefficient order.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

/// Coefficients `c[0] + c[1] x + ...`, trailing zeros trimmed.
pub type IntPoly = Vec<BigInt>;

pub(crate) fn trim(p: &mut IntPoly) {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
}

#[cfg(test)]
pub(crate) fn mul(a: &[BigInt], b: &[BigInt]) -> IntPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(&mut out);
    out
}

/// Exact division by a monic polynomial. Returns `None` if the remainder is nonzero.
pub(crate) fn div_exact_monic(num: &[BigInt], den: &[BigInt]) -> Option<IntPoly> {
    let dd = den.len().checked_sub(1)?;
    assert!(den[dd].is_one(), "divisor must be monic");
    let mut rem: IntPoly = num.to_vec();
    trim(&mut rem);
    if rem.len() <= dd {
        return if rem.is_empty() { Some(Vec::new()) } else { None };
    }
    let mut quot = vec![BigInt::zero(); rem.len() - dd];
    for k in (dd..rem.len()).rev() {
        let c = rem[k].clone();
        if c.is_zero() {
            continue;
        }
        for (i, d) in den.iter().enumerate() {
            rem[k - dd + i] -= &c * d;
        }
        quot[k - dd] = c;
    }
    if rem.iter().any(|c| !c.is_zero()) {
        return None;
    }
    trim(&mut quot);
    Some(quot)
}

/// The `n`-th cyclotomic polynomial, obtained by dividing `x^n - 1` by `Phi_d` for every
/// proper divisor `d` of `n`.
pub fn cyclotomic_polynomial(n: u32) -> IntPoly {
    assert!(n >= 1, "cyclotomic index must be positive");
    let mut num: IntPoly = vec![BigInt::zero(); n as usize + 1];
    num[0] = BigInt::from(-1);
    num[n as usize] = BigInt::one();
    for d in 1..n {
        if n % d == 0 {
            let phi_d = cyclotomic_polynomial(d);
            num = div_exact_monic(&num, &phi_d).expect("x^n - 1 is divisible by Phi_d");
        }
    }
    num
}

/// Evaluate an integer polynomial modulo `p` (Horner).
pub fn eval_mod(poly: &[BigInt], x: u64, p: u64) -> u64 {
    let pb = BigInt::from(p);
    let mut acc: u64 = 0;
    for c in poly.iter().rev() {
        let c = c.mod_floor(&pb);
        let c: u64 = c.try_into().expect("residue fits in u64");
        acc = ((acc as u128 * x as u128 + c as u128) % p as u128) as u64;
    }
    acc
}
