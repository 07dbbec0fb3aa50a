//! Gröbner certificates: singular locus of the sextic, emptiness of `Y[3]`, and absence of
//! decomposable vectors.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::groebner::{
    buchberger, hilbert_data, ideal_hash, linear_reduce, localization, resume, Checkpoint, GbConfig, GbStats,
    GroebnerError,
};
use crate::linalg::wedge::{TripleBasisIndex, DIM, WEDGE3_DIM};
use crate::poly::{jacobian_generators, minors, DetAlgorithm, MonomialOrder, MultiPoly, PolyRing};

use super::{chart_matrix, EpwError, FpMatrix};

/// Size of the minors cutting out `Y[3]` on a chart.
pub const Y3_MINOR_SIZE: usize = 8;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SingularLocus {
    pub projective_dimension: i64,
    pub degree: i64,
    pub hilbert_numerator: Vec<i64>,
    /// `f` lies in its Jacobian ideal.
    pub euler_relation: bool,
    /// A reducible or non-reduced sextic in `P⁵` is singular along a threefold at least.
    pub reduced_irreducible: bool,
    pub stats: GbStats,
}

/// Jacobian ideal of `f`: Gröbner basis, then dimension and degree from the Hilbert series.
pub fn certify_singular_locus(f: &MultiPoly, config: &GbConfig) -> Result<SingularLocus, EpwError> {
    certify_singular_locus_from(f, config, None)
}

/// Same, optionally continuing from a checkpoint of the Jacobian ideal computation.
pub fn certify_singular_locus_from(
    f: &MultiPoly,
    config: &GbConfig,
    checkpoint: Option<&Checkpoint>,
) -> Result<SingularLocus, EpwError> {
    let gens: Vec<MultiPoly> = jacobian_generators(f).into_iter().filter(|g| !g.is_zero()).collect();
    if gens.is_empty() {
        return Err(EpwError::DegenerateDeterminant);
    }
    let gb = match checkpoint {
        None => buchberger(&gens, config)?,
        Some(ck) if ck.source_hash == ideal_hash(&gens) => resume(ck, config)?,
        Some(_) => {
            return Err(GroebnerError::Checkpoint("checkpoint belongs to a different ideal".into()).into());
        }
    };
    let h = hilbert_data(&gb)?;
    let nvars = f.ring().nvars as i64;
    debug_assert!(gb.source_hash == ideal_hash(&gens));
    Ok(SingularLocus {
        projective_dimension: h.projective_dimension,
        degree: h.degree,
        hilbert_numerator: h.numerator,
        euler_relation: gb.contains(f),
        reduced_irreducible: h.projective_dimension < nvars - 3,
        stats: gb.stats,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChartVerdict {
    pub chart: usize,
    /// Distinct nonzero 8x8 minors, and the dimension of their span.
    pub minors: usize,
    pub independent_minors: usize,
    pub trivial: bool,
    pub stats: GbStats,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Y3Result {
    pub charts: Vec<ChartVerdict>,
    pub empty: bool,
}

/// One chart: 8x8 minors of the chart matrix, localized at `x_c`.
pub fn y3_chart(a: &FpMatrix, chart: usize, config: &GbConfig) -> Result<ChartVerdict, EpwError> {
    let cm = chart_matrix(a, chart)?;
    let all = minors(&cm.matrix, Y3_MINOR_SIZE, DetAlgorithm::Interpolation)?;
    let gens = linear_reduce(&all);
    if gens.is_empty() {
        // every 8x8 minor vanishes: Y[3] is the whole chart
        return Ok(ChartVerdict { chart, minors: 0, independent_minors: 0, trivial: false, stats: GbStats::default() });
    }
    let gb = localization(&gens, chart - 1, config)?;
    Ok(ChartVerdict {
        chart,
        minors: all.len(),
        independent_minors: gens.len(),
        trivial: gb.is_unit(),
        stats: gb.stats,
    })
}

/// All six charts, `jobs` at a time; results come back in chart order.
pub fn certify_y3_empty(a: &FpMatrix, config: &GbConfig, jobs: usize) -> Result<Y3Result, EpwError> {
    let run = || (1..=DIM).into_par_iter().map(|c| y3_chart(a, c, config)).collect::<Result<Vec<_>, _>>();
    let charts = match rayon::ThreadPoolBuilder::new().num_threads(jobs.max(1)).build() {
        Ok(pool) => pool.install(run)?,
        Err(_) => run()?,
    };
    let empty = charts.iter().all(|c| c.trivial);
    Ok(Y3Result { charts, empty })
}

/// Quadrics in the Plücker coordinates `p_T` cutting out `Gr(3, 6)`: for each pair `a < b`,
/// the 4-form `ι_{e_a* ∧ e_b*}(p) ∧ p`. Entries are `(T, S, c)` with `c p_T p_S` summed per quadric.
pub fn plucker_quadrics() -> Vec<Vec<(usize, usize, i64)>> {
    let triples = TripleBasisIndex::triples();
    let mut out = Vec::new();
    for a in 0..DIM {
        for b in a + 1..DIM {
            // 4-subset mask -> terms
            let mut by_quad: BTreeMap<u8, BTreeMap<(usize, usize), i64>> = BTreeMap::new();
            for t in 0..WEDGE3_DIM {
                let tt = triples[t];
                if !(tt.contains(&a) && tt.contains(&b)) {
                    continue;
                }
                let r = *tt.iter().find(|&&x| x != a && x != b).expect("third index");
                let (_, s1) = TripleBasisIndex::wedge(a, b, r).expect("distinct");
                for (s, ss) in triples.iter().enumerate() {
                    if ss.contains(&r) {
                        continue;
                    }
                    let below = ss.iter().filter(|&&x| x < r).count();
                    let s2: i64 = if below % 2 == 0 { 1 } else { -1 };
                    let mask = (1u8 << r) | ss.iter().fold(0u8, |m, &x| m | (1 << x));
                    let key = (t.min(s), t.max(s));
                    *by_quad.entry(mask).or_default().entry(key).or_insert(0) += s1 as i64 * s2;
                }
            }
            for terms in by_quad.into_values() {
                let q: Vec<(usize, usize, i64)> =
                    terms.into_iter().filter(|&(_, c)| c != 0).map(|((t, s), c)| (t, s, c)).collect();
                if !q.is_empty() {
                    out.push(q);
                }
            }
        }
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProbeResult {
    pub quadrics: usize,
    pub projective_dimension: i64,
    pub degree: i64,
    /// No decomposable vector in `P(A)` over `F_p`-bar.
    pub empty: bool,
    pub stats: GbStats,
}

/// `P(A) ∩ Gr(3, 6)`, with the Plücker quadrics pulled back along `y ↦ A y` to `P⁹`.
pub fn grassmannian_probe(a: &FpMatrix, config: &GbConfig) -> Result<ProbeResult, EpwError> {
    let field = *a.field();
    let ring = PolyRing::new(field, a.cols(), MonomialOrder::Grevlex)?;
    let forms: Vec<MultiPoly> = (0..WEDGE3_DIM).map(|t| ring.linear_form(a.row(t))).collect();
    let quadrics: Vec<MultiPoly> = plucker_quadrics()
        .into_iter()
        .map(|q| {
            q.iter().fold(ring.zero(), |acc, &(t, s, c)| {
                acc.add(&forms[t].mul(&forms[s]).scale(field.from_i64(c)))
            })
        })
        .collect();
    let gens = linear_reduce(&quadrics);
    if gens.is_empty() {
        return Ok(ProbeResult {
            quadrics: 0,
            projective_dimension: a.cols() as i64 - 1,
            degree: 1,
            empty: false,
            stats: GbStats::default(),
        });
    }
    let gb = buchberger(&gens, config)?;
    let h = hilbert_data(&gb)?;
    Ok(ProbeResult {
        quadrics: gens.len(),
        projective_dimension: h.projective_dimension,
        degree: h.degree,
        empty: h.is_empty_locus(),
        stats: gb.stats,
    })
}
