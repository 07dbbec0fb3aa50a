//! Certification pipeline for one Lagrangian and the resulting report.

use std::collections::BTreeMap;
use std::fmt;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::arith::ReductionMap;
use crate::grouprep::LAGRANGIAN_DIM;
use crate::linalg::wedge::DIM;
use crate::groebner::{Checkpoint, GbConfig};
use crate::poly::{DetAlgorithm, PolyFile};

use super::certify::{certify_singular_locus_from, certify_y3_empty, grassmannian_probe};
use super::{chart_matrix, fiber_lagrangian, intersection_dim, epw_sextic, equivariance_scalar, proportionality, FpMatrix, ProbeResult, SingularLocus, Y3Result};
use super::{SEXTIC_DEGREE, CHART_VALUATION};

pub const REPORT_VERSION: u32 = 1;

/// Expected singular locus: a surface of degree 40.
pub const SINGULAR_DIMENSION: i64 = 2;
pub const SINGULAR_DEGREE: i64 = 40;

/// Largest report accepted by [`CertReport::parse`].
pub const MAX_REPORT_BYTES: usize = 1 << 26;

#[derive(Clone, Debug)]
pub struct CertifyOptions {
    /// Two distinct 1-based charts for the sextic cross-check.
    pub charts: (usize, usize),
    pub gb: GbConfig,
    pub jobs: usize,
    pub seed: u64,
    pub y3: bool,
    pub probe: bool,
    pub timings: bool,
    /// Random chart points checked against a direct subspace intersection.
    pub spot_checks: usize,
    pub resume: Option<Checkpoint>,
}

impl Default for CertifyOptions {
    fn default() -> Self {
        CertifyOptions {
            charts: (1, 2),
            gb: GbConfig::default(),
            jobs: 1,
            seed: 0,
            y3: true,
            probe: true,
            timings: false,
            spot_checks: 20,
            resume: None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SexticData {
    pub charts: (usize, usize),
    pub valuations: (u32, u32),
    pub degree: u32,
    /// `f_second = scalar * f_first`.
    pub chart_scalar: Option<u32>,
    /// `f(g v) = λ f(v)` per reduced class representative; `None` if not proportional.
    pub equivariance: Vec<Option<u32>>,
    pub poly: PolyFile,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClaimVerdicts {
    pub sextic_degree: bool,
    pub charts_agree: bool,
    pub equivariant: bool,
    pub singular_locus: bool,
    pub reduced_irreducible: bool,
    pub y3_empty: Option<bool>,
    pub no_decomposables: Option<bool>,
    pub rank_oracle: bool,
}

impl ClaimVerdicts {
    pub fn all(&self) -> bool {
        self.sextic_degree
            && self.charts_agree
            && self.equivariant
            && self.singular_locus
            && self.reduced_irreducible
            && self.y3_empty != Some(false)
            && self.no_decomposables != Some(false)
            && self.rank_oracle
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertReport {
    pub version: u32,
    pub label: String,
    /// sha256 of the Lagrangian file as read.
    pub input_hash: String,
    pub prime: u32,
    pub root: u32,
    pub seed: u64,
    pub degree_budget: u32,
    pub sextic: Option<SexticData>,
    pub singular_locus: Option<SingularLocus>,
    pub y3: Option<Y3Result>,
    pub probe: Option<ProbeResult>,
    pub spot_check: SpotCheck,
    pub verdicts: ClaimVerdicts,
    pub failures: Vec<String>,
    pub note: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub timings_ms: Option<BTreeMap<String, u64>>,
}

const NOTE: &str = "All computations are over F_p. Dimension and degree of the singular locus and emptiness \
of Y[3] are upper semicontinuous in the flat family over Z[zeta_21], so the values certified here bound, \
and with the expected values equal, the characteristic-0 ones.";

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpotCheck {
    pub chart: usize,
    pub points: usize,
    pub mismatches: usize,
    /// Points found with `dim(A ∩ F_v) >= 1`.
    pub on_sextic: usize,
}

/// Rank of the chart matrix against `10 - dim(A ∩ F_v)` at seeded random chart points.
pub fn rank_spot_check(a: &FpMatrix, chart: usize, points: usize, seed: u64) -> SpotCheck {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let field = *a.field();
    let p = field.modulus();
    let mut out = SpotCheck { chart, points, ..SpotCheck::default() };
    let Ok(cm) = chart_matrix(a, chart) else {
        out.mismatches = points;
        return out;
    };
    for _ in 0..points {
        let mut v: Vec<u32> = (0..DIM).map(|_| rng.gen_range(0..p)).collect();
        v[chart - 1] = rng.gen_range(1..p);
        let k = intersection_dim(a, &fiber_lagrangian(&field, &v));
        if cm.eval(&v).rank() + k != LAGRANGIAN_DIM {
            out.mismatches += 1;
        }
        if k > 0 {
            out.on_sextic += 1;
        }
    }
    out
}

pub fn sha256_hex(bytes: &[u8]) -> String {
    hex::encode(Sha256::digest(bytes))
}

/// Runs every certificate on a reduced Lagrangian; failures are recorded, not returned.
pub fn certify(
    a: &FpMatrix,
    label: &str,
    input_hash: &str,
    map: &ReductionMap,
    class_reps: &[FpMatrix],
    opts: &CertifyOptions,
) -> CertReport {
    let mut report = CertReport {
        version: REPORT_VERSION,
        label: label.to_owned(),
        input_hash: input_hash.to_owned(),
        prime: map.prime(),
        root: map.root(),
        seed: opts.seed,
        degree_budget: opts.gb.degree_budget,
        sextic: None,
        singular_locus: None,
        y3: None,
        probe: None,
        spot_check: rank_spot_check(a, opts.charts.0, opts.spot_checks, opts.seed),
        verdicts: ClaimVerdicts::default(),
        failures: Vec::new(),
        note: NOTE.to_owned(),
        timings_ms: None,
    };
    report.verdicts.rank_oracle = report.spot_check.mismatches == 0;
    if !report.verdicts.rank_oracle {
        report.failures.push(format!("spot check: {} rank mismatches", report.spot_check.mismatches));
    }
    let mut timings = BTreeMap::new();
    let mut clock = Instant::now();
    let mut lap = |name: &str, timings: &mut BTreeMap<String, u64>| {
        timings.insert(name.to_owned(), clock.elapsed().as_millis() as u64);
        clock = Instant::now();
    };

    let sextics = epw_sextic(a, opts.charts.0, DetAlgorithm::Interpolation)
        .and_then(|s1| Ok((s1, epw_sextic(a, opts.charts.1, DetAlgorithm::Interpolation)?)));
    lap("sextic", &mut timings);
    match sextics {
        Err(e) => report.failures.push(format!("sextic: {e}")),
        Ok((s1, s2)) => {
            let f = &s1.poly;
            let degree = f.degree().unwrap_or(0);
            let chart_scalar = proportionality(f, &s2.poly);
            let equivariance: Vec<Option<u32>> = class_reps.iter().map(|g| equivariance_scalar(f, g)).collect();
            report.verdicts.sextic_degree = degree == SEXTIC_DEGREE
                && f.homogeneous_degree() == Some(SEXTIC_DEGREE)
                && s1.valuation == CHART_VALUATION
                && s2.valuation == CHART_VALUATION;
            report.verdicts.charts_agree = chart_scalar.is_some();
            report.verdicts.equivariant = equivariance.iter().all(Option::is_some);
            if !report.verdicts.sextic_degree {
                report.failures.push(format!("sextic: degree {degree}, valuations {} {}", s1.valuation, s2.valuation));
            }
            if !report.verdicts.charts_agree {
                report.failures.push("sextic: charts give non-proportional equations".into());
            }
            if !report.verdicts.equivariant {
                report.failures.push("sextic: not equivariant under some class representative".into());
            }
            match certify_singular_locus_from(f, &opts.gb, opts.resume.as_ref()) {
                Ok(sing) => {
                    report.verdicts.singular_locus =
                        sing.projective_dimension == SINGULAR_DIMENSION && sing.degree == SINGULAR_DEGREE;
                    report.verdicts.reduced_irreducible = sing.reduced_irreducible;
                    if !report.verdicts.singular_locus {
                        report.failures.push(format!(
                            "singular locus: dimension {} degree {}, expected {SINGULAR_DIMENSION} {SINGULAR_DEGREE}",
                            sing.projective_dimension, sing.degree
                        ));
                    }
                    if !sing.reduced_irreducible {
                        report.failures.push("singular locus: too large for a reduced irreducible sextic".into());
                    }
                    report.singular_locus = Some(sing);
                }
                Err(e) => report.failures.push(format!("singular locus: {e}")),
            }
            report.sextic = Some(SexticData {
                charts: opts.charts,
                valuations: (s1.valuation, s2.valuation),
                degree,
                chart_scalar,
                equivariance,
                poly: PolyFile::from_poly(f),
            });
        }
    }
    lap("singular_locus", &mut timings);

    // checkpoints belong to the singular-locus run only
    let quiet = GbConfig { checkpoint_path: None, checkpoint_every: None, ..opts.gb.clone() };
    if opts.y3 {
        match certify_y3_empty(a, &quiet, opts.jobs) {
            Ok(y3) => {
                report.verdicts.y3_empty = Some(y3.empty);
                if !y3.empty {
                    let bad: Vec<usize> = y3.charts.iter().filter(|c| !c.trivial).map(|c| c.chart).collect();
                    report.failures.push(format!("y3: non-trivial on charts {bad:?}"));
                }
                report.y3 = Some(y3);
            }
            Err(e) => {
                report.verdicts.y3_empty = Some(false);
                report.failures.push(format!("y3: {e}"));
            }
        }
        lap("y3", &mut timings);
    }
    if opts.probe {
        match grassmannian_probe(a, &quiet) {
            Ok(p) => {
                report.verdicts.no_decomposables = Some(p.empty);
                if !p.empty {
                    report.failures.push(format!(
                        "probe: decomposable vectors, locus of dimension {}",
                        p.projective_dimension
                    ));
                }
                report.probe = Some(p);
            }
            Err(e) => {
                report.verdicts.no_decomposables = Some(false);
                report.failures.push(format!("probe: {e}"));
            }
        }
        lap("probe", &mut timings);
    }
    if opts.timings {
        report.timings_ms = Some(timings);
    }
    report
}

#[derive(Debug, thiserror::Error, Clone, PartialEq, Eq)]
pub enum ReportError {
    #[error("report schema version {found}, expected {expected}")]
    SchemaVersionMismatch { found: u32, expected: u32 },
    #[error("report: {0}")]
    Malformed(String),
    #[error("no reports given")]
    Empty,
}

impl CertReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty() && self.verdicts.all()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("serializes")
    }

    pub fn parse(text: &str) -> Result<Self, ReportError> {
        if text.len() > MAX_REPORT_BYTES {
            return Err(ReportError::Malformed("too large".into()));
        }
        let v: serde_json::Value = serde_json::from_str(text).map_err(|e| ReportError::Malformed(e.to_string()))?;
        let found = v.get("version").and_then(|x| x.as_u64()).ok_or(ReportError::Malformed("no version".into()))?;
        if found != REPORT_VERSION as u64 {
            return Err(ReportError::SchemaVersionMismatch { found: found as u32, expected: REPORT_VERSION });
        }
        serde_json::from_value(v).map_err(|e| ReportError::Malformed(e.to_string()))
    }
}

fn mark(b: bool) -> &'static str {
    if b {
        "ok"
    } else {
        "FAIL"
    }
}

fn mark_opt(b: Option<bool>) -> &'static str {
    b.map_or("skipped", mark)
}

impl fmt::Display for CertReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{} over F_{} (zeta_21 -> {}), input {}", self.label, self.prime, self.root, &self.input_hash)?;
        let v = &self.verdicts;
        match &self.sextic {
            Some(s) => writeln!(
                f,
                "  sextic degree {} (x{}^{} and x{}^{} removed): {}; charts agree (scalar {}): {}; equivariant: {}",
                s.degree, s.charts.0, s.valuations.0, s.charts.1, s.valuations.1, mark(v.sextic_degree),
                s.chart_scalar.map_or("none".to_string(), |c| c.to_string()), mark(v.charts_agree), mark(v.equivariant)
            )?,
            None => writeln!(f, "  sextic: FAIL")?,
        }
        match &self.singular_locus {
            Some(s) => writeln!(
                f,
                "  singular locus dimension {} degree {}: {}; reduced and irreducible: {}",
                s.projective_dimension, s.degree, mark(v.singular_locus), mark(v.reduced_irreducible)
            )?,
            None => writeln!(f, "  singular locus: FAIL")?,
        }
        writeln!(
            f,
            "  rank spot check on chart {}: {} points, {} mismatches: {}",
            self.spot_check.chart, self.spot_check.points, self.spot_check.mismatches, mark(v.rank_oracle)
        )?;
        writeln!(f, "  Y[3] empty: {}", mark_opt(v.y3_empty))?;
        writeln!(f, "  no decomposable vectors: {}", mark_opt(v.no_decomposables))?;
        for failure in &self.failures {
            writeln!(f, "  failure: {failure}")?;
        }
        write!(f, "  {}", if self.passed() { "CERTIFIED" } else { "NOT CERTIFIED" })
    }
}

/// One line per report, and disagreements between them.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportSummary {
    pub rows: Vec<SummaryRow>,
    pub inconsistencies: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SummaryRow {
    pub label: String,
    pub prime: u32,
    pub root: u32,
    pub verdicts: ClaimVerdicts,
    pub singular: Option<(i64, i64)>,
    pub passed: bool,
}

pub fn summarize(reports: &[CertReport]) -> Result<ReportSummary, ReportError> {
    if reports.is_empty() {
        return Err(ReportError::Empty);
    }
    let rows: Vec<SummaryRow> = reports
        .iter()
        .map(|r| SummaryRow {
            label: r.label.clone(),
            prime: r.prime,
            root: r.root,
            verdicts: r.verdicts.clone(),
            singular: r.singular_locus.as_ref().map(|s| (s.projective_dimension, s.degree)),
            passed: r.passed(),
        })
        .collect();
    let mut inconsistencies = Vec::new();
    let mut by_label: BTreeMap<&str, Vec<&SummaryRow>> = BTreeMap::new();
    for row in &rows {
        by_label.entry(&row.label).or_default().push(row);
    }
    for (label, group) in by_label {
        for w in group.windows(2) {
            if w[0].verdicts != w[1].verdicts || w[0].singular != w[1].singular {
                inconsistencies.push(format!(
                    "{label}: verdicts differ between F_{} and F_{}",
                    w[0].prime, w[1].prime
                ));
            }
        }
    }
    for r in reports {
        if let Some(s) = &r.sextic {
            if s.chart_scalar.is_none() {
                inconsistencies.push(format!("{} over F_{}: chart-scalar mismatch", r.label, r.prime));
            }
        }
    }
    Ok(ReportSummary { rows, inconsistencies })
}

impl fmt::Display for ReportSummary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{:<12} {:>6} {:>5}  deg6 charts equiv sing(dim,deg)  y3  probe  result", "label", "p", "r")?;
        for r in &self.rows {
            let v = &r.verdicts;
            let sing = r.singular.map_or("-".to_owned(), |(d, e)| format!("({d},{e})"));
            writeln!(
                f,
                "{:<12} {:>6} {:>5}  {:<4} {:<6} {:<5} {:<14} {:<4} {:<6} {}",
                r.label, r.prime, r.root, mark(v.sextic_degree), mark(v.charts_agree), mark(v.equivariant), sing,
                mark_opt(v.y3_empty), mark_opt(v.no_decomposables), if r.passed { "CERTIFIED" } else { "FAILED" }
            )?;
        }
        for i in &self.inconsistencies {
            writeln!(f, "inconsistent: {i}")?;
        }
        Ok(())
    }
}
