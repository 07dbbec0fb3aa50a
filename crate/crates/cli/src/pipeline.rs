//! Command implementations.

use std::fs;
use std::path::{Path, PathBuf};

use anyhow::{bail, ensure, Context, Result};
use log::{info, warn};

use epwforge::arith::{PrimeField, ReductionMap};
use epwforge::epw::{
    self, certify_y3_empty, check_lagrangian, control_lagrangian, reduce_lagrangian, reduce_matrix, sha256_hex,
    summarize, CertReport, CertifyOptions, FpMatrix,
};
use epwforge::groebner::{Checkpoint, GbConfig};
use epwforge::grouprep::{
    build_lagrangians as build_pair, class_sums, enumerate_group, generator_hash, generators, GroupCache, GroupData,
    LagrangianBasis, LagrangianSummary, Word, COLUMN_WORDS, DEFAULT_ELEMENT_BOUND,
};
use epwforge::linalg::{AnyMatrix, Matrix, MatrixFile};
use epwforge::poly::{poly_to_json, DetAlgorithm};

use crate::GlobalOpts;

pub enum Outcome {
    Success,
    NotCertified,
}

type QMatrix = Matrix<epwforge::arith::CyclotomicField>;

fn reduction_map(g: &GlobalOpts) -> Result<ReductionMap> {
    ReductionMap::new(g.prime, g.root).with_context(|| format!("reduction map ({}, {})", g.prime, g.root))
}

fn gb_config(g: &GlobalOpts) -> GbConfig {
    GbConfig { degree_budget: g.degree_budget, ..GbConfig::default() }
}

fn read_generators(path: &Path) -> Result<Vec<QMatrix>> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    let files: Vec<MatrixFile> = serde_json::from_str(&text).context("generator list")?;
    files
        .iter()
        .map(|f| match f.decode()? {
            AnyMatrix::Cyclotomic(m) if m.rows() == 6 && m.cols() == 6 => Ok(m),
            _ => bail!("generators must be 6x6 cyclotomic matrices"),
        })
        .collect()
}

/// Group data, from the cache when a valid entry exists.
fn load_group(g: &GlobalOpts, gens: &[QMatrix]) -> Result<GroupData> {
    let hash = generator_hash(gens);
    let path = g.cache_dir.join(format!("group-{}.json", &hash[..16]));
    if let Ok(text) = fs::read_to_string(&path) {
        match serde_json::from_str::<GroupCache>(&text).map_err(anyhow::Error::from).and_then(|c| {
            GroupData::from_cache(gens, &c).map_err(anyhow::Error::from)
        }) {
            Ok(group) => {
                info!("group loaded from {}", path.display());
                return Ok(group);
            }
            Err(e) => warn!("ignoring cache {}: {e}", path.display()),
        }
    }
    let group = enumerate_group(gens, DEFAULT_ELEMENT_BOUND)
        .context("enumerating the group")?
        .class_partition(&COLUMN_WORDS)
        .context("matching conjugacy classes to the character table columns")?;
    info!("group of order {} enumerated", group.order());
    let written = fs::create_dir_all(&g.cache_dir)
        .and_then(|_| fs::write(&path, serde_json::to_string(&group.to_cache()).expect("serializes")));
    if let Err(e) = written {
        warn!("could not write cache {}: {e}", path.display());
    }
    Ok(group)
}

fn write(path: &Path, text: &str) -> Result<()> {
    if let Some(dir) = path.parent().filter(|d| !d.as_os_str().is_empty()) {
        fs::create_dir_all(dir).with_context(|| format!("creating {}", dir.display()))?;
    }
    fs::write(path, text).with_context(|| format!("writing {}", path.display()))
}

pub fn build_lagrangians(g: &GlobalOpts, out: &Path, gens: Option<&Path>, control: bool) -> Result<Outcome> {
    let gens = match gens {
        Some(p) => read_generators(p)?,
        None => generators().to_vec(),
    };
    let group = load_group(g, &gens)?;
    let sums = class_sums(&group);
    let pair = build_pair(&group, &sums).context("building the Lagrangians")?;
    write(&out.join("A1.json"), &pair.a1.to_json())?;
    write(&out.join("A2.json"), &pair.a2.to_json())?;
    let summary = LagrangianSummary::new(&group, &pair);
    write(&out.join("lagrangians.json"), &serde_json::to_string_pretty(&summary)?)?;
    if control {
        let f = PrimeField::new(g.prime)?;
        write(&out.join("F_e1.json"), &MatrixFile::from_fp(&control_lagrangian(&f), Some("F_e1")).to_json())?;
    }
    println!("group order {} (quotient {}), classes {:?}", group.order(), group.quotient_order(), group.class_sizes());
    println!("A1: character {}", pair.chi1);
    println!("A2: character {}", pair.chi2);
    println!("wrote {}", out.display());
    Ok(Outcome::Success)
}

pub struct Loaded {
    pub label: String,
    pub hash: String,
    pub matrix: FpMatrix,
}

/// A Lagrangian file: cyclotomic (reduced with the configured map) or already over `F_p`.
pub fn load_lagrangian(g: &GlobalOpts, path: &Path) -> Result<Loaded> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    let hash = sha256_hex(text.as_bytes());
    let file = MatrixFile::parse(&text).with_context(|| format!("parsing {}", path.display()))?;
    let label = file.label.clone().unwrap_or_else(|| {
        path.file_stem().map(|s| s.to_string_lossy().into_owned()).unwrap_or_default()
    });
    let matrix = match file.decode()? {
        AnyMatrix::Cyclotomic(basis) => {
            let b = LagrangianBasis { label: label.clone(), basis };
            reduce_lagrangian(&b, &reduction_map(g)?).context("reducing the Lagrangian")?
        }
        AnyMatrix::Fp(m) => {
            ensure!(m.field().modulus() == g.prime, "file is over F_{}, not F_{}", m.field().modulus(), g.prime);
            check_lagrangian(&m).context("checking the Lagrangian")?;
            m
        }
    };
    Ok(Loaded { label, hash, matrix })
}

fn class_representatives(g: &GlobalOpts) -> Result<Vec<FpMatrix>> {
    let group = load_group(g, &generators())?;
    let map = reduction_map(g)?;
    COLUMN_WORDS
        .iter()
        .map(|w| {
            let m = group.eval_word(&Word::parse(w)?)?;
            Ok(reduce_matrix(&m, &map)?)
        })
        .collect()
}

pub fn sextic(g: &GlobalOpts, path: &Path, chart: usize, out: Option<&Path>) -> Result<Outcome> {
    let a = load_lagrangian(g, path)?;
    let s = epw::epw_sextic(&a.matrix, chart, DetAlgorithm::Interpolation)?;
    let json = poly_to_json(&s.poly);
    match out {
        Some(p) => write(p, &json)?,
        None => println!("{json}"),
    }
    eprintln!(
        "{}: degree {} after removing x{}^{} (exact valuation {}), {} terms",
        a.label,
        s.poly.degree().unwrap_or(0),
        chart,
        epw::CHART_VALUATION,
        s.valuation,
        s.poly.len()
    );
    Ok(Outcome::Success)
}

pub fn y3(g: &GlobalOpts, path: &Path, charts: &[usize]) -> Result<Outcome> {
    let a = load_lagrangian(g, path)?;
    let config = gb_config(g);
    let verdicts = if charts.is_empty() {
        certify_y3_empty(&a.matrix, &config, g.jobs)?.charts
    } else {
        charts.iter().map(|&c| epw::certify::y3_chart(&a.matrix, c, &config)).collect::<Result<Vec<_>, _>>()?
    };
    for v in &verdicts {
        println!(
            "chart {}: {} minors ({} independent), localized ideal {}",
            v.chart,
            v.minors,
            v.independent_minors,
            if v.trivial { "trivial" } else { "NOT trivial" }
        );
    }
    let empty = verdicts.iter().all(|v| v.trivial);
    println!("{}: Y[3] {} on the charts tested", a.label, if empty { "empty" } else { "NOT empty" });
    Ok(if empty { Outcome::Success } else { Outcome::NotCertified })
}

pub struct CertifyArgs {
    pub charts: (usize, usize),
    pub out: Option<PathBuf>,
    pub y3: bool,
    pub probe: bool,
    pub timings: bool,
    pub checkpoint_every: Option<usize>,
    pub resume: Option<PathBuf>,
}

pub fn certify(g: &GlobalOpts, path: &Path, args: CertifyArgs) -> Result<Outcome> {
    ensure!(args.charts.0 != args.charts.1, "the two charts must differ");
    let a = load_lagrangian(g, path)?;
    let map = reduction_map(g)?;
    let reps = class_representatives(g)?;
    let resume = args.resume.as_deref().map(Checkpoint::read).transpose().context("reading checkpoint")?;
    let mut gb = gb_config(g);
    if let Some(n) = args.checkpoint_every {
        fs::create_dir_all(&g.cache_dir)?;
        gb.checkpoint_every = Some(n);
        gb.checkpoint_path =
            Some(g.cache_dir.join(format!("singular-{}-p{}.ckpt.json", &a.hash[..16], g.prime)));
    }
    let opts = CertifyOptions {
        charts: args.charts,
        gb,
        jobs: g.jobs,
        seed: g.seed,
        y3: args.y3,
        probe: args.probe,
        timings: args.timings,
        resume,
        ..CertifyOptions::default()
    };
    let report = epw::certify(&a.matrix, &a.label, &a.hash, &map, &reps, &opts);
    let out = args.out.unwrap_or_else(|| PathBuf::from(format!("report-{}-p{}.json", a.label, g.prime)));
    write(&out, &report.to_json())?;
    println!("{report}");
    println!("report written to {}", out.display());
    Ok(if report.passed() { Outcome::Success } else { Outcome::NotCertified })
}

pub fn report(paths: &[PathBuf], json: bool) -> Result<Outcome> {
    let reports = paths
        .iter()
        .map(|p| {
            let text = fs::read_to_string(p).with_context(|| format!("reading {}", p.display()))?;
            CertReport::parse(&text).with_context(|| format!("parsing {}", p.display()))
        })
        .collect::<Result<Vec<_>>>()?;
    let summary = summarize(&reports)?;
    if json {
        println!("{}", serde_json::to_string_pretty(&summary)?);
    } else {
        print!("{summary}");
    }
    let ok = summary.inconsistencies.is_empty() && summary.rows.iter().all(|r| r.passed);
    Ok(if ok { Outcome::Success } else { Outcome::NotCertified })
}
