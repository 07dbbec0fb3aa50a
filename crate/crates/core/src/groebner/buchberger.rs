//! Buchberger's algorithm with the Gebauer–Möller installation of new pairs and the sugar
//! selection strategy.

use std::collections::{BTreeSet, BinaryHeap};
use std::path::PathBuf;

use log::{debug, info};
use rustc_hash::FxHashMap;
use serde::{Deserialize, Serialize};

use crate::poly::{Monomial, MultiPoly, PolyRing};

use super::checkpoint::Checkpoint;
use super::{ideal_hash, GroebnerError};

/// Default ceiling on the sugar degree of processed pairs.
pub const DEFAULT_DEGREE_BUDGET: u32 = 40;

#[derive(Clone, Debug)]
pub struct GbConfig {
    pub degree_budget: u32,
    /// Write a checkpoint every this many pair reductions (and when the budget is hit).
    pub checkpoint_every: Option<usize>,
    pub checkpoint_path: Option<PathBuf>,
}

impl Default for GbConfig {
    fn default() -> Self {
        GbConfig { degree_budget: DEFAULT_DEGREE_BUDGET, checkpoint_every: None, checkpoint_path: None }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct GbStats {
    pub pairs_processed: usize,
    pub zero_reductions: usize,
    pub pairs_discarded: usize,
    pub max_degree: u32,
    pub basis_size: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroebnerBasis {
    pub ring: PolyRing,
    /// Reduced, monic, sorted by ascending leading monomial.
    pub basis: Vec<MultiPoly>,
    pub source_hash: String,
    pub stats: GbStats,
}

impl GroebnerBasis {
    pub fn is_unit(&self) -> bool {
        self.basis.len() == 1 && self.basis[0].is_constant()
    }

    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.basis.iter().filter_map(MultiPoly::leading_monomial).collect()
    }

    /// Normal form with respect to the basis.
    pub fn reduce(&self, f: &MultiPoly) -> MultiPoly {
        let mut r = Reducer::new(self.ring);
        for g in &self.basis {
            r.push(g.clone(), g.degree().unwrap_or(0));
        }
        r.normal_form(f).0
    }

    pub fn contains(&self, f: &MultiPoly) -> bool {
        self.reduce(f).is_zero()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub(crate) struct Pair {
    pub sugar: u32,
    /// Order key of the lcm, so ties resolve by smallest lcm.
    pub key: (u128, u128),
    pub i: u32,
    pub j: u32,
}

#[derive(Clone, Copy, Debug)]
enum Cached {
    Found(u32),
    /// No reducer among the first `n` polynomials.
    None(u32),
}

/// Polynomials usable as reducers, with a divisor cache keyed by monomial.
#[derive(Clone, Debug)]
pub(crate) struct Reducer {
    pub ring: PolyRing,
    pub polys: Vec<MultiPoly>,
    pub lms: Vec<Monomial>,
    pub sugar: Vec<u32>,
    cache: FxHashMap<Monomial, Cached>,
}

impl Reducer {
    pub fn new(ring: PolyRing) -> Self {
        Reducer { ring, polys: Vec::new(), lms: Vec::new(), sugar: Vec::new(), cache: FxHashMap::default() }
    }

    /// Adds a nonzero polynomial, made monic.
    pub fn push(&mut self, f: MultiPoly, sugar: u32) -> usize {
        let f = f.monic();
        self.lms.push(f.leading_monomial().expect("nonzero"));
        self.polys.push(f);
        self.sugar.push(sugar);
        self.polys.len() - 1
    }

    fn find(&mut self, m: Monomial) -> Option<usize> {
        let n = self.lms.len() as u32;
        let start = match self.cache.get(&m) {
            Some(Cached::Found(i)) => return Some(*i as usize),
            Some(Cached::None(k)) if *k == n => return None,
            Some(Cached::None(k)) => *k,
            None => 0,
        };
        let hit = (start..n).find(|&i| self.lms[i as usize].divides(m));
        self.cache.insert(m, hit.map_or(Cached::None(n), Cached::Found));
        hit.map(|i| i as usize)
    }

    /// Full normal form and its sugar bound.
    pub fn normal_form(&mut self, f: &MultiPoly) -> (MultiPoly, u32) {
        self.normal_form_with_sugar(f, f.degree().unwrap_or(0))
    }

    pub fn normal_form_with_sugar(&mut self, f: &MultiPoly, mut sugar: u32) -> (MultiPoly, u32) {
        let order = self.ring.order;
        let p = self.ring.p() as u64;
        let mut acc: FxHashMap<Monomial, u64> = FxHashMap::default();
        let mut heap: BinaryHeap<((u128, u128), Monomial)> = BinaryHeap::new();
        for &(m, c) in f.terms() {
            acc.insert(m, c as u64);
            heap.push((order.key(m), m));
        }
        let mut out = Vec::new();
        while let Some((_, m)) = heap.pop() {
            let c = acc.remove(&m).expect("queued") % p;
            if c == 0 {
                continue;
            }
            match self.find(m) {
                None => out.push((m, c as u32)),
                Some(i) => {
                    let g = &self.polys[i];
                    let q = self.lms[i].quotient_of(m);
                    sugar = sugar.max(self.sugar[i] + q.degree());
                    let neg = p - c;
                    for &(t, a) in &g.terms()[1..] {
                        let tm = t.mul(q);
                        let e = acc.entry(tm).or_insert_with(|| {
                            heap.push((order.key(tm), tm));
                            0
                        });
                        *e += neg * a as u64;
                    }
                }
            }
        }
        (MultiPoly::from_sorted(self.ring, out), sugar)
    }
}

/// Engine state; serialized into checkpoints.
#[derive(Clone, Debug)]
pub(crate) struct Engine {
    pub red: Reducer,
    /// Members of the current basis `G`.
    pub active: Vec<bool>,
    pub pairs: BTreeSet<Pair>,
    pub stats: GbStats,
    pub source_hash: String,
    pub unit: bool,
}

impl Engine {
    pub fn new(ring: PolyRing, source_hash: String) -> Self {
        Engine {
            red: Reducer::new(ring),
            active: Vec::new(),
            pairs: BTreeSet::new(),
            stats: GbStats::default(),
            source_hash,
            unit: false,
        }
    }

    fn pair(&self, i: usize, j: usize) -> Pair {
        let (li, lj) = (self.red.lms[i], self.red.lms[j]);
        let l = li.lcm(lj);
        let sugar = self.red.sugar[i].saturating_sub(li.degree()).max(self.red.sugar[j].saturating_sub(lj.degree())) + l.degree();
        Pair { sugar, key: self.red.ring.order.key(l), i: i.min(j) as u32, j: i.max(j) as u32 }
    }

    fn lcm_of(&self, pr: &Pair) -> Monomial {
        self.red.lms[pr.i as usize].lcm(self.red.lms[pr.j as usize])
    }

    /// Gebauer–Möller update with a new basis element `h`.
    fn insert(&mut self, h: MultiPoly, sugar: u32) {
        if h.is_constant() {
            self.unit = true;
            let idx = self.red.push(h, sugar);
            self.active.iter_mut().for_each(|a| *a = false);
            self.active.push(true);
            self.pairs.clear();
            debug_assert_eq!(idx + 1, self.active.len());
            return;
        }
        let hi = self.red.push(h, sugar);
        self.active.push(false);
        let lh = self.red.lms[hi];

        let c: Vec<(usize, Monomial)> =
            (0..hi).filter(|&g| self.active[g]).map(|g| (g, lh.lcm(self.red.lms[g]))).collect();
        // chain criterion among the new pairs
        let mut d: Vec<(usize, Monomial)> = Vec::new();
        for (k, &(g, l)) in c.iter().enumerate() {
            let coprime = lh.coprime(self.red.lms[g]);
            let dominated = c[k + 1..].iter().chain(d.iter()).any(|&(_, l2)| l2.divides(l));
            if coprime || !dominated {
                d.push((g, l));
            }
        }
        let before = self.pairs.len();
        // old pairs made redundant by h
        let lms = &self.red.lms;
        self.pairs.retain(|pr| {
            let l = lms[pr.i as usize].lcm(lms[pr.j as usize]);
            !(lh.divides(l)
                && lh.lcm(lms[pr.i as usize]) != l
                && lh.lcm(lms[pr.j as usize]) != l)
        });
        let mut discarded = before - self.pairs.len() + c.len();
        // product criterion
        for (g, _) in d {
            if !lh.coprime(self.red.lms[g]) {
                self.pairs.insert(self.pair(g, hi));
                discarded -= 1;
            }
        }
        self.stats.pairs_discarded += discarded;
        for g in 0..hi {
            if self.active[g] && lh.divides(self.red.lms[g]) {
                self.active[g] = false;
            }
        }
        self.active[hi] = true;
    }

    pub fn add_generators(&mut self, gens: &[MultiPoly]) {
        let order = self.red.ring.order;
        let mut gens: Vec<&MultiPoly> = gens.iter().filter(|g| !g.is_zero()).collect();
        gens.sort_by(|a, b| {
            a.degree()
                .cmp(&b.degree())
                .then_with(|| order.key(a.leading_monomial().unwrap()).cmp(&order.key(b.leading_monomial().unwrap())))
        });
        for g in gens {
            if self.unit {
                break;
            }
            let (h, s) = self.red.normal_form(g);
            if !h.is_zero() {
                self.insert(h, s);
            }
        }
    }

    fn spoly(&self, pr: &Pair) -> MultiPoly {
        let (i, j) = (pr.i as usize, pr.j as usize);
        let l = self.lcm_of(pr);
        let a = self.red.polys[i].mul_term(self.red.lms[i].quotient_of(l), 1);
        let b = self.red.polys[j].mul_term(self.red.lms[j].quotient_of(l), 1);
        a.sub(&b)
    }

    /// Processes pairs until none remain.
    pub fn run(&mut self, config: &GbConfig) -> Result<(), GroebnerError> {
        let mut since_checkpoint = 0usize;
        while !self.unit {
            let Some(pr) = self.pairs.pop_first() else { break };
            if pr.sugar > config.degree_budget {
                self.pairs.insert(pr);
                let saved = self.save(config)?;
                return Err(GroebnerError::DegreeBudgetExceeded {
                    degree: pr.sugar,
                    budget: config.degree_budget,
                    checkpoint: saved,
                });
            }
            if pr.sugar > self.stats.max_degree {
                self.stats.max_degree = pr.sugar;
                info!(
                    "sugar {} basis {} pairs {} processed {}",
                    pr.sugar,
                    self.active.iter().filter(|a| **a).count(),
                    self.pairs.len(),
                    self.stats.pairs_processed
                );
            }
            let s = self.spoly(&pr);
            let (h, sugar) = self.red.normal_form_with_sugar(&s, pr.sugar);
            self.stats.pairs_processed += 1;
            if h.is_zero() {
                self.stats.zero_reductions += 1;
            } else {
                debug!("new element, lm degree {:?}", h.leading_monomial().map(|m| m.degree()));
                self.insert(h, sugar);
            }
            since_checkpoint += 1;
            if config.checkpoint_every.is_some_and(|n| since_checkpoint >= n) {
                self.save(config)?;
                since_checkpoint = 0;
            }
        }
        Ok(())
    }

    fn save(&self, config: &GbConfig) -> Result<Option<String>, GroebnerError> {
        match &config.checkpoint_path {
            None => Ok(None),
            Some(path) => {
                Checkpoint::from_engine(self).write(path)?;
                Ok(Some(path.display().to_string()))
            }
        }
    }

    /// Minimal, fully interreduced, monic basis in ascending order.
    pub fn finish(self) -> GroebnerBasis {
        let ring = self.red.ring;
        let order = ring.order;
        let mut g: Vec<MultiPoly> = (0..self.active.len())
            .filter(|&i| self.active[i])
            .map(|i| self.red.polys[i].clone())
            .collect();
        g.sort_by(|a, b| order.cmp(a.leading_monomial().unwrap(), b.leading_monomial().unwrap()));
        let mut basis: Vec<MultiPoly> = Vec::with_capacity(g.len());
        for k in 0..g.len() {
            let mut red = Reducer::new(ring);
            for (j, other) in g.iter().enumerate() {
                if j != k {
                    red.push(other.clone(), 0);
                }
            }
            let f = &g[k];
            let (lm, lc) = f.terms()[0];
            let tail = MultiPoly::from_sorted(ring, f.terms()[1..].to_vec());
            let reduced_tail = red.normal_form(&tail).0;
            basis.push(ring.term(lm, lc).add(&reduced_tail).monic());
        }
        let mut stats = self.stats;
        stats.basis_size = basis.len();
        GroebnerBasis { ring, basis, source_hash: self.source_hash, stats }
    }
}

pub fn buchberger(gens: &[MultiPoly], config: &GbConfig) -> Result<GroebnerBasis, GroebnerError> {
    let ring = *gens.first().ok_or(GroebnerError::EmptyInput)?.ring();
    if gens.iter().any(|g| *g.ring() != ring) {
        return Err(GroebnerError::RingMismatch);
    }
    let mut engine = Engine::new(ring, ideal_hash(gens));
    engine.add_generators(gens);
    engine.run(config)?;
    Ok(engine.finish())
}

/// Continue a computation from a checkpoint.
pub fn resume(checkpoint: &Checkpoint, config: &GbConfig) -> Result<GroebnerBasis, GroebnerError> {
    let mut engine = checkpoint.to_engine()?;
    engine.run(config)?;
    Ok(engine.finish())
}

/// Whether every S-polynomial of the basis reduces to zero.
pub fn is_groebner_basis(gb: &GroebnerBasis) -> bool {
    let mut red = Reducer::new(gb.ring);
    for g in &gb.basis {
        red.push(g.clone(), 0);
    }
    for i in 0..gb.basis.len() {
        for j in i + 1..gb.basis.len() {
            let (fi, fj) = (&gb.basis[i], &gb.basis[j]);
            let (li, lj) = (fi.leading_monomial().unwrap(), fj.leading_monomial().unwrap());
            let l = li.lcm(lj);
            let s = fi.mul_term(li.quotient_of(l), 1).sub(&fj.mul_term(lj.quotient_of(l), 1));
            if !red.normal_form(&s).0.is_zero() {
                return false;
            }
        }
    }
    true
}
