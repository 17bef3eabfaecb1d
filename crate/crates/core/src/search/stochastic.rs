//! Steady-state genetic search for SDS with a fixed parameter set.
//!
//! A genome is one bit mask per subset, each with exactly kᵢ bits set, so
//! every individual already has the target sizes and fitness only measures
//! how far the difference profile is from flat:
//!
//! F = Σ_{m=1}^{⌊N/2⌋} (Σᵢ ν(Xᵢ, m) − λ)²,
//!
//! using ν(X, m) = ν(X, N−m). With masks, ν(X, m) = |X ∩ (X + m)| is one
//! rotate-and-popcount.
//!
//! Each generation draws parents by binary tournament, optionally exchanges
//! whole subsets between them, applies one or more swap mutations (one
//! element out, one element in). The child replaces its first parent if it
//! is no worse, and otherwise with probability exp(−Δ/T) where Δ is the
//! fitness increase and T is `temperature`. Each individual caches its
//! per-subset ν counts, so a mutation only recounts the subsets it touched.
//! An island restarts from a fresh random population after `restart_after`
//! evaluations without improving its best. Islands run in lockstep rounds
//! with derived seeds; the reported witness is the first by (generation,
//! island index), which makes results independent of scheduling.

use std::sync::atomic::{AtomicBool, AtomicU64, Ordering};
use std::time::Instant;

use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use super::config::{
    Observer, ProgressEvent, SearchConfig, SearchMode, SearchOutcome, SearchStats, SearchStatus, Silent,
};
use crate::error::{Error, Result};
use crate::sds::{verify_sds, ParameterSet, ResidueSubset, SdsFamily};

/// Largest modulus the mask representation supports.
pub const MAX_MASK_MODULUS: usize = 64;

pub(crate) struct Problem {
    n: usize,
    k: Vec<usize>,
    lambda: i64,
    full: u64,
    movable: Vec<usize>,
}

impl Problem {
    pub(crate) fn new(ps: &ParameterSet) -> Result<Self> {
        if ps.n > MAX_MASK_MODULUS || ps.n < 2 {
            return Err(Error::OutOfRange {
                what: "modulus",
                value: ps.n,
                min: 2,
                max: MAX_MASK_MODULUS,
            });
        }
        Ok(Self {
            n: ps.n,
            k: ps.k.clone(),
            lambda: ps.lambda as i64,
            full: if ps.n == 64 { u64::MAX } else { (1u64 << ps.n) - 1 },
            movable: (0..ps.k.len()).filter(|&i| ps.k[i] > 0 && ps.k[i] < ps.n).collect(),
        })
    }

    #[inline]
    fn rot(&self, x: u64, m: usize) -> u64 {
        ((x << m) | (x >> (self.n - m))) & self.full
    }

    pub(crate) fn fitness(&self, genome: &[u64]) -> u64 {
        (1..=self.n / 2)
            .map(|m| {
                let c: i64 = genome.iter().map(|&x| (x & self.rot(x, m)).count_ones() as i64).sum();
                let d = c - self.lambda;
                (d * d) as u64
            })
            .sum()
    }

    fn random_genome(&self, rng: &mut ChaCha8Rng) -> Vec<u64> {
        self.k
            .iter()
            .map(|&k| sample(rng, self.n, k).into_iter().fold(0u64, |m, j| m | 1 << j))
            .collect()
    }

    /// Swaps one element of a random non-trivial subset for a non-element;
    /// returns the subset touched.
    fn mutate(&self, genome: &mut [u64], rng: &mut ChaCha8Rng) -> Option<usize> {
        if self.movable.is_empty() {
            return None;
        }
        let i = self.movable[rng.gen_range(0..self.movable.len())];
        let x = genome[i];
        let out = nth_set_bit(x, rng.gen_range(0..self.k[i]));
        let inn = nth_set_bit(!x & self.full, rng.gen_range(0..self.n - self.k[i]));
        genome[i] = x ^ (1 << out) ^ (1 << inn);
        Some(i)
    }

    fn family(&self, genome: &[u64]) -> SdsFamily {
        let subsets = genome.iter().map(|&m| ResidueSubset::from_mask(self.n, m)).collect();
        SdsFamily::new(self.n, subsets, self.lambda as u64).expect("shared modulus")
    }
}

fn nth_set_bit(mut x: u64, n: usize) -> u32 {
    for _ in 0..n {
        x &= x - 1;
    }
    x.trailing_zeros()
}

fn island_seed(seed: u64, island: usize) -> u64 {
    // splitmix64 step over (seed, island)
    let mut z = seed ^ (island as u64).wrapping_mul(0x9e37_79b9_7f4a_7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

/// Evaluations each island performs per round before the islands
/// synchronize.
const ROUND: u64 = 1 << 16;

/// A genome plus its cached per-subset ν counts for m = 1..=⌊N/2⌋.
#[derive(Clone)]
struct Individual {
    genome: Vec<u64>,
    nu: Vec<i64>,
    fitness: u64,
}

impl Individual {
    fn new(problem: &Problem, genome: Vec<u64>) -> Self {
        let h = problem.n / 2;
        let mut ind = Self {
            nu: vec![0; genome.len() * h],
            genome,
            fitness: 0,
        };
        for i in 0..ind.genome.len() {
            ind.refresh(problem, i);
        }
        ind.rescore(problem);
        ind
    }

    fn refresh(&mut self, problem: &Problem, i: usize) {
        let h = problem.n / 2;
        let x = self.genome[i];
        for (m, slot) in self.nu[i * h..(i + 1) * h].iter_mut().enumerate() {
            *slot = (x & problem.rot(x, m + 1)).count_ones() as i64;
        }
    }

    fn rescore(&mut self, problem: &Problem) {
        let h = problem.n / 2;
        self.fitness = (0..h)
            .map(|m| {
                let c: i64 = (0..self.genome.len()).map(|i| self.nu[i * h + m]).sum();
                let d = c - problem.lambda;
                (d * d) as u64
            })
            .sum();
    }
}

struct Island {
    index: usize,
    rng: ChaCha8Rng,
    budget: u64,
    evals: u64,
    pop: Vec<Individual>,
    best: u64,
    since_improvement: u64,
    found: Option<(u64, Vec<u64>)>,
}

struct Shared<'a> {
    best_gen: AtomicU64,
    timed_out: AtomicBool,
    deadline: Option<Instant>,
    observer: &'a dyn Observer,
}

impl Island {
    fn new(cfg: &SearchConfig, index: usize, budget: u64) -> Self {
        Self {
            index,
            rng: ChaCha8Rng::seed_from_u64(island_seed(cfg.seed, index)),
            budget,
            evals: 0,
            pop: Vec::with_capacity(cfg.population),
            best: u64::MAX,
            since_improvement: 0,
            found: None,
        }
    }

    fn done(&self, shared: &Shared) -> bool {
        self.found.is_some()
            || self.evals >= self.budget
            || self.evals >= shared.best_gen.load(Ordering::Relaxed)
            || shared.timed_out.load(Ordering::Relaxed)
    }

    fn pick(&mut self) -> usize {
        let a = self.rng.gen_range(0..self.pop.len());
        let b = self.rng.gen_range(0..self.pop.len());
        if self.pop[a].fitness <= self.pop[b].fitness {
            a
        } else {
            b
        }
    }

    /// Runs until `until` evaluations, a witness, or a stop condition.
    fn run(&mut self, problem: &Problem, cfg: &SearchConfig, until: u64, shared: &Shared) {
        let every = shared.observer.interval();
        let p = problem.k.len();
        let mut dirty = vec![false; p];
        while self.evals < until && !self.done(shared) {
            if self.evals.is_multiple_of(1024) {
                if let Some(d) = shared.deadline {
                    if Instant::now() >= d {
                        shared.timed_out.store(true, Ordering::Relaxed);
                    }
                }
            }
            let (child, parent) = if self.pop.len() < cfg.population {
                (Individual::new(problem, problem.random_genome(&mut self.rng)), None)
            } else {
                let p1 = self.pick();
                let mut child = self.pop[p1].clone();
                dirty.fill(false);
                if self.rng.gen_bool(cfg.crossover_rate) {
                    let p2 = self.pick();
                    let h = problem.n / 2;
                    for i in 0..p {
                        if self.rng.gen_bool(0.5) {
                            child.genome[i] = self.pop[p2].genome[i];
                            child.nu[i * h..(i + 1) * h].copy_from_slice(&self.pop[p2].nu[i * h..(i + 1) * h]);
                        }
                    }
                }
                loop {
                    if let Some(i) = problem.mutate(&mut child.genome, &mut self.rng) {
                        dirty[i] = true;
                    }
                    if !self.rng.gen_bool(cfg.mutation_rate) {
                        break;
                    }
                }
                for (i, d) in dirty.iter().enumerate() {
                    if *d {
                        child.refresh(problem, i);
                    }
                }
                child.rescore(problem);
                (child, Some(p1))
            };
            let f = child.fitness;
            self.evals += 1;
            if every > 0 && self.evals.is_multiple_of(every) {
                shared.observer.progress(&ProgressEvent {
                    island: self.index,
                    evaluations: self.evals,
                    best_fitness: Some(self.best.min(f)),
                });
            }
            if f == 0 {
                shared.best_gen.fetch_min(self.evals, Ordering::Relaxed);
                self.found = Some((self.evals, child.genome));
                return;
            }
            if f < self.best {
                self.best = f;
                self.since_improvement = 0;
            } else {
                self.since_improvement += 1;
            }
            match parent {
                None => self.pop.push(child),
                Some(p1) => {
                    let old = self.pop[p1].fitness;
                    let accept = f <= old || {
                        let delta = (f - old) as f64;
                        self.rng.gen::<f64>() < (-delta / cfg.temperature).exp()
                    };
                    if accept {
                        self.pop[p1] = child;
                    }
                }
            }
            if self.since_improvement >= cfg.restart_after {
                self.pop.clear();
                self.best = u64::MAX;
                self.since_improvement = 0;
            }
        }
    }
}

/// Genetic search for one verified SDS with parameters `ps`.
///
/// Never claims nonexistence: an unsuccessful run reports
/// [`SearchStatus::BudgetExhausted`].
pub fn stochastic_sds(ps: &ParameterSet, cfg: &SearchConfig) -> Result<SearchOutcome> {
    stochastic_sds_with(ps, cfg, &Silent)
}

pub fn stochastic_sds_with(ps: &ParameterSet, cfg: &SearchConfig, observer: &dyn Observer) -> Result<SearchOutcome> {
    cfg.require_mode(SearchMode::Stochastic)?;
    if !ps.is_feasible() {
        return Err(Error::Infeasible(ps.to_string()));
    }
    let problem = Problem::new(ps)?;
    let start = Instant::now();
    let shared = Shared {
        best_gen: AtomicU64::new(u64::MAX),
        timed_out: AtomicBool::new(false),
        deadline: cfg.time_limit().map(|d| start + d),
        observer,
    };
    let n_islands = cfg.islands as u64;
    let mut islands: Vec<Island> = (0..cfg.islands)
        .map(|i| {
            let budget = cfg.max_evaluations / n_islands + u64::from((i as u64) < cfg.max_evaluations % n_islands);
            Island::new(cfg, i, budget)
        })
        .collect();
    // Islands advance in lockstep rounds so that all of them make progress
    // even on a single core.
    let mut until = 0u64;
    while islands.iter().any(|isl| !isl.done(&shared)) {
        until += ROUND;
        islands
            .par_iter_mut()
            .for_each(|isl| isl.run(&problem, cfg, until, &shared));
    }

    let winner = islands
        .iter()
        .filter_map(|isl| isl.found.as_ref().map(|(g, genome)| (*g, isl.index, genome)))
        .min_by_key(|&(g, i, _)| (g, i));
    // Count every island only up to the winning generation so that the
    // total does not depend on how far other islands ran concurrently.
    let cap = winner.map_or(u64::MAX, |w| w.0);
    let evaluations = islands.iter().map(|isl| isl.evals.min(cap)).sum();
    let stats = SearchStats {
        evaluations,
        prunes: 0,
        elapsed: start.elapsed(),
    };

    let Some((generation, island, genome)) = winner else {
        return Ok(SearchOutcome {
            params: ps.clone(),
            status: SearchStatus::BudgetExhausted,
            witnesses: Vec::new(),
            stats,
            found_at: None,
        });
    };
    let family = problem.family(genome);
    let report = verify_sds(&family);
    if !report.holds || !report.feasibility.linear {
        return Err(Error::NotSds(format!(
            "stochastic search produced an unverified family {:?}",
            family.sets()
        )));
    }
    Ok(SearchOutcome {
        params: ps.clone(),
        status: SearchStatus::Found,
        witnesses: vec![family],
        stats,
        found_at: Some((generation, island)),
    })
}
