//! Complete enumeration of SDS for a parameter set, up to equivalence.
//!
//! Each nonempty subset is built with 0 as its first element, the remaining
//! elements in increasing order, and is kept only if it is its own least
//! translate. Equal-size subsets are generated in non-decreasing
//! lexicographic order. The ν-profile is updated incrementally as elements
//! are added; with pruning on, a branch is cut as soon as some difference
//! count exceeds λ, which is sound because counts only grow along a branch.

use std::collections::BTreeMap;
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::config::{
    Observer, ProgressEvent, SearchConfig, SearchMode, SearchOutcome, SearchStats, SearchStatus, Silent,
};
use crate::error::{Error, Result};
use crate::sds::{canonicalize, enumerate_parameter_sets, verify_sds, ParameterSet, ResidueSubset, SdsFamily};

fn binomial(n: u128, k: u128) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc.saturating_mul(n - i) / (i + 1);
    }
    acc
}

/// Upper bound on leaves visited: Π over nonempty subsets of C(N−1, kᵢ−1).
pub fn estimate_sds_space(ps: &ParameterSet) -> u128 {
    ps.k.iter().filter(|&&k| k > 0).fold(1u128, |acc, &k| {
        acc.saturating_mul(binomial(ps.n as u128 - 1, k as u128 - 1))
    })
}

#[derive(Clone)]
struct Walker<'a> {
    n: usize,
    lambda: u64,
    k: &'a [usize],
    prune: bool,
    profile: Vec<u64>,
    chosen: Vec<Vec<usize>>,
    evaluations: u64,
    prunes: u64,
    found: Vec<Vec<Vec<usize>>>,
    deadline: Option<Instant>,
    timed_out: bool,
    /// When set, completed first subsets are collected here instead of descended.
    tasks: Option<Vec<Vec<usize>>>,
    observer: &'a dyn Observer,
}

impl<'a> Walker<'a> {
    fn new(ps: &'a ParameterSet, cfg: &SearchConfig, observer: &'a dyn Observer) -> Self {
        Self {
            n: ps.n,
            lambda: ps.lambda,
            k: &ps.k,
            prune: cfg.prune,
            profile: vec![0; ps.n],
            chosen: vec![Vec::new(); ps.k.len()],
            evaluations: 0,
            prunes: 0,
            found: Vec::new(),
            deadline: cfg.time_limit().map(|d| Instant::now() + d),
            timed_out: false,
            tasks: None,
            observer,
        }
    }

    /// Adds `x` to subset `i`; returns false if a count now exceeds λ.
    fn add(&mut self, i: usize, x: usize) -> bool {
        let n = self.n;
        let mut ok = true;
        for &e in &self.chosen[i] {
            let d = (x + n - e) % n;
            self.profile[d] += 1;
            self.profile[n - d] += 1;
            ok &= self.profile[d] <= self.lambda && self.profile[n - d] <= self.lambda;
        }
        self.chosen[i].push(x);
        ok
    }

    fn remove(&mut self, i: usize) {
        let n = self.n;
        let x = self.chosen[i].pop().expect("nonempty");
        for &e in &self.chosen[i] {
            let d = (x + n - e) % n;
            self.profile[d] -= 1;
            self.profile[n - d] -= 1;
        }
    }

    fn tick(&mut self) {
        let count = self.evaluations + self.prunes;
        let every = self.observer.interval();
        if every > 0 && count.is_multiple_of(every) {
            self.observer.progress(&ProgressEvent {
                island: 0,
                evaluations: self.evaluations,
                best_fitness: None,
            });
        }
        if count.is_multiple_of(4096) {
            if let Some(d) = self.deadline {
                self.timed_out |= Instant::now() >= d;
            }
        }
    }

    fn subset(&mut self, i: usize) {
        if self.timed_out {
            return;
        }
        if i == self.k.len() {
            self.evaluations += 1;
            self.tick();
            if self.profile[1..].iter().all(|&v| v == self.lambda) {
                self.found.push(self.chosen.clone());
            }
            return;
        }
        if self.k[i] == 0 {
            self.close_subset(i);
            return;
        }
        self.add(i, 0);
        self.element(i, 1);
        self.remove(i);
    }

    fn element(&mut self, i: usize, from: usize) {
        if self.timed_out {
            return;
        }
        let need = self.k[i] - self.chosen[i].len();
        if need == 0 {
            self.close_subset(i);
            return;
        }
        for x in from..=(self.n - need) {
            let ok = self.add(i, x);
            if ok || !self.prune {
                self.element(i, x + 1);
            } else {
                self.prunes += 1;
                self.tick();
            }
            self.remove(i);
        }
    }

    fn close_subset(&mut self, i: usize) {
        let elems = &self.chosen[i];
        let least = ResidueSubset::from_sorted_unchecked(self.n, elems.clone()).least_translate();
        let ordered = i == 0 || self.k[i - 1] != self.k[i] || self.chosen[i - 1] <= *elems;
        if least.elements() != elems.as_slice() || !ordered {
            self.prunes += 1;
            self.tick();
            return;
        }
        if i == 0 {
            if let Some(tasks) = self.tasks.as_mut() {
                tasks.push(elems.clone());
                return;
            }
        }
        self.subset(i + 1);
    }
}

fn check_budget(estimate: u128, cfg: &SearchConfig) -> Result<()> {
    if estimate > cfg.max_evaluations as u128 {
        return Err(Error::BudgetRefused {
            estimate,
            budget: cfg.max_evaluations,
        });
    }
    Ok(())
}

/// All SDS with parameters `ps`, one canonical representative per class.
pub fn exhaustive_sds(ps: &ParameterSet, cfg: &SearchConfig) -> Result<SearchOutcome> {
    exhaustive_sds_with(ps, cfg, &Silent)
}

pub fn exhaustive_sds_with(ps: &ParameterSet, cfg: &SearchConfig, observer: &dyn Observer) -> Result<SearchOutcome> {
    cfg.require_mode(SearchMode::Exhaustive)?;
    check_budget(estimate_sds_space(ps), cfg)?;
    let start = Instant::now();

    let mut root = Walker::new(ps, cfg, observer);
    root.tasks = Some(Vec::new());
    root.subset(0);
    let tasks = root.tasks.take().expect("set above");

    let parts: Vec<Walker> = tasks
        .par_iter()
        .map(|first| {
            let mut w = Walker::new(ps, cfg, observer);
            for &x in first {
                w.add(0, x);
            }
            w.subset(1);
            w
        })
        .collect();

    let mut stats = SearchStats {
        evaluations: root.evaluations,
        prunes: root.prunes,
        elapsed: Default::default(),
    };
    let mut timed_out = root.timed_out;
    let mut classes: BTreeMap<Vec<Vec<usize>>, SdsFamily> = BTreeMap::new();
    for w in parts {
        stats.evaluations += w.evaluations;
        stats.prunes += w.prunes;
        timed_out |= w.timed_out;
        for sets in w.found {
            let fam = SdsFamily::from_sets(ps.n, sets, ps.lambda)?;
            let canon = canonicalize(&fam);
            classes.entry(canon.sets()).or_insert(canon);
        }
    }
    let witnesses: Vec<SdsFamily> = classes.into_values().collect();
    for w in &witnesses {
        let r = verify_sds(w);
        if !r.holds {
            return Err(Error::NotSds(format!(
                "search produced an invalid family {:?}",
                w.sets()
            )));
        }
    }
    stats.elapsed = start.elapsed();
    let status = if !witnesses.is_empty() {
        SearchStatus::Found
    } else if timed_out {
        SearchStatus::BudgetExhausted
    } else {
        SearchStatus::ExhaustedNone
    };
    Ok(SearchOutcome {
        params: ps.clone(),
        status,
        witnesses,
        stats,
        found_at: None,
    })
}

/// Exhaustive search over every feasible parameter set for (p, N).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PcsSearchOutcome {
    pub p: usize,
    pub n: usize,
    pub status: SearchStatus,
    pub runs: Vec<SearchOutcome>,
}

impl PcsSearchOutcome {
    pub fn witnesses(&self) -> impl Iterator<Item = &SdsFamily> {
        self.runs.iter().flat_map(|r| r.witnesses.iter())
    }

    pub fn evaluations(&self) -> u64 {
        self.runs.iter().map(|r| r.stats.evaluations).sum()
    }
}

pub fn exhaustive_pcs(p: usize, n: usize, cfg: &SearchConfig) -> Result<PcsSearchOutcome> {
    exhaustive_pcs_with(p, n, cfg, &Silent)
}

pub fn exhaustive_pcs_with(
    p: usize,
    n: usize,
    cfg: &SearchConfig,
    observer: &dyn Observer,
) -> Result<PcsSearchOutcome> {
    cfg.require_mode(SearchMode::Exhaustive)?;
    if p == 0 || n == 0 {
        return Err(Error::EmptyFamily);
    }
    let sets = enumerate_parameter_sets(p, n);
    let total = sets
        .iter()
        .fold(0u128, |acc, ps| acc.saturating_add(estimate_sds_space(ps)));
    check_budget(total, cfg)?;
    let runs = sets
        .iter()
        .map(|ps| exhaustive_sds_with(ps, cfg, observer))
        .collect::<Result<Vec<_>>>()?;
    let status = if runs.iter().any(|r| r.status == SearchStatus::Found) {
        SearchStatus::Found
    } else if runs.iter().any(|r| r.status == SearchStatus::BudgetExhausted) {
        SearchStatus::BudgetExhausted
    } else {
        SearchStatus::ExhaustedNone
    };
    Ok(PcsSearchOutcome { p, n, status, runs })
}
