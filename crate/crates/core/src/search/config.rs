use std::time::Duration;

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::error::{Error, Result};
use crate::sds::{ParameterSet, SdsFamily};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SearchMode {
    Exhaustive,
    Stochastic,
}

/// Search knobs. Budgets count ν-profile evaluations, not time, so results do
/// not depend on the machine; `time_limit_ms` is an optional safety cap and
/// the only source of nondeterminism when it fires.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SearchConfig {
    pub mode: SearchMode,
    pub max_evaluations: u64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub time_limit_ms: Option<u64>,
    pub seed: u64,
    pub population: usize,
    pub mutation_rate: f64,
    pub crossover_rate: f64,
    /// Evaluations without improvement of an island's best before it restarts.
    pub restart_after: u64,
    /// A child that is worse than its parent by Δ still replaces it with
    /// probability exp(−Δ / temperature).
    #[serde(default = "default_temperature")]
    pub temperature: f64,
    pub islands: usize,
    pub prune: bool,
}

pub const DEFAULT_SEED: u64 = 0x5eed_2008;

fn default_temperature() -> f64 {
    0.8
}

impl Default for SearchConfig {
    fn default() -> Self {
        Self::exhaustive()
    }
}

impl SearchConfig {
    pub fn exhaustive() -> Self {
        Self {
            mode: SearchMode::Exhaustive,
            max_evaluations: 100_000_000,
            time_limit_ms: None,
            seed: DEFAULT_SEED,
            population: 4,
            mutation_rate: 0.05,
            crossover_rate: 0.1,
            restart_after: 2_000_000,
            temperature: default_temperature(),
            islands: 4,
            prune: true,
        }
    }

    pub fn stochastic() -> Self {
        Self {
            mode: SearchMode::Stochastic,
            ..Self::exhaustive()
        }
    }

    pub fn with_budget(mut self, max_evaluations: u64) -> Self {
        self.max_evaluations = max_evaluations;
        self
    }

    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = seed;
        self
    }

    pub fn with_prune(mut self, prune: bool) -> Self {
        self.prune = prune;
        self
    }

    pub fn with_islands(mut self, islands: usize) -> Self {
        self.islands = islands;
        self
    }

    pub fn time_limit(&self) -> Option<Duration> {
        self.time_limit_ms.map(Duration::from_millis)
    }

    pub fn validate(&self) -> Result<()> {
        let bad = |m: &str| Err(Error::Config(m.to_string()));
        if self.max_evaluations == 0 {
            return bad("budget must be positive");
        }
        if self.time_limit_ms == Some(0) {
            return bad("time limit must be positive");
        }
        if self.mode == SearchMode::Stochastic {
            if self.population == 0 || self.islands == 0 || self.restart_after == 0 {
                return bad("population, islands and restart_after must be positive");
            }
            if !(self.mutation_rate > 0.0 && self.mutation_rate < 1.0) {
                return bad("mutation rate must lie in (0, 1)");
            }
            if !(self.crossover_rate > 0.0 && self.crossover_rate <= 1.0) {
                return bad("crossover rate must lie in (0, 1]");
            }
            if !(self.temperature > 0.0 && self.temperature.is_finite()) {
                return bad("temperature must be positive");
            }
        }
        Ok(())
    }

    pub(crate) fn require_mode(&self, mode: SearchMode) -> Result<()> {
        self.validate()?;
        if self.mode != mode {
            return Err(Error::Config(format!("expected {mode:?} mode, got {:?}", self.mode)));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum SearchStatus {
    Found,
    ExhaustedNone,
    BudgetExhausted,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchStats {
    pub evaluations: u64,
    pub prunes: u64,
    /// Wall time; excluded from serialized output so that runs are byte-stable.
    #[serde(skip)]
    pub elapsed: Duration,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchOutcome {
    pub params: ParameterSet,
    pub status: SearchStatus,
    pub witnesses: Vec<SdsFamily>,
    pub stats: SearchStats,
    /// Generation (island-local evaluation count) and island of the returned
    /// witness; stochastic mode only.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub found_at: Option<(u64, usize)>,
}

/// Periodic progress report from a running search.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ProgressEvent {
    pub island: usize,
    pub evaluations: u64,
    pub best_fitness: Option<u64>,
}

impl ProgressEvent {
    pub fn line(&self) -> String {
        match self.best_fitness {
            Some(f) => format!(
                "island={} evaluations={} best_fitness={f}",
                self.island, self.evaluations
            ),
            None => format!("island={} evaluations={} best_fitness=-", self.island, self.evaluations),
        }
    }
}

pub trait Observer: Sync {
    /// Emit every this many evaluations (per island); 0 disables.
    fn interval(&self) -> u64 {
        0
    }

    fn progress(&self, _event: &ProgressEvent) {}
}

/// Observer that ignores all events.
pub struct Silent;

impl Observer for Silent {}

/// Stable identifier of a search request: hex prefix of SHA-256 over the
/// serialized request.
pub fn run_id(kind: &str, request: &impl Serialize, cfg: &SearchConfig) -> String {
    let body = serde_json::to_string(&(kind, request, cfg)).expect("request serializes");
    let digest = Sha256::digest(body.as_bytes());
    hex::encode(&digest[..8])
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn validation() {
        assert!(SearchConfig::exhaustive().validate().is_ok());
        assert!(SearchConfig::exhaustive().with_budget(0).validate().is_err());
        let mut c = SearchConfig::stochastic();
        c.mutation_rate = 0.0;
        assert!(c.validate().is_err());
        let mut c = SearchConfig::stochastic();
        c.population = 0;
        assert!(c.validate().is_err());
    }

    #[test]
    fn run_ids_are_stable_and_distinct() {
        let c = SearchConfig::exhaustive();
        let a = run_id("sds", &"(4;3;2)", &c);
        assert_eq!(a, run_id("sds", &"(4;3;2)", &c));
        assert_ne!(a, run_id("sds", &"(4;1;0)", &c));
        assert_eq!(a.len(), 16);
    }
}
