use serde::{Deserialize, Serialize};

use super::params::ParameterSet;
use super::subset::ResidueSubset;
use crate::error::{Error, Result};

/// Subsets X₁,…,X_p of Z_N with a declared λ.
///
/// The declared λ is data, not a promise: [`verify_sds`] recomputes it.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SdsFamily {
    modulus: usize,
    subsets: Vec<ResidueSubset>,
    lambda: u64,
}

impl SdsFamily {
    pub fn new(modulus: usize, subsets: Vec<ResidueSubset>, lambda: u64) -> Result<Self> {
        if subsets.is_empty() {
            return Err(Error::EmptyFamily);
        }
        if let Some(bad) = subsets.iter().find(|s| s.modulus() != modulus) {
            return Err(Error::ModulusMismatch {
                expected: modulus,
                found: bad.modulus(),
            });
        }
        Ok(Self {
            modulus,
            subsets,
            lambda,
        })
    }

    /// Builds from raw element lists, validating each subset.
    pub fn from_sets(modulus: usize, sets: Vec<Vec<usize>>, lambda: u64) -> Result<Self> {
        let subsets = sets
            .into_iter()
            .map(|s| ResidueSubset::new(modulus, s))
            .collect::<Result<Vec<_>>>()?;
        Self::new(modulus, subsets, lambda)
    }

    pub fn modulus(&self) -> usize {
        self.modulus
    }

    pub fn subsets(&self) -> &[ResidueSubset] {
        &self.subsets
    }

    pub fn lambda(&self) -> u64 {
        self.lambda
    }

    pub fn p(&self) -> usize {
        self.subsets.len()
    }

    pub fn sizes(&self) -> Vec<usize> {
        self.subsets.iter().map(ResidueSubset::len).collect()
    }

    pub fn with_lambda(mut self, lambda: u64) -> Self {
        self.lambda = lambda;
        self
    }

    /// Parameter set implied by the subset sizes and the declared λ.
    pub fn parameter_set(&self) -> ParameterSet {
        ParameterSet::new(self.modulus, self.sizes(), self.lambda).expect("subset sizes are within 0..=N")
    }

    pub fn sets(&self) -> Vec<Vec<usize>> {
        self.subsets.iter().map(|s| s.elements().to_vec()).collect()
    }
}

/// Σᵢ ν(Xᵢ, m) for m = 1…N−1 (entry m−1). Empty when N = 1.
pub fn difference_profile(f: &SdsFamily) -> Vec<u64> {
    let n = f.modulus();
    if n < 2 {
        return Vec::new();
    }
    let mut counts = vec![0u64; n];
    for x in f.subsets() {
        let e = x.elements();
        for &a in e {
            for &b in e {
                if a != b {
                    counts[(a + n - b) % n] += 1;
                }
            }
        }
    }
    counts.remove(0);
    counts
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct FeasibilityReport {
    pub linear: bool,
    pub quadratic: bool,
    /// `None` when N = 1.
    pub counting: Option<bool>,
}

impl FeasibilityReport {
    pub fn of(ps: &ParameterSet) -> Self {
        Self {
            linear: ps.satisfies_linear(),
            quadratic: ps.satisfies_quadratic(),
            counting: ps.satisfies_counting().ok(),
        }
    }

    pub fn all(&self) -> bool {
        self.linear && self.quadratic && self.counting.unwrap_or(true)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SdsReport {
    pub holds: bool,
    pub degenerate: bool,
    pub modulus: usize,
    pub profile: Vec<u64>,
    pub sizes: Vec<usize>,
    pub declared_lambda: u64,
    /// The common profile value, if the profile is constant.
    pub derived_lambda: Option<u64>,
    /// Feasibility identities evaluated at the declared λ.
    pub feasibility: FeasibilityReport,
    /// First m (1-based) where the profile departs from the declared λ.
    pub first_mismatch: Option<usize>,
}

impl SdsReport {
    pub fn parameter_set(&self) -> ParameterSet {
        ParameterSet::new(self.modulus, self.sizes.clone(), self.declared_lambda)
            .expect("sizes are bounded by the modulus")
    }
}

/// True iff the difference profile is constant and equal to the declared λ.
pub fn verify_sds(f: &SdsFamily) -> SdsReport {
    let profile = difference_profile(f);
    let degenerate = f.modulus() < 2;
    let derived_lambda = match profile.first() {
        Some(&v) if profile.iter().all(|&x| x == v) => Some(v),
        _ => None,
    };
    let first_mismatch = profile.iter().position(|&v| v != f.lambda()).map(|i| i + 1);
    let holds = degenerate || first_mismatch.is_none();
    SdsReport {
        holds,
        degenerate,
        modulus: f.modulus(),
        sizes: f.sizes(),
        declared_lambda: f.lambda(),
        derived_lambda,
        feasibility: FeasibilityReport::of(&f.parameter_set()),
        first_mismatch,
        profile,
    }
}
