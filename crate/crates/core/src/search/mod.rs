//! Exhaustive and stochastic searches for SDS, PCS, base sequences and Golay pairs.

pub mod config;
pub mod exhaustive;
pub mod sequences;
pub mod stochastic;

pub use config::{
    run_id, Observer, ProgressEvent, SearchConfig, SearchMode, SearchOutcome, SearchStats, SearchStatus, Silent,
    DEFAULT_SEED,
};
pub use exhaustive::{
    estimate_sds_space, exhaustive_pcs, exhaustive_pcs_with, exhaustive_sds, exhaustive_sds_with, PcsSearchOutcome,
};
pub use sequences::{estimate_base_space, exhaustive_base, exhaustive_golay};
pub use stochastic::{stochastic_sds, stochastic_sds_with, MAX_MASK_MODULUS};

/// The stochastic fitness Σ_{m=1}^{⌊N/2⌋} (profile(m) − λ)² of an arbitrary
/// family, for N ≤ 64.
pub fn fitness(f: &crate::sds::SdsFamily) -> crate::error::Result<u64> {
    let ps = f.parameter_set();
    let problem = stochastic::Problem::new(&ps)?;
    let genome: Vec<u64> = f.subsets().iter().map(|x| x.to_mask()).collect();
    Ok(problem.fitness(&genome))
}
