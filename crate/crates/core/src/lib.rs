//! Periodic complementary sets of binary sequences (PCS) and supplementary
//! difference sets (SDS).
//!
//! - [`seqcore`]: ±1 sequences, PACF/NACF, complementarity tests.
//! - [`sds`]: ν-counts, SDS verification, parameter feasibility, SDS↔PCS.
//! - [`construct`]: base sequences, Golay doubling, family unions.
//! - [`search`]: exhaustive and genetic witness searches.
//! - [`catalog`]: verified assets, existence facts, closure, the existence table.

pub mod catalog;
pub mod construct;
pub mod error;
pub mod sds;
pub mod search;
pub mod seqcore;

pub use error::{Error, Result};
pub use sds::{ParameterSet, ResidueSubset, SdsFamily};
pub use seqcore::{BinarySequence, CorrelationVector, SequenceFamily};
