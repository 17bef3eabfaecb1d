//! Supplementary difference sets over Z_N and their correspondence with
//! periodic complementary sequence families.

pub mod canonical;
pub mod convert;
pub mod family;
pub mod format;
pub mod params;
pub mod subset;

pub use canonical::{canonicalize, equivalent, units};
pub use convert::{pcs_to_sds, sds_to_pcs};
pub use family::{difference_profile, verify_sds, FeasibilityReport, SdsFamily, SdsReport};
pub use format::{parse_sds, SdsRecord};
pub use params::{
    check_counting_constraint, check_linear_constraint, check_quadratic_constraint, enumerate_parameter_sets,
    ParameterSet,
};
pub use subset::ResidueSubset;

/// ν(X, m).
pub fn nu(x: &ResidueSubset, m: usize) -> crate::error::Result<usize> {
    x.nu(m)
}
