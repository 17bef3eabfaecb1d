//! Binary sequences, their autocorrelation functions, and complementarity tests.

pub mod correlation;
pub mod family;
pub mod sequence;
pub mod text;

pub use correlation::{nacf, pacf, pacf_direct, pacf_from_nacf, CorrelationKind, CorrelationVector};
pub use family::{is_acs, is_pcs, ComplementarityReport, Offender, SequenceFamily};
pub use sequence::BinarySequence;
pub use text::{parse_family, render_family, SequenceFile};
