use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("invalid sequence entry {value} at index {index} (must be +1 or -1)")]
    InvalidEntry { index: usize, value: i64 },

    #[error("sequence must have length at least 1")]
    EmptySequence,

    #[error("family must contain at least one member")]
    EmptyFamily,

    #[error("length mismatch: expected {expected}, found {found}")]
    LengthMismatch { expected: usize, found: usize },

    #[error("shift {shift} out of range for length {len}")]
    ShiftOutOfRange { shift: usize, len: usize },

    #[error("residue {value} out of range for modulus {modulus}")]
    ResidueOutOfRange { value: usize, modulus: usize },

    #[error("duplicate residue {value} in subset")]
    DuplicateResidue { value: usize },

    #[error("modulus mismatch: expected {expected}, found {found}")]
    ModulusMismatch { expected: usize, found: usize },

    #[error("degenerate modulus N = {0}: no nonzero differences")]
    Degenerate(usize),

    #[error("family is not a periodic complementary set (first offending shift {shift}, residual {residual})")]
    NotPcs { shift: usize, residual: i64 },

    #[error("family is not a supplementary difference set: {0}")]
    NotSds(String),

    #[error("order condition 4(k1+...+kp - lambda) = pN fails: {lhs} != {rhs}")]
    OrderCondition { lhs: i64, rhs: i64 },

    #[error("invalid base sequences: {0}")]
    InvalidBase(String),

    #[error("invalid Golay pair: {0}")]
    InvalidGolay(String),

    #[error("{what} = {value} outside supported range {min}..={max}")]
    OutOfRange {
        what: &'static str,
        value: usize,
        min: usize,
        max: usize,
    },

    #[error("parameter set {0} fails the feasibility identities")]
    Infeasible(String),

    #[error("search space estimate {estimate} exceeds budget {budget}")]
    BudgetRefused { estimate: u128, budget: u64 },

    #[error("invalid search configuration: {0}")]
    Config(String),

    #[error("asset {name}: {reason}")]
    Asset { name: String, reason: String },

    #[error("closure contradiction at (p={p}, N={n}): derived {derived} but recorded as non-existent ({citation})")]
    ClosureContradiction {
        p: usize,
        n: usize,
        derived: String,
        citation: String,
    },

    #[error("catalog: {0}")]
    Catalog(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl Error {
    pub(crate) fn parse(line: usize, msg: impl Into<String>) -> Self {
        Error::Parse { line, msg: msg.into() }
    }
}
