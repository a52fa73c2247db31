use thiserror::Error;

/// Errors shared by every module in this crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("not a permutation of 1..={n}: {reason}")]
    InvalidPermutation { n: usize, reason: String },

    #[error("not an r-regular multipermutation: {0}")]
    InvalidMultipermutation(String),

    #[error("length mismatch: left has n={left}, right has n={right}")]
    LengthMismatch { left: usize, right: usize },

    #[error("regularity mismatch: left has r={left}, right has r={right}")]
    RegularityMismatch { left: usize, right: usize },

    #[error("index {index} out of range 1..={n}")]
    IndexOutOfRange { index: usize, n: usize },

    #[error("r={r} does not divide n={n}")]
    NotDivisible { n: usize, r: usize },

    #[error("{what}: size {size} exceeds cap {cap}")]
    CapExceeded {
        what: &'static str,
        size: usize,
        cap: usize,
    },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("cut profile {0:?} has no even entry, so no binary multipermutation realizes it")]
    UnrealizableProfile(Vec<u32>),

    #[error("wrong regime: {0}")]
    WrongRegime(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
