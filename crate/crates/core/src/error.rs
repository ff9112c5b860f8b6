use thiserror::Error;

/// Errors raised by the toolkit.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid parameters: {0}")]
    InvalidParams(String),

    #[error("parameters ({n},{k},{l}) are not canonical (k + l > n); canonicalize first")]
    NotCanonical { n: u32, k: u32, l: u32 },

    #[error("index out of range: {0}")]
    OutOfRange(String),

    #[error("{what} has {size} vertices, exceeding the cap of {cap}")]
    CapExceeded { what: &'static str, size: usize, cap: usize },

    #[error("matrix is not symmetric at ({row},{col})")]
    NotSymmetric { row: usize, col: usize },

    #[error("eigensolver did not converge: {0}")]
    NotConverged(String),

    #[error("length mismatch: expected {expected}, got {actual}")]
    LengthMismatch { expected: usize, actual: usize },

    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("action domain has {actual} points but the graph has {expected} vertices")]
    DomainMismatch { expected: usize, actual: usize },

    #[error("generator {0} is not an automorphism")]
    NotAnAutomorphism(usize),

    #[error("vertex {0} is not in the k-subset class")]
    NotInFirstClass(usize),

    #[error("inconsistent line-graph input: {0}")]
    LineGraphInput(String),

    #[error("format error: {0}")]
    Format(String),
}

pub type Result<T> = std::result::Result<T, Error>;
