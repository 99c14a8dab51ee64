use thiserror::Error;

/// Errors produced by graph construction, parsing, generators, and the
/// enumeration front ends.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum Error {
    #[error("vertex {vertex} out of range for graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),

    #[error("parse error on line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("blow-up size {n} is not divisible by pattern order {order}")]
    IndivisibleBlowup { n: usize, order: usize },

    #[error("{0} is not prime")]
    NotPrime(usize),

    #[error("pattern {0} is not supported by this operation")]
    UnsupportedPattern(String),

    #[error("graph has {n} vertices, exceeding the oracle cap of {cap}")]
    OracleCapExceeded { n: usize, cap: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
