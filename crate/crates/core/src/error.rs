// SPDX-License-Identifier: Apache-2.0

use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("{what} = {value} is outside the supported range [{min}, {max}]")]
    OutOfRange {
        what: &'static str,
        value: i64,
        min: i64,
        max: i64,
    },

    #[error("vectors span a subspace of dimension {rank}, not the ambient dimension {ambient}")]
    NotSpanning { rank: usize, ambient: usize },

    #[error("vector {0} is zero")]
    ZeroVector(usize),

    #[error("vectors {0} and {1} are parallel")]
    ParallelVectors(usize, usize),

    #[error("expected at least {needed} vectors, got {got}")]
    TooFewVectors { needed: usize, got: usize },

    #[error("expected {expected} weights, got {got}")]
    WeightCount { expected: usize, got: usize },

    #[error("weights sum to {0}, not 1")]
    WeightSum(String),

    #[error("weight {index} is negative ({value}); sampling needs a probability distribution")]
    NegativeWeight { index: usize, value: String },

    #[error("guard `{guard}` exceeded: {actual} > {limit}")]
    Guard {
        guard: &'static str,
        limit: u64,
        actual: u64,
    },

    #[error("{0} is not a prime")]
    NotPrime(u64),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("integer overflow in fast path ({0})")]
    Overflow(&'static str),

    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    pub(crate) fn guard(guard: &'static str, limit: u64, actual: u64) -> Self {
        Error::Guard {
            guard,
            limit,
            actual,
        }
    }
}
