use thiserror::Error;

use crate::monomial::Monomial;

#[derive(Debug, Error)]
pub enum Error {
    #[error("degrees must satisfy 2 <= d1 <= d2 <= d3, got {0:?}")]
    InvalidDegrees([u32; 3]),

    #[error("monomial {monomial} does not have degree {expected}")]
    DegreeMismatch { expected: u32, monomial: Monomial },

    #[error("parse error: {0}")]
    Parse(String),

    #[error("shadow of degree {degree} has {shadow} monomials but only {target} are allowed")]
    ShadowExceedsTarget {
        degree: u32,
        shadow: usize,
        target: u64,
    },

    #[error("ideal is not artinian")]
    NotArtinian,

    #[error("{0} is not a prime")]
    NotPrime(u64),

    #[error("linear change of coordinates is singular")]
    SingularChange,

    #[error("initial ideal is not full in degree {degree}: the input is not a regular sequence or the cap is too low")]
    NonArtinianTruncation { degree: u32 },

    #[error("no accepted draw for {degrees:?} after {attempts} attempts (seeds {failing:?})")]
    RetriesExhausted {
        degrees: [u32; 3],
        attempts: u32,
        failing: Vec<u64>,
    },

    #[error("fixture error: {0}")]
    Fixture(String),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
