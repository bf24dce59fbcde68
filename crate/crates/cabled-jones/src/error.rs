//! Crate-wide error type.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("zero polynomial has no degree")]
    ZeroPolynomial,

    #[error("invalid braid word: {0}")]
    InvalidBraid(String),

    #[error("invalid planar diagram: {0}")]
    InvalidDiagram(String),

    #[error("evaluation budget exceeded: {0}")]
    Budget(String),

    #[error("parameter error: {0}")]
    Parameter(String),

    #[error("domain error: {0}")]
    Domain(String),

    #[error("no quasi-polynomial of period <= {pi_max} fits; first inconsistent n = {first_bad_n}")]
    FitFailed { pi_max: usize, first_bad_n: i64 },

    #[error("cancellation risk at n = {n}: tied maximizers 2k ∈ {tied_twok:?}")]
    CancellationRisk { n: i64, tied_twok: Vec<i64> },

    #[error("Jones slope collision: p/q = {pq} is a slope of the base model")]
    SlopeCollision { pq: String },

    #[error("hypothesis violated: {0}")]
    Hypothesis(String),

    #[error("unknown catalog knot: {0}")]
    UnknownCatalog(String),

    #[error("parse error: {0}")]
    Parse(String),
}
