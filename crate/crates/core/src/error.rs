use thiserror::Error;

/// Errors produced anywhere in the engine.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("unsupported root datum {family}{rank} (supported: B/C, rank 1..=4)")]
    UnsupportedDatum { family: String, rank: usize },

    #[error("no numeric valuation supplied for generator {0}")]
    MissingValuation(String),

    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("exact division left a nonzero remainder ({0}); holomorphy violated")]
    NonzeroRemainder(String),

    #[error("divergent series: {0}")]
    Divergent(String),

    #[error("requested accuracy {target:e} not reached; achieved bound {achieved:e}")]
    Unreachable { target: f64, achieved: f64 },

    #[error("rational reconstruction failed: {0}")]
    Reconstruction(String),

    #[error("no admissible generic direction found after {0} perturbations")]
    DegenerateDirection(usize),

    #[error("linear system does not determine the target: {0}")]
    Underdetermined(String),
}

pub type Result<T> = std::result::Result<T, Error>;
