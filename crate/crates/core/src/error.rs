use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("malformed input: {0}")]
    Input(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("operands live in different polynomial rings")]
    RingMismatch,
    #[error("ambient rank mismatch: {0} vs {1}")]
    RankMismatch(usize, usize),
    #[error("operation requires homogeneous input: {0}")]
    NotHomogeneous(String),
    #[error("{0} is only defined for non-free modules")]
    FreeModule(&'static str),
    #[error("computational bound exceeded: {0}")]
    BoundExceeded(String),
    #[error("no verified reduction after {trials} trials (search bound r <= {rmax})")]
    ReductionFailure { trials: u32, rmax: usize },
    #[error("internal error: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
