use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("series has zero constant term and is not invertible")]
    NotInvertible,
    #[error("inner series of a composition must have zero constant term")]
    InnerNotDelta,
    #[error("series is not a delta series (order must be exactly 1)")]
    NotDelta,
    #[error("series precision {available} is below the required {required}")]
    InsufficientPrecision { required: usize, available: usize },
    #[error("invalid Sheffer pair: {0}")]
    InvalidPair(&'static str),
    #[error("umbral composition needs basis element {index} but only {available} were supplied")]
    MissingBasisElement { index: usize, available: usize },
    #[error("lambda must differ from 1")]
    LambdaIsOne,
    #[error("unknown identity `{0}`")]
    UnknownIdentity(String),
    #[error("bad parameters for `{id}`: {reason}")]
    BadParams { id: String, reason: String },
    #[error("report sets do not cover the same parameters: {0}")]
    CoverageMismatch(String),
    #[error("malformed rational literal `{0}`")]
    ParseRational(String),
    #[error("malformed report document: {0}")]
    Decode(String),
}
