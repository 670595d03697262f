//! Error type shared by the whole crate.

use thiserror::Error;

/// Everything that can go wrong when building or comparing the
/// combinatorial objects in this crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Text input that does not parse as a partition, bipartition, or label.
    #[error("parse error: {0}")]
    Parse(String),

    /// Weight parameters outside the domain of the requested operation.
    #[error("invalid weight parameters: {0}")]
    Params(String),

    /// Two inputs that should have the same rank do not.
    #[error("rank mismatch: {0}")]
    RankMismatch(String),

    /// A shift level too small to hold the requested rows, or a
    /// conjugation level too small to contain the entries.
    #[error("level too small: {0}")]
    Level(String),

    /// An entry multiset that fails its validity conditions.
    #[error("invalid symbol multiset: {0}")]
    InvalidSymbol(String),

    /// A stated precondition of the operation does not hold.
    #[error("precondition violated: {0}")]
    Precondition(String),

    /// Inputs that cannot be compared (different ground sets, parameters,
    /// or label kinds).
    #[error("incompatible inputs: {0}")]
    Incompatible(String),

    /// A verification check name that is not registered.
    #[error("unknown check: {0}")]
    UnknownCheck(String),

    /// A requested bound above the documented limit for a check.
    #[error("bound exceeded: {0}")]
    BoundExceeded(String),

    /// Malformed JSON input.
    #[error("json error: {0}")]
    Json(String),

    /// An internal consistency failure; indicates a bug, not bad input.
    #[error("internal invariant broken: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
