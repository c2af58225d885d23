use thiserror::Error;

use crate::arcset::BoundDirection;
use crate::strip::MarkedPoint;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("{0} is a boundary edge, not an arc")]
    EdgeNotArc(String),
    #[error("degenerate input: {0}")]
    Degenerate(String),
    #[error("not in the fan: {0}")]
    NotInFan(String),
    #[error("arcs do not cross: {0}")]
    NotCrossing(String),
    #[error("region cannot be written in the requested frame: {0}")]
    NotPresentable(String),
    #[error("no finite left approximation: {0}")]
    NoApproximation(String),
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("{point} is not {direction}-bounded, so the fan has no minimum")]
    Unbounded { point: MarkedPoint, direction: BoundDirection },
    #[error("could not decide: {0}")]
    Undecided(String),
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
    #[error("characterisations disagree: {0}")]
    Inconsistent(String),
    #[error("internal error: {0}")]
    Internal(String),
}

impl Error {
    /// Process exit code used by the command line front end.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Inconsistent(_) | Error::Internal(_) | Error::Undecided(_) => 3,
            _ => 2,
        }
    }
}
