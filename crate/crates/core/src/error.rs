use thiserror::Error;

use crate::partition::Corner;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PartitionError {
    #[error("syntax error at byte {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("point {0} appears twice")]
    DuplicatePoint(String),
    #[error("point {0} is not covered by any block")]
    UncoveredPoint(String),
    #[error("point {0} is out of range")]
    IndexOutOfRange(String),
    #[error("empty block")]
    EmptyBlock,
    #[error("colors differ at middle position {position}")]
    ColorMismatch { position: usize },
    #[error("cannot compose: {lower} lower points against {upper} upper points")]
    ArityMismatch { lower: usize, upper: usize },
    #[error("cannot rotate {0}: source row is empty")]
    EmptyRow(Corner),
    #[error("unknown partition name {0:?}")]
    UnknownName(String),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}
