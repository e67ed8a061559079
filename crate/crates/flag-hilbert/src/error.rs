//! Error type shared by every module.

use crate::exact::{Integer, Rational};
use crate::rootsys::Family;
use thiserror::Error;

/// Everything that can go wrong short of an internal bug.
///
/// Domain violations (bad rank, malformed weight, inconsistent dimension
/// data) are reported through this enum; invariants that can only fail if
/// the library itself is wrong are enforced with assertions instead.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum Error {
    /// The rank is outside the allowed range for the family.
    #[error("invalid rank {rank} for family {family}: requires {constraint}")]
    InvalidRank {
        family: Family,
        rank: usize,
        constraint: &'static str,
    },

    /// A weight or root has the wrong number of coordinates for the system.
    #[error("rank mismatch: expected {expected}, got {got}")]
    RankMismatch { expected: usize, got: usize },

    /// A Weyl-formula product failed to be an integer, which signals an
    /// inconsistent root system or weight rather than a rounding issue.
    #[error("dimension product is not an integer: {value}")]
    NonIntegerProduct { value: Rational },

    /// A dimension list does not have the d + 1 entries required.
    #[error("dimension list has length {got}, expected {expected}")]
    BadLength { expected: usize, got: usize },

    /// The first dimension must be dim L(0) = 1.
    #[error("dimension list must start with 1, got {got}")]
    BadD0 { got: Integer },

    /// The truncated series kept a nonzero coefficient where the numerator
    /// must have ended, so the data is not a series with the claimed pole.
    #[error("nonzero tail coefficient {value} at degree {index}")]
    TailNonzero { index: usize, value: Integer },

    /// A differential-operator pass produced an unexpected pole order.
    #[error("pole order {got} does not match expected {expected}")]
    PoleOrderMismatch { expected: usize, got: usize },

    /// A weight string could not be parsed; `position` is a byte offset.
    #[error("weight parse error at position {position}: {message}")]
    WeightParse { position: usize, message: String },

    /// Dominant weights have nonnegative coordinates.
    #[error("negative weight coefficient at position {position}")]
    NegativeCoefficient { position: usize },

    /// A command-line request was structurally valid but unusable.
    #[error("{0}")]
    Usage(String),

    /// Writing output failed.
    #[error("io error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
