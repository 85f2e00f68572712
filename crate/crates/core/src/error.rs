//! Crate-wide error type.

use thiserror::Error;

use crate::experiments::OptResult;

/// Errors reported by fallible operations.
///
/// Shape and grade mismatches are programmer errors and panic instead; the
/// variants here cover conditions that depend on the input data.
#[derive(Debug, Error)]
pub enum Error {
    /// A stored component was NaN or infinite.
    #[error("non-finite component at index {index}")]
    NonFinite { index: usize },

    /// A vector or matrix had no entries.
    #[error("{what} must not be empty")]
    Empty { what: &'static str },

    /// A matrix row length did not match the row count.
    #[error("matrix is not square: {rows} rows but row {row} has length {len}")]
    NotSquare { rows: usize, row: usize, len: usize },

    /// The cofactor determinant is a factorial-cost oracle and refuses
    /// large inputs.
    #[error("cofactor determinant limited to size <= {max}, got {size}")]
    OracleSize { size: usize, max: usize },

    /// A family of vectors was numerically dependent.
    #[error("degenerate input: {what} = {value:.3e} is at or below the independence threshold {threshold:.1e}")]
    Degenerate {
        what: &'static str,
        value: f64,
        threshold: f64,
    },

    /// A representative vector was not unit within tolerance.
    #[error("vector {index} has Hermitian norm {norm} outside the unit band")]
    NotUnit { index: usize, norm: f64 },

    /// A scalar parameter fell outside its documented range.
    #[error("parameter {name} = {value} outside {range}")]
    Parameter {
        name: &'static str,
        value: f64,
        range: &'static str,
    },

    /// Rejection sampling exhausted its retry budget.
    #[error("rejection sampling failed after {tries} tries")]
    Sampling { tries: usize },

    /// The conjecture search found no configuration meeting the determinant
    /// constraint; the payload is the best infeasible attempt.
    #[error("no feasible configuration within budget; best |det| gap {gap:.3e}")]
    SearchFailure { best: Box<OptResult>, gap: f64 },
}

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
