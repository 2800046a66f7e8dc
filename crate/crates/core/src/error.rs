//! Crate-wide error type.
//!
//! Variants are grouped by how a front end should react: input-contract
//! violations (schema class), enumeration guards, internal
//! math-consistency failures (a bug, never a user error), and the refusal
//! to evaluate a Seshadri constant of a non-nef bundle.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    /// Malformed Cartan type string or unsupported family/rank combination.
    #[error("invalid root system type: {0}")]
    InvalidType(String),

    /// A vector that was expected to be a root of the ambient system.
    #[error("not a root of this system: {0}")]
    NotARoot(String),

    /// Simple-root index outside 1..=rank.
    #[error("simple root index {index} out of range 1..={rank}")]
    IndexOutOfRange { index: usize, rank: usize },

    /// A word failed the left-to-right reducedness test.
    #[error("word not reduced at position {position}")]
    NotReduced { position: usize },

    /// Generic input-contract violation (schema class).
    #[error("{0}")]
    Invalid(String),

    /// A restriction table is missing a curve the evaluation needs.
    #[error("missing table entry for curve {0}")]
    MissingTableEntry(String),

    /// An enumeration would exceed its documented practical bound.
    #[error("guard exceeded: {0}")]
    Guard(String),

    /// Two independent computations of the same quantity disagreed.
    /// Signals a math or implementation bug, never bad input.
    #[error("math consistency failure: {0}")]
    MathConsistency(String),

    /// Integer overflow in degree or split-type arithmetic.
    #[error("arithmetic overflow in {0}")]
    Overflow(&'static str),

    /// Seshadri constants are defined for nef bundles only.
    #[error("seshadri constant requested for a non-nef bundle (witness: {witness})")]
    NonNef { witness: String },
}

pub type Result<T> = std::result::Result<T, Error>;
