//! Crate-wide error type.

use thiserror::Error;

/// Errors reported by the library.
///
/// Mathematical *outcomes* (a failed check, an exhausted search budget) are
/// not errors; they are encoded in the result types of the corresponding
/// operations. `Error` covers contract violations: mismatched ambients,
/// malformed input, degenerate ideals fed to operations that exclude them.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum Error {
    /// Two objects live in polynomial rings with different variable counts.
    #[error("ambient mismatch: {0} variables vs {1}")]
    AmbientMismatch(usize, usize),

    /// An exponent left the representable range.
    #[error("exponent overflow (exponents are capped at {})", u16::MAX)]
    ExponentOverflow,

    /// The zero ideal was passed to an operation that excludes it.
    #[error("the zero ideal has no {0}")]
    ZeroIdeal(&'static str),

    /// The unit ideal was passed to an operation that excludes it.
    #[error("the unit ideal has no {0}")]
    UnitIdeal(&'static str),

    /// An operation restricted to squarefree ideals received a non-squarefree one.
    #[error("operation requires a squarefree ideal")]
    NotSquarefree,

    /// An operation restricted to equigenerated ideals received a mixed-degree one.
    #[error("operation requires an equigenerated ideal")]
    NotEquigenerated,

    /// Ideal powers start at k = 1.
    #[error("ideal power requires exponent k >= 1")]
    ZeroPower,

    /// A prime field was requested with a non-prime characteristic.
    #[error("characteristic must be 0 or a prime, got {0}")]
    NotPrime(u32),

    /// A generator order is not a permutation of the generator indices.
    #[error("generator order is not a permutation of 0..{0}")]
    NotAPermutation(usize),

    /// A variable priority is not a permutation of the variable indices.
    #[error("variable priority is not a permutation of 0..{0}")]
    BadVariablePriority(usize),

    /// A face was required to lie in a complex and does not.
    #[error("face is not in the complex")]
    NotAFace,

    /// An input does not meet a structural precondition.
    #[error("{0}")]
    Unsupported(&'static str),

    /// A vertex index is out of range.
    #[error("vertex index {0} out of range for {1} vertices")]
    BadVertex(usize, usize),

    /// Subset enumeration over this many vertices is out of desk scale.
    #[error("{0} vertices exceed the supported bound {1} for subset enumeration")]
    AmbientTooLarge(usize, usize),

    /// The truncation degree of the Koszul evaluator is below a generator degree.
    #[error("degree bound {0} is below the maximum generator degree {1}")]
    DegreeBoundTooSmall(u32, u32),

    /// The y-degree cap of a capped Rees computation is too small.
    #[error("y-degree cap {0} is below the required minimum {1}")]
    CapTooSmall(u32, u32),

    /// A reduction exceeded the x-degree safety bound.
    #[error("x-degree {0} exceeded the safety bound {1} during reduction")]
    XDegreeBoundExceeded(u32, u32),

    /// A claimed sub-ideal is not contained in the ambient ideal.
    #[error("ideal containment violated: {0}")]
    NotContained(&'static str),

    /// A generator map hit an index that is not a generator.
    #[error("index {0} is not a generator index (ideal has {1} generators)")]
    BadGeneratorIndex(usize, usize),

    /// A generator map has the wrong number of entries.
    #[error("generator map covers {0} generators but the source has {1}")]
    BadMapLength(usize, usize),

    /// A claimed partition of the generators is not one.
    #[error("generator partition mismatch: {0}")]
    BadPartition(&'static str),

    /// Malformed text input.
    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },

    /// Anything that indicates an internal inconsistency.
    #[error("internal invariant violated: {0}")]
    Internal(&'static str),
}

impl Error {
    pub(crate) fn parse(line: usize, msg: impl Into<String>) -> Self {
        Error::Parse { line, msg: msg.into() }
    }
}
