use thiserror::Error;

/// Errors produced by construction and evaluation routines.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// Degree or node count outside the supported range.
    #[error("degree {given} out of range ({reason})")]
    DegreeRange { given: usize, reason: &'static str },

    /// An argument combination that the operation cannot accept.
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// Evaluation requested outside the interval on which the interpolant
    /// is defined. Extrapolation is never silent.
    #[error("evaluation point {t} outside allowed interval [{lo}, {hi}]")]
    OutOfDomain { t: f64, lo: f64, hi: f64 },

    /// A window does not carry enough borrowed samples for the requested
    /// scheme; callers fall back to plain polynomial interpolation.
    #[error("boundary window: {side} margin has {have} samples, scheme needs {need}")]
    BoundaryWindow {
        side: &'static str,
        have: usize,
        need: usize,
    },

    /// Chebyshev fit with fewer quadrature points than coefficients.
    #[error("aliasing: fit of degree {degree} needs at least {degree}+1 quadrature points, got {points}")]
    Aliasing { degree: usize, points: usize },

    /// Two series defined on different physical intervals were combined.
    #[error("interval mismatch: {a} s vs {b} s")]
    IntervalMismatch { a: f64, b: f64 },

    /// A stream slice request that is not contiguous within the stream.
    #[error("increment window [{start}, {end}) outside stream of length {len}")]
    StreamBounds {
        start: isize,
        end: isize,
        len: usize,
    },

    /// Malformed CSV while importing an increment stream.
    #[error("csv parse error at line {line}: {message}")]
    CsvParse { line: usize, message: String },
}
