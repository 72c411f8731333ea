use thiserror::Error;

/// Errors raised across the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("degenerate input: {0}")]
    DegenerateInput(String),
    #[error("radicands differ: {left} vs {right}")]
    FieldMismatch { left: String, right: String },
    #[error("negative radicand {0} has no real square root")]
    NonRealSurd(String),
    #[error("variable x{0} has no assigned value")]
    UnboundVariable(u32),
    #[error("series truncations differ: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },
    #[error("series is not invertible: {0}")]
    NonInvertibleSeries(String),
    #[error("index {index} exceeds series truncation {truncation}")]
    TruncationExceeded { index: usize, truncation: usize },
    #[error("explicit nested sum needs at least two denominator polynomials; use (-P1)^n for a single one")]
    OrderTooSmall,
    #[error("discriminant is zero; the two-root closed form does not apply")]
    RepeatedRoot,
    #[error("P2 evaluates to zero; the family collapses to a single denominator term")]
    DegenerateDenominator,
    #[error("series argument outside the convergence region: {0}")]
    DivergentArgument(String),
    #[error("unknown catalog entry '{0}'")]
    UnknownEntry(String),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("catalog entry '{entry}' disagrees with its cross-check at n = {n}")]
    CrossCheckMismatch { entry: String, n: usize },
    #[error("{0}")]
    Parse(#[from] ParseError),
    #[error("invalid spec document: {0}")]
    Spec(String),
}

pub type Result<T> = std::result::Result<T, Error>;

/// Syntax error with a 1-based source position.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}, column {column}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}
