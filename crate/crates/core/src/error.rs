//! Error type shared by every module in the crate.

/// Errors produced by the library.
///
/// Everything here is a precondition violation or a "cannot happen for valid
/// inputs" guard; no variant is expected during a normal radius computation.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    /// An argument is outside the mathematical domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// A class parameter is outside its validity range.
    #[error("invalid class parameter: {0}")]
    InvalidClass(String),

    /// The requested evaluation convention is undefined for these inputs.
    #[error("convention error: {0}")]
    Convention(String),

    /// A series summation cannot reach the requested tolerance.
    #[error("series did not converge: {0}")]
    NonConvergent(String),

    /// The root bracketer never saw a sign change below the cap. For a valid
    /// majorant this signals an evaluator bug, not a property of the input.
    #[error("no sign change: {0}")]
    NoSignChange(String),

    /// A bracket guaranteed by theory was not found numerically.
    #[error("bracket failure: {0}")]
    BracketFailure(String),

    /// The function value at 0 is not negative, so there is no root to find.
    #[error("invalid problem: {0}")]
    InvalidProblem(String),

    /// The sampled monotonicity audit failed.
    #[error("non-monotone majorant detected: {0}")]
    NonMonotone(String),

    /// A fuzzed admissible sequence violated the bound it must satisfy.
    /// The bound provably holds below the radius, so this signals an
    /// implementation bug.
    #[error("counterexample found: {0}")]
    Counterexample(String),

    /// A malformed argument that is not a domain issue (bad tolerance, zero
    /// trials, too-small grid, ...).
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

/// Convenience alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;
