use thiserror::Error;

/// Errors shared across the numeric modules.
#[derive(Debug, Clone, Error)]
pub enum Error {
    /// The parametric constants have no real square-root branch, so no
    /// real bound-state solution exists for these coefficients.
    #[error("no real bound-state branch: {0} is negative ({1})")]
    ComplexBranch(&'static str, f64),

    /// An argument left the domain of the function.
    #[error("domain error: {0}")]
    Domain(String),

    /// A bracketing root search was handed a bracket without a sign change.
    #[error("residual does not change sign over bracket [{lo}, {hi}]")]
    NoSignChange { lo: f64, hi: f64 },

    /// An iterative scheme hit its iteration cap.
    #[error("{what} failed to converge after {iterations} iterations")]
    NonConvergence { what: &'static str, iterations: usize },

    /// A finite-difference step underflowed at working precision.
    #[error("step {0} rounds to zero at working precision")]
    DegenerateStep(f64),

    /// The finite-difference grid cannot separate the requested eigenvalues.
    #[error("grid too coarse: {0}")]
    GridTooCoarse(String),

    /// Eigenpair index out of range.
    #[error("eigenpair index {index} out of range (have {count})")]
    IndexOutOfRange { index: usize, count: usize },

    /// Grid refinement stalled before the eigenvalue settled.
    #[error("eigenvalue did not settle after {0} grid refinements")]
    NoConvergenceUnderRefinement(usize),

    /// Malformed molecule constants input.
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
}

pub type Result<T> = std::result::Result<T, Error>;
