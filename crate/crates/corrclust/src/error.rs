use thiserror::Error;

/// Crate-wide error type.
///
/// Variants correspond to the CLI exit-code contract: parameter errors,
/// structural input errors, enumeration size caps, and solver failures.
#[derive(Debug, Clone, Error)]
pub enum Error {
    /// A numeric parameter is outside its legal range.
    #[error("parameter error: {0}")]
    Parameter(String),
    /// Inputs are structurally inconsistent (sizes, indices, duplicates).
    #[error("input error: {0}")]
    Input(String),
    /// An exact method was asked to exceed its enumeration cap.
    #[error("size cap exceeded: {0}")]
    SizeCap(String),
    /// The LP solver failed to produce a usable solution.
    #[error("solver failure: {0}")]
    Solver(String),
}

pub type Result<T> = std::result::Result<T, Error>;
