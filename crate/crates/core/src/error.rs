use thiserror::Error;

/// Errors raised by the arithmetic, search and rendering routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Operands live in different representations (basis, dimension or A0 flag).
    #[error("representation mismatch: {0}")]
    Representation(String),
    /// An argument violates a documented precondition.
    #[error("invalid argument: {0}")]
    Argument(String),
    /// The operation is undefined for these inputs.
    #[error("outside domain: {0}")]
    Domain(String),
    /// Input that claims a structural property does not have it.
    #[error("integrity violation: {0}")]
    Integrity(String),
    /// The requested computation exceeds the configured budget.
    #[error("resource limit: {0}")]
    Resource(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
