use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// An argument lies outside the domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),
    /// A buffer could not be allocated.
    #[error("resource error: {0}")]
    Resource(String),
    /// The requested quantity does not exist for this input (e.g. no closed form for λ).
    #[error("not available: {0}")]
    NotAvailable(String),
    /// Two independent routes disagreed. Indicates a bug.
    #[error("internal inconsistency: {0}")]
    Consistency(String),
    /// Precision escalation hit its cap without resolving the requested digits.
    #[error("unresolved after {max_bits} bits: {what}")]
    Unresolved { what: String, max_bits: u64 },
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }
}
