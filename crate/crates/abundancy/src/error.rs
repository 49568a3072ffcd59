use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    /// Input outside an operation's stated domain.
    #[error("domain error: {0}")]
    Domain(String),

    /// An operation that requires a complete factorization was handed a
    /// partial one. Never silently degraded to a lower bound.
    #[error("incomplete factorization of {0}; refusing to evaluate")]
    Incomplete(String),

    /// A record hunt or table hit a value the factoring budget could not
    /// finish; the offending index is reported so nothing is skipped.
    #[error("factorization budget exhausted at {context} (n = {input})")]
    BudgetExhausted { context: String, input: String },

    /// Search or sieve exceeded a configured resource ceiling.
    #[error("resource limit: {0}")]
    ResourceLimit(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }
}
