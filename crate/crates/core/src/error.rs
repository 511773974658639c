use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A caller-supplied value violates an operation's precondition.
    #[error("invalid argument: {0}")]
    Argument(String),
    /// Unknown strategy or engine name, or inconsistent options.
    #[error("configuration error: {0}")]
    Config(String),
    /// The input is well-formed but the construction it asks for is not
    /// well-posed (e.g. a dual cone with a lineality space).
    #[error("degenerate input: {0}")]
    Degenerate(String),
    /// An enumeration or dimension guard was exceeded.
    #[error("resource limit exceeded: {0}")]
    Resource(String),
}

pub type Result<T> = std::result::Result<T, Error>;
