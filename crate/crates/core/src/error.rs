use thiserror::Error;

/// Errors raised while building rings, parsing input or running checks.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A ring could not be constructed from the given parameters.
    #[error("construction error: {0}")]
    Construction(String),

    /// Malformed ring specification or flag pattern.
    #[error("syntax error at position {pos}: {msg}")]
    Syntax { pos: usize, msg: String },

    /// The request is well formed but not applicable (wrong ring shape, caps exceeded, ...).
    #[error("usage error: {0}")]
    Usage(String),

    /// A structural invariant (ring axiom, derived-set inclusion) failed.
    #[error("invariant violation: {0}")]
    Invariant(String),
}

impl Error {
    pub(crate) fn syntax(pos: usize, msg: impl Into<String>) -> Self {
        Error::Syntax {
            pos,
            msg: msg.into(),
        }
    }

    /// Process exit status associated with this error.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Construction(_) | Error::Syntax { .. } | Error::Usage(_) => 2,
            Error::Invariant(_) => 3,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
