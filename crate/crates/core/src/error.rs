use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("unknown algebra {0:?}")]
    UnknownAlgebra(String),

    #[error("parameter constraint violated for {algebra}: {detail}")]
    Constraint { algebra: String, detail: String },

    #[error("subspace is not an ideal: [e_{basis}, v_{vector}] leaves it")]
    NotIdeal { basis: usize, vector: usize },

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("invalid input: {0}")]
    Input(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl Error {
    pub(crate) fn pre(msg: impl Into<String>) -> Self {
        Error::Precondition(msg.into())
    }
}
