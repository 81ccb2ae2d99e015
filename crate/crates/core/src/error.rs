use thiserror::Error;

use crate::graph::GraphError;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum Error {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("malformed burning sequence: {0}")]
    InvalidSequence(String),
    #[error("bad family spec {spec:?}: {msg}")]
    Spec { spec: String, msg: String },
    #[error("graph is not {0}")]
    WrongFamily(&'static str),
    /// The node budget ran out before the search finished. The bounds are still valid.
    #[error(
        "search budget exhausted after {nodes} nodes; burning number lies in [{lower}, {upper}]"
    )]
    Inconclusive {
        lower: usize,
        upper: usize,
        nodes: u64,
    },
}

impl Error {
    pub(crate) fn param(msg: impl Into<String>) -> Self {
        Error::InvalidParameter(msg.into())
    }
}
