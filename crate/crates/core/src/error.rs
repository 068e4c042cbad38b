use thiserror::Error;

use crate::schemes::SchemeId;
use crate::verify::VerificationReport;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    /// The parameters do not describe a simple four-regular circulant C_n(a,b).
    #[error("invalid parameters: {0}")]
    Parameter(String),

    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    Index { vertex: usize, n: usize },

    /// A construction produced something that does not verify. The report
    /// carries every conflict so the failure can be audited.
    #[error("scheme {scheme} produced an invalid coloring: {detail}")]
    SchemeInvalid {
        scheme: SchemeId,
        detail: String,
        report: Option<Box<VerificationReport>>,
    },

    #[error("outer cycle completion failed: {0}")]
    CompletionFailure(String),

    /// A coloring that does not assign every vertex and edge, or that does
    /// not match the graph it is checked against.
    #[error("coloring does not cover the graph: {0}")]
    Coverage(String),

    #[error("no construction covers C_{n}({a},{b})")]
    NotCovered { n: usize, a: usize, b: usize },

    #[error("malformed input: {0}")]
    Format(String),

    #[error("search budget exceeded after {nodes} nodes")]
    BudgetExceeded { nodes: u64 },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    pub(crate) fn param(msg: impl Into<String>) -> Self {
        Error::Parameter(msg.into())
    }
}
