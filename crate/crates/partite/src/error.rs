use thiserror::Error;

/// Crate-wide error type.
///
/// Variants are coarse on purpose: callers mostly need to distinguish
/// "the input was bad" from "the input was fine but too big for an exact
/// routine" from "a randomized construction gave up". The CLI maps these
/// onto distinct exit codes.
#[derive(Debug, Error)]
pub enum Error {
    /// Malformed or out-of-contract input (bad vertex index, loop edge,
    /// zero part size, unsatisfiable parameter combination, ...).
    #[error("invalid input: {0}")]
    InvalidInput(String),

    /// The request is well-formed but exceeds a documented cap of an
    /// exact routine.
    #[error("capacity exceeded in {what}: {detail}")]
    Capacity { what: &'static str, detail: String },

    /// A minimum-degree precondition failed. `required` is the exact
    /// rational bound the degree had to exceed.
    #[error("minimum degree {actual} does not exceed required bound {required} (deficit {deficit})")]
    MinDegree {
        actual: usize,
        required: String,
        deficit: String,
    },

    /// A randomized or search-based construction exhausted its retries.
    #[error("construction failed: {0}")]
    Construction(String),

    /// Byte-level parse failure in a serialized graph.
    #[error("parse error at byte {offset}: {reason}")]
    Parse { offset: usize, reason: String },

    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidInput(msg.into())
    }

    pub fn capacity(what: &'static str, detail: impl Into<String>) -> Self {
        Error::Capacity {
            what,
            detail: detail.into(),
        }
    }
}
