use thiserror::Error;

/// Errors raised by the library. Every variant carries enough context to
/// point at the offending input.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A malformed interval representation (duplicate id, gap in ids, left > right).
    #[error("invalid interval representation: entry {index} (vertex {vertex}): {reason}")]
    Representation {
        index: usize,
        vertex: usize,
        reason: String,
    },

    #[error("invalid argument: {0}")]
    Argument(String),

    /// The representation is not proper: `outer` strictly contains `inner`.
    #[error("representation is not proper: interval of vertex {outer} strictly contains interval of vertex {inner}")]
    NotProper { outer: usize, inner: usize },

    #[error("invalid bin-packing instance: {0}")]
    Instance(String),

    /// A gadget failed its own structural self-check.
    #[error("gadget construction failed: {0}")]
    Construction(String),

    /// Two routes that must agree did not. Always a bug.
    #[error("internal consistency violated: {0}")]
    Consistency(String),

    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },
}

pub type Result<T> = std::result::Result<T, Error>;
