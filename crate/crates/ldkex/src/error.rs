use thiserror::Error;

/// Errors shared across the library.
///
/// Size limits are enforced at construction time so that downstream code can
/// assume validated objects; `Domain` covers element-level violations such as
/// out-of-range table arguments or braid words exceeding an ambient strand
/// count.
#[derive(Debug, Error)]
pub enum Error {
    #[error("{what} is {got}, above the cap of {cap}")]
    SizeLimit {
        what: &'static str,
        got: usize,
        cap: usize,
    },

    #[error("{what}: expected length {expected}, got {got}")]
    LengthMismatch {
        what: &'static str,
        expected: usize,
        got: usize,
    },

    #[error("invalid {what}: {reason}")]
    Invalid { what: &'static str, reason: String },

    #[error("operation {op} not present in its pool (size {pool_size})")]
    UnknownOp { op: String, pool_size: usize },

    #[error("domain error: {0}")]
    Domain(String),

    #[error("unsupported configuration: {0}")]
    Config(String),

    #[error("protocol failure: {0}")]
    Protocol(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
