use thiserror::Error;

/// Errors surfaced by the engine. Mismatch-style failures carry enough text
/// to locate the offending entry.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("size mismatch: {0} vs {1}")]
    SizeMismatch(usize, usize),

    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("parity mismatch: cannot collapse a partition of {size} to type {target}")]
    ParityMismatch { size: usize, target: char },

    #[error("invalid orbit label: {0}")]
    InvalidOrbit(String),

    #[error("type/size mismatch between orbits {0} and {1}")]
    OrbitMismatch(String, String),

    #[error("{what} = {value} exceeds the configured bound {bound}")]
    BoundExceeded { what: &'static str, value: usize, bound: usize },

    #[error("out of range: {0}")]
    OutOfRange(String),

    #[error("orbit {0} is not special")]
    NotSpecial(String),

    #[error("Psi not implemented for this n: {0}")]
    PsiNotImplemented(String),

    #[error("unsupported group: {0}")]
    UnsupportedGroup(String),

    #[error("group order {order} exceeds the safety cap {cap} (pass --stretch to override)")]
    GroupTooLarge { order: usize, cap: usize },

    #[error("no suitable prime found: {0}")]
    PrimeSelection(String),

    #[error("character table lift failed verification: {0}")]
    LiftVerification(String),

    #[error("mismatch: {0}")]
    Mismatch(String),

    #[error("cache: {0}")]
    Cache(String),

    #[error("io: {0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Parse(e.to_string())
    }
}
