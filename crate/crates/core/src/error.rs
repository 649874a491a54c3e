use thiserror::Error;

/// Errors produced across the toolkit.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error at position {position}: {message}")]
    Parse { position: usize, message: String },

    #[error("width mismatch: expected {expected} qubits, found {found}")]
    WidthMismatch { expected: usize, found: usize },

    #[error("width {width} is outside the supported range 1..={max}")]
    WidthOutOfRange { width: usize, max: usize },

    #[error("generators {0} and {1} anticommute")]
    AnticommutingPair(usize, usize),

    #[error("generators are dependent: the product of generators {subset:?} is ±identity")]
    DependentGenerators { subset: Vec<usize> },

    #[error("generator {0} is not Hermitian")]
    NonHermitian(usize),

    #[error("expected {expected} generators, found {found}")]
    GeneratorCount { expected: usize, found: usize },

    #[error("Cartanion signs are not normalized for base {base}: diagonal element {element} does not fix it")]
    NotNormalized { base: String, element: String },

    #[error("invalid error set: {0}")]
    InvalidErrorSet(String),

    #[error("invalid code: {0}")]
    InvalidCode(String),

    #[error("invalid seed: {0}")]
    InvalidSeed(String),

    #[error("syndrome {0} does not appear in the syndrome table (uncorrectable event)")]
    UnknownSyndrome(String),

    #[error("syndrome table is not injective; diagnosis is ambiguous")]
    NotCorrectable,

    #[error("{0}")]
    Unsupported(String),

    #[error("no code found after examining {examined} candidates (this does not prove that none exists)")]
    NotFound { examined: u64 },

    #[error("internal consistency violation: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
