use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected} amplitudes, got {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("invalid party dimensions {0:?}")]
    InvalidDims(Vec<usize>),

    #[error("state has zero norm")]
    ZeroState,

    #[error("non-finite amplitude at index {0}")]
    NonFinite(usize),

    #[error("state is not normalized (norm² = {0})")]
    NotNormalized(f64),

    #[error("unknown named state `{0}`")]
    UnknownName(String),

    #[error("bad parameters for named state: {0}")]
    BadParams(String),

    #[error("total dimension {dim} exceeds configured cap {cap}")]
    SizeGuard { dim: usize, cap: usize },

    #[error("mask must be a nonempty proper subset of the parties")]
    BadMask,

    #[error("bipartition is trivial")]
    TrivialBipartition,

    #[error("masks refer to different party counts ({0} vs {1})")]
    ArityMismatch(usize, usize),

    #[error("vector length {found} does not match expected {expected}")]
    LengthMismatch { expected: usize, found: usize },

    #[error("subsystem masks overlap")]
    OverlappingMasks,

    #[error("subsystem C is required for this relation")]
    MissingSubsystem,

    #[error("matrix is not a valid density matrix: {0}")]
    InvalidDensity(String),

    #[error("density matrix has negative eigenvalue {0}")]
    NotPsd(f64),

    #[error("party {0} is out of range or not allowed here")]
    BadParty(usize),

    #[error("expected a {expected}-party state, got {found} parties")]
    WrongArity { expected: usize, found: usize },

    #[error("operation requires dims {expected:?}, got {found:?}")]
    WrongShape { expected: Vec<usize>, found: Vec<usize> },

    #[error("empty mask list")]
    EmptyList,
}

pub type Result<T> = std::result::Result<T, Error>;
