use thiserror::Error;

pub type Result<T> = std::result::Result<T, LabError>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum LabError {
    #[error("invalid domain: {0}")]
    InvalidDomain(String),

    #[error("grid needs at least {min} samples, got {got}")]
    TooFewSamples { min: usize, got: usize },

    #[error("non-finite sample at index {0}")]
    NonFinite(usize),

    #[error("unknown function family `{0}`")]
    UnknownFamily(String),

    #[error("parameter out of range: {0}")]
    ParamOutOfRange(String),

    #[error("domain mismatch: {0}")]
    DomainMismatch(String),

    #[error("truncation n_max = {n_max} needs 2*n_max+1 <= N = {n}")]
    TruncationTooLarge { n_max: usize, n: usize },

    #[error("synthesis is not real valued (max imaginary part {0:e})")]
    NotRealValued(f64),

    #[error("series is not Hermitian (max asymmetry {0:e})")]
    NotHermitian(f64),

    #[error("function takes negative value {value:e} at index {index}")]
    NegativeFunction { index: usize, value: f64 },

    #[error("function must be strictly positive, min value {value:e} at index {index}")]
    NonPositiveFunction { index: usize, value: f64 },

    #[error("function is not normalized: integral of f^2 is {0}")]
    NotNormalized(f64),

    #[error("root mean square {0:e} is too small")]
    ZeroMass(f64),

    #[error("reflection needs an odd sample count, got {0}")]
    EvenSampleCount(usize),

    #[error("insufficient data: {0}")]
    InsufficientData(String),
}
