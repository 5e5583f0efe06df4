use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not a prime")]
    NotPrime(u64),
    #[error("extension degree must be at least 1")]
    ZeroDegree,
    #[error("modulus must be monic of degree {degree} with coefficients below {p}")]
    MalformedModulus { p: u32, degree: u32 },
    #[error("modulus is reducible over GF({p})")]
    ReducibleModulus { p: u32 },
    #[error("no bundled Conway polynomial for GF({p}^{m}); supply a modulus")]
    NoConwayPolynomial { p: u32, m: u32 },
    #[error("field of order {order} exceeds the supported limit {limit}")]
    FieldTooLarge { order: u64, limit: u64 },
    #[error("division by zero")]
    DivisionByZero,
    #[error("element index {index} is not in a field of order {order}")]
    ElementOutOfRange { index: u32, order: u32 },
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("the zero polynomial has no well-defined root count")]
    ZeroPolynomial,
    #[error("enumeration needs {needed} steps, over the limit of {limit}")]
    EnumerationBound { needed: u128, limit: u128 },
    #[error("formula output is not a nonnegative integer: {0}")]
    NonIntegral(String),
    #[error("moment system is singular")]
    SingularSystem,
    #[error("moment system needs dual counts up to weight {needed}, got {got}")]
    MissingDualCounts { needed: usize, got: usize },
    #[error("blocks do not all have the same size")]
    NonUniformBlocks,
    #[error("invalid design query: {0}")]
    InvalidDesign(String),
    #[error("hypothesis not met: {0}")]
    Hypothesis(String),
    #[error("io: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
