use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error in {input:?}: {message}")]
    Parse { input: String, message: String },

    #[error("{0} is not a prime power")]
    NotPrimePower(u64),

    #[error("modulus {0} is not irreducible")]
    ReducibleModulus(String),

    #[error("ring of size {size} exceeds the bound {bound}")]
    RingTooLarge { size: u64, bound: u64 },

    #[error("element {0} is not a unit")]
    NonUnit(String),

    #[error("element index {index} does not belong to a ring of size {size}")]
    ForeignElement { index: u32, size: u32 },

    #[error("invalid (u,k) pair: u={u}, k={k} (need u*u = 1 and u*k = k)")]
    InvalidUk { u: String, k: String },

    #[error("polynomial has {found} coefficients, expected {expected}")]
    LengthMismatch { expected: usize, found: usize },

    #[error("the zero polynomial has no degree")]
    ZeroPolynomial,

    #[error("ambient space of {size} words exceeds the enumeration bound {bound}")]
    EnumerationBound { size: u128, bound: u64 },

    #[error("generating-set structure violated: {0}")]
    LeadingStructure(String),

    #[error("theorem and oracle disagree: {0}")]
    Disagreement(String),

    #[error("reference table: {0}")]
    Table(String),
}

impl Error {
    pub(crate) fn parse(input: &str, message: impl Into<String>) -> Self {
        Error::Parse {
            input: input.to_string(),
            message: message.into(),
        }
    }
}
