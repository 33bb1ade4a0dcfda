use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not an odd prime")]
    NotOddPrime(u32),

    #[error("invalid partition {parts:?}: {reason}")]
    InvalidPartition {
        parts: Vec<u32>,
        reason: &'static str,
    },

    #[error("{0} is not a strict partition")]
    NotStrict(String),

    #[error("{partition} is not {p}-strict restricted")]
    NotRestricted { partition: String, p: u32 },

    #[error("size mismatch: {left} has size {left_size}, {right} has size {right_size}")]
    SizeMismatch {
        left: String,
        left_size: u32,
        right: String,
        right_size: u32,
    },

    #[error("{partition} has more than two parts")]
    TooManyParts { partition: String },

    #[error("{what} = {value} out of range ({range})")]
    OutOfRange {
        what: &'static str,
        value: i64,
        range: String,
    },

    #[error("coefficient {coefficient} of S({key}) is not divisible by {divisor}")]
    Indivisible {
        key: String,
        coefficient: String,
        divisor: String,
    },

    #[error("invalid exponent {exponent} in multiplicity formula for {partition}")]
    InvalidExponent { partition: String, exponent: i64 },

    #[error("parse error: {0}")]
    Parse(String),
}

impl Error {
    pub(crate) fn out_of_range(
        what: &'static str,
        value: impl Into<i64>,
        range: impl Into<String>,
    ) -> Self {
        Error::OutOfRange {
            what,
            value: value.into(),
            range: range.into(),
        }
    }
}
