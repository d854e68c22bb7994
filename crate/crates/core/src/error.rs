use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("degree must be at least {min}, got {got}")]
    InvalidDegree { got: u32, min: u32 },

    #[error("base must be at least 2, got {0}")]
    InvalidBase(u32),

    #[error("valuation of zero is undefined")]
    ZeroValuation,

    #[error("u-form of degree {0} is not strictly increasing on positive u")]
    NotMonotone(u32),

    #[error("k = {k} is below the family's domain (k >= {k_min})")]
    KOutOfDomain { k: u32, k_min: u32 },

    #[error("exponent {alpha}k{beta:+} is negative at k = {k}")]
    NegativeExponent { alpha: u32, beta: i64, k: u32 },

    #[error("invalid family: {0}")]
    InvalidFamily(String),

    #[error("cannot parse {what} from {input:?}")]
    Parse { what: &'static str, input: String },
}

impl Error {
    pub(crate) fn parse(what: &'static str, input: impl Into<String>) -> Self {
        Error::Parse {
            what,
            input: input.into(),
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
