use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("modulus must be at least 2, got {0}")]
    InvalidModulus(u64),

    #[error("expected at least {expected} polynomial arguments, got {got}")]
    ArgumentLength { expected: usize, got: usize },

    #[error("upper index {upper} is smaller than lower index {lower}")]
    IndexOrder { upper: u32, lower: u32 },

    #[error("{0} must be positive")]
    NonPositive(&'static str),

    #[error("sequence must not be empty")]
    EmptySequence,

    #[error("composition requires an inner series with zero constant term")]
    CompositionConstantTerm,

    #[error("logarithm requires a series with constant term 1")]
    LogConstantTerm,

    #[error("exponential requires a series with zero constant term")]
    ExpConstantTerm,

    #[error("series with zero constant term has no reciprocal")]
    NotInvertible,

    #[error("series with nonzero constant term cannot be divided by t")]
    ShiftConstantTerm,

    #[error("unknown generating function `{0}`")]
    UnknownGf(String),

    #[error("generating function `{gf}` is missing parameter `{param}`")]
    MissingGfParam {
        gf: &'static str,
        param: &'static str,
    },

    #[error("unknown check `{0}`")]
    UnknownCheck(String),

    #[error("check `{check}` is missing parameter `{param}`")]
    MissingParam { check: String, param: String },

    #[error("check `{check}` does not take parameter `{param}`")]
    UnexpectedParam { check: String, param: String },

    #[error("check `{check}` requires `{param}` to be prime, got {value}")]
    NotPrime {
        check: String,
        param: String,
        value: i64,
    },

    #[error("parameter `{param}` = {value} is out of range for `{check}`: {reason}")]
    OutOfDomain {
        check: String,
        param: String,
        value: i64,
        reason: &'static str,
    },
}
