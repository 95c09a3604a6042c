use thiserror::Error;

use crate::partition::Partition;

/// Errors raised by the library. Violations found by record validation are
/// returned as data, not through this type.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid Grassmannian G({k},{n}) in linear convention: need 1 <= k < n")]
    InvalidGrassmannian { k: usize, n: usize },

    #[error("partition {0} does not fit the {1}x{2} box")]
    OutOfBox(Partition, usize, usize),

    #[error("operands live in different rings")]
    RingMismatch,

    #[error("class is not of top degree {expected}")]
    NotTopDegree { expected: usize },

    #[error("expected a homogeneous class of degree {expected}")]
    NotHomogeneous { expected: usize },

    #[error("index {index} out of range 0..={max}")]
    IndexOutOfRange { index: usize, max: usize },

    #[error("exterior power {k} exceeds rank {rank}")]
    ExtPowerTooLarge { k: usize, rank: usize },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("value {0} is not an integer")]
    NotIntegral(String),

    #[error("weights {0:?} are not well-formed")]
    NotWellFormed(Vec<u64>),

    #[error("no cotangent twist found up to {0}")]
    TwistSearchExhausted(u64),

    #[error("unknown family `{0}`")]
    UnknownFamily(String),

    #[error("b3 is not recorded for `{0}`")]
    MissingBetti(String),

    #[error("`{0}` has no ambient weighted model")]
    MissingAmbient(String),

    #[error("E(Y,l) = {0} is not positive")]
    NonPositiveCriterion(i64),

    #[error("m^3*H_X^3/H_Y^3 = {num}/{den} is not an integer")]
    NonIntegralDegree { num: String, den: String },

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("table line {line}: {message}")]
    Table { line: usize, message: String },
}

pub type Result<T> = std::result::Result<T, Error>;
