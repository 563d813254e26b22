use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("power series has zero constant term and cannot be inverted")]
    ZeroConstantTerm,

    #[error("quadratic equation rejected: {0}")]
    BadEquation(String),

    #[error("valuation is indeterminate: series is zero to its full truncation order {order}")]
    IndeterminateValuation { order: usize },

    #[error("coefficient index {index} is beyond the truncation order {order}")]
    TruncationExceeded { index: usize, order: usize },

    #[error("rational function has a pole at x = 0")]
    PoleAtZero,

    #[error("polynomial is not divisible by x^{0}")]
    NotDivisibleByPower(usize),

    #[error("equation cannot be put in canonical form: {0}")]
    NotCanonicalizable(String),

    #[error("degree condition failed: need {available} >= deg L_{index} = {degree}")]
    DegreeConditionFailed {
        index: usize,
        degree: usize,
        available: usize,
    },

    #[error("unknown family id `{0}`")]
    UnknownFamilyId(String),

    #[error("{0}")]
    Inconsistent(String),
}
