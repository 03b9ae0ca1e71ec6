use num_bigint::BigInt;
use thiserror::Error;

use crate::arith::Rational;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{a} and {b} are not coprime")]
    NotCoprime { a: BigInt, b: BigInt },

    #[error("modulus must be at least 1, got {0}")]
    InvalidModulus(BigInt),

    #[error("second argument must be at least 1, got {0}")]
    NonPositiveDenominator(BigInt),

    #[error("division by zero")]
    DivisionByZero,

    #[error("cannot parse {input:?} as a rational number: {reason}")]
    Parse { input: String, reason: &'static str },

    #[error("n = {n} exceeds the naive oracle cap of {cap}")]
    OracleCapExceeded { n: BigInt, cap: u64 },

    #[error("{m} * {m_star} is not 1 modulo {n}")]
    NotInverse {
        m: BigInt,
        m_star: BigInt,
        n: BigInt,
    },

    #[error("m = {m} must exceed m* = {m_star}")]
    NotLess { m: BigInt, m_star: BigInt },

    #[error("q = m*d - n*c = {0} must be positive")]
    NotPositiveQ(BigInt),

    #[error("target {0} is below -3; approximate its negation instead")]
    BelowRange(Rational),

    #[error("tolerance must be positive, got {0}")]
    InvalidEpsilon(Rational),

    #[error("m = {m} is not admissible: {reason}")]
    InvalidM { m: BigInt, reason: String },

    #[error("internal inconsistency: {0}")]
    PlanInconsistent(String),
}
