use thiserror::Error;

/// Errors raised by the algebra routines.
///
/// Mathematical precondition failures (`NotZeroDimensional`, `UglyPrime`, ...)
/// are kept distinct from the heuristic failure `HeuristicExhausted`, which
/// only occurs in characteristic zero when random linear forms run out.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("moduli are not coprime")]
    NonCoprimeModuli,
    #[error("prime {0} divides a denominator")]
    UglyPrime(u64),
    #[error("power products have different arity ({0} vs {1})")]
    ArityMismatch(usize, usize),
    #[error("polynomial is zero")]
    ZeroPolynomial,
    #[error("polynomial is constant")]
    ConstantPolynomial,
    #[error("ideal is not zero-dimensional")]
    NotZeroDimensional,
    #[error("ideal is zero")]
    ZeroIdeal,
    #[error("vector has length {got}, expected {expected}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("gave up after {0} random attempts")]
    HeuristicExhausted(usize),
    #[error("{0} is not a supported prime modulus (need a prime below 2^32)")]
    NonPrimeField(u64),
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("parse error at offset {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("polynomials belong to different rings")]
    RingMismatch,
    #[error("modular reconstruction gave up after {0} primes")]
    PrimeBudgetExhausted(usize),
}

pub type Result<T> = std::result::Result<T, Error>;
