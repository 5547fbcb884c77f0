use thiserror::Error;

/// Errors raised by the arithmetic, code construction and distance routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
    #[error("p must be prime (got {0})")]
    NotPrime(u64),
    #[error("parameter mismatch: {0}")]
    ParamMismatch(String),
    #[error("zero divisor polynomial")]
    ZeroDivisor,
    #[error("gcd of two zero polynomials is undefined")]
    GcdOfZeros,
    #[error("nilpotent element has no inverse")]
    NotAUnit,
    #[error("division requires unit leading coefficient")]
    NonUnitLeading,
    #[error("divisor lattice too large: {count} divisors exceeds cap {cap}")]
    DivisorLatticeTooLarge { count: u128, cap: u64 },
    #[error("zero code has no minimum distance")]
    ZeroCode,
    #[error("enumeration budget exceeded: {required} codewords required, budget is {budget}")]
    BudgetExceeded { required: u128, budget: u64 },
    #[error("{0}")]
    NotCoprime(&'static str),
    #[error("closed form inapplicable: {0}")]
    ClosedFormInapplicable(String),
    #[error("unclassified: leading digit zero")]
    LeadingDigitZero,
    #[error("out of range: {0}")]
    OutOfRange(String),
    #[error("code document: {0}")]
    Document(String),
    #[error("internal invariant violated: {0}")]
    Invariant(String),
}

pub type Result<T> = std::result::Result<T, Error>;
