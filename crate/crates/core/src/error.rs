use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("cannot evaluate at zero: term with exponent {0}")]
    EvalAtZeroWithNegativeExponent(i64),
    #[error("division by zero")]
    DivisionByZero,
    #[error("not a Laurent polynomial: {0}")]
    NotPolynomial(String),
    #[error("invalid dimension: d = {d} exceeds ambient dimension {n}")]
    InvalidDimension { d: u32, n: u32 },
    #[error("malformed cumulative index list {list:?} for rank {rank}")]
    MalformedCumulativeList { rank: u32, list: Vec<u32> },
    #[error("invalid composition {0:?}")]
    InvalidComposition(Vec<u32>),
    #[error("invalid partition tail {entries:?} for r = {r}, k = {k}")]
    InvalidPartitionTail { r: u32, k: u32, entries: Vec<u32> },
    #[error("invalid rank {j} for {r}x{s} matrices")]
    InvalidRank { r: u32, s: u32, j: u32 },
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("negative exponent {0} in a polynomial input")]
    NegativeExponent(i64),
    #[error("coefficient of q^{0} is not an integer")]
    NonIntegralCoefficient(i64),
    #[error("{0} is not prime")]
    NotPrime(u32),
    #[error("modulus {p} above cap {cap}")]
    ModulusTooLarge { p: u32, cap: u32 },
    #[error("enumeration needs {candidates} candidates, budget is {budget}")]
    BudgetExceeded { candidates: u128, budget: u128 },
    #[error("mismatch in {check}: expected {expected}, found {found}")]
    MismatchFound {
        check: String,
        expected: String,
        found: String,
    },
}
