use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("not prime: {0}")]
    NotPrime(u64),
    #[error("field too large: {p}^{n} exceeds 2^20")]
    FieldTooLarge { p: u64, n: u32 },
    #[error("extension degree must be at least 1")]
    ZeroDegree,
    #[error("division by zero")]
    DivisionByZero,
    #[error("field mismatch")]
    FieldMismatch,
    #[error("log of zero")]
    LogOfZero,
    #[error("prime mismatch: {0} vs {1}")]
    PrimeMismatch(u32, u32),
    #[error("ring mismatch")]
    RingMismatch,
    #[error("digit {digit} out of range for p = {p}")]
    DigitOutOfRange { digit: u32, p: u32 },
    #[error("precision must be at least 1")]
    ZeroPrecision,
    #[error("precision too large: {p}^{precision} does not fit a machine word")]
    PrecisionTooLarge { p: u32, precision: u32 },
    #[error("insufficient precision")]
    InsufficientPrecision,
    #[error("precision exhausted")]
    PrecisionExhausted,
    #[error("not a unit")]
    NotAUnit,
    #[error("not divisible")]
    NotDivisible,
    #[error("p=2 unsupported")]
    EvenPrime,
    #[error("negative argument: {0}")]
    NegativeArgument(i64),
    #[error("gamma loop too long: p^N = {0} exceeds 10^7")]
    GammaTooLarge(u64),
    #[error("series truncation insufficient (K cap {0})")]
    SeriesTruncation(usize),
    #[error("cannot identify integer: p^N = {modulus} must exceed {bound}")]
    CannotIdentifyInteger { modulus: u64, bound: u64 },
    #[error("{m} does not divide q - 1 = {q_minus_one}")]
    DegreeDoesNotDivide { m: u64, q_minus_one: u64 },
    #[error("{0} is not a prime power")]
    NotPrimePower(u64),
    #[error("non-admissible exponents: {0}")]
    NotAdmissible(String),
    #[error("parse error: {0}")]
    Parse(String),
}

impl Error {
    /// Errors caused by running out of p-adic precision or series terms.
    pub fn is_precision(&self) -> bool {
        matches!(
            self,
            Error::PrecisionTooLarge { .. }
                | Error::InsufficientPrecision
                | Error::PrecisionExhausted
                | Error::SeriesTruncation(_)
                | Error::CannotIdentifyInteger { .. }
                | Error::GammaTooLarge(_)
        )
    }
}

pub type Result<T> = std::result::Result<T, Error>;
