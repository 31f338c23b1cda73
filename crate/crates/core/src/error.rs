use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Every failure the library can report. Each variant carries a stable
/// machine-readable code (see [`Error::code`]) used by the command-line front end.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("p = {0} is not prime")]
    NotPrime(i64),
    #[error("invalid sigma: {0}")]
    InvalidSigma(String),
    #[error("invalid minimal polynomial: {0}")]
    InvalidMinPoly(String),
    #[error("u = {u} is not a unit modulo p = {p}")]
    NonUnitU { u: i64, p: i64 },
    #[error("enumeration of {count} items exceeds the bound {bound}")]
    TooLarge { count: u128, bound: u128 },
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("leading coefficient of the divisor is not a unit")]
    NonUnitLeading,
    #[error("constant u is not fixed by sigma, so x^n - u is not central")]
    NotCentral,
    #[error("generator does not right-divide x^n - u: {0}")]
    NotADivisor(String),
    #[error("length mismatch: expected {expected}, got {got}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("u^2 != 1 in the quotient ring; no dual generator formula applies")]
    UnsupportedU,
    #[error("trace form is not positive definite: {0}")]
    IndefiniteForm(String),
    #[error("point does not reduce to a codeword, so it is not in the lattice")]
    NotInLattice,
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("line {line}: unknown key `{key}`")]
    UnknownKey { line: usize, key: String },
    #[error("missing required key `{0}`")]
    MissingKey(String),
}

impl Error {
    pub fn code(&self) -> &'static str {
        match self {
            Error::NotPrime(_) => "NOT_PRIME",
            Error::InvalidSigma(_) => "INVALID_SIGMA",
            Error::InvalidMinPoly(_) => "INVALID_MIN_POLY",
            Error::NonUnitU { .. } => "NON_UNIT_U",
            Error::TooLarge { .. } => "TOO_LARGE",
            Error::Unsupported(_) => "UNSUPPORTED",
            Error::DivisionByZero => "DIVISION_BY_ZERO",
            Error::NonUnitLeading => "NON_UNIT_LEADING",
            Error::NotCentral => "NOT_CENTRAL",
            Error::NotADivisor(_) => "NOT_A_DIVISOR",
            Error::LengthMismatch { .. } => "LENGTH_MISMATCH",
            Error::UnsupportedU => "UNSUPPORTED_U",
            Error::IndefiniteForm(_) => "INDEFINITE_FORM",
            Error::NotInLattice => "NOT_IN_LATTICE",
            Error::Parse { .. } => "PARSE_ERROR",
            Error::UnknownKey { .. } => "UNKNOWN_KEY",
            Error::MissingKey(_) => "MISSING_KEY",
        }
    }

    /// Configuration syntax problems are usage errors; everything else is a
    /// domain error.
    pub fn is_usage(&self) -> bool {
        matches!(
            self,
            Error::Parse { .. } | Error::UnknownKey { .. } | Error::MissingKey(_)
        )
    }
}
