use std::fmt;

/// Errors shared by every module of the engine.
///
/// Variant names are stable: the CLI prints them as part of diagnostics.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Error {
    /// A rational function was built with a zero denominator.
    ZeroDenominator,
    /// Division by the zero element, or division/remainder by the zero
    /// skew polynomial.
    DivisionByZero,
    /// Two operands live over different ground fields.
    FieldMismatch,
    /// The zero skew polynomial cannot be made monic.
    ZeroPolynomial,
    /// A monic operator of degree at least one was required.
    NotMonic,
    /// The operation needs at least one known term.
    EmptyPrefix,
    /// Hurwitz inverse of a sequence whose constant term is zero.
    NotInvertible,
    /// The known prefix is shorter than the operation requires.
    PrefixTooShort { needed: usize, have: usize },
    /// An initial condition vector has the wrong length.
    ArityMismatch { expected: usize, got: usize },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::ZeroDenominator => write!(f, "ZeroDenominator: denominator is zero"),
            Error::DivisionByZero => write!(f, "DivisionByZero: division by zero"),
            Error::FieldMismatch => {
                write!(f, "FieldMismatch: operands belong to different ground fields")
            }
            Error::ZeroPolynomial => {
                write!(f, "ZeroPolynomial: the zero polynomial cannot be normalized")
            }
            Error::NotMonic => {
                write!(f, "NotMonic: expected a monic operator of degree at least 1")
            }
            Error::EmptyPrefix => write!(f, "EmptyPrefix: no terms available"),
            Error::NotInvertible => {
                write!(f, "NotInvertible: constant term is zero, no Hurwitz inverse")
            }
            Error::PrefixTooShort { needed, have } => write!(
                f,
                "PrefixTooShort: operation needs {needed} terms, only {have} available"
            ),
            Error::ArityMismatch { expected, got } => write!(
                f,
                "ArityMismatch: expected {expected} initial values, got {got}"
            ),
        }
    }
}

impl std::error::Error for Error {}

pub type Result<T> = std::result::Result<T, Error>;
