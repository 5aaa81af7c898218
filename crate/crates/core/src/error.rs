use alloc::string::String;
use core::fmt;

/// Errors raised by the engine.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Error {
    /// A monomial or factor failed to parse.
    Parse(String),
    /// An argument is outside the domain of an operation.
    Domain(String),
    /// A representation is not generic (two of its segments are linked).
    NotGeneric,
    /// Some derivative of a product is not completely reducible.
    ReducibleDerivative(String),
    /// A nontrivial character needs distinction data that was not supplied.
    MissingOracle(String),
    /// Two atoms have no declared tensor product.
    UndeclaredTensor(String),
    /// An exact division left a remainder.
    NotDivisible,
}

pub type Result<T> = core::result::Result<T, Error>;

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Parse(m) => write!(f, "parse error: {m}"),
            Error::Domain(m) => write!(f, "{m}"),
            Error::NotGeneric => f.write_str("representation is not generic"),
            Error::ReducibleDerivative(m) => write!(f, "derivatives are not completely reducible: {m}"),
            Error::MissingOracle(m) => write!(f, "nontrivial character without distinction oracle: {m}"),
            Error::UndeclaredTensor(m) => write!(f, "no tensor product declared for {m}"),
            Error::NotDivisible => f.write_str("Euler factor division is not exact"),
        }
    }
}

impl core::error::Error for Error {}
