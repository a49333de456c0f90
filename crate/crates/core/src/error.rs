use core::fmt;

/// Errors reported by the library.
#[derive(Clone, Debug, PartialEq)]
pub enum Error {
    /// An argument lies outside the domain of a function.
    Domain(&'static str),
    /// A parameter violates a type invariant.
    InvalidParameter(&'static str),
    /// The requested value sits on a pole or branch point.
    Pole(&'static str),
    /// The request is valid mathematics but not handled here.
    OutOfScope(&'static str),
    /// Fewer coefficients than the operation needs.
    TooFewCoefficients { needed: usize, available: usize },
    /// A coefficient beyond the end of an explicit list was requested.
    CoefficientUnavailable { index: usize, available: usize },
    /// A sequence transformation was given no input.
    EmptySequence,
    /// The precision setting is unsupported.
    Precision(&'static str),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Domain(what) => write!(f, "domain error: {what}"),
            Error::InvalidParameter(what) => write!(f, "invalid parameter: {what}"),
            Error::Pole(what) => write!(f, "pole: {what}"),
            Error::OutOfScope(what) => write!(f, "out of scope: {what}"),
            Error::TooFewCoefficients { needed, available } => {
                write!(f, "too few coefficients: need {needed}, have {available}")
            }
            Error::CoefficientUnavailable { index, available } => {
                write!(f, "coefficient {index} unavailable (only {available} given)")
            }
            Error::EmptySequence => f.write_str("empty input sequence"),
            Error::Precision(what) => write!(f, "precision error: {what}"),
        }
    }
}

impl core::error::Error for Error {}

pub type Result<T> = core::result::Result<T, Error>;
