use core::fmt;

use crate::dist::Family;

/// Errors raised by the numerical core.
#[derive(Debug, Clone, PartialEq)]
#[non_exhaustive]
pub enum Error {
    /// A distribution parameter is non-finite or outside its domain.
    InvalidParameter { name: &'static str, value: f64 },
    /// An argument lies outside the domain of the operation (a probability
    /// outside (0, 1), a return period not above 1, a zero sample size...).
    OutOfDomain { what: &'static str, value: f64 },
    /// A sample contained no observations.
    EmptySample,
    /// A sample contained NaN or an infinity at `index`.
    NonFiniteValue { index: usize, value: f64 },
    /// The sample has zero spread.
    DegenerateSample,
    /// The operation needs more observations than were supplied.
    TooFewObservations { needed: usize, got: usize },
    /// An observation lies outside the support of the family being fitted.
    OutsideSupport { family: Family, value: f64 },
    /// The initial parameters give a zero likelihood.
    InfeasibleStart { family: Family },
    /// An empty list was passed where at least one entry is required.
    EmptyInput,
    /// No critical value is known for this significance level.
    UnknownSignificanceLevel { alpha: f64 },
    /// Return periods must be strictly increasing and greater than one.
    InvalidPeriods,
    /// An optimizer setting is not positive.
    InvalidConfig { name: &'static str },
    /// A family name that is not one of gumbel, frechet, weibull, gev.
    UnknownFamily,
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::InvalidParameter { name, value } => {
                write!(f, "invalid {name} parameter: {value}")
            }
            Error::OutOfDomain { what, value } => write!(f, "{what} out of domain: {value}"),
            Error::EmptySample => f.write_str("sample is empty"),
            Error::NonFiniteValue { index, value } => {
                write!(f, "observation {index} is not finite: {value}")
            }
            Error::DegenerateSample => f.write_str("sample has zero standard deviation"),
            Error::TooFewObservations { needed, got } => {
                write!(f, "need at least {needed} observations, got {got}")
            }
            Error::OutsideSupport { family, value } => {
                write!(f, "observation {value} is outside the {family} support")
            }
            Error::InfeasibleStart { family } => {
                write!(f, "initial {family} parameters have zero likelihood")
            }
            Error::EmptyInput => f.write_str("empty input"),
            Error::UnknownSignificanceLevel { alpha } => {
                write!(f, "no critical value configured for alpha = {alpha}")
            }
            Error::InvalidPeriods => {
                f.write_str("return periods must be strictly increasing and greater than 1")
            }
            Error::InvalidConfig { name } => write!(f, "optimizer setting {name} must be positive"),
            Error::UnknownFamily => f.write_str("unknown family (expected gumbel, frechet, weibull or gev)"),
        }
    }
}

impl core::error::Error for Error {}
