use core::fmt;

use crate::quadrature::QuadratureResult;

pub type Result<T> = core::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// Argument outside the mathematical domain of a function.
    Domain { what: &'static str, value: f64 },
    /// Malformed request: too few inputs, order out of range, bad tolerance.
    Argument(&'static str),
    /// An adaptive routine ran out of budget; carries the best estimate.
    Convergence { best: QuadratureResult },
    /// A condition that valid inputs cannot produce.
    Internal(&'static str),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Domain { what, value } => write!(f, "{what}: argument {value} outside domain"),
            Error::Argument(msg) => write!(f, "invalid argument: {msg}"),
            Error::Convergence { best } => write!(
                f,
                "tolerance not reached after {} evaluations (best estimate {:e} ± {:e})",
                best.n_evaluations, best.value, best.abs_error_estimate
            ),
            Error::Internal(msg) => write!(f, "internal error: {msg}"),
        }
    }
}

impl core::error::Error for Error {}
