use core::fmt;

pub type Result<T> = core::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// Argument outside the operation's domain.
    Domain(&'static str),
    /// Argument at a pole of a gamma-type function.
    Pole(&'static str),
    /// Result not representable as a finite double.
    Overflow(&'static str),
    /// Quadrature could not certify the requested tolerance.
    Tolerance { what: &'static str, estimate: f64, target: f64 },
    /// Initial bracket does not straddle a root.
    Bracket { lo: f64, hi: f64, f_lo: f64, f_hi: f64 },
    /// Iteration cap reached.
    Convergence { iterations: usize, residual: f64 },
    /// Matching condition not satisfied (A is not real and positive).
    Match { imag_ratio: f64 },
    /// Requested point unusable on the sample grid.
    Grid(&'static str),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Domain(m) => write!(f, "domain error: {m}"),
            Error::Pole(m) => write!(f, "pole: {m}"),
            Error::Overflow(m) => write!(f, "overflow: {m}"),
            Error::Tolerance { what, estimate, target } => write!(
                f,
                "{what}: error estimate {estimate:e} exceeds target {target:e}"
            ),
            Error::Bracket { lo, hi, f_lo, f_hi } => write!(
                f,
                "bracket [{lo}, {hi}] does not straddle a root (f = {f_lo:e}, {f_hi:e})"
            ),
            Error::Convergence { iterations, residual } => write!(
                f,
                "no convergence after {iterations} iterations (residual {residual:e})"
            ),
            Error::Match { imag_ratio } => write!(
                f,
                "matching quantity is not real: |Im|/|.| = {imag_ratio:e}"
            ),
            Error::Grid(m) => write!(f, "grid error: {m}"),
        }
    }
}

impl core::error::Error for Error {}
