use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("coincident knots")]
    CoincidentKnots,
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("empty input")]
    EmptyInput,
    #[error("singular")]
    Singular,
    #[error("degree parameter must be at least 1, got {0}")]
    InvalidDegree(usize),
    #[error("index {index} out of range 0..={max}")]
    IndexOutOfRange { index: usize, max: usize },
    #[error("outside Π_{n}: polynomial has degree {degree}")]
    OutsidePolynomialSpace { degree: usize, n: usize },
    #[error("operator kind {0} has no closed-form spectrum")]
    UnknownKind(String),
    #[error("degenerate eigenvalue: nullspace dimension {0}")]
    DegenerateEigenvalue(usize),
    #[error("point {0} outside [0, 1]")]
    OutsideUnitInterval(f64),
    #[error("non-finite function value at t = {0}")]
    NonFinite(f64),
    #[error("quadrature budget exceeded (last error estimate {estimate:e}, tolerance {tol:e})")]
    QuadratureBudget { estimate: f64, tol: f64 },
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T> = std::result::Result<T, Error>;
