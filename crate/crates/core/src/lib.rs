//! Exact and numerical toolkit for the factorisation of the Bernstein
//! operator through the Beta operator, `B_n = B̄_n ∘ F_n`.
//!
//! The polynomial and matrix layers are generic over [`Scalar`]; the
//! aliases below fix the scalar for the exact and floating layers.

pub mod error;
pub mod asymptotics;
pub mod eigen;
pub mod exact;
pub mod io;
pub mod numerics;
pub mod operators;
pub mod verify;

pub use error::{Error, Result};
pub use exact::{Matrix, Polynomial, Scalar};

/// Arbitrary-precision exact rational.
pub type Rational = num_rational::BigRational;
pub type RationalPolynomial = Polynomial<Rational>;
pub type RationalMatrix = Matrix<Rational>;

pub type FloatPolynomial = Polynomial<f64>;
pub type FloatMatrix = Matrix<f64>;
