//! Exact scalars, dense polynomials, matrices and the combinatorial number
//! families consumed by the operator layer.

pub mod combinatorics;
pub mod divdiff;
pub mod matrix;
pub mod poly;
pub mod scalar;

pub use combinatorics::{binomial, factorial, falling, rising, stirling_first, stirling_second};
pub use divdiff::divided_difference;
pub use matrix::Matrix;
pub use poly::Polynomial;
pub use scalar::{int, ratio, rational_from_f64, rational_to_f64, Scalar};
