//! Floating and extended-precision layer: Beta-transform quadrature, piecewise
//! linear functions, the `G_n` checks, the Lebesgue function of `F_n` and the
//! `F_n` against `B_n` error benchmark.

mod approx;
mod benchmark;
mod contradiction;
mod lebesgue;
mod piecewise;
mod quadrature;

pub use approx::{Approx, ApproxReal};
pub use benchmark::{benchmark_csv, benchmark_errors, pointwise_errors, BenchmarkRow, SampleFunction};
pub use contradiction::{
    closed_form_value, g2_contradiction_check, g_first_moment, g_moment_sandwich, ContradictionReport,
    MomentSandwich,
};
pub use lebesgue::{
    lebesgue_curve, lebesgue_function, lebesgue_max, lebesgue_table, LebesgueMax, PhiTable, REFINE_TOL,
    SCAN_POINTS,
};
pub use piecewise::PiecewiseLinear;
pub use quadrature::{beta_transform, QuadratureResult, ORDERS};

/// Lebesgue maxima reported for `n = 10, 20, ..., 70`.
pub const LEBESGUE_REFERENCE: [(usize, f64); 7] = [
    (10, 1.266),
    (20, 1.304),
    (30, 1.354),
    (40, 1.387),
    (50, 1.409),
    (60, 1.433),
    (70, 1.459),
];
