use std::str::FromStr;

use rayon::prelude::*;
use serde::Serialize;

use super::lebesgue::PhiTable;
use super::Approx;
use crate::error::{Error, Result};
use crate::io::format_float;

/// Test functions for the `F_n` against `B_n` comparison.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum SampleFunction {
    /// `x²`
    Square,
    /// `|2x - 1|`
    Kink,
    /// `sin(πx)`
    Sine,
}

impl SampleFunction {
    pub const ALL: [SampleFunction; 3] = [SampleFunction::Square, SampleFunction::Kink, SampleFunction::Sine];

    pub fn name(self) -> &'static str {
        match self {
            SampleFunction::Square => "square",
            SampleFunction::Kink => "kink",
            SampleFunction::Sine => "sine",
        }
    }

    pub fn eval(self, x: f64) -> f64 {
        match self {
            SampleFunction::Square => x * x,
            SampleFunction::Kink => (2.0 * x - 1.0).abs(),
            SampleFunction::Sine => (std::f64::consts::PI * x).sin(),
        }
    }
}

impl FromStr for SampleFunction {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| Error::UnknownKind(s.to_string()))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct BenchmarkRow {
    pub n: usize,
    pub sup_f: f64,
    pub sup_b: f64,
    pub l2_f: f64,
    pub l2_b: f64,
}

/// `B_n f(x) = Σ f(i/n) C(n,i) x^i (1-x)^{n-i}`, in double precision.
fn bernstein_value(samples: &[f64], x: f64) -> f64 {
    let n = samples.len() - 1;
    // de Casteljau
    let mut b = samples.to_vec();
    for r in 1..=n {
        for i in 0..=n - r {
            b[i] = (1.0 - x) * b[i] + x * b[i + 1];
        }
    }
    b[0]
}

fn sup_and_l2(errors: &[f64]) -> (f64, f64) {
    let sup = errors.iter().fold(0.0f64, |m, e| m.max(e.abs()));
    let h = 1.0 / (errors.len() - 1) as f64;
    let last = errors.len() - 1;
    let sum: f64 = errors
        .iter()
        .enumerate()
        .map(|(i, e)| if i == 0 || i == last { e * e / 2.0 } else { e * e })
        .sum();
    (sup, (sum * h).sqrt())
}

/// Pointwise errors `F_n f - f` and `B_n f - f` on `grid` uniform points.
pub fn pointwise_errors<const BITS: usize>(
    f: &(dyn Fn(f64) -> f64 + Sync),
    n: usize,
    grid: usize,
) -> Result<(Vec<f64>, Vec<f64>)> {
    if grid < 2 {
        return Err(Error::InvalidArgument(format!("grid must have at least 2 points, got {grid}")));
    }
    let table = PhiTable::<BITS>::new(n)?;
    let samples: Vec<f64> = (0..=n).map(|i| f(i as f64 / n as f64)).collect();
    if let Some(v) = samples.iter().find(|v| !v.is_finite()) {
        return Err(Error::NonFinite(*v));
    }
    let wide: Vec<Approx<BITS>> = samples.iter().map(|v| Approx::from_f64(*v)).collect();
    let combined = table.combine(&wide)?;
    let last = grid - 1;
    Ok((0..=last)
        .into_par_iter()
        .map(|g| {
            let xa = Approx::<BITS>::from_ratio(g as i64, last as i64);
            let x = xa.to_f64();
            let fx = f(x);
            let ef = (table.eval_combined(&combined, &xa) - Approx::from_f64(fx)).to_f64();
            (ef, bernstein_value(&samples, x) - fx)
        })
        .unzip())
}

/// Sup-grid and L²-grid (trapezoid) errors of `F_n f` and `B_n f` for each `n`.
pub fn benchmark_errors<const BITS: usize>(
    f: &(dyn Fn(f64) -> f64 + Sync),
    n_list: &[usize],
    grid: usize,
) -> Result<Vec<BenchmarkRow>> {
    n_list
        .par_iter()
        .map(|&n| {
            let (ef, eb) = pointwise_errors::<BITS>(f, n, grid)?;
            let (sup_f, l2_f) = sup_and_l2(&ef);
            let (sup_b, l2_b) = sup_and_l2(&eb);
            Ok(BenchmarkRow {
                n,
                sup_f,
                sup_b,
                l2_f,
                l2_b,
            })
        })
        .collect()
}

/// `function,n,sup_F,sup_B,l2_F,l2_B`.
pub fn benchmark_csv(results: &[(SampleFunction, Vec<BenchmarkRow>)]) -> String {
    let mut out = String::from("function,n,sup_F,sup_B,l2_F,l2_B\n");
    for (f, rows) in results {
        for r in rows {
            out.push_str(&format!(
                "{},{},{},{},{},{}\n",
                f.name(),
                r.n,
                format_float(r.sup_f),
                format_float(r.sup_b),
                format_float(r.l2_f),
                format_float(r.l2_b)
            ));
        }
    }
    out
}
