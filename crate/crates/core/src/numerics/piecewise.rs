use num_traits::{ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::exact::{int, rational_from_f64, rational_to_f64};
use crate::Rational;

/// Continuous function, linear on each `[i/n, (i+1)/n]`, stored by its knot values.
#[derive(Debug, Clone, PartialEq)]
pub struct PiecewiseLinear {
    n: usize,
    values: Vec<Rational>,
    floats: Vec<f64>,
}

impl PiecewiseLinear {
    pub fn new(n: usize, values: Vec<Rational>) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidDegree(0));
        }
        if values.len() != n + 1 {
            return Err(Error::DimensionMismatch {
                expected: n + 1,
                found: values.len(),
            });
        }
        let floats = values.iter().map(rational_to_f64).collect();
        Ok(Self { n, values, floats })
    }

    /// Interpolant `S_n f` of `f` at the knots `i/n`.
    pub fn interpolate(n: usize, f: impl Fn(f64) -> f64) -> Result<Self> {
        let values = (0..=n)
            .map(|i| {
                let v = f(i as f64 / n as f64);
                rational_from_f64(v).ok_or(Error::NonFinite(v))
            })
            .collect::<Result<_>>()?;
        Self::new(n, values)
    }

    /// Hat function `u_{n,i}` with `u_{n,i}(j/n) = δ_{ij}`.
    pub fn hat(n: usize, i: usize) -> Result<Self> {
        if i > n {
            return Err(Error::IndexOutOfRange { index: i, max: n });
        }
        let values = (0..=n).map(|j| int(i64::from(i == j))).collect();
        Self::new(n, values)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn values(&self) -> &[Rational] {
        &self.values
    }

    /// Knot abscissae `i/n`.
    pub fn knots(&self) -> Vec<f64> {
        (0..=self.n).map(|i| i as f64 / self.n as f64).collect()
    }

    pub fn eval(&self, x: f64) -> f64 {
        let t = (x.clamp(0.0, 1.0)) * self.n as f64;
        let i = (t.floor() as usize).min(self.n - 1);
        let s = t - i as f64;
        self.floats[i] * (1.0 - s) + self.floats[i + 1] * s
    }

    /// Exact value at a rational point of `[0, 1]`.
    pub fn eval_exact(&self, x: &Rational) -> Result<Rational> {
        if *x < Rational::zero() || *x > int(1) {
            return Err(Error::OutsideUnitInterval(rational_to_f64(x)));
        }
        let t = x * int(self.n as i64);
        let i = t.floor().to_integer().to_usize().expect("in range").min(self.n - 1);
        let s = t - int(i as i64);
        Ok(self.values[i].clone() * (int(1) - s.clone()) + self.values[i + 1].clone() * s)
    }
}
