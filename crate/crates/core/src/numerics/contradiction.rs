use std::f64::consts::PI;

use serde::Serialize;

use super::piecewise::PiecewiseLinear;
use super::quadrature::beta_transform;
use crate::error::{Error, Result};
use crate::exact::{rational_from_f64, rational_to_f64};
use crate::operators::columns::{apply_beta, apply_by_images, stancu_image};
use crate::operators::{phi_basis, shifted_power};

/// Evaluation point of the check.
pub const POINT: f64 = 0.25;
/// Minimum separation between the two sides for the check to count.
pub const SEPARATION: f64 = 5e-3;

/// `(1/2 - π/8) / (π/2)`, the value of `B̄_2 u_{2,2}` at `1/4` from the closed-form antiderivatives.
pub fn closed_form_value() -> f64 {
    (0.5 - PI / 8.0) / (PI / 2.0)
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ContradictionReport {
    /// Quadrature value of `B̄_2 u_{2,2}` at `1/4`, i.e. `G_2 u_{2,2}(1/4)`.
    pub quadrature: f64,
    pub error_estimate: f64,
    pub closed_form: f64,
    /// `B_2 u_{2,2}(1/4) = b_{2,2}(1/4) = 1/16`.
    pub bernstein: f64,
    /// `B̄_2 (F_2 u_{2,2})` at `1/4` by the same quadrature; equals `1/16` up to `tol`.
    pub through_f: f64,
    pub tol: f64,
}

impl ContradictionReport {
    pub fn distance(&self) -> f64 {
        (self.quadrature - self.bernstein).abs()
    }

    /// The quadrature matches the closed form and stays away from `B_2`.
    pub fn confirmed(&self) -> bool {
        (self.quadrature - self.closed_form).abs() <= self.tol
            && self.distance() > SEPARATION
            && (self.through_f - self.bernstein).abs() <= self.tol
    }
}

/// Shows `G_2 ≠ B_2` on the hat function `u_{2,2}` at `x = 1/4`.
pub fn g2_contradiction_check(tol: f64) -> Result<ContradictionReport> {
    if !(tol > 0.0 && tol <= 1e-4) {
        return Err(Error::InvalidArgument(format!("tolerance must lie in (0, 1e-4], got {tol}")));
    }
    let hat = PiecewiseLinear::hat(2, 2)?;
    let q = beta_transform(&|t| hat.eval(t), 2, POINT, tol / 10.0, &hat.knots())?;
    let phi = phi_basis(2, 2)?.to_scalar::<f64>();
    let through_f = beta_transform(&|t| phi.eval(&t), 2, POINT, tol / 10.0, &[])?;
    Ok(ContradictionReport {
        quadrature: q.value.to_f64(),
        error_estimate: q.error_estimate.to_f64(),
        closed_form: closed_form_value(),
        bernstein: POINT * POINT,
        through_f: through_f.value.to_f64(),
        tol,
    })
}

/// `G_n((e_1 - x)^{2j}; x) = B̄_n(S_n (e_1 - x)^{2j})(x)` between its exact bounds
/// `B̄_n((e_1 - x)^{2j}; x)` and `L_n((e_1 - x)^{2j}; x)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct MomentSandwich {
    pub n: usize,
    pub order: usize,
    pub x: f64,
    pub lower: f64,
    pub moment: f64,
    pub upper: f64,
}

impl MomentSandwich {
    pub fn holds(&self, tol: f64) -> bool {
        self.lower - tol <= self.moment && self.moment <= self.upper + tol
    }
}

/// Moment of order `2j` of `G_n` at `x`, by quadrature, with exact bounds.
pub fn g_moment_sandwich(n: usize, j: usize, x: f64, tol: f64) -> Result<MomentSandwich> {
    let order = 2 * j;
    let x0 = rational_from_f64(x).ok_or(Error::NonFinite(x))?;
    let power = shifted_power(&x0, order);
    let lower = rational_to_f64(&apply_beta(n, &power).eval(&x0));
    let upper = rational_to_f64(&apply_by_images(&power, |m| stancu_image(n, m)).eval(&x0));
    let interpolant = PiecewiseLinear::interpolate(n, |t| (t - x).powi(order as i32))?;
    let q = beta_transform(&|t| interpolant.eval(t), n, x, tol, &interpolant.knots())?;
    Ok(MomentSandwich {
        n,
        order,
        x,
        lower,
        moment: q.value.to_f64(),
        upper,
    })
}

/// Exact first moment `G_n(e_1 - x; x)`: zero, since `S_n` and `B̄_n` both fix linear functions.
pub fn g_first_moment(n: usize, x: f64, tol: f64) -> Result<f64> {
    let interpolant = PiecewiseLinear::interpolate(n, |t| t - x)?;
    Ok(beta_transform(&|t| interpolant.eval(t), n, x, tol, &interpolant.knots())?
        .value
        .to_f64())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn closed_form_decimal() {
        assert!((closed_form_value() - 0.0683098).abs() < 1e-7);
    }

    #[test]
    fn contradiction_is_reproduced() {
        let r = g2_contradiction_check(1e-6).unwrap();
        assert!(r.confirmed(), "{r:?}");
        assert!(g2_contradiction_check(1e-2).is_err());
    }

    #[test]
    fn sandwich_holds() {
        for n in 2..=6 {
            for x in [0.25, 0.5] {
                let s = g_moment_sandwich(n, 1, x, 1e-10).unwrap();
                assert!(s.holds(1e-8), "{s:?}");
                // closed forms x(1-x)/(n+1) and 2x(1-x)/(n+1)
                let base = x * (1.0 - x) / (n as f64 + 1.0);
                assert!((s.lower - base).abs() < 1e-15 && (s.upper - 2.0 * base).abs() < 1e-15);
                let s4 = g_moment_sandwich(n, 2, x, 1e-10).unwrap();
                assert!(s4.holds(1e-8) && s4.lower < s4.upper, "{s4:?}");
                assert!(g_first_moment(n, x, 1e-10).unwrap().abs() < 1e-9);
            }
        }
    }
}
