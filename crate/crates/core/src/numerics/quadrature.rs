use gauss_quad::jacobi::GaussJacobi;
use statrs::function::gamma::ln_gamma;

use super::ApproxReal;
use crate::error::{Error, Result};
use crate::exact::Scalar;

/// Gauss–Jacobi orders tried in turn; the last one is the budget.
pub const ORDERS: [usize; 5] = [16, 32, 64, 128, 256];

#[derive(Debug, Clone, PartialEq)]
pub struct QuadratureResult {
    pub value: ApproxReal,
    /// Difference between the last two orders.
    pub error_estimate: ApproxReal,
    pub evaluations: usize,
}

impl QuadratureResult {
    fn exact(value: f64) -> Self {
        Self {
            value: ApproxReal::from_f64(value),
            error_estimate: ApproxReal::from_i64(0),
            evaluations: 1,
        }
    }
}

fn ln_beta(a: f64, b: f64) -> f64 {
    ln_gamma(a) + ln_gamma(b) - ln_gamma(a + b)
}

/// `∫_0^1 w(t) g(t) dt / B(a,b)` with `w(t) = t^{a-1}(1-t)^{b-1}`, split into panels at `cuts`.
///
/// On each panel the singular endpoint factors are absorbed into the Jacobi
/// weight; the remaining factors of `w` are smooth there and go into the integrand.
fn beta_integral(
    g: &dyn Fn(f64) -> f64,
    a: f64,
    b: f64,
    cuts: &[f64],
    order: usize,
    evaluations: &mut usize,
) -> Result<f64> {
    let norm = ln_beta(a, b);
    let mut total = 0.0;
    for panel in cuts.windows(2) {
        let (c, d) = (panel[0], panel[1]);
        let left = if c == 0.0 { a - 1.0 } else { 0.0 };
        let right = if d == 1.0 { b - 1.0 } else { 0.0 };
        let rule = GaussJacobi::new(order, right, left)
            .map_err(|e| Error::InvalidArgument(format!("Gauss-Jacobi rule: {e}")))?;
        let scale = ((left + right) * ((d - c) / 2.0).ln() - norm).exp();
        let mut bad = None;
        let s = rule.integrate(c, d, |t| {
            *evaluations += 1;
            let v = g(t);
            if !v.is_finite() {
                bad = Some(v);
                return 0.0;
            }
            let mut w = v;
            if c != 0.0 {
                w *= t.powf(a - 1.0);
            }
            if d != 1.0 {
                w *= (1.0 - t).powf(b - 1.0);
            }
            w
        });
        if let Some(v) = bad {
            return Err(Error::NonFinite(v));
        }
        total += scale * s;
    }
    Ok(total)
}

/// `B̄_n f (x) = B(nx, n(1-x))⁻¹ ∫_0^1 t^{nx-1} (1-t)^{n(1-x)-1} f(t) dt`, and `f(0)`, `f(1)` at the endpoints.
///
/// `breaks` are interior points where `f` may fail to be smooth (e.g. the knots of a
/// piecewise linear function); the integral is split there and at `1/2`.
pub fn beta_transform(
    f: &dyn Fn(f64) -> f64,
    n: usize,
    x: f64,
    tol: f64,
    breaks: &[f64],
) -> Result<QuadratureResult> {
    if n == 0 {
        return Err(Error::InvalidDegree(0));
    }
    if !(0.0..=1.0).contains(&x) {
        return Err(Error::OutsideUnitInterval(x));
    }
    if !(tol > 0.0) {
        return Err(Error::InvalidArgument(format!("tolerance must be positive, got {tol}")));
    }
    if x == 0.0 || x == 1.0 {
        let v = f(x);
        return if v.is_finite() {
            Ok(QuadratureResult::exact(v))
        } else {
            Err(Error::NonFinite(v))
        };
    }
    let mut cuts: Vec<f64> = breaks.iter().copied().filter(|t| *t > 0.0 && *t < 1.0).collect();
    // one singular endpoint per panel; the rule's normalisation fails when both exponents sum to -1
    cuts.extend([0.0, 0.5, 1.0]);
    cuts.sort_by(f64::total_cmp);
    cuts.dedup();

    let (a, b) = (n as f64 * x, n as f64 * (1.0 - x));
    let mut evaluations = 0;
    let mut previous = beta_integral(f, a, b, &cuts, ORDERS[0], &mut evaluations)?;
    let mut estimate = f64::INFINITY;
    for &order in &ORDERS[1..] {
        let current = beta_integral(f, a, b, &cuts, order, &mut evaluations)?;
        estimate = (current - previous).abs();
        if estimate <= tol {
            return Ok(QuadratureResult {
                value: ApproxReal::from_f64(current),
                error_estimate: ApproxReal::from_f64(estimate),
                evaluations,
            });
        }
        previous = current;
    }
    Err(Error::QuadratureBudget { estimate, tol })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reproduces_linear_functions() {
        for n in 1..6 {
            for x in [0.1, 0.25, 0.5, 0.9] {
                let r = beta_transform(&|t| t, n, x, 1e-12, &[]).unwrap_or_else(|e| panic!("n={n} x={x} {e:?}"));
                assert!((r.value.to_f64() - x).abs() < 1e-10, "n={n} x={x}");
            }
        }
    }

    #[test]
    fn second_moment_at_half() {
        // n x (n x + 1) / (n (n+1)) at n = 2, x = 1/2
        let r = beta_transform(&|t| t * t, 2, 0.5, 1e-12, &[]).unwrap();
        assert!((r.value.to_f64() - 1.0 / 3.0).abs() < 1e-10);
    }

    #[test]
    fn endpoints_and_errors() {
        let r = beta_transform(&|t| 3.0 + t, 4, 1.0, 1e-9, &[]).unwrap();
        assert_eq!(r.value.to_f64(), 4.0);
        assert!(matches!(beta_transform(&|t| t, 2, 1.5, 1e-9, &[]), Err(Error::OutsideUnitInterval(_))));
        assert!(matches!(beta_transform(&|_| f64::NAN, 2, 0.5, 1e-9, &[]), Err(Error::NonFinite(_))));
        assert!(matches!(
            beta_transform(&|t| (t - 0.3).abs().sqrt(), 2, 0.5, 1e-15, &[]),
            Err(Error::QuadratureBudget { .. })
        ));
    }
}
