//! Rate checks for the `n → ∞` statements on polynomials.
//!
//! Every quantity is computed exactly at each `n` (lazy columns, so only
//! degrees up to `deg p` are touched), evaluated exactly on a uniform
//! rational grid, and only the final sup-norm is rounded to `f64`.

use rayon::prelude::*;
use serde::Serialize;

use crate::eigen::{bernstein_eigenpolynomial, bernstein_eigenvalue, limit_coefficient, limit_eigenpolynomial};
use crate::error::{Error, Result};
use crate::exact::{int, ratio, rational_to_f64};
use crate::io::{format_float, rational_string};
use crate::operators::columns::{apply_bernstein, apply_beta, apply_beta_inverse, apply_f};
use crate::{Rational, RationalPolynomial};

pub const DEFAULT_GRID: usize = 201;

/// Accepted range for `error(n_last) / error(n_first)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct RateBand {
    pub min_ratio: f64,
    pub max_ratio: f64,
}

impl RateBand {
    /// `error(10n) ≤ 0.2 · error(n)`.
    pub const FIRST_ORDER: RateBand = RateBand {
        min_ratio: 0.0,
        max_ratio: 0.2,
    };

    pub fn new(min_ratio: f64, max_ratio: f64) -> Self {
        Self { min_ratio, max_ratio }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ConvergenceReport {
    pub label: String,
    #[serde(serialize_with = "serialize_polynomial")]
    pub target: RationalPolynomial,
    pub samples: Vec<(usize, f64)>,
    /// Slope of `log error` against `log n` between the first and last sample.
    pub rate_estimate: Option<f64>,
    pub band: RateBand,
    pub verdict: Verdict,
}

fn serialize_polynomial<S: serde::Serializer>(p: &RationalPolynomial, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(p.coeffs().iter().map(rational_string))
}

impl ConvergenceReport {
    fn new(label: String, target: RationalPolynomial, samples: Vec<(usize, f64)>, band: RateBand) -> Self {
        let (first, last) = (samples[0], samples[samples.len() - 1]);
        let rate_estimate = (first.1 > 0.0 && last.1 > 0.0 && last.0 != first.0)
            .then(|| (last.1 / first.1).ln() / (last.0 as f64 / first.0 as f64).ln());
        let verdict = if samples.iter().all(|(_, e)| *e == 0.0) {
            Verdict::Pass
        } else if first.1 > 0.0 && (band.min_ratio..=band.max_ratio).contains(&(last.1 / first.1)) {
            Verdict::Pass
        } else {
            Verdict::Fail
        };
        Self {
            label,
            target,
            samples,
            rate_estimate,
            band,
            verdict,
        }
    }

    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Pass
    }

    /// `error(n_last) / error(n_first)`; `None` when the first error is zero.
    pub fn ratio(&self) -> Option<f64> {
        let first = self.samples[0].1;
        (first > 0.0).then(|| self.samples[self.samples.len() - 1].1 / first)
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("report serializes")
    }

    /// Two columns, `n,error`.
    pub fn to_csv(&self) -> String {
        let ratio = self.ratio().map_or_else(|| "none".to_string(), format_float);
        let verdict = if self.passed() { "pass" } else { "fail" };
        let mut out = format!("# {}\n# ratio={ratio},verdict={verdict}\nn,error\n", self.label);
        for (n, e) in &self.samples {
            out.push_str(&format!("{n},{}\n", format_float(*e)));
        }
        out
    }
}

/// `max_i |p(i/(grid-1))|`, evaluated exactly and rounded once.
pub fn grid_sup_norm(p: &RationalPolynomial, grid: usize) -> f64 {
    let last = grid.max(2) as i64 - 1;
    (0..=last)
        .map(|i| rational_to_f64(&p.eval(&ratio(i, last))).abs())
        .fold(0.0, f64::max)
}

fn validate(n_list: &[usize], degree: usize) -> Result<()> {
    if n_list.is_empty() {
        return Err(Error::EmptyInput);
    }
    if n_list.windows(2).any(|w| w[1] <= w[0]) {
        return Err(Error::InvalidArgument("n values must be strictly increasing".into()));
    }
    if n_list[0] < degree.max(1) {
        return Err(Error::OutsidePolynomialSpace {
            degree,
            n: n_list[0],
        });
    }
    Ok(())
}

/// Sup-grid error of `scaled(n)` against `target` for each `n`, in parallel.
fn sample(
    n_list: &[usize],
    grid: usize,
    target: &RationalPolynomial,
    scaled: impl Fn(usize) -> Result<RationalPolynomial> + Sync,
) -> Result<Vec<(usize, f64)>> {
    n_list
        .par_iter()
        .map(|&n| Ok((n, grid_sup_norm(&(scaled(n)? - target.clone()), grid))))
        .collect()
}

fn degree(p: &RationalPolynomial) -> usize {
    p.degree().unwrap_or(0)
}

/// `V(p) = x(1-x)/2 · p'' - x(1-x)(1-2x)/6 · p'''`.
pub fn voronovskaya_limit(p: &RationalPolynomial) -> RationalPolynomial {
    let w = RationalPolynomial::new(vec![int(0), int(1), int(-1)]);
    let second = (w.clone() * p.derivative(2)).scale(&ratio(1, 2));
    let third = (w * RationalPolynomial::linear(int(1), int(-2)) * p.derivative(3)).scale(&ratio(1, 6));
    second - third
}

/// `m(m-1)/6 · x^{m-2} (1-x) ((2m-1)x - m + 2)`, zero for `m < 2`.
pub fn voronovskaya_leading_term(m: usize) -> RationalPolynomial {
    if m < 2 {
        return RationalPolynomial::zero();
    }
    let mi = m as i64;
    RationalPolynomial::monomial(m - 2)
        * RationalPolynomial::linear(int(1), int(-1))
        * RationalPolynomial::linear(int(2 - mi), int(2 * mi - 1))
        * RationalPolynomial::constant(ratio(mi * (mi - 1), 6))
}

fn n_squared(n: usize) -> Rational {
    int(n as i64 * n as i64)
}

/// `n²(F_n p - p)` against `V(p)` over `n_list`.
pub fn voronovskaya_convergence(
    p: &RationalPolynomial,
    n_list: &[usize],
    grid: usize,
    band: RateBand,
) -> Result<ConvergenceReport> {
    validate(n_list, degree(p))?;
    let target = voronovskaya_limit(p);
    let samples = sample(n_list, grid, &target, |n| {
        Ok((apply_f(n, p) - p.clone()).scale(&n_squared(n)))
    })?;
    Ok(ConvergenceReport::new(
        format!("n^2(F_n p - p) vs V(p), deg p = {}", degree(p)),
        target,
        samples,
        band,
    ))
}

/// `2n²(B_n p - U_{2n} p)` against `V(p)`, with `U_{2n} = B_{2n} ∘ B̄_{2n}` applied lazily.
pub fn durrmeyer_doubling_convergence(
    p: &RationalPolynomial,
    n_list: &[usize],
    grid: usize,
    band: RateBand,
) -> Result<ConvergenceReport> {
    validate(n_list, degree(p))?;
    let target = voronovskaya_limit(p);
    let samples = sample(n_list, grid, &target, |n| {
        let u = apply_bernstein(2 * n, &apply_beta(2 * n, p));
        Ok((apply_bernstein(n, p) - u).scale(&(n_squared(n) * int(2))))
    })?;
    Ok(ConvergenceReport::new(
        format!("2n^2(B_n p - U_2n p) vs V(p), deg p = {}", degree(p)),
        target,
        samples,
        band,
    ))
}

/// `L_k = Σ_{j=2}^k c*(j,k) j(j-1)/2 (x^j - x^{j-1})`, zero for `k < 2`.
pub fn beta_inverse_eigen_limit(k: usize) -> RationalPolynomial {
    (2..=k).fold(RationalPolynomial::zero(), |acc, j| {
        let c = limit_coefficient(k, j) * ratio((j * (j - 1)) as i64, 2);
        let diff = RationalPolynomial::monomial(j) - RationalPolynomial::monomial(j - 1);
        acc + diff.scale(&c)
    })
}

/// `(1/2) Σ_j [(j-1)j (x^j - x^{j-1}) - k(k-1) x^j] c*(j,k)`, the limit of `n(F_n p_k - p_k)`.
pub fn f_eigen_rate_limit(k: usize) -> RationalPolynomial {
    let kk = int((k * k.saturating_sub(1)) as i64);
    (0..=k).fold(RationalPolynomial::zero(), |acc, j| {
        let xj = RationalPolynomial::monomial(j);
        let mut term = xj.scale(&-kk.clone());
        if j >= 1 {
            let jj = int((j * (j - 1)) as i64);
            term = term + (xj - RationalPolynomial::monomial(j - 1)).scale(&jj);
        }
        acc + term.scale(&(limit_coefficient(k, j) * ratio(1, 2)))
    })
}

/// `n(λ_k^{(n)} - 1)`, tending to `-k(k-1)/2`.
pub fn bernstein_eigenvalue_rate(n: usize, k: usize) -> Result<Rational> {
    Ok((bernstein_eigenvalue(n, k)? - int(1)) * int(n as i64))
}

fn eigenpolynomial(n: usize, k: usize) -> Result<RationalPolynomial> {
    Ok(bernstein_eigenpolynomial(n, k)?.eigenpolynomial)
}

/// `n(B̄_n⁻¹ p_k^{(n)} - p_k^{(n)})` against `L_k`.
pub fn beta_inverse_eigen_convergence(
    k: usize,
    n_list: &[usize],
    grid: usize,
    band: RateBand,
) -> Result<ConvergenceReport> {
    validate(n_list, k)?;
    let target = beta_inverse_eigen_limit(k);
    let samples = sample(n_list, grid, &target, |n| {
        let p = eigenpolynomial(n, k)?;
        Ok((apply_beta_inverse(n, &p) - p).scale(&int(n as i64)))
    })?;
    Ok(ConvergenceReport::new(
        format!("n(inverse Beta p_k - p_k) vs L_k, k = {k}"),
        target,
        samples,
        band,
    ))
}

/// The three eigenpolynomial limits checked for one index `k`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct EigenLimitReport {
    pub k: usize,
    /// `B̄_n⁻¹ p_k^{(n)} → p_k*`.
    pub beta_inverse: ConvergenceReport,
    /// `F_n p_k^{(n)} → p_k*`.
    pub f: ConvergenceReport,
    /// `n(F_n p_k^{(n)} - p_k^{(n)})` → the rate limit.
    pub f_rate: ConvergenceReport,
}

impl EigenLimitReport {
    pub fn passed(&self) -> bool {
        self.beta_inverse.passed() && self.f.passed() && self.f_rate.passed()
    }
}

pub fn f_on_eigen_limit(k: usize, n_list: &[usize], grid: usize, band: RateBand) -> Result<EigenLimitReport> {
    validate(n_list, k)?;
    let star = limit_eigenpolynomial(k);
    let beta_inverse = sample(n_list, grid, &star, |n| Ok(apply_beta_inverse(n, &eigenpolynomial(n, k)?)))?;
    let f = sample(n_list, grid, &star, |n| Ok(apply_f(n, &eigenpolynomial(n, k)?)))?;
    let rate = f_eigen_rate_limit(k);
    let f_rate = sample(n_list, grid, &rate, |n| {
        let p = eigenpolynomial(n, k)?;
        Ok((apply_f(n, &p) - p).scale(&int(n as i64)))
    })?;
    Ok(EigenLimitReport {
        k,
        beta_inverse: ConvergenceReport::new(format!("inverse Beta p_k vs p_k*, k = {k}"), star.clone(), beta_inverse, band),
        f: ConvergenceReport::new(format!("F_n p_k vs p_k*, k = {k}"), star, f, band),
        f_rate: ConvergenceReport::new(format!("n(F_n p_k - p_k) vs rate limit, k = {k}"), rate, f_rate, band),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn leading_term_is_limit_of_monomial() {
        for m in 0..=12 {
            assert_eq!(voronovskaya_leading_term(m), voronovskaya_limit(&RationalPolynomial::monomial(m)), "m={m}");
        }
        let w = RationalPolynomial::new(vec![int(0), int(1), int(-1)]);
        assert_eq!(voronovskaya_limit(&RationalPolynomial::monomial(2)), w);
    }

    #[test]
    fn e2_is_exact_at_every_n() {
        let report =
            voronovskaya_convergence(&RationalPolynomial::monomial(2), &[2, 5, 40], DEFAULT_GRID, RateBand::FIRST_ORDER)
                .unwrap();
        assert!(report.samples.iter().all(|(_, e)| *e == 0.0));
        assert!(report.passed());
        assert_eq!(report.rate_estimate, None);
    }

    #[test]
    fn small_index_limits() {
        assert!(beta_inverse_eigen_limit(0).is_zero());
        assert!(beta_inverse_eigen_limit(1).is_zero());
        assert_eq!(
            beta_inverse_eigen_limit(2),
            RationalPolynomial::new(vec![int(0), int(-1), int(1)])
        );
        assert!(f_eigen_rate_limit(2).is_zero());
    }

    #[test]
    fn invalid_lists() {
        let p = RationalPolynomial::monomial(3);
        assert!(voronovskaya_convergence(&p, &[2, 10], 11, RateBand::FIRST_ORDER).is_err());
        assert!(voronovskaya_convergence(&p, &[10, 10], 11, RateBand::FIRST_ORDER).is_err());
        assert!(voronovskaya_convergence(&p, &[], 11, RateBand::FIRST_ORDER).is_err());
    }

    #[test]
    fn csv_has_two_columns() {
        let report =
            voronovskaya_convergence(&RationalPolynomial::monomial(3), &[10, 100], 21, RateBand::FIRST_ORDER).unwrap();
        let csv = report.to_csv();
        assert!(csv.lines().nth(1).unwrap().starts_with("# ratio="));
        assert!(csv.lines().nth(2) == Some("n,error"));
        assert_eq!(csv.lines().count(), 5);
    }
}
