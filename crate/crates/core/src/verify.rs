//! Exact identity suite behind the `verify` subcommand.
//!
//! Every check is a rational equality over `n ≤ max_n`; nothing here is
//! approximate.

use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::asymptotics::{voronovskaya_leading_term, voronovskaya_limit};
use crate::eigen::{
    bernstein_dual_coefficients, bernstein_eigenpolynomial, bernstein_eigenvalue, beta_eigen_coefficient,
    beta_eigenpolynomial, beta_eigenvalue, durrmeyer_dual_coefficient, durrmeyer_eigenpolynomial,
    durrmeyer_eigenvalue, durrmeyer_jacobi_eigenpolynomial, f_eigenpolynomial, f_eigenvalue, jacobi_shifted,
    limit_eigenpolynomial, limit_eigenpolynomial_from_coefficients,
};
use crate::error::Result;
use crate::exact::{divided_difference, int, ratio, stirling_first, stirling_second};
use crate::operators::columns::{apply_bernstein, apply_beta, apply_durrmeyer, apply_f};
use crate::operators::{
    apply_rho_representation, bernstein_basis, bernstein_matrix, beta_inverse_matrix, beta_matrix,
    central_moment, durrmeyer_inverse_differential, durrmeyer_matrix, f_matrix, moment_from_images, phi_basis,
    second_moment, NodeSamples, OperatorMatrix,
};
use crate::{Rational, RationalPolynomial};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckResult {
    pub name: &'static str,
    pub passed: bool,
    /// First failing case, empty on success.
    pub detail: String,
}

type Check = fn(usize) -> Result<Option<String>>;

fn e(m: usize) -> RationalPolynomial {
    RationalPolynomial::monomial(m)
}

fn first_failure(cases: impl Iterator<Item = (String, bool)>) -> Option<String> {
    cases.filter(|(_, ok)| !ok).map(|(c, _)| c).next()
}

fn try_first_failure(cases: impl Iterator<Item = Result<(String, bool)>>) -> Result<Option<String>> {
    for case in cases {
        let (c, ok) = case?;
        if !ok {
            return Ok(Some(c));
        }
    }
    Ok(None)
}

fn stirling_orthogonality(max_n: usize) -> Result<Option<String>> {
    Ok(first_failure((0..=max_n).flat_map(|m| (0..=max_n).map(move |k| (m, k))).map(|(m, k)| {
        let sum = (0..=max_n).fold(num_bigint::BigInt::zero(), |acc, j| {
            acc + stirling_first(m, j) * stirling_second(j, k)
        });
        let expected = if m == k { 1 } else { 0 };
        (format!("m={m} k={k}"), sum == expected.into())
    })))
}

fn divided_differences(max_n: usize) -> Result<Option<String>> {
    try_first_failure((1..=max_n).flat_map(|n| (0..=n).flat_map(move |m| (0..=n).map(move |j| (n, m, j)))).map(
        |(n, m, j)| {
            let knots: Vec<Rational> = (0..=j).map(|i| ratio(i as i64, n as i64)).collect();
            let values: Vec<Rational> = knots.iter().map(|t| e(m).eval(t)).collect();
            let dd = divided_difference(&knots, &values)?;
            let expected = crate::operators::columns::rational_pow(n, j as i64 - m as i64)
                * Rational::from_integer(stirling_second(m, j));
            Ok((format!("n={n} m={m} j={j}"), dd == expected))
        },
    ))
}

fn decomposition(max_n: usize) -> Result<Option<String>> {
    try_first_failure((1..=max_n).map(|n| {
        let lhs = beta_matrix(n)?.compose(&f_matrix(n)?)?;
        Ok((format!("n={n}"), lhs == bernstein_matrix(n)?))
    }))
}

fn f_two_routes(max_n: usize) -> Result<Option<String>> {
    try_first_failure((1..=max_n).map(|n| {
        let via_inverse = beta_matrix(n)?.inverse()?.compose(&bernstein_matrix(n)?)?;
        Ok((format!("n={n}"), via_inverse == f_matrix(n)?))
    }))
}

fn f_e2_closed_form(max_n: usize) -> Result<Option<String>> {
    Ok(first_failure((2..=max_n).map(|n| {
        let nn = (n * n) as i64;
        let expected = RationalPolynomial::new(vec![int(0), ratio(1, nn), ratio(nn - 1, nn)]);
        let exact = (apply_f(n, &e(2)) - e(2)).scale(&int(nn));
        let w = RationalPolynomial::new(vec![int(0), int(1), int(-1)]);
        (format!("n={n}"), apply_f(n, &e(2)) == expected && exact == w)
    })))
}

fn inverse_beta_closed_form(max_n: usize) -> Result<Option<String>> {
    try_first_failure((1..=max_n).map(|n| Ok((format!("n={n}"), beta_inverse_matrix(n)? == beta_matrix(n)?.inverse()?))))
}

fn inverse_durrmeyer_differential(max_n: usize) -> Result<Option<String>> {
    try_first_failure((1..=max_n).map(|n| {
        let inverse = durrmeyer_matrix(n)?.inverse()?;
        for j in 0..=n {
            if durrmeyer_inverse_differential(n, &e(j))? != inverse.image(j) {
                return Ok((format!("n={n} j={j}"), false));
            }
        }
        Ok((format!("n={n}"), true))
    }))
}

fn pair_check(n: usize, k: usize, apply: impl Fn(&RationalPolynomial) -> RationalPolynomial, pair: crate::eigen::EigenPair) -> bool {
    pair.k == k && pair.eigenpolynomial.leading_coeff().is_some_and(One::is_one) && pair.satisfies(apply) && n >= k
}

fn eigen_equations(max_n: usize) -> Result<Option<String>> {
    try_first_failure((1..=max_n).flat_map(|n| (0..=n).map(move |k| (n, k))).map(|(n, k)| {
        let beta = pair_check(n, k, |p| apply_beta(n, p), beta_eigenpolynomial(n, k)?);
        let bern = pair_check(n, k, |p| apply_bernstein(n, p), bernstein_eigenpolynomial(n, k)?);
        let f = pair_check(n, k, |p| apply_f(n, p), f_eigenpolynomial(n, k)?);
        let p = durrmeyer_eigenpolynomial(k);
        let u = apply_durrmeyer(n, &p) == p.scale(&durrmeyer_eigenvalue(n, k)?);
        Ok((format!("n={n} k={k}"), beta && bern && f && u))
    }))
}

fn eigen_closed_forms(max_n: usize) -> Result<Option<String>> {
    try_first_failure((1..=max_n).flat_map(|n| (0..=n).map(move |k| (n, k))).map(|(n, k)| {
        let ratio_ok = f_eigenvalue(n, k)? == bernstein_eigenvalue(n, k)? / beta_eigenvalue(n, k)?;
        let (ki, ni) = (k as i64, n as i64);
        let next = k < 2 || beta_eigen_coefficient(n, k, k - 1)? == ratio(-ki, 2);
        let second = k < 3
            || beta_eigen_coefficient(n, k, k - 2)?
                == ratio(ki * (ki - 1) * (ki - 2), 24)
                    * ratio(6 * ni + 3 * ki - 5, (2 * ki - 3) * ni + (ki - 1) * (ki - 2));
        let low = k > 3 || beta_eigenpolynomial(n, k)?.eigenpolynomial == bernstein_eigenpolynomial(n, k)?.eigenpolynomial;
        Ok((format!("n={n} k={k}"), ratio_ok && next && second && low))
    }))
}

fn durrmeyer_composition(max_n: usize) -> Result<Option<String>> {
    try_first_failure((1..=max_n).map(|n| {
        let b = bernstein_matrix(n)?;
        let lhs = durrmeyer_matrix(n)?.compose(&f_matrix(n)?)?;
        Ok((format!("n={n}"), lhs == b.compose(&b)?))
    }))
}

fn phi_properties(max_n: usize) -> Result<Option<String>> {
    try_first_failure((1..=max_n).map(|n| {
        let phis: Vec<RationalPolynomial> = (0..=n).map(|i| phi_basis(n, i)).collect::<Result<_>>()?;
        let sum = phis.iter().fold(RationalPolynomial::zero(), |acc, p| acc + p.clone());
        let symmetric = (0..=n).all(|i| phis[i].reflect() == phis[n - i]);
        let endpoints = (0..=n).all(|i| {
            phis[i].eval(&int(0)) == int(i64::from(i == 0)) && phis[i].eval(&int(1)) == int(i64::from(i == n))
        });
        let preimage = (0..=n).all(|i| {
            bernstein_basis(n, i).map(|b| apply_beta(n, &phis[i]) == b).unwrap_or(false)
        });
        Ok((format!("n={n}"), sum == RationalPolynomial::constant(int(1)) && symmetric && endpoints && preimage))
    }))
}

fn rho_representation(max_n: usize) -> Result<Option<String>> {
    try_first_failure((1..=max_n).flat_map(|n| (0..=n).map(move |m| (n, m))).map(|(n, m)| {
        let samples = NodeSamples::of_polynomial(n, &e(m));
        Ok((format!("n={n} m={m}"), apply_rho_representation(&samples)? == apply_f(n, &e(m))))
    }))
}

fn moment_identities(max_n: usize) -> Result<Option<String>> {
    try_first_failure((2..=max_n).map(|n| {
        let ni = n as i64;
        let w = RationalPolynomial::new(vec![int(0), int(1), int(-1)]);
        let m2 = central_moment(n, 2) == w.scale(&ratio(1, ni * ni));
        let m1 = central_moment(n, 1).is_zero() && central_moment(n, 0) == RationalPolynomial::constant(int(1));
        let beta2 = second_moment(|j| apply_beta(n, &e(j))) == w.scale(&ratio(1, ni + 1));
        let bern2 = second_moment(|j| apply_bernstein(n, &e(j))) == w.scale(&ratio(1, ni));
        let stancu2 = second_moment(|j| apply_beta(n, &apply_bernstein(n, &e(j)))) == w.scale(&ratio(2, ni + 1));
        // (P∘Q)((e_1 - x)^2; x) = P(Q((e_1 - u)^2; u); x) + P((e_1 - x)^2; x)
        let composition = |outer: &dyn Fn(&RationalPolynomial) -> RationalPolynomial,
                           inner: &dyn Fn(&RationalPolynomial) -> RationalPolynomial| {
            let lhs = moment_from_images(2, |j| outer(&inner(&e(j))));
            let rhs = outer(&second_moment(|j| inner(&e(j)))) + second_moment(|j| outer(&e(j)));
            lhs == rhs
        };
        let bb = |p: &RationalPolynomial| apply_beta(n, p);
        let b = |p: &RationalPolynomial| apply_bernstein(n, p);
        let comp = composition(&bb, &b) && composition(&b, &bb);
        Ok((format!("n={n}"), m2 && m1 && beta2 && bern2 && stancu2 && comp))
    }))
}

fn durrmeyer_expansions(max_n: usize) -> Result<Option<String>> {
    try_first_failure((2..=max_n).flat_map(|n| (0..=n).map(move |j| (n, j))).map(|(n, j)| {
        let f = e(j);
        let bf = apply_bernstein(n, &f);
        let mut recon = RationalPolynomial::zero();
        let mut f_expansion = RationalPolynomial::zero();
        for k in 0..=n {
            let nu = durrmeyer_dual_coefficient(n, k, &f)?;
            let weight = if k < 2 { int(1) } else { durrmeyer_eigenvalue(n, k)? };
            recon = recon + durrmeyer_jacobi_eigenpolynomial(k).scale(&(weight * nu));
            let nu_b = durrmeyer_dual_coefficient(n, k, &bf)?;
            f_expansion = f_expansion + durrmeyer_jacobi_eigenpolynomial(k).scale(&nu_b);
        }
        Ok((format!("n={n} j={j}"), recon == bf && f_expansion == apply_f(n, &f)))
    }))
}

fn bernstein_duals(max_n: usize) -> Result<Option<String>> {
    try_first_failure((1..=max_n).flat_map(|n| (0..=n).map(move |j| (n, j))).map(|(n, j)| {
        let f = e(j);
        let mu = bernstein_dual_coefficients(n, &f)?;
        let mut recon = RationalPolynomial::zero();
        for (k, m) in mu.iter().enumerate() {
            let pair = bernstein_eigenpolynomial(n, k)?;
            recon = recon + pair.eigenpolynomial.scale(&(pair.eigenvalue * m.clone()));
        }
        let p = bernstein_eigenpolynomial(n, j)?.eigenpolynomial;
        let unit = bernstein_dual_coefficients(n, &p)?
            .iter()
            .enumerate()
            .all(|(k, c)| *c == int(i64::from(k == j)));
        Ok((format!("n={n} j={j}"), recon == apply_bernstein(n, &f) && unit))
    }))
}

fn limit_polynomials(max_n: usize) -> Result<Option<String>> {
    Ok(first_failure((0..=max_n.max(5)).map(|k| {
        (format!("k={k}"), limit_eigenpolynomial(k) == limit_eigenpolynomial_from_coefficients(k))
    })))
}

fn jacobi_orthogonality(max_n: usize) -> Result<Option<String>> {
    let top = max_n.clamp(1, 8);
    let w = RationalPolynomial::new(vec![int(0), int(1), int(-1)]);
    Ok(first_failure((0..=top).flat_map(|i| (0..i).map(move |j| (i, j))).map(|(i, j)| {
        let g = w.clone() * jacobi_shifted(i) * jacobi_shifted(j);
        (format!("i={i} j={j}"), g.definite_integral(&int(0), &int(1)).is_zero())
    })))
}

fn durrmeyer_gauges(max_n: usize) -> Result<Option<String>> {
    Ok(first_failure((2..=max_n.max(2)).map(|k| {
        let a = durrmeyer_eigenpolynomial(k);
        let b = durrmeyer_jacobi_eigenpolynomial(k);
        let c = a.leading_coeff().cloned().unwrap_or_default() / b.leading_coeff().cloned().unwrap_or_else(|| int(1));
        (format!("k={k}"), a == b.scale(&c))
    })))
}

fn voronovskaya_terms(max_n: usize) -> Result<Option<String>> {
    Ok(first_failure((0..=max_n.max(12)).map(|m| {
        (format!("m={m}"), voronovskaya_leading_term(m) == voronovskaya_limit(&e(m)))
    })))
}

fn kernel_identity(max_n: usize) -> Result<Option<String>> {
    try_first_failure((2..=max_n).flat_map(|n| (1..n).flat_map(move |k| (0..=n).map(move |i| (n, k, i)))).map(
        |(n, k, i)| {
            let b = if n == 2 { RationalPolynomial::constant(int(1)) } else { bernstein_basis(n - 2, k - 1)? };
            let lhs = (b * phi_basis(n, i)?).definite_integral(&int(0), &int(1))
                * int(n as i64 - 1);
            let rhs = bernstein_basis(n, i)?.eval(&ratio(k as i64, n as i64));
            Ok((format!("n={n} k={k} i={i}"), lhs == rhs))
        },
    ))
}

fn fixes_linear(max_n: usize) -> Result<Option<String>> {
    try_first_failure((1..=max_n).map(|n| {
        let ops: Vec<OperatorMatrix> = vec![
            bernstein_matrix(n)?,
            beta_matrix(n)?,
            beta_inverse_matrix(n)?,
            f_matrix(n)?,
            durrmeyer_matrix(n)?,
        ];
        let ok = ops.iter().all(|op| {
            op.image(0) == e(0) && op.image(1) == e(1) && op.matrix().is_upper_triangular()
        });
        Ok((format!("n={n}"), ok))
    }))
}

const CHECKS: [(&str, Check); 21] = [
    ("stirling orthogonality", stirling_orthogonality),
    ("divided differences of monomials", divided_differences),
    ("operators fix e_0 and e_1", fixes_linear),
    ("decomposition B_n = Beta_n F_n", decomposition),
    ("F_n via matrix inverse", f_two_routes),
    ("F_n e_2 closed form", f_e2_closed_form),
    ("inverse Beta closed form", inverse_beta_closed_form),
    ("Durrmeyer inverse differential form", inverse_durrmeyer_differential),
    ("eigen equations", eigen_equations),
    ("eigenvalue and coefficient closed forms", eigen_closed_forms),
    ("U_n F_n = B_n^2", durrmeyer_composition),
    ("phi basis properties", phi_properties),
    ("rho representation of F_n", rho_representation),
    ("moment identities", moment_identities),
    ("Durrmeyer dual expansions", durrmeyer_expansions),
    ("Bernstein dual coefficients", bernstein_duals),
    ("limit polynomial formulas agree", limit_polynomials),
    ("Jacobi orthogonality", jacobi_orthogonality),
    ("Durrmeyer eigenpolynomial gauges", durrmeyer_gauges),
    ("Voronovskaya leading term", voronovskaya_terms),
    ("Durrmeyer kernel identity", kernel_identity),
];

/// Names of the checks, in run order.
pub fn check_names() -> Vec<&'static str> {
    CHECKS.iter().map(|(name, _)| *name).collect()
}

/// Runs every check for all `n ≤ max_n`; errors count as failures.
pub fn run_exact_suite(max_n: usize) -> Vec<CheckResult> {
    CHECKS
        .par_iter()
        .map(|(name, check)| match check(max_n) {
            Ok(None) => CheckResult {
                name,
                passed: true,
                detail: String::new(),
            },
            Ok(Some(case)) => CheckResult {
                name,
                passed: false,
                detail: format!("fails at {case}"),
            },
            Err(err) => CheckResult {
                name,
                passed: false,
                detail: format!("error: {err}"),
            },
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_passes_for_small_n() {
        for r in run_exact_suite(5) {
            assert!(r.passed, "{} {}", r.name, r.detail);
        }
        assert_eq!(check_names().len(), CHECKS.len());
    }
}
