use num_traits::Zero;

use super::jacobi::{jacobi_norm, jacobi_shifted};
use super::nullspace::bernstein_eigenpolynomial;
use super::{bernstein_eigenvalue, check, durrmeyer_eigenvalue};
use crate::error::{Error, Result};
use crate::exact::{factorial, int};
use crate::operators::columns::apply_bernstein;
use crate::{Rational, RationalPolynomial};

fn check_degree(n: usize, f: &RationalPolynomial) -> Result<()> {
    match f.degree() {
        Some(d) if d > n => Err(Error::OutsidePolynomialSpace { degree: d, n }),
        _ => Ok(()),
    }
}

/// Coordinates of `f` in a basis `basis[k]` of exact degree `k`, by back-substitution.
pub fn eigen_coordinates(basis: &[RationalPolynomial], f: &RationalPolynomial) -> Result<Vec<Rational>> {
    if basis.is_empty() {
        return Err(Error::EmptyInput);
    }
    let top = basis.len() - 1;
    check_degree(top, f)?;
    let mut rest = f.clone();
    let mut coords = vec![Rational::zero(); basis.len()];
    for k in (0..=top).rev() {
        let b = &basis[k];
        let lead = match (b.degree(), b.leading_coeff()) {
            (Some(d), Some(l)) if d == k => l.clone(),
            _ => return Err(Error::InvalidArgument(format!("basis element {k} does not have degree {k}"))),
        };
        let c = rest.coeff(k) / lead;
        if !c.is_zero() {
            rest = rest - b.scale(&c);
        }
        coords[k] = c;
    }
    debug_assert!(rest.is_zero());
    Ok(coords)
}

/// `μ_k^{(n)}(f)`, `k = 0..=n`, with `B_n f = Σ_k λ_k μ_k(f) p_k` in the monic eigenbasis of `B_n`.
pub fn bernstein_dual_coefficients(n: usize, f: &RationalPolynomial) -> Result<Vec<Rational>> {
    check(n, 0)?;
    check_degree(n, f)?;
    let mut basis = Vec::with_capacity(n + 1);
    for k in 0..=n {
        basis.push(bernstein_eigenpolynomial(n, k)?.eigenpolynomial);
    }
    let coords = eigen_coordinates(&basis, &apply_bernstein(n, f))?;
    coords
        .into_iter()
        .enumerate()
        .map(|(k, c)| Ok(c / bernstein_eigenvalue(n, k)?))
        .collect()
}

/// Eigenpolynomials of `U_n`, independent of `n`: `1`, `x`, and `D^{k-2}[x^{k-1}(1-x)^{k-1}]`.
pub fn durrmeyer_eigenpolynomial(k: usize) -> RationalPolynomial {
    match k {
        0 => RationalPolynomial::constant(int(1)),
        1 => RationalPolynomial::x(),
        _ => {
            let w = RationalPolynomial::new(vec![int(0), int(1), int(-1)]);
            let mut p = RationalPolynomial::constant(int(1));
            for _ in 0..k - 1 {
                p = p * w.clone();
            }
            p.derivative(k - 2)
        }
    }
}

/// The same eigenpolynomials in the Jacobi gauge: `1`, `x`, `x(1-x) Ĵ_{k-2}(x)`.
pub fn durrmeyer_jacobi_eigenpolynomial(k: usize) -> RationalPolynomial {
    match k {
        0 | 1 => durrmeyer_eigenpolynomial(k),
        _ => RationalPolynomial::new(vec![int(0), int(1), int(-1)]) * jacobi_shifted(k - 2),
    }
}

/// `γ_k^{(l)}` with `D̃^{2l} p_k = γ_k^{(l)} p_k`.
pub fn durrmeyer_differential_eigenvalue(k: usize, l: usize) -> Rational {
    if l == 0 {
        return int(1);
    }
    if k == 0 || l > k - 1 {
        return int(0);
    }
    let v = Rational::new(factorial(k - 1 + l), factorial(k - 1 - l));
    if l % 2 == 0 {
        v
    } else {
        -v
    }
}

/// `ν̂_k(f)`: `f(0)`, `f(1) - f(0)`, and for `k ≥ 2`
/// `ω_k^{-1} h_{k-2}^{-1} ∫_0^1 (B_n f - Lf) Ĵ_{k-2}` with `Lf = (1-x) f(0) + x f(1)`.
pub fn durrmeyer_dual_coefficient(n: usize, k: usize, f: &RationalPolynomial) -> Result<Rational> {
    check(n, k)?;
    check_degree(n, f)?;
    let f0 = f.eval(&int(0));
    let f1 = f.eval(&int(1));
    match k {
        0 => Ok(f0),
        1 => Ok(f1 - f0),
        _ => {
            let lf = RationalPolynomial::linear(f0.clone(), f1 - f0);
            let g = (apply_bernstein(n, f) - lf) * jacobi_shifted(k - 2);
            let integral = g.definite_integral(&int(0), &int(1));
            Ok(integral / (durrmeyer_eigenvalue(n, k)? * jacobi_norm(k - 2)))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::ratio;
    use crate::operators::modified_derivative;

    #[test]
    fn gauges_agree_up_to_constant() {
        for k in 2..9 {
            let a = durrmeyer_eigenpolynomial(k);
            let b = durrmeyer_jacobi_eigenpolynomial(k);
            let c = a.leading_coeff().unwrap().clone() / b.leading_coeff().unwrap().clone();
            assert_eq!(a, b.scale(&c), "k={k}");
        }
    }

    #[test]
    fn differential_eigenvalues() {
        for k in 0..8 {
            let p = durrmeyer_eigenpolynomial(k);
            for l in 0..8 {
                let lhs = modified_derivative(l, &p);
                assert_eq!(lhs, p.scale(&durrmeyer_differential_eigenvalue(k, l)), "k={k} l={l}");
            }
        }
    }

    #[test]
    fn dual_coefficients_of_e1() {
        let e1 = RationalPolynomial::x();
        assert_eq!(durrmeyer_dual_coefficient(5, 0, &e1).unwrap(), int(0));
        assert_eq!(durrmeyer_dual_coefficient(5, 1, &e1).unwrap(), int(1));
        assert_eq!(durrmeyer_dual_coefficient(5, 2, &e1).unwrap(), int(0));
    }

    #[test]
    fn bernstein_duals_of_eigenpolynomial() {
        let p2 = bernstein_eigenpolynomial(6, 2).unwrap().eigenpolynomial;
        let mu = bernstein_dual_coefficients(6, &p2).unwrap();
        let expected: Vec<Rational> = (0..=6).map(|k| if k == 2 { int(1) } else { int(0) }).collect();
        assert_eq!(mu, expected);
        let e0 = RationalPolynomial::constant(ratio(1, 1));
        assert_eq!(bernstein_dual_coefficients(6, &e0).unwrap()[0], int(1));
    }
}
