//! Nodal and difference bases: `b_{n,i}`, `φ_{n,i} = B̄_n⁻¹ b_{n,i}` and `ρ_{n,j}`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use super::columns::{beta_inverse_image, rational_pow};
use crate::error::{Error, Result};
use crate::exact::{binomial, divided_difference, factorial, rising, stirling_second, Polynomial, Scalar};
use crate::{Rational, RationalPolynomial};

fn check_index(n: usize, i: usize) -> Result<()> {
    if n < 1 {
        return Err(Error::InvalidDegree(n));
    }
    if i > n {
        return Err(Error::IndexOutOfRange { index: i, max: n });
    }
    Ok(())
}

/// `b_{n,i}(x) = C(n,i) x^i (1-x)^{n-i}` expanded as `Σ_l C(n,i) C(n-i,l) (-1)^l e_{i+l}`.
pub fn bernstein_basis(n: usize, i: usize) -> Result<RationalPolynomial> {
    check_index(n, i)?;
    let mut coeffs = vec![Rational::zero(); n + 1];
    let lead = binomial(n, i);
    for l in 0..=(n - i) {
        let v = &lead * binomial(n - i, l);
        coeffs[i + l] = BigRational::from_integer(if l % 2 == 0 { v } else { -v });
    }
    Ok(RationalPolynomial::new(coeffs))
}

/// `φ_{n,i} = B̄_n⁻¹ b_{n,i}`, from the double sum over Stirling numbers.
pub fn phi_basis(n: usize, i: usize) -> Result<RationalPolynomial> {
    check_index(n, i)?;
    let b = bernstein_basis(n, i)?;
    let mut acc = RationalPolynomial::zero();
    for (j, c) in b.coeffs().iter().enumerate() {
        if !c.is_zero() {
            acc = acc + beta_inverse_image(n, j).scale(c);
        }
    }
    Ok(acc)
}

/// `ρ_{n,j} = ((n-j)! n^{2j-1})⁻¹ Σ_k (-1)^{j-k} (n+k-1)! S(j,k) e_k`.
pub fn rho_basis(n: usize, j: usize) -> Result<RationalPolynomial> {
    check_index(n, j)?;
    let scale = rational_pow(n, 1 - 2 * j as i64) / BigRational::from_integer(factorial(n - j));
    let coeffs = (0..=j)
        .map(|k| {
            // (n+k-1)! = (n-1)! · n(n+1)...(n+k-1)
            let v: BigInt = factorial(n - 1) * rising(n, k) * stirling_second(j, k);
            let v = if (j - k) % 2 == 0 { v } else { -v };
            BigRational::from_integer(v) * scale.clone()
        })
        .collect();
    Ok(RationalPolynomial::new(coeffs))
}

/// Monomial coefficients to Bernstein-basis coefficients of degree `n`:
/// `x^j = Σ_{i≥j} C(i,j)/C(n,j) b_{n,i}`.
pub fn to_bernstein_coefficients(p: &RationalPolynomial, n: usize) -> Result<Vec<Rational>> {
    let degree = p.degree().unwrap_or(0);
    if degree > n {
        return Err(Error::OutsidePolynomialSpace { degree, n });
    }
    Ok((0..=n)
        .map(|i| {
            (0..=i.min(degree)).fold(Rational::zero(), |acc, j| {
                let w = BigRational::new(binomial(i, j), binomial(n, j));
                acc + p.coeff(j) * w
            })
        })
        .collect())
}

/// Sums `Σ_i β_i b_{n,i}` back into the monomial basis.
pub fn from_bernstein_coefficients(beta: &[Rational]) -> Result<RationalPolynomial> {
    let n = beta.len().checked_sub(1).ok_or(Error::EmptyInput)?;
    if n == 0 {
        return Ok(RationalPolynomial::constant(beta[0].clone()));
    }
    let mut acc = RationalPolynomial::zero();
    for (i, b) in beta.iter().enumerate() {
        acc = acc + bernstein_basis(n, i)?.scale(b);
    }
    Ok(acc)
}

/// Function values on the uniform grid `{i/n}`.
#[derive(Debug, Clone, PartialEq)]
pub struct NodeSamples<T> {
    n: usize,
    values: Vec<T>,
}

impl<T: Scalar> NodeSamples<T> {
    pub fn new(n: usize, values: Vec<T>) -> Result<Self> {
        if values.len() != n + 1 {
            return Err(Error::DimensionMismatch {
                expected: n + 1,
                found: values.len(),
            });
        }
        Ok(NodeSamples { n, values })
    }

    /// Samples `f(i/n)` for `i = 0..=n`.
    pub fn from_fn(n: usize, f: impl Fn(&Rational) -> T) -> Self {
        let values = (0..=n).map(|i| f(&BigRational::new(i.into(), n.into()))).collect();
        NodeSamples { n, values }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn values(&self) -> &[T] {
        &self.values
    }
}

impl NodeSamples<Rational> {
    /// Exact samples of a polynomial.
    pub fn of_polynomial(n: usize, p: &RationalPolynomial) -> Self {
        Self::from_fn(n, |x| p.eval(x))
    }

    /// The leading divided differences `[0, 1/n, ..., j/n; f]`, `j = 0..=n`.
    pub fn forward_divided_differences(&self) -> Vec<Rational> {
        let knots: Vec<Rational> = (0..=self.n)
            .map(|i| BigRational::new(i.into(), self.n.into()))
            .collect();
        (0..=self.n)
            .map(|j| {
                divided_difference(&knots[..=j], &self.values[..=j])
                    .expect("uniform knots are distinct")
            })
            .collect()
    }
}

/// Which nodal basis turns samples into a polynomial.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SampleFamily {
    /// `F_n f = Σ f(i/n) φ_{n,i}`.
    Phi,
    /// `B_n f = Σ f(i/n) b_{n,i}`.
    Bernstein,
}

/// `Σ_i f(i/n) φ_{n,i}` or `Σ_i f(i/n) b_{n,i}`, with coefficients rounded to `T`.
pub fn apply_to_samples<T: Scalar>(
    family: SampleFamily,
    n: usize,
    samples: &NodeSamples<T>,
) -> Result<Polynomial<T>> {
    if samples.n != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: samples.n,
        });
    }
    let mut acc = Polynomial::<T>::zero();
    for (i, v) in samples.values.iter().enumerate() {
        let basis = match family {
            SampleFamily::Phi => phi_basis(n, i)?,
            SampleFamily::Bernstein => bernstein_basis(n, i)?,
        };
        acc = acc + basis.to_scalar::<T>().scale(v);
    }
    Ok(acc)
}

/// `F_n f = Σ_j [0, ..., j/n; f] ρ_{n,j}`.
pub fn apply_rho_representation(samples: &NodeSamples<Rational>) -> Result<RationalPolynomial> {
    let n = samples.n;
    let diffs = samples.forward_divided_differences();
    let mut acc = RationalPolynomial::zero();
    for (j, d) in diffs.iter().enumerate() {
        if !d.is_zero() {
            acc = acc + rho_basis(n, j)?.scale(d);
        }
    }
    Ok(acc)
}
