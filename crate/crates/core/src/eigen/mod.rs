//! Spectra and eigenpolynomials of `B_n`, `B̄_n`, `F_n` and `U_n` on `Π_n`,
//! their `n → ∞` limits, and the dual-functional expansions built on them.
//!
//! All four operators map `e_m` into `Π_m`, so their monomial-basis matrices
//! are upper triangular and the eigenvalues are the diagonal entries. An
//! eigenpolynomial of index `k` has degree `k` and is found on the leading
//! `(k+1)×(k+1)` block.
//!
//! Eigenvalue `1` is double (indices 0 and 1) for every operator. The
//! linear eigenpolynomial is therefore a convention: `x - 1/2` for `B_n`,
//! `B̄_n` and `F_n`, and `x` for `U_n`.

mod beta;
mod duals;
mod jacobi;
mod limits;
mod nullspace;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::exact::{falling, factorial, int, rising};
use crate::operators::OperatorKind;
use crate::{Rational, RationalPolynomial};

pub use beta::{beta_eigen_coefficient, beta_eigenpolynomial};
pub use duals::{
    bernstein_dual_coefficients, durrmeyer_differential_eigenvalue, durrmeyer_dual_coefficient,
    durrmeyer_eigenpolynomial, durrmeyer_jacobi_eigenpolynomial, eigen_coordinates,
};
pub use jacobi::{jacobi_norm, jacobi_shifted};
pub use limits::{limit_coefficient, limit_eigenpolynomial, limit_eigenpolynomial_from_coefficients};
pub use nullspace::{bernstein_eigenpolynomial, eigenpolynomial_by_nullspace, f_eigenpolynomial};

/// Eigenvalues of one operator on `Π_n`, indexed by the degree `k` of the eigenpolynomial.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Spectrum {
    pub kind: OperatorKind,
    pub n: usize,
    #[serde(serialize_with = "crate::io::serialize_rationals")]
    pub values: Vec<Rational>,
}

impl Spectrum {
    /// `values[0] = values[1] = 1` and strictly decreasing from index 1 on.
    pub fn is_well_formed(&self) -> bool {
        let one = int(1);
        self.values.len() == self.n + 1
            && self.values[0] == one
            && self.values.get(1).is_none_or(|v| *v == one)
            && self.values.windows(2).skip(1).all(|w| w[1] < w[0])
    }
}

/// A monic eigenpolynomial with its eigenvalue.
#[derive(Debug, Clone, PartialEq)]
pub struct EigenPair {
    pub k: usize,
    pub eigenvalue: Rational,
    pub eigenpolynomial: RationalPolynomial,
}

impl EigenPair {
    /// Checks `T q = λ q` exactly, with `T` given as a polynomial map.
    pub fn satisfies(&self, apply: impl Fn(&RationalPolynomial) -> RationalPolynomial) -> bool {
        apply(&self.eigenpolynomial) == self.eigenpolynomial.scale(&self.eigenvalue)
    }
}

fn check(n: usize, k: usize) -> Result<()> {
    if n < 1 {
        return Err(Error::InvalidDegree(n));
    }
    if k > n {
        return Err(Error::IndexOutOfRange { index: k, max: n });
    }
    Ok(())
}

fn pow(n: usize, e: usize) -> num_bigint::BigInt {
    num_traits::pow(num_bigint::BigInt::from(n), e)
}

/// `η_k = (n-1)! n^k / (n+k-1)!`.
pub fn beta_eigenvalue(n: usize, k: usize) -> Result<Rational> {
    check(n, k)?;
    Ok(Rational::new(pow(n, k), rising(n, k)))
}

/// `λ_k = n! / ((n-k)! n^k)`.
pub fn bernstein_eigenvalue(n: usize, k: usize) -> Result<Rational> {
    check(n, k)?;
    Ok(Rational::new(falling(n, k), pow(n, k)))
}

/// `ν_k = (n-1+k)! / ((n-k)! n^{2k-1})`, the eigenvalues of `F_n`.
pub fn f_eigenvalue(n: usize, k: usize) -> Result<Rational> {
    check(n, k)?;
    let num = factorial(n + k - 1) * n;
    Ok(Rational::new(num, factorial(n - k) * pow(n, 2 * k)))
}

/// `ω_k = (n-1)! n! / ((n-k)! (n+k-1)!)`, the eigenvalues of `U_n`.
pub fn durrmeyer_eigenvalue(n: usize, k: usize) -> Result<Rational> {
    check(n, k)?;
    Ok(Rational::new(
        factorial(n - 1) * factorial(n),
        factorial(n - k) * factorial(n + k - 1),
    ))
}

/// Closed-form spectrum of one of the four operators with a known eigenstructure.
pub fn spectrum(kind: OperatorKind, n: usize) -> Result<Spectrum> {
    let eigenvalue: fn(usize, usize) -> Result<Rational> = match kind {
        OperatorKind::Beta => beta_eigenvalue,
        OperatorKind::Bernstein => bernstein_eigenvalue,
        OperatorKind::F => f_eigenvalue,
        OperatorKind::GenuineDurrmeyer => durrmeyer_eigenvalue,
        other => return Err(Error::UnknownKind(other.to_string())),
    };
    let values = (0..=n).map(|k| eigenvalue(n, k)).collect::<Result<_>>()?;
    Ok(Spectrum { kind, n, values })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::ratio;

    #[test]
    fn closed_forms_at_small_indices() {
        for n in 1..12i64 {
            let nu = n as usize;
            for kind in [
                OperatorKind::Beta,
                OperatorKind::Bernstein,
                OperatorKind::F,
                OperatorKind::GenuineDurrmeyer,
            ] {
                let s = spectrum(kind, nu).unwrap();
                assert!(s.is_well_formed(), "{kind} n={n}");
            }
            if nu >= 2 {
                assert_eq!(beta_eigenvalue(nu, 2).unwrap(), ratio(n, n + 1));
                assert_eq!(durrmeyer_eigenvalue(nu, 2).unwrap(), ratio(n - 1, n + 1));
            }
        }
    }

    #[test]
    fn f_eigenvalues_are_ratios() {
        for n in 1..15 {
            for k in 0..=n {
                let lhs = f_eigenvalue(n, k).unwrap();
                let rhs = bernstein_eigenvalue(n, k).unwrap() / beta_eigenvalue(n, k).unwrap();
                assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn out_of_range() {
        assert!(matches!(beta_eigenvalue(3, 4), Err(Error::IndexOutOfRange { .. })));
        assert!(matches!(spectrum(OperatorKind::Stancu, 3), Err(Error::UnknownKind(_))));
        assert!(spectrum(OperatorKind::Beta, 0).is_err());
    }
}
