use super::{bernstein_eigenvalue, check, f_eigenvalue, EigenPair};
use crate::error::{Error, Result};
use crate::exact::{int, ratio};
use crate::operators::columns::{bernstein_image, f_image};
use crate::{Rational, RationalMatrix, RationalPolynomial};

/// Monic degree-`k` polynomial spanning the kernel of `T - λ I` on `Π_k`.
///
/// `image(m)` must return `T e_m` for `m ≤ k`; the operator must preserve degree.
pub fn eigenpolynomial_by_nullspace(
    k: usize,
    eigenvalue: &Rational,
    image: impl Fn(usize) -> RationalPolynomial,
) -> Result<RationalPolynomial> {
    let cols: Vec<RationalPolynomial> = (0..=k).map(image).collect();
    let block = RationalMatrix::from_polynomial_columns(k + 1, &cols)?;
    debug_assert!(block.is_upper_triangular());
    let kernel = block.shift_diagonal(eigenvalue).nullspace();
    if kernel.len() != 1 {
        return Err(Error::DegenerateEigenvalue(kernel.len()));
    }
    let p = RationalPolynomial::new(kernel.into_iter().next().expect("one kernel vector"));
    if p.degree() != Some(k) {
        return Err(Error::DegenerateEigenvalue(0));
    }
    Ok(p.monic())
}

fn conventional(k: usize) -> Option<RationalPolynomial> {
    match k {
        0 => Some(RationalPolynomial::constant(int(1))),
        1 => Some(RationalPolynomial::linear(ratio(-1, 2), int(1))),
        _ => None,
    }
}

/// Monic eigenpolynomial `p_k^{(n)}` of `B_n` with eigenvalue `λ_k^{(n)}`.
///
/// Built from the first `k+1` columns only, so large `n` is cheap for small `k`.
pub fn bernstein_eigenpolynomial(n: usize, k: usize) -> Result<EigenPair> {
    check(n, k)?;
    let eigenvalue = bernstein_eigenvalue(n, k)?;
    let eigenpolynomial = match conventional(k) {
        Some(p) => p,
        None => eigenpolynomial_by_nullspace(k, &eigenvalue, |m| bernstein_image(n, m))?,
    };
    Ok(EigenPair {
        k,
        eigenvalue,
        eigenpolynomial,
    })
}

/// Monic eigenpolynomial of `F_n` with eigenvalue `ν_k^{(n)}`.
pub fn f_eigenpolynomial(n: usize, k: usize) -> Result<EigenPair> {
    check(n, k)?;
    let eigenvalue = f_eigenvalue(n, k)?;
    let eigenpolynomial = match conventional(k) {
        Some(p) => p,
        None => eigenpolynomial_by_nullspace(k, &eigenvalue, |m| f_image(n, m))?,
    };
    Ok(EigenPair {
        k,
        eigenvalue,
        eigenpolynomial,
    })
}
