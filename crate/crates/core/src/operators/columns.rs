//! Images of single monomials, computed without building a full matrix.
//!
//! Every operator in the family maps `e_m` to a polynomial of degree at most
//! `m`, so a column can be produced for any `m` independently of the others.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::exact::{binomial, factorial, rising, stirling_first, stirling_second};
use crate::{Rational, RationalPolynomial};

fn pow(n: usize, e: usize) -> BigInt {
    num_traits::pow(BigInt::from(n), e)
}

fn signed(v: BigInt, exponent: usize) -> BigInt {
    if exponent % 2 == 0 {
        v
    } else {
        -v
    }
}

/// `B_n e_m = Σ_j C(n,j) j! S(m,j) / n^m · e_j`.
pub fn bernstein_image(n: usize, m: usize) -> RationalPolynomial {
    let den = pow(n, m);
    let coeffs = (0..=m.min(n))
        .map(|j| {
            let num = binomial(n, j) * factorial(j) * stirling_second(m, j);
            BigRational::new(num, den.clone())
        })
        .collect();
    RationalPolynomial::new(coeffs)
}

/// `B̄_n e_k = nx(nx+1)...(nx+k-1) / (n(n+1)...(n+k-1))`.
pub fn beta_image(n: usize, k: usize) -> RationalPolynomial {
    let den = rising(n, k);
    let coeffs = (0..=k)
        .map(|i| {
            let num = signed(stirling_first(k, i), k - i) * pow(n, i);
            BigRational::new(num, den.clone())
        })
        .collect();
    RationalPolynomial::new(coeffs)
}

/// `B̄_n⁻¹ e_j = n^{-j} Σ_k (-1)^{j-k} (n-1+k)!/(n-1)! S(j,k) e_k`.
pub fn beta_inverse_image(n: usize, j: usize) -> RationalPolynomial {
    let den = pow(n, j);
    let coeffs = (0..=j)
        .map(|k| {
            let num = signed(rising(n, k) * stirling_second(j, k), j - k);
            BigRational::new(num, den.clone())
        })
        .collect();
    RationalPolynomial::new(coeffs)
}

/// Applies a linear map given by its monomial images to `p`.
pub fn apply_by_images(
    p: &RationalPolynomial,
    image: impl Fn(usize) -> RationalPolynomial,
) -> RationalPolynomial {
    p.coeffs()
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .fold(RationalPolynomial::zero(), |acc, (j, c)| acc + image(j).scale(c))
}

/// `B_n p` for any polynomial `p`.
pub fn apply_bernstein(n: usize, p: &RationalPolynomial) -> RationalPolynomial {
    apply_by_images(p, |j| bernstein_image(n, j))
}

/// `B̄_n p` for any polynomial `p`.
pub fn apply_beta(n: usize, p: &RationalPolynomial) -> RationalPolynomial {
    apply_by_images(p, |j| beta_image(n, j))
}

/// `B̄_n⁻¹ p`; the Beta operator is a bijection of every `Π_m`.
pub fn apply_beta_inverse(n: usize, p: &RationalPolynomial) -> RationalPolynomial {
    apply_by_images(p, |j| beta_inverse_image(n, j))
}

/// `F_n e_m = B̄_n⁻¹(B_n e_m)`; valid for every `m`, including `m > n`.
pub fn f_image(n: usize, m: usize) -> RationalPolynomial {
    apply_beta_inverse(n, &bernstein_image(n, m))
}

/// `F_n p` for any polynomial `p`.
pub fn apply_f(n: usize, p: &RationalPolynomial) -> RationalPolynomial {
    apply_beta_inverse(n, &apply_bernstein(n, p))
}

/// `L_n e_m = B̄_n(B_n e_m)`.
pub fn stancu_image(n: usize, m: usize) -> RationalPolynomial {
    apply_beta(n, &bernstein_image(n, m))
}

/// `U_n e_m = B_n(B̄_n e_m)`.
pub fn durrmeyer_image(n: usize, m: usize) -> RationalPolynomial {
    apply_bernstein(n, &beta_image(n, m))
}

/// `U_n p` for any polynomial `p`.
pub fn apply_durrmeyer(n: usize, p: &RationalPolynomial) -> RationalPolynomial {
    apply_bernstein(n, &apply_beta(n, p))
}

/// `n^e` as a rational (negative exponents allowed).
pub(crate) fn rational_pow(n: usize, e: i64) -> Rational {
    let base = pow(n, e.unsigned_abs() as usize);
    if e >= 0 {
        BigRational::from_integer(base)
    } else {
        BigRational::new(BigInt::one(), base)
    }
}
