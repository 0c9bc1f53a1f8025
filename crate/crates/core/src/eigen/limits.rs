use num_traits::One;

use super::jacobi::jacobi_shifted;
use crate::exact::{factorial, int, ratio};
use crate::{Rational, RationalPolynomial};

/// `a*(k,j) = lim_n a(n,k,j) = Π_{l=1}^{k-j} (k+1-l)(k-l) / (l (l-2k+1))`.
///
/// The linear case uses the convention `a*(1,0) = -1/2`; zero for `j > k`.
pub fn limit_coefficient(k: usize, j: usize) -> Rational {
    if j > k {
        return int(0);
    }
    if (k, j) == (1, 0) {
        return ratio(-1, 2);
    }
    let (k, j) = (k as i64, j as i64);
    (1..=k - j).fold(Rational::one(), |acc, l| {
        acc * ratio((k + 1 - l) * (k - l), l * (l - 2 * k + 1))
    })
}

/// `Σ_j a*(k,j) e_j`.
pub fn limit_eigenpolynomial_from_coefficients(k: usize) -> RationalPolynomial {
    RationalPolynomial::new((0..=k).map(|j| limit_coefficient(k, j)).collect())
}

/// `p*_k`: `1`, `x - 1/2`, and `k!(k-2)!/(2k-2)! · x(x-1) P_{k-2}^{(1,1)}(2x-1)` for `k ≥ 2`.
pub fn limit_eigenpolynomial(k: usize) -> RationalPolynomial {
    match k {
        0 => RationalPolynomial::constant(int(1)),
        1 => RationalPolynomial::linear(ratio(-1, 2), int(1)),
        _ => {
            let c = Rational::new(factorial(k) * factorial(k - 2), factorial(2 * k - 2));
            let w = RationalPolynomial::new(vec![int(0), int(-1), int(1)]);
            (w * jacobi_shifted(k - 2)).scale(&c)
        }
    }
}
