use num_bigint::BigInt;
use num_traits::Zero;

use super::{beta_eigenvalue, check, pow, EigenPair};
use crate::error::Result;
use crate::exact::{int, ratio, rising, stirling_first};
use crate::{Rational, RationalPolynomial};

/// Coefficients `a(n,k,i)`, `i = 0..=k`, of the monic eigenpolynomial `q_k` of `B̄_n`.
///
/// Solved top-down from `a(n,k,k) = 1`:
///
/// ```text
/// a(n,k,i) = Σ_{j=i+1}^{k} (-1)^{j-i-1} s(j,i) (n+j)...(n+k-1) a(n,k,j)
///            / ((n+i)...(n+k-1) - n^{k-i})
/// ```
///
/// Only meaningful for `k ≥ 2`; indices 0 and 1 share the eigenvalue 1.
fn recurrence(n: usize, k: usize) -> Vec<Rational> {
    let mut a = vec![Rational::zero(); k + 1];
    a[k] = int(1);
    for i in (0..k).rev() {
        let mut num = Rational::zero();
        for j in (i + 1)..=k {
            let s = stirling_first(j, i);
            if s.is_zero() {
                continue;
            }
            let s = if (j - i - 1) % 2 == 0 { s } else { -s };
            let weight: BigInt = s * rising(n + j, k - j);
            num += a[j].clone() * Rational::from_integer(weight);
        }
        let den: BigInt = rising(n + i, k - i) - pow(n, k - i);
        assert!(!den.is_zero(), "vanishing denominator in the eigenpolynomial recurrence (n={n}, k={k}, i={i})");
        a[i] = num / Rational::from_integer(den);
    }
    a
}

/// `a(n,k,i)`; for `k ≤ 1` the conventional choices `q_0 = 1`, `q_1 = x - 1/2` are used.
pub fn beta_eigen_coefficient(n: usize, k: usize, i: usize) -> Result<Rational> {
    let q = beta_eigenpolynomial(n, k)?;
    Ok(q.eigenpolynomial.coeff(i))
}

/// Monic eigenpolynomial `q_k^{(n)}` of `B̄_n` with eigenvalue `η_k^{(n)}`.
pub fn beta_eigenpolynomial(n: usize, k: usize) -> Result<EigenPair> {
    check(n, k)?;
    let eigenpolynomial = match k {
        0 => RationalPolynomial::constant(int(1)),
        1 => RationalPolynomial::linear(ratio(-1, 2), int(1)),
        _ => RationalPolynomial::new(recurrence(n, k)),
    };
    Ok(EigenPair {
        k,
        eigenvalue: beta_eigenvalue(n, k)?,
        eigenpolynomial,
    })
}
