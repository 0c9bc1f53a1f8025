use num_rational::BigRational;

use crate::error::{Error, Result};
use crate::exact::{factorial, int};
use crate::RationalPolynomial;

/// `D̃^{2l} p = D^{l-1}[x^l (1-x)^l D^{l+1} p]` for `l ≥ 1`, identity for `l = 0`.
pub fn modified_derivative(l: usize, p: &RationalPolynomial) -> RationalPolynomial {
    if l == 0 {
        return p.clone();
    }
    let weight = RationalPolynomial::new(vec![int(0), int(1), int(-1)]);
    let weight_pow = (0..l).fold(RationalPolynomial::constant(int(1)), |acc, _| acc * weight.clone());
    (weight_pow * p.derivative(l + 1)).derivative(l - 1)
}

/// `U_n⁻¹ p = Σ_{l=0}^{n-1} (-1)^l (n-1-l)! / (l! (n-1)!) · D̃^{2l} p` for `p ∈ Π_n`.
pub fn durrmeyer_inverse_differential(n: usize, p: &RationalPolynomial) -> Result<RationalPolynomial> {
    if n < 1 {
        return Err(Error::InvalidDegree(n));
    }
    let degree = p.degree().unwrap_or(0);
    if degree > n {
        return Err(Error::OutsidePolynomialSpace { degree, n });
    }
    let mut acc = RationalPolynomial::zero();
    for l in 0..n {
        let term = modified_derivative(l, p);
        if term.is_zero() {
            // D^{l+1} p vanishes for every larger l as well.
            break;
        }
        let w = BigRational::new(factorial(n - 1 - l), factorial(l) * factorial(n - 1));
        let w = if l % 2 == 0 { w } else { -w };
        acc = acc + term.scale(&w);
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn constants_are_fixed() {
        for n in 1..6 {
            let one = RationalPolynomial::constant(int(1));
            assert_eq!(durrmeyer_inverse_differential(n, &one).unwrap(), one);
        }
    }

    #[test]
    fn degree_check() {
        let e3 = RationalPolynomial::monomial(3);
        assert!(matches!(
            durrmeyer_inverse_differential(2, &e3),
            Err(Error::OutsidePolynomialSpace { degree: 3, n: 2 })
        ));
    }
}
