//! Dense univariate polynomials in the monomial basis.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};


use super::scalar::Scalar;

/// Dense polynomial `Σ c_j x^j`; trailing zero coefficients are never stored.
#[derive(Clone, PartialEq)]
pub struct Polynomial<T> {
    coeffs: Vec<T>,
}

impl<T: Scalar> Polynomial<T> {
    pub fn new(mut coeffs: Vec<T>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    pub fn zero() -> Self {
        Polynomial { coeffs: Vec::new() }
    }

    pub fn constant(c: T) -> Self {
        Self::new(vec![c])
    }

    /// The monomial `e_j = x^j`.
    pub fn monomial(j: usize) -> Self {
        let mut coeffs = vec![T::zero(); j + 1];
        coeffs[j] = T::one();
        Polynomial { coeffs }
    }

    /// `x`.
    pub fn x() -> Self {
        Self::monomial(1)
    }

    /// `a + b x`.
    pub fn linear(a: T, b: T) -> Self {
        Self::new(vec![a, b])
    }

    /// `Π (x - r)` over the given roots.
    pub fn from_roots(roots: &[T]) -> Self {
        roots.iter().fold(Self::constant(T::one()), |acc, r| {
            acc * Self::linear(-r.clone(), T::one())
        })
    }

    /// Highest index with a nonzero coefficient; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<T> {
        self.coeffs
    }

    /// Coefficient of `x^j` (zero beyond the degree).
    pub fn coeff(&self, j: usize) -> T {
        self.coeffs.get(j).cloned().unwrap_or_else(T::zero)
    }

    /// Coefficients padded with zeros to exactly `len` entries.
    ///
    /// Panics if the polynomial has more than `len` coefficients.
    pub fn padded(&self, len: usize) -> Vec<T> {
        assert!(self.coeffs.len() <= len, "degree exceeds padded length");
        let mut v = self.coeffs.clone();
        v.resize(len, T::zero());
        v
    }

    pub fn leading_coeff(&self) -> Option<&T> {
        self.coeffs.last()
    }

    /// Horner evaluation.
    pub fn eval(&self, x: &T) -> T {
        self.coeffs
            .iter()
            .rev()
            .fold(T::zero(), |acc, c| acc * x.clone() + c.clone())
    }

    pub fn scale(&self, s: &T) -> Self {
        Self::new(self.coeffs.iter().map(|c| c.clone() * s.clone()).collect())
    }

    /// Divides through by the leading coefficient. The zero polynomial is returned unchanged.
    pub fn monic(&self) -> Self {
        match self.leading_coeff() {
            Some(lc) => {
                let inv = T::one() / lc.clone();
                self.scale(&inv)
            }
            None => self.clone(),
        }
    }

    /// The `order`-th derivative.
    pub fn derivative(&self, order: usize) -> Self {
        if order == 0 {
            return self.clone();
        }
        if self.coeffs.len() <= order {
            return Self::zero();
        }
        let coeffs = (order..self.coeffs.len())
            .map(|j| {
                // j (j-1) ... (j-order+1)
                let falling = ((j - order + 1)..=j).fold(T::one(), |acc, f| acc * T::from_usize(f));
                self.coeffs[j].clone() * falling
            })
            .collect();
        Self::new(coeffs)
    }

    /// Antiderivative vanishing at 0.
    pub fn antiderivative(&self) -> Self {
        let mut coeffs = Vec::with_capacity(self.coeffs.len() + 1);
        coeffs.push(T::zero());
        for (j, c) in self.coeffs.iter().enumerate() {
            coeffs.push(c.clone() / T::from_usize(j + 1));
        }
        Self::new(coeffs)
    }

    /// `∫_a^b p(x) dx`.
    pub fn definite_integral(&self, a: &T, b: &T) -> T {
        let anti = self.antiderivative();
        anti.eval(b) - anti.eval(a)
    }

    /// Composition `p(q(x))`.
    pub fn compose(&self, q: &Self) -> Self {
        self.coeffs
            .iter()
            .rev()
            .fold(Self::zero(), |acc, c| acc * q.clone() + Self::constant(c.clone()))
    }

    /// The reflection `x ↦ p(1 - x)`.
    pub fn reflect(&self) -> Self {
        self.compose(&Self::linear(T::one(), -T::one()))
    }

    pub fn map<U: Scalar>(&self, f: impl Fn(&T) -> U) -> Polynomial<U> {
        Polynomial::new(self.coeffs.iter().map(f).collect())
    }

}

impl Polynomial<num_rational::BigRational> {
    /// Rounds every coefficient into another scalar type.
    pub fn to_scalar<U: Scalar>(&self) -> Polynomial<U> {
        self.map(U::from_rational)
    }
}

impl<T: Scalar> Default for Polynomial<T> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<T: Scalar> Add for Polynomial<T> {
    type Output = Self;

    fn add(self, rhs: Self) -> Self {
        &self + &rhs
    }
}

impl<T: Scalar> Add for &Polynomial<T> {
    type Output = Polynomial<T>;

    fn add(self, rhs: Self) -> Polynomial<T> {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        Polynomial::new((0..len).map(|j| self.coeff(j) + rhs.coeff(j)).collect())
    }
}

impl<T: Scalar> Sub for Polynomial<T> {
    type Output = Self;

    fn sub(self, rhs: Self) -> Self {
        &self - &rhs
    }
}

impl<T: Scalar> Sub for &Polynomial<T> {
    type Output = Polynomial<T>;

    fn sub(self, rhs: Self) -> Polynomial<T> {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        Polynomial::new((0..len).map(|j| self.coeff(j) - rhs.coeff(j)).collect())
    }
}

impl<T: Scalar> Neg for Polynomial<T> {
    type Output = Self;

    fn neg(self) -> Self {
        Polynomial::new(self.coeffs.into_iter().map(|c| -c).collect())
    }
}

impl<T: Scalar> Mul for Polynomial<T> {
    type Output = Self;

    fn mul(self, rhs: Self) -> Self {
        &self * &rhs
    }
}

impl<T: Scalar> Mul for &Polynomial<T> {
    type Output = Polynomial<T>;

    fn mul(self, rhs: Self) -> Polynomial<T> {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        let mut out = vec![T::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        Polynomial::new(out)
    }
}

impl<T: Scalar + fmt::Display> fmt::Display for Polynomial<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (j, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match j {
                0 => write!(f, "{c}")?,
                1 => write!(f, "({c})*x")?,
                _ => write!(f, "({c})*x^{j}")?,
            }
        }
        Ok(())
    }
}

impl<T: Scalar + fmt::Display> fmt::Debug for Polynomial<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial[{self}]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::scalar::{int, ratio};
    use crate::Rational;

    fn p(coeffs: &[(i64, i64)]) -> Polynomial<Rational> {
        Polynomial::new(coeffs.iter().map(|&(a, b)| ratio(a, b)).collect())
    }

    #[test]
    fn trailing_zeros_are_trimmed() {
        let q = p(&[(1, 1), (0, 1), (0, 1)]);
        assert_eq!(q.degree(), Some(0));
        let z = p(&[(0, 1)]);
        assert!(z.is_zero());
        assert_eq!(z.degree(), None);
        let cancel = Polynomial::<Rational>::monomial(3) - Polynomial::monomial(3);
        assert_eq!(cancel.degree(), None);
    }

    #[test]
    fn evaluation() {
        assert_eq!(Polynomial::<Rational>::monomial(3).eval(&ratio(1, 2)), ratio(1, 8));
        assert_eq!(Polynomial::<Rational>::zero().eval(&ratio(7, 3)), int(0));
        // x (x - 1)(x - 1/2) at 1/4
        let q = Polynomial::from_roots(&[int(0), int(1), ratio(1, 2)]);
        assert_eq!(q.eval(&ratio(1, 4)), ratio(3, 64));
    }

    #[test]
    fn derivatives() {
        for m in 1..8usize {
            let d = Polynomial::<Rational>::monomial(m).derivative(1);
            assert_eq!(d, Polynomial::monomial(m - 1).scale(&int(m as i64)));
        }
        let q = p(&[(1, 3), (2, 1), (5, 7)]);
        assert_eq!(q.derivative(0), q);
        assert_eq!(
            Polynomial::<Rational>::monomial(3).derivative(3),
            Polynomial::constant(int(6))
        );
        assert!(Polynomial::<Rational>::monomial(3).derivative(4).is_zero());
    }

    #[test]
    fn integrals() {
        let e1 = Polynomial::<Rational>::x();
        assert_eq!(e1.definite_integral(&int(0), &int(1)), ratio(1, 2));
        let x_one_minus_x = p(&[(0, 1), (1, 1), (-1, 1)]);
        assert_eq!(x_one_minus_x.definite_integral(&int(0), &int(1)), ratio(1, 6));
        assert_eq!(x_one_minus_x.definite_integral(&ratio(2, 5), &ratio(2, 5)), int(0));
    }

    #[test]
    fn reflection_and_composition() {
        let q = p(&[(0, 1), (0, 1), (1, 1)]); // x^2
        let r = q.reflect(); // 1 - 2x + x^2
        assert_eq!(r, p(&[(1, 1), (-2, 1), (1, 1)]));
        assert_eq!(r.reflect(), q);
    }

    #[test]
    fn float_polynomials_share_the_code() {
        let q = Polynomial::<f64>::new(vec![1.0, -3.0, 2.0]);
        assert_eq!(q.eval(&0.5), 0.0);
        assert_eq!(q.derivative(1).coeffs(), &[-3.0, 4.0]);
    }
}
