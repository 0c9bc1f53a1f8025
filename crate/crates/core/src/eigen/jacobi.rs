use crate::exact::{int, ratio};
use crate::{Rational, RationalPolynomial};

/// `Ĵ_m(x) = P_m^{(1,1)}(2x - 1)`, unnormalised, from the three-term recurrence
/// `m(m+2) P_m = (2m+1)(m+1) t P_{m-1} - m(m+1) P_{m-2}`.
pub fn jacobi_shifted(m: usize) -> RationalPolynomial {
    let t = RationalPolynomial::linear(int(-1), int(2));
    let mut prev = RationalPolynomial::constant(int(1));
    if m == 0 {
        return prev;
    }
    let mut cur = t.scale(&int(2));
    for d in 2..=m {
        let d = d as i64;
        let next = (t.clone() * cur.clone()).scale(&int((2 * d + 1) * (d + 1)))
            - prev.scale(&int(d * (d + 1)));
        prev = std::mem::replace(&mut cur, next.scale(&ratio(1, d * (d + 2))));
    }
    cur
}

/// `h_m = ∫_0^1 x(1-x) Ĵ_m(x)^2 dx`.
pub fn jacobi_norm(m: usize) -> Rational {
    let w = RationalPolynomial::new(vec![int(0), int(1), int(-1)]);
    let j = jacobi_shifted(m);
    (w * j.clone() * j).definite_integral(&int(0), &int(1))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn first_polynomials() {
        assert_eq!(jacobi_shifted(0), RationalPolynomial::constant(int(1)));
        assert_eq!(jacobi_shifted(1), RationalPolynomial::linear(int(-2), int(4)));
        assert_eq!(jacobi_norm(0), ratio(1, 6));
    }

    #[test]
    fn norms_match_closed_form() {
        // (m+1) / ((2m+3)(m+2)), from ∫(1-t^2) P_m^2 = 8(m+1)/((2m+3)(m+2)) on [-1,1]
        for m in 0..10i64 {
            assert_eq!(jacobi_norm(m as usize), ratio(m + 1, (2 * m + 3) * (m + 2)));
        }
    }

    #[test]
    fn endpoint_value() {
        // P_m^{(1,1)}(1) = m + 1
        for m in 0..10 {
            assert_eq!(jacobi_shifted(m).eval(&int(1)), int(m as i64 + 1));
        }
    }
}
