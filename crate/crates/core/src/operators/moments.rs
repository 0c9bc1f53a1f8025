use num_bigint::BigInt;
use num_rational::BigRational;

use super::columns::f_image;
use crate::exact::binomial;
use crate::RationalPolynomial;

/// `M_{n,m}(x) = F_n((e_1 - x e_0)^m; x) = Σ_j C(m,j) (-x)^{m-j} (F_n e_j)(x)`.
///
/// Only the images of `e_0..e_m` are needed, so any `n ≥ 1` is cheap.
pub fn central_moment(n: usize, m: usize) -> RationalPolynomial {
    moment_from_images(m, |j| f_image(n, j))
}

/// `T((e_1 - x)^m; x)` for an operator given by its monomial images.
pub fn moment_from_images(
    m: usize,
    image: impl Fn(usize) -> RationalPolynomial,
) -> RationalPolynomial {
    let mut acc = RationalPolynomial::zero();
    for j in 0..=m {
        let c = binomial(m, j);
        let c = if (m - j) % 2 == 0 { c } else { -c };
        let weight = RationalPolynomial::monomial(m - j).scale(&BigRational::from_integer(c));
        acc = acc + weight * image(j);
    }
    acc
}

/// Second moment `T((e_1 - x)^2; x)`.
pub fn second_moment(image: impl Fn(usize) -> RationalPolynomial) -> RationalPolynomial {
    moment_from_images(2, image)
}

/// The polynomial `u ↦ (u - x0)^m` for a fixed centre.
pub fn shifted_power(x0: &BigRational, m: usize) -> RationalPolynomial {
    let base = RationalPolynomial::linear(-x0.clone(), BigRational::from_integer(BigInt::from(1)));
    (0..m).fold(RationalPolynomial::constant(BigRational::from_integer(1.into())), |acc, _| {
        acc * base.clone()
    })
}
