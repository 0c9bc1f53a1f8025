use num_traits::Zero;
use rayon::prelude::*;
use serde::Serialize;

use super::Approx;
use crate::error::{Error, Result};
use crate::exact::Scalar;
use crate::operators::{beta_inverse_matrix, bernstein_basis};

/// Points scanned on `[0, 1/2]` before refinement.
pub const SCAN_POINTS: usize = 2000;
/// Width of the final golden-section bracket.
pub const REFINE_TOL: f64 = 1e-6;

/// Coefficients of `φ_{n,0..=n}` in the monomial basis, rounded once to `BITS` bits.
#[derive(Debug, Clone)]
pub struct PhiTable<const BITS: usize> {
    n: usize,
    coeffs: Vec<Vec<Approx<BITS>>>,
}

impl<const BITS: usize> PhiTable<BITS> {
    pub fn new(n: usize) -> Result<Self> {
        let inverse = beta_inverse_matrix(n)?;
        let coeffs = (0..=n)
            .into_par_iter()
            .map(|i| {
                let b = bernstein_basis(n, i)?.padded(n + 1);
                let phi = inverse.matrix().mul_vec(&b)?;
                Ok(phi.iter().map(Approx::from_rational).collect())
            })
            .collect::<Result<_>>()?;
        Ok(Self { n, coeffs })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    fn powers(&self, x: &Approx<BITS>) -> Vec<Approx<BITS>> {
        let mut p = Vec::with_capacity(self.n + 1);
        p.push(Approx::from_i64(1));
        for j in 1..=self.n {
            let next = &p[j - 1] * x;
            p.push(next);
        }
        p
    }

    fn dot(c: &[Approx<BITS>], powers: &[Approx<BITS>]) -> Approx<BITS> {
        c.iter()
            .zip(powers)
            .fold(Approx::zero(), |acc, (a, b)| acc + a * b)
    }

    /// `φ_{n,i}(x)` for every `i`.
    pub fn values(&self, x: &Approx<BITS>) -> Vec<Approx<BITS>> {
        let powers = self.powers(x);
        self.coeffs.iter().map(|c| Self::dot(c, &powers)).collect()
    }

    /// `Ψ_n(x) = Σ_i |φ_{n,i}(x)|`.
    pub fn lebesgue(&self, x: &Approx<BITS>) -> Approx<BITS> {
        self.values(x)
            .into_iter()
            .fold(Approx::zero(), |acc, v| acc + v.abs())
    }

    /// Monomial coefficients of `Σ_i samples[i] φ_{n,i}`.
    pub fn combine(&self, samples: &[Approx<BITS>]) -> Result<Vec<Approx<BITS>>> {
        if samples.len() != self.n + 1 {
            return Err(Error::DimensionMismatch {
                expected: self.n + 1,
                found: samples.len(),
            });
        }
        Ok((0..=self.n)
            .map(|j| {
                samples
                    .iter()
                    .zip(&self.coeffs)
                    .fold(Approx::zero(), |acc, (s, c)| acc + s * &c[j])
            })
            .collect())
    }

    pub fn eval_combined(&self, combined: &[Approx<BITS>], x: &Approx<BITS>) -> Approx<BITS> {
        Self::dot(combined, &self.powers(x))
    }
}

fn check_x(x: f64) -> Result<()> {
    if (0.0..=1.0).contains(&x) {
        Ok(())
    } else {
        Err(Error::OutsideUnitInterval(x))
    }
}

/// `Ψ_n(x)` at `BITS` bits of precision.
pub fn lebesgue_function<const BITS: usize>(n: usize, x: f64) -> Result<f64> {
    check_x(x)?;
    Ok(PhiTable::<BITS>::new(n)?.lebesgue(&Approx::from_f64(x)).to_f64())
}

/// `(x, Ψ_n(x))` on `grid` uniform points of `[0, 1]`.
pub fn lebesgue_curve<const BITS: usize>(n: usize, grid: usize) -> Result<Vec<(f64, f64)>> {
    let table = PhiTable::<BITS>::new(n)?;
    let last = grid.max(2) - 1;
    Ok((0..=last)
        .into_par_iter()
        .map(|i| {
            let x = Approx::from_ratio(i as i64, last as i64);
            (x.to_f64(), table.lebesgue(&x).to_f64())
        })
        .collect())
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct LebesgueMax {
    pub n: usize,
    pub argmax: f64,
    pub max: f64,
}

/// Maximum of `Ψ_n` over `[0, 1]`.
///
/// `Ψ_n` is symmetric about `1/2`, so only `[0, 1/2]` is searched: a uniform
/// scan, then golden-section refinement around the best scan point.
pub fn lebesgue_max<const BITS: usize>(n: usize) -> Result<LebesgueMax> {
    let table = PhiTable::<BITS>::new(n)?;
    let psi = |x: f64| table.lebesgue(&Approx::from_f64(x)).to_f64();
    let h = 0.5 / SCAN_POINTS as f64;
    let scan: Vec<f64> = (0..=SCAN_POINTS).into_par_iter().map(|i| psi(i as f64 * h)).collect();
    let best = scan
        .iter()
        .enumerate()
        .max_by(|a, b| a.1.total_cmp(b.1))
        .map(|(i, _)| i)
        .expect("non-empty scan");

    let (mut lo, mut hi) = ((best.max(1) - 1) as f64 * h, ((best + 1).min(SCAN_POINTS)) as f64 * h);
    let ratio = (5f64.sqrt() - 1.0) / 2.0;
    let mut c = hi - ratio * (hi - lo);
    let mut d = lo + ratio * (hi - lo);
    let (mut fc, mut fd) = (psi(c), psi(d));
    while hi - lo > REFINE_TOL {
        if fc >= fd {
            hi = d;
            d = c;
            fd = fc;
            c = hi - ratio * (hi - lo);
            fc = psi(c);
        } else {
            lo = c;
            c = d;
            fc = fd;
            d = lo + ratio * (hi - lo);
            fd = psi(d);
        }
    }
    let (argmax, max) = [(best as f64 * h, scan[best]), (c, fc), (d, fd)]
        .into_iter()
        .max_by(|a, b| a.1.total_cmp(&b.1))
        .expect("three candidates");
    Ok(LebesgueMax { n, argmax, max })
}

/// [`lebesgue_max`] for several `n`, in parallel.
pub fn lebesgue_table<const BITS: usize>(ns: &[usize]) -> Result<Vec<LebesgueMax>> {
    ns.par_iter().map(|&n| lebesgue_max::<BITS>(n)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::ratio;
    use crate::operators::phi_basis;
    use crate::numerics::ApproxReal;

    #[test]
    fn endpoints_are_one() {
        for n in [1, 5, 12] {
            assert!((lebesgue_function::<256>(n, 0.0).unwrap() - 1.0).abs() < 1e-30);
            assert!((lebesgue_function::<256>(n, 1.0).unwrap() - 1.0).abs() < 1e-30);
        }
    }

    #[test]
    fn table_matches_exact_basis() {
        let n = 9;
        let table = PhiTable::<256>::new(n).unwrap();
        let x = ratio(2, 7);
        let approx = table.values(&ApproxReal::from_rational(&x));
        for (i, v) in approx.iter().enumerate() {
            let exact = phi_basis(n, i).unwrap().eval(&x);
            assert!((v.to_f64() - crate::exact::rational_to_f64(&exact)).abs() < 1e-14);
        }
    }

    #[test]
    fn at_least_one_everywhere() {
        for (_, v) in lebesgue_curve::<128>(8, 41).unwrap() {
            assert!(v >= 1.0 - 1e-12);
        }
    }
}
