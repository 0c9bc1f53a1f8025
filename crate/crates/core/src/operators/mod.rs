//! The operator family on `Π_n` as exact matrices in the monomial basis.
//!
//! Column `j` of every [`OperatorMatrix`] holds the coefficients of the
//! operator applied to `e_j = x^j`, so composition is matrix product:
//! `compose(A, B)` represents `A ∘ B`.

pub mod basis;
pub mod columns;
pub mod durrmeyer;
pub mod moments;

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::{RationalMatrix, RationalPolynomial};

pub use basis::{
    apply_rho_representation, apply_to_samples, bernstein_basis, from_bernstein_coefficients, phi_basis, rho_basis,
    to_bernstein_coefficients, NodeSamples, SampleFamily,
};
pub use durrmeyer::{durrmeyer_inverse_differential, modified_derivative};
pub use moments::{central_moment, moment_from_images, second_moment, shifted_power};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum OperatorKind {
    Bernstein,
    Beta,
    BetaInverse,
    F,
    Stancu,
    GenuineDurrmeyer,
    DurrmeyerInverse,
    Composite,
}

impl OperatorKind {
    pub fn name(self) -> &'static str {
        match self {
            OperatorKind::Bernstein => "bernstein",
            OperatorKind::Beta => "beta",
            OperatorKind::BetaInverse => "beta-inv",
            OperatorKind::F => "F",
            OperatorKind::Stancu => "stancu",
            OperatorKind::GenuineDurrmeyer => "durrmeyer",
            OperatorKind::DurrmeyerInverse => "durrmeyer-inv",
            OperatorKind::Composite => "composite",
        }
    }
}

impl fmt::Display for OperatorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for OperatorKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "bernstein" | "B" => OperatorKind::Bernstein,
            "beta" => OperatorKind::Beta,
            "beta-inv" => OperatorKind::BetaInverse,
            "F" | "f" => OperatorKind::F,
            "stancu" => OperatorKind::Stancu,
            "durrmeyer" | "U" => OperatorKind::GenuineDurrmeyer,
            "durrmeyer-inv" => OperatorKind::DurrmeyerInverse,
            "composite" => OperatorKind::Composite,
            other => return Err(Error::UnknownKind(other.to_string())),
        })
    }
}

/// A linear endomorphism of `Π_n` stored as its `(n+1)×(n+1)` monomial-basis matrix.
///
/// The kind tag is metadata only; equality compares `n` and the matrix.
#[derive(Clone)]
pub struct OperatorMatrix {
    n: usize,
    kind: OperatorKind,
    matrix: RationalMatrix,
}

impl PartialEq for OperatorMatrix {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.matrix == other.matrix
    }
}

impl fmt::Debug for OperatorMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (n = {}): {:?}", self.kind, self.n, self.matrix)
    }
}

fn check_degree(n: usize) -> Result<()> {
    if n < 1 {
        Err(Error::InvalidDegree(n))
    } else {
        Ok(())
    }
}

impl OperatorMatrix {
    /// Builds the matrix from independent column images, in parallel.
    pub fn from_images(
        n: usize,
        kind: OperatorKind,
        image: impl Fn(usize) -> RationalPolynomial + Sync,
    ) -> Result<Self> {
        check_degree(n)?;
        let cols: Vec<RationalPolynomial> = (0..=n).into_par_iter().map(|m| image(m)).collect();
        let matrix = RationalMatrix::from_polynomial_columns(n + 1, &cols)?;
        Ok(OperatorMatrix { n, kind, matrix })
    }

    pub fn from_matrix(n: usize, kind: OperatorKind, matrix: RationalMatrix) -> Result<Self> {
        check_degree(n)?;
        if matrix.rows() != n + 1 || matrix.cols() != n + 1 {
            return Err(Error::DimensionMismatch {
                expected: n + 1,
                found: matrix.rows().max(matrix.cols()),
            });
        }
        Ok(OperatorMatrix { n, kind, matrix })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn kind(&self) -> OperatorKind {
        self.kind
    }

    pub fn matrix(&self) -> &RationalMatrix {
        &self.matrix
    }

    /// Image of `e_j`.
    pub fn image(&self, j: usize) -> RationalPolynomial {
        self.matrix.column_polynomial(j)
    }

    /// Applies the operator to `p ∈ Π_n`.
    pub fn apply(&self, p: &RationalPolynomial) -> Result<RationalPolynomial> {
        let degree = p.degree().unwrap_or(0);
        if degree > self.n {
            return Err(Error::OutsidePolynomialSpace { degree, n: self.n });
        }
        let v = self.matrix.mul_vec(&p.padded(self.n + 1))?;
        Ok(RationalPolynomial::new(v))
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &OperatorMatrix) -> Result<OperatorMatrix> {
        if self.n != other.n {
            return Err(Error::DimensionMismatch {
                expected: self.n,
                found: other.n,
            });
        }
        Ok(OperatorMatrix {
            n: self.n,
            kind: OperatorKind::Composite,
            matrix: self.matrix.try_mul(&other.matrix)?,
        })
    }

    pub fn inverse(&self) -> Result<OperatorMatrix> {
        Ok(OperatorMatrix {
            n: self.n,
            kind: OperatorKind::Composite,
            matrix: self.matrix.inverse()?,
        })
    }

    pub fn with_kind(mut self, kind: OperatorKind) -> Self {
        self.kind = kind;
        self
    }

    /// Builds any named operator of the family.
    pub fn build(kind: OperatorKind, n: usize) -> Result<Self> {
        match kind {
            OperatorKind::Bernstein => bernstein_matrix(n),
            OperatorKind::Beta => beta_matrix(n),
            OperatorKind::BetaInverse => beta_inverse_matrix(n),
            OperatorKind::F => f_matrix(n),
            OperatorKind::Stancu => stancu_matrix(n),
            OperatorKind::GenuineDurrmeyer => durrmeyer_matrix(n),
            OperatorKind::DurrmeyerInverse => durrmeyer_inverse_matrix(n),
            OperatorKind::Composite => Err(Error::UnknownKind(kind.to_string())),
        }
    }
}

pub fn bernstein_matrix(n: usize) -> Result<OperatorMatrix> {
    OperatorMatrix::from_images(n, OperatorKind::Bernstein, |m| columns::bernstein_image(n, m))
}

pub fn beta_matrix(n: usize) -> Result<OperatorMatrix> {
    OperatorMatrix::from_images(n, OperatorKind::Beta, |k| columns::beta_image(n, k))
}

/// `B̄_n⁻¹` on `Π_n` from its closed-form monomial images.
pub fn beta_inverse_matrix(n: usize) -> Result<OperatorMatrix> {
    OperatorMatrix::from_images(n, OperatorKind::BetaInverse, |j| {
        columns::beta_inverse_image(n, j)
    })
}

/// `F_n = B̄_n⁻¹ ∘ B_n` as the exact product of the two matrices.
pub fn f_matrix(n: usize) -> Result<OperatorMatrix> {
    Ok(beta_inverse_matrix(n)?
        .compose(&bernstein_matrix(n)?)?
        .with_kind(OperatorKind::F))
}

/// `L_n = B̄_n ∘ B_n`.
pub fn stancu_matrix(n: usize) -> Result<OperatorMatrix> {
    Ok(beta_matrix(n)?
        .compose(&bernstein_matrix(n)?)?
        .with_kind(OperatorKind::Stancu))
}

/// `U_n = B_n ∘ B̄_n`.
pub fn durrmeyer_matrix(n: usize) -> Result<OperatorMatrix> {
    Ok(bernstein_matrix(n)?
        .compose(&beta_matrix(n)?)?
        .with_kind(OperatorKind::GenuineDurrmeyer))
}

/// `U_n⁻¹` on `Π_n` from the differential-operator series.
pub fn durrmeyer_inverse_matrix(n: usize) -> Result<OperatorMatrix> {
    check_degree(n)?;
    OperatorMatrix::from_images(n, OperatorKind::DurrmeyerInverse, |j| {
        durrmeyer_inverse_differential(n, &RationalPolynomial::monomial(j))
            .expect("e_j lies in Π_n")
    })
}

/// `A ∘ B`.
pub fn compose(a: &OperatorMatrix, b: &OperatorMatrix) -> Result<OperatorMatrix> {
    a.compose(b)
}
