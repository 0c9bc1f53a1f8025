//! Dense row-major matrices with exact (or floating) Gauss-Jordan elimination.

use std::fmt;
use std::ops::Mul;

use super::poly::Polynomial;
use super::scalar::Scalar;
use crate::error::{Error, Result};

#[derive(Clone, PartialEq)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

impl<T: Scalar> Matrix<T> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![T::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = T::one();
        }
        m
    }

    pub fn diagonal(d: &[T]) -> Self {
        let mut m = Self::zeros(d.len(), d.len());
        for (i, v) in d.iter().enumerate() {
            m[(i, i)] = v.clone();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<T>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::DimensionMismatch {
                expected: c,
                found: rows.iter().map(Vec::len).find(|&l| l != c).unwrap_or(c),
            });
        }
        Ok(Matrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        })
    }

    /// Square matrix whose `j`-th column holds the coefficients of `columns[j]`.
    ///
    /// Fails when a polynomial does not fit into `size` coefficients.
    pub fn from_polynomial_columns(size: usize, columns: &[Polynomial<T>]) -> Result<Self> {
        let mut m = Self::zeros(size, columns.len());
        for (j, p) in columns.iter().enumerate() {
            if p.coeffs().len() > size {
                return Err(Error::OutsidePolynomialSpace {
                    degree: p.degree().unwrap_or(0),
                    n: size.saturating_sub(1),
                });
            }
            for (i, c) in p.coeffs().iter().enumerate() {
                m[(i, j)] = c.clone();
            }
        }
        Ok(m)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn column(&self, j: usize) -> Vec<T> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    /// Column `j` read as monomial coefficients.
    pub fn column_polynomial(&self, j: usize) -> Polynomial<T> {
        Polynomial::new(self.column(j))
    }

    pub fn row(&self, i: usize) -> &[T] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    /// Leading `size × size` block.
    pub fn leading_block(&self, size: usize) -> Self {
        assert!(size <= self.rows && size <= self.cols);
        let mut m = Self::zeros(size, size);
        for i in 0..size {
            for j in 0..size {
                m[(i, j)] = self[(i, j)].clone();
            }
        }
        m
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn try_mul(&self, rhs: &Self) -> Result<Self> {
        if self.cols != rhs.rows {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                found: rhs.rows,
            });
        }
        let mut out = Self::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = &rhs[(k, j)];
                    if b.is_zero() {
                        continue;
                    }
                    out[(i, j)] = out[(i, j)].clone() + a.clone() * b.clone();
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[T]) -> Result<Vec<T>> {
        if v.len() != self.cols {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                found: v.len(),
            });
        }
        Ok((0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                    .fold(T::zero(), |acc, (a, b)| acc + a.clone() * b.clone())
            })
            .collect())
    }

    /// `self - s·I`.
    pub fn shift_diagonal(&self, s: &T) -> Self {
        let mut m = self.clone();
        for i in 0..self.rows.min(self.cols) {
            m[(i, i)] = m[(i, i)].clone() - s.clone();
        }
        m
    }

    pub fn is_identity(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| {
                (0..self.cols).all(|j| {
                    if i == j {
                        self[(i, j)] == T::one()
                    } else {
                        self[(i, j)].is_zero()
                    }
                })
            })
    }

    /// True when every entry below the diagonal vanishes.
    pub fn is_upper_triangular(&self) -> bool {
        (0..self.rows).all(|i| (0..i.min(self.cols)).all(|j| self[(i, j)].is_zero()))
    }

    /// Reduced row echelon form with partial pivoting; returns the form and its pivot columns.
    pub fn rref(&self) -> (Self, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut rank = 0;
        for c in 0..m.cols {
            if rank == m.rows {
                break;
            }
            let Some(p) = (rank..m.rows)
                .filter(|&r| !m[(r, c)].is_zero())
                .max_by(|&a, &b| {
                    m[(a, c)]
                        .magnitude()
                        .partial_cmp(&m[(b, c)].magnitude())
                        .unwrap_or(std::cmp::Ordering::Equal)
                })
            else {
                continue;
            };
            m.swap_rows(rank, p);
            let inv = T::one() / m[(rank, c)].clone();
            for j in c..m.cols {
                m[(rank, j)] = m[(rank, j)].clone() * inv.clone();
            }
            for r in 0..m.rows {
                if r == rank || m[(r, c)].is_zero() {
                    continue;
                }
                let factor = m[(r, c)].clone();
                for j in c..m.cols {
                    if m[(rank, j)].is_zero() {
                        continue;
                    }
                    m[(r, j)] = m[(r, j)].clone() - factor.clone() * m[(rank, j)].clone();
                }
            }
            pivots.push(c);
            rank += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of `{v : self·v = 0}`, one vector per free column.
    pub fn nullspace(&self) -> Vec<Vec<T>> {
        let (r, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut v = vec![T::zero(); self.cols];
                v[f] = T::one();
                for (row, &pc) in pivots.iter().enumerate() {
                    v[pc] = -r[(row, f)].clone();
                }
                v
            })
            .collect()
    }

    /// Inverse by Gauss-Jordan elimination on `[M | I]`.
    pub fn inverse(&self) -> Result<Self> {
        if !self.is_square() {
            return Err(Error::DimensionMismatch {
                expected: self.rows,
                found: self.cols,
            });
        }
        let n = self.rows;
        let mut aug = Self::zeros(n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug[(i, j)] = self[(i, j)].clone();
            }
            aug[(i, n + i)] = T::one();
        }
        let (r, pivots) = aug.rref();
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return Err(Error::Singular);
        }
        let mut inv = Self::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                inv[(i, j)] = r[(i, n + j)].clone();
            }
        }
        Ok(inv)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub fn map<U: Scalar>(&self, f: impl Fn(&T) -> U) -> Matrix<U> {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
        }
    }
}

impl<T> std::ops::Index<(usize, usize)> for Matrix<T> {
    type Output = T;

    fn index(&self, (i, j): (usize, usize)) -> &T {
        &self.data[i * self.cols + j]
    }
}

impl<T> std::ops::IndexMut<(usize, usize)> for Matrix<T> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut T {
        &mut self.data[i * self.cols + j]
    }
}

impl<T: Scalar> Mul for &Matrix<T> {
    type Output = Matrix<T>;

    /// Panics on a dimension mismatch; use [`Matrix::try_mul`] to handle it.
    fn mul(self, rhs: Self) -> Matrix<T> {
        self.try_mul(rhs).expect("matrix dimensions must agree")
    }
}

impl<T: Scalar + fmt::Display> fmt::Debug for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(|v| v.to_string()).collect();
            writeln!(f, "  {}", row.join(", "))?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::scalar::{int, ratio};
    use crate::Rational;
    use num_traits::Zero;

    #[test]
    fn identity_and_diagonal_inverses() {
        let id = Matrix::<Rational>::identity(5);
        assert_eq!(id.inverse().unwrap(), id);
        let d: Vec<Rational> = (1..=4).map(|k| ratio(k, 3)).collect();
        let inv = Matrix::diagonal(&d).inverse().unwrap();
        let expected: Vec<Rational> = (1..=4).map(|k| ratio(3, k)).collect();
        assert_eq!(inv, Matrix::diagonal(&expected));
    }

    #[test]
    fn singular_matrix_is_rejected() {
        let m = Matrix::from_rows(vec![vec![int(1), int(2)], vec![int(2), int(4)]]).unwrap();
        assert!(matches!(m.inverse(), Err(Error::Singular)));
        assert_eq!(m.rank(), 1);
    }

    #[test]
    fn nullspace_of_rank_deficient_matrix() {
        let m = Matrix::from_rows(vec![
            vec![int(1), int(2), int(3)],
            vec![int(2), int(4), int(6)],
            vec![int(1), int(0), int(1)],
        ])
        .unwrap();
        let ns = m.nullspace();
        assert_eq!(ns.len(), 1);
        let image = m.mul_vec(&ns[0]).unwrap();
        assert!(image.iter().all(Zero::is_zero));
    }

    #[test]
    fn dimension_mismatch() {
        let a = Matrix::<Rational>::zeros(2, 3);
        let b = Matrix::<Rational>::zeros(2, 3);
        assert!(a.try_mul(&b).is_err());
        assert!(a.inverse().is_err());
    }

    #[test]
    fn float_inverse_with_pivoting() {
        let m = Matrix::from_rows(vec![vec![1e-12, 1.0], vec![1.0, 1.0]]).unwrap();
        let inv = m.inverse().unwrap();
        let prod = &m * &inv;
        for i in 0..2 {
            for j in 0..2 {
                let target: f64 = if i == j { 1.0 } else { 0.0 };
                assert!((prod[(i, j)] - target).abs() < 1e-12);
            }
        }
    }
}
