//! Integer sequences: factorials, binomials, rising factorials and both
//! Stirling families.
//!
//! The first-kind numbers are signed: `x(x-1)...(x-j+1) = Σ_i s(j,i) x^i`.
//! With this convention the rising factorial expands as
//! `nx(nx+1)...(nx+j-1) = Σ_i s(j,i) (-1)^(j-i) n^i x^i`.

use std::sync::{OnceLock, RwLock};

use num_bigint::BigInt;
use num_traits::{One, Zero};

pub fn factorial(n: usize) -> BigInt {
    (2..=n).fold(BigInt::one(), |acc, k| acc * k)
}

pub fn binomial(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    (0..k).fold(BigInt::one(), |acc, i| acc * (n - i) / (i + 1))
}

/// `a (a+1) ... (a+k-1)`; equals `(a+k-1)!/(a-1)!` for `a ≥ 1`.
pub fn rising(a: usize, k: usize) -> BigInt {
    (0..k).fold(BigInt::one(), |acc, i| acc * (a + i))
}

/// `a (a-1) ... (a-k+1)`.
pub fn falling(a: usize, k: usize) -> BigInt {
    if k > a {
        return BigInt::zero();
    }
    (0..k).fold(BigInt::one(), |acc, i| acc * (a - i))
}

/// Lower-triangular table grown on demand and shared between threads.
struct Triangle {
    rows: RwLock<Vec<Vec<BigInt>>>,
    next_row: fn(&[BigInt], usize) -> Vec<BigInt>,
}

impl Triangle {
    const fn new(next_row: fn(&[BigInt], usize) -> Vec<BigInt>) -> Self {
        Triangle {
            rows: RwLock::new(Vec::new()),
            next_row,
        }
    }

    fn get(&self, j: usize, i: usize) -> BigInt {
        if i > j {
            return BigInt::zero();
        }
        {
            let rows = self.rows.read().expect("stirling cache poisoned");
            if let Some(row) = rows.get(j) {
                return row[i].clone();
            }
        }
        let mut rows = self.rows.write().expect("stirling cache poisoned");
        if rows.is_empty() {
            rows.push(vec![BigInt::one()]);
        }
        while rows.len() <= j {
            let m = rows.len();
            let row = (self.next_row)(&rows[m - 1], m);
            rows.push(row);
        }
        rows[j][i].clone()
    }
}

fn first_kind_row(prev: &[BigInt], m: usize) -> Vec<BigInt> {
    // s(m, i) = s(m-1, i-1) - (m-1) s(m-1, i)
    (0..=m)
        .map(|i| {
            let left = if i > 0 { prev[i - 1].clone() } else { BigInt::zero() };
            let up = prev.get(i).cloned().unwrap_or_default();
            left - up * (m - 1)
        })
        .collect()
}

fn second_kind_row(prev: &[BigInt], m: usize) -> Vec<BigInt> {
    // S(m, i) = S(m-1, i-1) + i S(m-1, i)
    (0..=m)
        .map(|i| {
            let left = if i > 0 { prev[i - 1].clone() } else { BigInt::zero() };
            let up = prev.get(i).cloned().unwrap_or_default();
            left + up * i
        })
        .collect()
}

fn first_kind() -> &'static Triangle {
    static TABLE: OnceLock<Triangle> = OnceLock::new();
    TABLE.get_or_init(|| Triangle::new(first_kind_row))
}

fn second_kind() -> &'static Triangle {
    static TABLE: OnceLock<Triangle> = OnceLock::new();
    TABLE.get_or_init(|| Triangle::new(second_kind_row))
}

/// Signed Stirling number of the first kind `s(j, i)`; zero for `i > j`.
pub fn stirling_first(j: usize, i: usize) -> BigInt {
    first_kind().get(j, i)
}

/// Stirling number of the second kind `S(m, j)`; zero for `j > m`.
pub fn stirling_second(m: usize, j: usize) -> BigInt {
    second_kind().get(m, j)
}
