use crate::error::{Error, Result};

use super::scalar::Scalar;

/// Divided difference `[x_0, ..., x_j; f]` from the triangular table.
pub fn divided_difference<T: Scalar>(knots: &[T], values: &[T]) -> Result<T> {
    if knots.len() != values.len() {
        return Err(Error::DimensionMismatch {
            expected: knots.len(),
            found: values.len(),
        });
    }
    if knots.is_empty() {
        return Err(Error::EmptyInput);
    }
    for (a, xa) in knots.iter().enumerate() {
        if knots[a + 1..].iter().any(|xb| xb == xa) {
            return Err(Error::CoincidentKnots);
        }
    }
    let mut table = values.to_vec();
    for level in 1..knots.len() {
        for i in 0..knots.len() - level {
            let num = table[i + 1].clone() - table[i].clone();
            let den = knots[i + level].clone() - knots[i].clone();
            table[i] = num / den;
        }
    }
    Ok(table.swap_remove(0))
}
