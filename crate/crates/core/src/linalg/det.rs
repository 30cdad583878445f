use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::ExactMatrix;
use crate::error::{Error, Result};

/// Exact determinant by fraction-free (Bareiss) elimination.
pub fn determinant(m: &ExactMatrix) -> Result<BigInt> {
    if !m.is_square() {
        return Err(Error::Dimension(format!(
            "determinant of a non-square {}x{} matrix",
            m.rows(),
            m.cols()
        )));
    }
    Ok(bareiss(m.to_rows()))
}

pub(crate) fn bareiss(mut a: Vec<Vec<BigInt>>) -> BigInt {
    let n = a.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut negate = false;
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            let Some(p) = (k + 1..n).find(|&i| !a[i][k].is_zero()) else {
                return BigInt::zero();
            };
            a.swap(k, p);
            negate = !negate;
        }
        let (top, rest) = a.split_at_mut(k + 1);
        let pivot_row = &top[k];
        for row in rest.iter_mut() {
            for j in k + 1..n {
                let v = &row[j] * &pivot_row[k] - &row[k] * &pivot_row[j];
                // Exact by Sylvester's identity.
                row[j] = v / &prev;
            }
            row[k] = BigInt::zero();
        }
        prev = a[k][k].clone();
    }
    let d = a[n - 1][n - 1].clone();
    if negate {
        -d
    } else {
        d
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn examples() {
        let m = ExactMatrix::from_rows(&[vec![1, 1, 0], vec![1, 0, 1], vec![0, 1, 1]]);
        assert_eq!(determinant(&m).unwrap(), BigInt::from(-2));
        let d = ExactMatrix::from_rows(&[vec![2, 0, 0], vec![0, 3, 0], vec![0, 0, 5]]);
        assert_eq!(determinant(&d).unwrap(), BigInt::from(30));
        let m = ExactMatrix::from_rows(&[vec![6, 4], vec![4, 6]]);
        assert_eq!(determinant(&m).unwrap(), BigInt::from(20));
    }

    #[test]
    fn needs_row_swap() {
        let m = ExactMatrix::from_rows(&[vec![0, 1], vec![1, 0]]);
        assert_eq!(determinant(&m).unwrap(), BigInt::from(-1));
        let m = ExactMatrix::from_rows(&[vec![0, 2, 1], vec![0, 1, 1], vec![3, 0, 0]]);
        assert_eq!(determinant(&m).unwrap(), BigInt::from(3));
    }

    #[test]
    fn singular_and_empty() {
        let m = ExactMatrix::from_rows(&[vec![1, 2], vec![2, 4]]);
        assert_eq!(determinant(&m).unwrap(), BigInt::zero());
        assert_eq!(determinant(&ExactMatrix::zeros(0, 0)).unwrap(), BigInt::one());
    }

    #[test]
    fn non_square_is_error() {
        assert!(matches!(
            determinant(&ExactMatrix::zeros(2, 3)),
            Err(Error::Dimension(_))
        ));
    }
}
