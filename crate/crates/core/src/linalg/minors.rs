use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::det::bareiss;
use super::ExactMatrix;
use crate::error::{Error, Result};

/// Gcd of all `k x k` minors (zero when every minor vanishes).
///
/// Exponential in general; meant as an independent check of Smith entries on
/// small matrices, via `a_k = gcd_k / gcd_{k-1}`.
pub fn gcd_of_minors(m: &ExactMatrix, k: usize) -> Result<BigInt> {
    let max = m.rows().min(m.cols());
    if k == 0 || k > max {
        return Err(Error::Dimension(format!(
            "minor size {k} outside 1..={max} for a {}x{} matrix",
            m.rows(),
            m.cols()
        )));
    }
    let row_sets = combinations(m.rows(), k);
    let col_sets = combinations(m.cols(), k);
    let mut g = BigInt::zero();
    for rs in &row_sets {
        for cs in &col_sets {
            let sub = rs
                .iter()
                .map(|&i| cs.iter().map(|&j| m[(i, j)].clone()).collect())
                .collect();
            g = g.gcd(&bareiss(sub));
            if g.is_one() {
                return Ok(g);
            }
        }
    }
    Ok(g)
}

/// All `k`-subsets of `0..n` in lexicographic order.
pub fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    rec(0, n, k, &mut cur, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn examples() {
        let m = ExactMatrix::from_rows(&[vec![6, 4], vec![4, 6]]);
        assert_eq!(gcd_of_minors(&m, 1).unwrap(), BigInt::from(2));
        assert_eq!(gcd_of_minors(&m, 2).unwrap(), BigInt::from(20));
        assert_eq!(gcd_of_minors(&ExactMatrix::identity(3), 2).unwrap(), BigInt::one());
    }

    #[test]
    fn out_of_range() {
        let m = ExactMatrix::identity(2);
        assert!(gcd_of_minors(&m, 0).is_err());
        assert!(gcd_of_minors(&m, 3).is_err());
    }

    #[test]
    fn combination_counts() {
        assert_eq!(combinations(5, 2).len(), 10);
        assert_eq!(combinations(3, 0), vec![Vec::<usize>::new()]);
        assert!(combinations(2, 3).is_empty());
    }
}
