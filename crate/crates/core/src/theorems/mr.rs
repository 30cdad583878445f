use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::linalg::ExactMatrix;
use crate::ring::{graded_basis, Monomial, RingSpec};

/// `C(n, k)`, zero when `k < 0` or `k > n`.
pub fn binomial(n: i64, k: i64) -> BigInt {
    if n < 0 || k < 0 || k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

pub fn factorial(n: u32) -> BigInt {
    (1..=n).map(BigInt::from).product()
}

/// Checks `A >= B >= C >= 1` and `A - 1 <= r <= floor((e - 1) / 2)`.
pub(crate) fn check_mr_range(a: u32, b: u32, c: u32, r: u32) -> Result<()> {
    if !(a >= b && b >= c && c >= 1) {
        return Err(Error::Precondition(format!(
            "caps must satisfy A >= B >= C >= 1, got ({a}, {b}, {c})"
        )));
    }
    let e = a + b + c - 3;
    if e == 0 || r + 1 < a || r > (e - 1) / 2 {
        return Err(Error::Precondition(format!(
            "r = {r} outside [A - 1, floor((e - 1) / 2)] for caps ({a}, {b}, {c})"
        )));
    }
    Ok(())
}

/// The `(B + C - r - 2) x (r - A + 2)` matrix `(C(A, r - B + i - j + 2))`
/// whose non-unit Smith entries agree with those of `U_r`.
pub fn build_mr(a: u32, b: u32, c: u32, r: u32) -> Result<ExactMatrix> {
    check_mr_range(a, b, c, r)?;
    let rows = (b + c - r - 2) as usize;
    let cols = (r + 2 - a) as usize;
    let (a, b, r) = (a as i64, b as i64, r as i64);
    Ok(ExactMatrix::from_fn(rows, cols, |i, j| {
        binomial(a, r - b + i as i64 - j as i64 + 2)
    }))
}

/// Multinomial analogue of [`build_mr`] for `n` variables.
///
/// Rows are monomials `beta` of degree `r + 1` in `x_2..x_n`, columns are
/// monomials `alpha` of degree `r - A_1 + 1`; the entry is
/// `A_1! / (i_2! ... i_n!)` when `beta / alpha = x_2^i_2 ... x_n^i_n`.
pub fn build_multinomial_mr(caps: &[u32], r: u32) -> Result<ExactMatrix> {
    let spec = RingSpec::new(caps.to_vec())?;
    if caps.windows(2).any(|w| w[0] < w[1]) {
        return Err(Error::Precondition(format!("caps must be non-increasing, got {caps:?}")));
    }
    let a1 = caps[0];
    let e = spec.socle_degree();
    if r + 1 < a1 || 2 * r > e {
        return Err(Error::Precondition(format!(
            "r = {r} outside [A_1 - 1, e / 2] for caps {caps:?}"
        )));
    }
    if caps.len() == 1 {
        return Ok(ExactMatrix::zeros(0, 1));
    }
    let rest = RingSpec::new(caps[1..].to_vec())?;
    let rows = graded_basis(&rest, r + 1);
    let cols = graded_basis(&rest, r + 1 - a1);
    let top = factorial(a1);
    let mut cache: HashMap<Vec<u32>, BigInt> = HashMap::new();
    Ok(ExactMatrix::from_fn(rows.len(), cols.len(), |i, j| {
        match quotient(&rows[i], &cols[j]) {
            Some(q) => cache
                .entry(q)
                .or_insert_with_key(|q| {
                    let denom: BigInt = q.iter().map(|&k| factorial(k)).product();
                    &top / denom
                })
                .clone(),
            None => BigInt::zero(),
        }
    }))
}

fn quotient(beta: &Monomial, alpha: &Monomial) -> Option<Vec<u32>> {
    beta.exponents()
        .iter()
        .zip(alpha.exponents())
        .map(|(b, a)| b.checked_sub(*a))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::snf;

    #[test]
    fn binomials() {
        assert_eq!(binomial(4, 2), BigInt::from(6));
        assert_eq!(binomial(4, -1), BigInt::zero());
        assert_eq!(binomial(4, 5), BigInt::zero());
        assert_eq!(binomial(0, 0), BigInt::one());
    }

    #[test]
    fn mr_examples() {
        assert_eq!(
            build_mr(4, 4, 4, 4).unwrap(),
            ExactMatrix::from_rows(&[vec![6, 4], vec![4, 6]])
        );
        assert_eq!(
            build_mr(4, 4, 4, 3).unwrap(),
            ExactMatrix::from_rows(&[vec![4], vec![6], vec![4]])
        );
        assert_eq!(build_mr(2, 2, 2, 1).unwrap(), ExactMatrix::from_rows(&[vec![2]]));
    }

    #[test]
    fn mr_preconditions() {
        assert!(matches!(build_mr(3, 4, 4, 4), Err(Error::Precondition(_))));
        assert!(build_mr(4, 4, 4, 2).is_err());
        assert!(build_mr(4, 4, 4, 5).is_err());
        assert!(build_mr(1, 1, 1, 0).is_err());
    }

    #[test]
    fn multinomial_examples() {
        let m = build_multinomial_mr(&[4, 4, 4], 4).unwrap();
        assert_eq!(snf(&m), snf(&build_mr(4, 4, 4, 4).unwrap()));
        let empty = build_multinomial_mr(&[2, 2], 1).unwrap();
        assert_eq!((empty.rows(), empty.cols()), (0, 1));
        assert!(build_multinomial_mr(&[2, 4], 1).is_err());
    }
}
