use num_bigint::BigInt;
use num_integer::Integer;
use serde::Serialize;

use super::binomial;
use crate::linalg::ExactMatrix;

/// The `c x c` matrix `(C(a + b, b + i - j))`.
pub fn carlitz_matrix(a: u32, b: u32, c: u32) -> ExactMatrix {
    let (n, b) = ((a + b) as i64, b as i64);
    ExactMatrix::from_fn(c as usize, c as usize, |i, j| binomial(n, b + i as i64 - j as i64))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CarlitzForm {
    /// Smith entries in divisibility order.
    Known(#[serde(with = "crate::wire::bigint_vec")] Vec<BigInt>),
    /// No closed form is available (`c >= 3`).
    Unknown,
}

/// Closed-form Smith entries of the Carlitz matrix for `c <= 2`.
pub fn carlitz_closed_forms(a: u32, b: u32, c: u32) -> CarlitzForm {
    let n = (a + b) as i64;
    let b = b as i64;
    match c {
        0 => CarlitzForm::Known(Vec::new()),
        1 => CarlitzForm::Known(vec![binomial(n, b)]),
        2 if a as i64 == b => {
            let a = a as i64;
            let catalan = binomial(2 * a, a) / (a + 1);
            CarlitzForm::Known(vec![catalan, binomial(2 * a + 1, a + 1)])
        }
        2 => {
            let (lo, mid, hi) = (binomial(n, b - 1), binomial(n, b), binomial(n, b + 1));
            let s1 = lo.gcd(&mid).gcd(&hi);
            let s2 = (&mid * &mid - &lo * &hi) / &s1;
            CarlitzForm::Known(vec![s1, s2])
        }
        _ => CarlitzForm::Unknown,
    }
}

/// Unimodular `P`, `Q` taking the `c = 2`, `a = b` Carlitz matrix to its
/// Smith form as `P * M * Q`.
pub fn carlitz_transform(a: u32) -> (ExactMatrix, ExactMatrix) {
    let a = a as i64;
    let p = ExactMatrix::from_rows(&[vec![1, -1], vec![-1 - 3 * a, 2 + 3 * a]]);
    let q = ExactMatrix::from_rows(&[vec![2, 1], vec![1, 1]]);
    (p, q)
}
