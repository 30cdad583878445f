use num_bigint::BigInt;
use num_traits::Zero;
use rand::Rng;
use serde_json::json;

use crate::error::{Error, Result};
use crate::linalg::{snf, ExactMatrix};
use crate::report::{Case, VerificationReport};
use crate::theorems::binomial;

/// `n x n` lower-triangular Toeplitz matrix with `h_n` on the diagonal and
/// `h_1` in the bottom-left corner; `h[j - 1]` holds `h_j`.
pub fn toeplitz_matrix(h: &[BigInt]) -> ExactMatrix {
    let n = h.len();
    ExactMatrix::from_fn(n, n, |i, j| {
        if i >= j {
            h[n - 1 - i + j].clone()
        } else {
            BigInt::zero()
        }
    })
}

/// `A_c`: the first `c` columns and the last `n - c + 1` rows.
pub fn toeplitz_block(h: &[BigInt], c: usize) -> Result<ExactMatrix> {
    let n = h.len();
    if c == 0 || c > n {
        return Err(Error::Dimension(format!("need 1 <= c <= {n}, got {c}")));
    }
    let t = toeplitz_matrix(h);
    let rows: Vec<usize> = (c - 1..n).collect();
    let cols: Vec<usize> = (0..c).collect();
    Ok(t.select(&rows, &cols))
}

/// Checks that for every `k <= n/2` the `k`-th Smith entry of `A_c` is the
/// same for all `k <= c <= n/2`.
pub fn verify_toeplitz_lemma(h: &[BigInt]) -> Result<VerificationReport> {
    let n = h.len();
    if n < 2 {
        return Err(Error::Precondition(format!("need n >= 2, got {n}")));
    }
    let half = n / 2;
    let snfs = (1..=half)
        .map(|c| Ok(snf(&toeplitz_block(h, c)?)))
        .collect::<Result<Vec<_>>>()?;
    let cases = (1..=half)
        .map(|k| {
            let column: Vec<String> = (k..=half)
                .map(|c| snfs[c - 1].entries[k - 1].to_string())
                .collect();
            let expected = vec![column[0].clone(); column.len()];
            Case::compare(json!({ "k": k }), expected, column)
        })
        .collect();
    let hs: Vec<String> = h.iter().map(ToString::to_string).collect();
    Ok(VerificationReport::new("toeplitz-lemma", json!({ "h": hs }), cases))
}

/// `h_1..h_n` making `A_c` equal to the binomial matrix `M_(A-2+c)(A,B,C)`:
/// `n = B + C - A - 1` and `h_j = C(A, A - B + 1 + n - j)`.
pub fn binomial_toeplitz_h(a: u32, b: u32, c: u32) -> Result<Vec<BigInt>> {
    let n = (b + c) as i64 - a as i64 - 1;
    if n < 1 {
        return Err(Error::Precondition(format!(
            "caps ({a}, {b}, {c}) give a Toeplitz matrix of size {n}"
        )));
    }
    Ok((1..=n)
        .map(|j| binomial(a as i64, a as i64 - b as i64 + 1 + n - j))
        .collect())
}

/// Random `h` vector of length in `[2, max_n]`, entries in `[-bound, bound]`.
pub fn random_h(rng: &mut impl Rng, max_n: usize, bound: i64) -> Vec<BigInt> {
    let n = rng.gen_range(2..=max_n.max(2));
    (0..n).map(|_| BigInt::from(rng.gen_range(-bound..=bound))).collect()
}
