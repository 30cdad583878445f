use super::{HPolynomial, Partition, SkewShape};
use crate::error::{Error, Result};

/// Whether `lambda / mu` (with `lambda` of exactly `k` parts) is the
/// Jacobi-Trudi shape of some `k x k` minor of `A_c`, the last `n - c + 1`
/// rows and first `c` columns of the `n x n` lower-triangular Toeplitz matrix
/// with diagonal `h_n`.
///
/// The conditions are `lambda_1 <= n - k + 1`, `lambda_k >= k`,
/// `mu_1 <= c - k`, `lambda_i - mu_i >= k`, `lambda_1 - lambda_k <= n - c - k + 1`
/// and in addition `lambda_k - mu_1 >= k`. Without the last one the bottom-left
/// Jacobi-Trudi entry can be `h_0 = 1`, which never occurs in `A_c`; for
/// example `(5,2)/(1,0)` with `n = 7`, `c = 3` meets the first five.
pub fn is_legal(shape: &SkewShape, k: usize, c: usize, n: usize) -> Result<bool> {
    if shape.rows() != k || k == 0 {
        return Err(Error::Precondition(format!(
            "{shape} does not have exactly {k} rows"
        )));
    }
    let (k_, c_, n_) = (k as i64, c as i64, n as i64);
    let lam = |i: usize| shape.lambda(i) as i64;
    let mu = |i: usize| shape.mu(i) as i64;
    Ok(lam(0) <= n_ - k_ + 1
        && lam(k - 1) >= k_
        && mu(0) <= c_ - k_
        && (0..k).all(|i| lam(i) - mu(i) >= k_)
        && lam(0) - lam(k - 1) <= n_ - c_ - k_ + 1
        && lam(k - 1) - mu(0) >= k_)
}

/// Straight shape `nu` with `k` parts is `(k, c)`-legal.
pub fn is_legal_straight(nu: &Partition, k: usize, c: usize, n: usize) -> bool {
    nu.len() == k && is_legal(&SkewShape::straight(nu.clone()), k, c, n).unwrap_or(false)
}

fn check_indices(name: &str, idx: &[usize], max: usize) -> Result<()> {
    if idx.windows(2).any(|w| w[0] >= w[1]) || idx.first() == Some(&0) || idx.last().is_some_and(|&l| l > max) {
        return Err(Error::Dimension(format!(
            "{name} indices {idx:?} must be strictly increasing within 1..={max}"
        )));
    }
    Ok(())
}

/// Formal minor of `A_c` on 1-based local `rows` and `cols`. The entry in
/// row `p`, column `q` of `A_c` is `h_(n - c + 1 - p + q)`.
pub fn toeplitz_minor(n: usize, c: usize, rows: &[usize], cols: &[usize]) -> Result<HPolynomial> {
    check_minor(n, c, rows, cols)?;
    let idx: Vec<Vec<i64>> = rows
        .iter()
        .map(|&p| {
            cols.iter()
                .map(|&q| {
                    let j = (n - c + 1) as i64 - p as i64 + q as i64;
                    if j > n as i64 {
                        -1
                    } else {
                        j
                    }
                })
                .collect()
        })
        .collect();
    Ok(HPolynomial::index_determinant(&idx))
}

fn check_minor(n: usize, c: usize, rows: &[usize], cols: &[usize]) -> Result<()> {
    if c == 0 || c > n {
        return Err(Error::Dimension(format!("need 1 <= c <= n, got c = {c}, n = {n}")));
    }
    if rows.len() != cols.len() || rows.is_empty() {
        return Err(Error::Dimension(format!(
            "minor needs equally many rows and columns, got {} and {}",
            rows.len(),
            cols.len()
        )));
    }
    check_indices("row", rows, n - c + 1)?;
    check_indices("column", cols, c)
}

/// Skew shape whose Jacobi-Trudi determinant is the minor of `A_c` on the
/// given 1-based rows and columns.
pub fn minor_shape_correspondence(n: usize, c: usize, rows: &[usize], cols: &[usize]) -> Result<SkewShape> {
    check_minor(n, c, rows, cols)?;
    let k = rows.len();
    let shift = cols[k - 1] as i64 - k as i64;
    let mu: Vec<u32> = (0..k)
        .map(|b| (b as i64 + 1 - cols[b] as i64 + shift) as u32)
        .collect();
    let lam: Vec<u32> = (0..k)
        .map(|a| (a as i64 + 1 + (n - c + 1) as i64 - rows[a] as i64 + shift) as u32)
        .collect();
    SkewShape::from_parts(&lam, &mu)
}

/// A choice of rows and columns of `A_c` whose minor has the given shape;
/// fails unless the shape is `(k, c)`-legal.
pub fn minor_for_shape(shape: &SkewShape, c: usize, n: usize) -> Result<(Vec<usize>, Vec<usize>)> {
    let k = shape.rows();
    if !is_legal(shape, k, c, n)? {
        return Err(Error::Constraint(format!("{shape} is not ({k},{c})-legal for n = {n}")));
    }
    let lam = |i: usize| shape.lambda(i) as i64;
    let shift = (shape.mu(0) as i64).max(lam(0) - n as i64 + c as i64 - 1);
    let cols = (0..k).map(|b| (b as i64 + 1 - shape.mu(b) as i64 + shift) as usize).collect();
    let rows = (0..k)
        .map(|a| (a as i64 + 1 + (n - c + 1) as i64 - lam(a) + shift) as usize)
        .collect();
    Ok((rows, cols))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::schur::jacobi_trudi;

    fn shape(s: &str) -> SkewShape {
        s.parse().unwrap()
    }

    #[test]
    fn legality_examples() {
        assert!(is_legal(&shape("6,3/1"), 2, 3, 7).unwrap());
        assert!(is_legal(&shape("6,2"), 2, 2, 7).unwrap());
        assert!(!is_legal(&shape("7,2"), 2, 2, 7).unwrap());
        assert!(!is_legal(&shape("5,2/1"), 2, 3, 7).unwrap());
        assert!(is_legal(&shape("6,3"), 3, 3, 7).is_err());
    }

    #[test]
    fn correspondence_examples() {
        // |h5 h7; h1 h3| sits on rows 1, 5 and columns 1, 3 of A_3 for n = 7
        assert_eq!(minor_shape_correspondence(7, 3, &[1, 5], &[1, 3]).unwrap(), shape("6,3/1"));
        assert_eq!(minor_shape_correspondence(7, 1, &[4], &[1]).unwrap(), shape("4"));
        assert_eq!(minor_shape_correspondence(7, 2, &[1, 6], &[1, 2]).unwrap(), shape("6,2"));
        assert!(minor_shape_correspondence(7, 2, &[1, 7], &[1, 2]).is_err());
        assert!(minor_shape_correspondence(7, 2, &[3, 2], &[1, 2]).is_err());
    }

    #[test]
    fn minor_identity() {
        let h = |i: &[Vec<i64>]| HPolynomial::index_determinant(i);
        let lhs = h(&[vec![6, 7], vec![1, 2]]);
        let rhs = &h(&[vec![5, 7], vec![1, 3]]) - &h(&[vec![5, 6], vec![2, 3]]);
        assert_eq!(lhs, rhs);
        assert_eq!(toeplitz_minor(7, 2, &[1, 6], &[1, 2]).unwrap(), lhs);
    }

    #[test]
    fn witness_round_trip() {
        let s = shape("6,3/1");
        let (rows, cols) = minor_for_shape(&s, 3, 7).unwrap();
        assert_eq!(minor_shape_correspondence(7, 3, &rows, &cols).unwrap(), s);
        assert_eq!(toeplitz_minor(7, 3, &rows, &cols).unwrap(), jacobi_trudi(&s, 7).unwrap());
        assert!(minor_for_shape(&shape("5,2/1"), 3, 7).is_err());
    }
}
