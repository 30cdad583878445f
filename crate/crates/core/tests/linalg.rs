use lefschetz::linalg::{determinant, permanent, permanent_by_rows, permanent_ryser, snf, snf_with_transforms, ExactMatrix};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use proptest::prelude::*;

// Oracles: cofactor expansion, brute-force permutation sums and gcds of all
// minors, written independently of the library.

fn laplace(rows: &[Vec<BigInt>]) -> BigInt {
    let n = rows.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut total = BigInt::zero();
    for j in 0..n {
        if rows[0][j].is_zero() {
            continue;
        }
        let minor: Vec<Vec<BigInt>> = rows[1..]
            .iter()
            .map(|r| r.iter().enumerate().filter(|(c, _)| *c != j).map(|(_, x)| x.clone()).collect())
            .collect();
        let term = &rows[0][j] * laplace(&minor);
        if j % 2 == 0 {
            total += term;
        } else {
            total -= term;
        }
    }
    total
}

fn perm_sum(rows: &[Vec<BigInt>]) -> BigInt {
    fn go(rows: &[Vec<BigInt>], i: usize, used: &mut Vec<bool>) -> BigInt {
        if i == rows.len() {
            return BigInt::one();
        }
        let mut s = BigInt::zero();
        for j in 0..rows.len() {
            if !used[j] && !rows[i][j].is_zero() {
                used[j] = true;
                s += &rows[i][j] * go(rows, i + 1, used);
                used[j] = false;
            }
        }
        s
    }
    go(rows, 0, &mut vec![false; rows.len()])
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    (0u32..(1 << n))
        .filter(|m| m.count_ones() as usize == k)
        .map(|m| (0..n).filter(|i| m >> i & 1 == 1).collect())
        .collect()
}

/// Determinantal divisors d_k = gcd of all k x k minors.
fn minor_gcds(m: &ExactMatrix) -> Vec<BigInt> {
    let rows = m.to_rows();
    let top = m.rows().min(m.cols());
    (1..=top)
        .map(|k| {
            let mut g = BigInt::zero();
            for rs in subsets(m.rows(), k) {
                for cs in subsets(m.cols(), k) {
                    let sub: Vec<Vec<BigInt>> =
                        rs.iter().map(|&i| cs.iter().map(|&j| rows[i][j].clone()).collect()).collect();
                    g = g.gcd(&laplace(&sub));
                }
            }
            g
        })
        .collect()
}

fn matrix(rows: usize, cols: usize, range: i64) -> impl Strategy<Value = ExactMatrix> {
    prop::collection::vec(-range..=range, rows * cols).prop_map(move |v| {
        ExactMatrix::from_entries(rows, cols, v.into_iter().map(BigInt::from).collect()).unwrap()
    })
}

fn any_matrix() -> impl Strategy<Value = ExactMatrix> {
    (1usize..=4, 1usize..=4).prop_flat_map(|(r, c)| matrix(r, c, 6))
}

fn square(max: usize, range: i64) -> impl Strategy<Value = ExactMatrix> {
    (1usize..=max).prop_flat_map(move |n| matrix(n, n, range))
}

proptest! {
    #[test]
    fn snf_entries_are_ratios_of_determinantal_divisors(m in any_matrix()) {
        let s = snf(&m);
        let d = minor_gcds(&m);
        let mut prev = BigInt::one();
        for (k, dk) in d.iter().enumerate() {
            let expected = if dk.is_zero() { BigInt::zero() } else { dk / &prev };
            prop_assert_eq!(&s.entries[k], &expected);
            if !dk.is_zero() {
                prev = dk.clone();
            }
        }
        prop_assert!(s.satisfies_divisibility_chain());
    }

    #[test]
    fn snf_is_invariant_under_unimodular_changes(m in any_matrix(), ops in prop::collection::vec((0usize..4, 0usize..4, -3i64..=3, any::<bool>()), 0..12)) {
        let mut changed = m.clone();
        for (a, b, f, on_rows) in ops {
            if on_rows {
                let (a, b) = (a % m.rows(), b % m.rows());
                if a != b { changed.add_row_multiple(a, b, &BigInt::from(f)); } else { changed.swap_rows(a, (a + 1) % m.rows()); }
            } else {
                let (a, b) = (a % m.cols(), b % m.cols());
                if a != b { changed.add_col_multiple(a, b, &BigInt::from(f)); } else { changed.negate_col(a); }
            }
        }
        prop_assert_eq!(snf(&changed), snf(&m));
    }

    #[test]
    fn transforms_are_unimodular_and_diagonalize(m in any_matrix()) {
        let d = snf_with_transforms(&m);
        prop_assert!(determinant(&d.p).unwrap().abs().is_one());
        prop_assert!(determinant(&d.q).unwrap().abs().is_one());
        let prod = &(&d.p * &m) * &d.q;
        for i in 0..m.rows() {
            for j in 0..m.cols() {
                let want = if i == j { d.snf.entries[i].clone() } else { BigInt::zero() };
                prop_assert_eq!(&prod[(i, j)], &want);
            }
        }
    }

    #[test]
    fn determinant_matches_cofactor_expansion(m in square(5, 9)) {
        prop_assert_eq!(determinant(&m).unwrap(), laplace(&m.to_rows()));
    }

    #[test]
    fn abs_det_is_product_of_smith_entries(m in square(5, 9)) {
        let s = snf(&m);
        let det = determinant(&m).unwrap().abs();
        let prod: BigInt = s.entries.iter().product();
        prop_assert_eq!(det, prod);
    }

    #[test]
    fn permanent_matches_permutation_sum(m in square(6, 5)) {
        let want = perm_sum(&m.to_rows());
        prop_assert_eq!(permanent(&m).unwrap(), want.clone());
        prop_assert_eq!(permanent_ryser(&m).unwrap(), want.clone());
        prop_assert_eq!(permanent_by_rows(&m, usize::MAX).unwrap(), want);
    }
}

#[test]
fn spec_examples() {
    let m = ExactMatrix::from_rows(&[vec![6, 4], vec![4, 6]]);
    assert_eq!(snf(&m).entries, vec![BigInt::from(2), BigInt::from(10)]);
    assert_eq!(determinant(&m).unwrap(), BigInt::from(20));
    assert_eq!(permanent(&m).unwrap(), BigInt::from(52));
    let z = ExactMatrix::from_rows(&[vec![2, 4], vec![4, 8]]);
    assert_eq!(snf(&z).entries, vec![BigInt::from(2), BigInt::zero()]);
    assert_eq!(snf(&z).rank, 1);
}

#[test]
fn huge_entries_stay_exact() {
    let big: BigInt = BigInt::from(3).pow(80);
    let m = ExactMatrix::from_fn(3, 3, |i, j| &big * BigInt::from((i * 3 + j) as i64 + 1) + BigInt::from(i == j));
    assert_eq!(determinant(&m).unwrap(), laplace(&m.to_rows()));
    assert_eq!(permanent(&m).unwrap(), perm_sum(&m.to_rows()));
}

#[test]
fn sparse_band_permanent_beyond_ryser() {
    // Tridiagonal all-ones n x n: permanent is the Fibonacci number F(n+1).
    let n = 40;
    let m = ExactMatrix::from_fn(n, n, |i, j| BigInt::from((i as i64 - j as i64).abs() <= 1));
    let (mut a, mut b) = (BigInt::one(), BigInt::one());
    for _ in 1..n {
        let c = &a + &b;
        a = b;
        b = c;
    }
    assert_eq!(permanent(&m).unwrap(), b);
}
