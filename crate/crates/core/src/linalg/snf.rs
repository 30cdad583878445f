//! Smith normal form over the integers.
//!
//! Elimination uses the entry of smallest absolute value as pivot; once the
//! matrix is diagonal a repair pass enforces the divisibility chain by adding
//! one column into another and re-reducing the 2x2 block.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::ExactMatrix;

/// Diagonal of the Smith normal form.
///
/// `entries` has length `min(rows, cols)`, is nonnegative, satisfies
/// `entries[i] | entries[i + 1]`, and any zeros sit at the end.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SnfResult {
    #[serde(with = "crate::wire::bigint_vec")]
    pub entries: Vec<BigInt>,
    pub rank: usize,
}

impl SnfResult {
    /// Entries different from 1, in divisibility order (zeros included).
    pub fn non_units(&self) -> Vec<BigInt> {
        self.entries.iter().filter(|e| !e.is_one()).cloned().collect()
    }

    /// Non-unit entries among the first `k` entries.
    pub fn non_units_in_prefix(&self, k: usize) -> Vec<BigInt> {
        self.entries
            .iter()
            .take(k)
            .filter(|e| !e.is_one())
            .cloned()
            .collect()
    }

    pub fn is_all_ones(&self) -> bool {
        self.entries.iter().all(One::is_one)
    }

    /// Product of the nonzero entries.
    pub fn nonzero_product(&self) -> BigInt {
        self.entries.iter().filter(|e| !e.is_zero()).product()
    }

    pub fn satisfies_divisibility_chain(&self) -> bool {
        self.entries.windows(2).all(|w| divides(&w[0], &w[1]))
            && self.entries.iter().all(|e| !e.is_negative())
            && self.rank == self.entries.iter().filter(|e| !e.is_zero()).count()
    }
}

/// Smith normal form together with unimodular `p`, `q` such that
/// `p * m * q` is the diagonal form.
#[derive(Debug, Clone)]
pub struct SnfDecomposition {
    pub snf: SnfResult,
    pub p: ExactMatrix,
    pub q: ExactMatrix,
}

fn divides(a: &BigInt, b: &BigInt) -> bool {
    if a.is_zero() {
        b.is_zero()
    } else {
        (b % a).is_zero()
    }
}

pub fn snf(m: &ExactMatrix) -> SnfResult {
    let mut work = Work::new(m, false);
    work.run()
}

/// Smith normal form with the transforms retained.
pub fn snf_with_transforms(m: &ExactMatrix) -> SnfDecomposition {
    let mut work = Work::new(m, true);
    let snf = work.run();
    let (p, q) = work.transforms.expect("transforms requested");
    SnfDecomposition {
        snf,
        p: rows_to_matrix(p),
        q: rows_to_matrix(q),
    }
}

fn rows_to_matrix(rows: Vec<Vec<BigInt>>) -> ExactMatrix {
    let r = rows.len();
    let c = rows.first().map_or(r, Vec::len);
    ExactMatrix::from_entries(r, c, rows.into_iter().flatten().collect())
        .expect("square transform")
}

fn identity_rows(n: usize) -> Vec<Vec<BigInt>> {
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| if i == j { BigInt::one() } else { BigInt::zero() })
                .collect()
        })
        .collect()
}

struct Work {
    a: Vec<Vec<BigInt>>,
    rows: usize,
    cols: usize,
    // (p, q) stored row-major; column operations on q touch every row.
    transforms: Option<(Vec<Vec<BigInt>>, Vec<Vec<BigInt>>)>,
}

impl Work {
    fn new(m: &ExactMatrix, keep: bool) -> Self {
        let transforms = keep.then(|| (identity_rows(m.rows()), identity_rows(m.cols())));
        Self {
            a: m.to_rows(),
            rows: m.rows(),
            cols: m.cols(),
            transforms,
        }
    }

    fn swap_rows(&mut self, i: usize, k: usize) {
        if i == k {
            return;
        }
        self.a.swap(i, k);
        if let Some((p, _)) = &mut self.transforms {
            p.swap(i, k);
        }
    }

    fn swap_cols(&mut self, j: usize, k: usize) {
        if j == k {
            return;
        }
        for row in &mut self.a {
            row.swap(j, k);
        }
        if let Some((_, q)) = &mut self.transforms {
            for row in q.iter_mut() {
                row.swap(j, k);
            }
        }
    }

    /// row[dst] -= f * row[src], starting at column `from` (earlier columns of
    /// `src` are known to be zero).
    fn sub_row(&mut self, dst: usize, src: usize, f: &BigInt, from: usize) {
        let (d, s) = pair_mut(&mut self.a, dst, src);
        for (x, y) in d[from..].iter_mut().zip(&s[from..]) {
            if !y.is_zero() {
                *x -= f * y;
            }
        }
        if let Some((p, _)) = &mut self.transforms {
            let (d, s) = pair_mut(p, dst, src);
            for (x, y) in d.iter_mut().zip(s.iter()) {
                if !y.is_zero() {
                    *x -= f * y;
                }
            }
        }
    }

    /// col[dst] -= f * col[src], starting at row `from`.
    fn sub_col(&mut self, dst: usize, src: usize, f: &BigInt, from: usize) {
        for row in &mut self.a[from..] {
            if !row[src].is_zero() {
                let t = f * &row[src];
                row[dst] -= t;
            }
        }
        if let Some((_, q)) = &mut self.transforms {
            for row in q.iter_mut() {
                if !row[src].is_zero() {
                    let t = f * &row[src];
                    row[dst] -= t;
                }
            }
        }
    }

    fn negate_row(&mut self, i: usize) {
        for x in &mut self.a[i] {
            *x = -std::mem::take(x);
        }
        if let Some((p, _)) = &mut self.transforms {
            for x in &mut p[i] {
                *x = -std::mem::take(x);
            }
        }
    }

    /// Smallest nonzero |entry| in the trailing block starting at (t, t).
    fn find_pivot(&self, t: usize) -> Option<(usize, usize)> {
        let mut best: Option<(usize, usize, &BigInt)> = None;
        for i in t..self.rows {
            for j in t..self.cols {
                let x = &self.a[i][j];
                if x.is_zero() {
                    continue;
                }
                let better = match best {
                    None => true,
                    Some((_, _, b)) => x.magnitude() < b.magnitude(),
                };
                if better {
                    best = Some((i, j, x));
                    if x.magnitude().is_one() {
                        return Some((i, j));
                    }
                }
            }
        }
        best.map(|(i, j, _)| (i, j))
    }

    /// Clears row `t` and column `t` outside the diagonal, assuming (t, t) is
    /// nonzero. Entries with index below `t` are untouched.
    fn clear_cross(&mut self, t: usize) {
        loop {
            let pivot = self.a[t][t].clone();
            for i in t + 1..self.rows {
                if !self.a[i][t].is_zero() {
                    let q = &self.a[i][t] / &pivot;
                    if !q.is_zero() {
                        self.sub_row(i, t, &q, t);
                    }
                }
            }
            for j in t + 1..self.cols {
                if !self.a[t][j].is_zero() {
                    let q = &self.a[t][j] / &pivot;
                    if !q.is_zero() {
                        self.sub_col(j, t, &q, t);
                    }
                }
            }
            // Remainders smaller than the pivot, if any, become the next pivot.
            let mut best: Option<(bool, usize)> = None;
            let mut best_mag = pivot.magnitude().clone();
            for i in t + 1..self.rows {
                let x = &self.a[i][t];
                if !x.is_zero() && x.magnitude() < &best_mag {
                    best_mag = x.magnitude().clone();
                    best = Some((true, i));
                }
            }
            for j in t + 1..self.cols {
                let x = &self.a[t][j];
                if !x.is_zero() && x.magnitude() < &best_mag {
                    best_mag = x.magnitude().clone();
                    best = Some((false, j));
                }
            }
            match best {
                Some((true, i)) => self.swap_rows(t, i),
                Some((false, j)) => self.swap_cols(t, j),
                None => {
                    debug_assert!((t + 1..self.rows).all(|i| self.a[i][t].is_zero()));
                    debug_assert!((t + 1..self.cols).all(|j| self.a[t][j].is_zero()));
                    return;
                }
            }
        }
    }

    fn run(&mut self) -> SnfResult {
        let n = self.rows.min(self.cols);
        let mut rank = 0;
        while rank < n {
            let Some((i, j)) = self.find_pivot(rank) else {
                break;
            };
            self.swap_rows(rank, i);
            self.swap_cols(rank, j);
            self.clear_cross(rank);
            rank += 1;
        }

        // Divisibility repair: for a pair (d_i, d_j) with d_i not dividing
        // d_j, add column j into column i and re-reduce; the block becomes
        // diag(gcd, lcm) up to sign.
        for i in 0..rank {
            for j in i + 1..rank {
                if !divides(&self.a[i][i], &self.a[j][j]) {
                    self.sub_col(i, j, &BigInt::from(-1), 0);
                    self.clear_cross(i);
                }
            }
        }
        for i in 0..rank {
            if self.a[i][i].is_negative() {
                self.negate_row(i);
            }
        }

        let mut entries: Vec<BigInt> = (0..rank).map(|i| self.a[i][i].clone()).collect();
        entries.resize(n, BigInt::zero());
        debug_assert!(entries.windows(2).all(|w| divides(&w[0], &w[1])));
        SnfResult { entries, rank }
    }
}

fn pair_mut<T>(v: &mut [T], a: usize, b: usize) -> (&mut T, &T) {
    assert_ne!(a, b);
    if a < b {
        let (lo, hi) = v.split_at_mut(b);
        (&mut lo[a], &hi[0])
    } else {
        let (lo, hi) = v.split_at_mut(a);
        (&mut hi[0], &lo[b])
    }
}

/// Greatest common divisor of a list, nonnegative.
pub fn gcd_all<'a>(xs: impl IntoIterator<Item = &'a BigInt>) -> BigInt {
    xs.into_iter().fold(BigInt::zero(), |g, x| g.gcd(x))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn two_by_two_example() {
        let m = ExactMatrix::from_rows(&[vec![6, 4], vec![4, 6]]);
        let s = snf(&m);
        assert_eq!(s.entries, ints(&[2, 10]));
        assert_eq!(s.rank, 2);
    }

    #[test]
    fn identity_and_column() {
        assert_eq!(snf(&ExactMatrix::identity(3)).entries, ints(&[1, 1, 1]));
        let col = ExactMatrix::from_rows(&[vec![4], vec![6], vec![4]]);
        assert_eq!(snf(&col).entries, ints(&[2]));
    }

    #[test]
    fn empty_and_zero() {
        assert!(snf(&ExactMatrix::zeros(0, 4)).entries.is_empty());
        let z = snf(&ExactMatrix::zeros(3, 2));
        assert_eq!(z.entries, ints(&[0, 0]));
        assert_eq!(z.rank, 0);
    }

    #[test]
    fn repair_pass_needed() {
        // diag(2, 3) is diagonal but not in Smith form.
        let m = ExactMatrix::from_rows(&[vec![2, 0], vec![0, 3]]);
        assert_eq!(snf(&m).entries, ints(&[1, 6]));
        let m = ExactMatrix::from_rows(&[vec![4, 0, 0], vec![0, 6, 0], vec![0, 0, 10]]);
        assert_eq!(snf(&m).entries, ints(&[2, 2, 60]));
    }

    #[test]
    fn rank_deficient() {
        let m = ExactMatrix::from_rows(&[vec![2, 4], vec![3, 6], vec![5, 10]]);
        let s = snf(&m);
        assert_eq!(s.entries, ints(&[1, 0]));
        assert_eq!(s.rank, 1);
    }

    #[test]
    fn transforms_reproduce_diagonal() {
        let m = ExactMatrix::from_rows(&[vec![2, 4, 4], vec![-6, 6, 12], vec![10, -4, -16]]);
        let d = snf_with_transforms(&m);
        assert_eq!(d.snf.entries, ints(&[2, 6, 12]));
        let prod = &(&d.p * &m) * &d.q;
        for i in 0..3 {
            for j in 0..3 {
                let want = if i == j { d.snf.entries[i].clone() } else { BigInt::zero() };
                assert_eq!(prod[(i, j)], want);
            }
        }
    }
}
