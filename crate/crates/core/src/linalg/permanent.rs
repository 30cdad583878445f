use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive, Zero};

use super::ExactMatrix;
use crate::error::{Error, Result};

/// Largest column count accepted by the inclusion-exclusion route.
pub const RYSER_MAX_COLS: usize = 34;

/// Above this size sparse matrices go through row expansion first.
const RYSER_PREFERRED_MAX: usize = 20;
const SPARSE_ROW_SUPPORT: usize = 6;
const ROW_EXPANSION_STATE_CAP: usize = 1 << 21;

/// Exact permanent.
///
/// Small or dense matrices use Ryser's formula over a Gray-code walk of the
/// column subsets. Larger sparse matrices (biadjacency matrices of the hexagon
/// graphs, for example) are expanded row by row over the set of used columns,
/// which is exact and far cheaper when the band is narrow.
pub fn permanent(m: &ExactMatrix) -> Result<BigInt> {
    check_square(m)?;
    let n = m.rows();
    if n > RYSER_PREFERRED_MAX && (0..n).all(|i| m.row_support(i) <= SPARSE_ROW_SUPPORT) {
        if let Some(p) = permanent_by_rows(m, ROW_EXPANSION_STATE_CAP) {
            return Ok(p);
        }
    }
    permanent_ryser(m)
}

fn check_square(m: &ExactMatrix) -> Result<()> {
    if m.is_square() {
        Ok(())
    } else {
        Err(Error::Dimension(format!(
            "permanent of a non-square {}x{} matrix",
            m.rows(),
            m.cols()
        )))
    }
}

/// Ryser inclusion-exclusion with Gray-code subset order.
///
/// `perm(A) = (-1)^n * sum_S (-1)^|S| * prod_i sum_{j in S} a_ij`
pub fn permanent_ryser(m: &ExactMatrix) -> Result<BigInt> {
    check_square(m)?;
    let n = m.rows();
    if n > RYSER_MAX_COLS {
        return Err(Error::Capacity {
            what: format!("Ryser permanent of a {n}x{n} matrix"),
            limit: RYSER_MAX_COLS,
        });
    }
    if n == 0 {
        return Ok(BigInt::one());
    }
    match small_entries(m) {
        Some(a) if fits_i128(&a) => Ok(BigInt::from(ryser_i128(&a))),
        _ => Ok(ryser_big(m)),
    }
}

fn small_entries(m: &ExactMatrix) -> Option<Vec<Vec<i64>>> {
    (0..m.rows())
        .map(|i| m.row(i).iter().map(ToPrimitive::to_i64).collect())
        .collect()
}

/// The Ryser sum is bounded by 2^n * prod_i sum_j |a_ij|.
fn fits_i128(a: &[Vec<i64>]) -> bool {
    let mut bits = a.len() as f64;
    for row in a {
        let s: f64 = row.iter().map(|x| (*x as f64).abs()).sum();
        if s > (1u64 << 52) as f64 {
            return false;
        }
        bits += s.max(1.0).log2();
    }
    bits < 120.0
}

fn ryser_i128(a: &[Vec<i64>]) -> i128 {
    let n = a.len();
    let mut sums = vec![0i128; n];
    let mut in_set = vec![false; n];
    let mut total: i128 = 0;
    let mut size = 0usize;
    for k in 1u64..(1u64 << n) {
        let j = k.trailing_zeros() as usize;
        let sign = if in_set[j] { -1 } else { 1 };
        in_set[j] = !in_set[j];
        if in_set[j] {
            size += 1;
        } else {
            size -= 1;
        }
        let mut prod: i128 = 1;
        for (s, row) in sums.iter_mut().zip(a) {
            *s += sign * row[j] as i128;
            prod *= *s;
        }
        if size.is_multiple_of(2) {
            total += prod;
        } else {
            total -= prod;
        }
    }
    if n % 2 == 1 {
        -total
    } else {
        total
    }
}

fn ryser_big(m: &ExactMatrix) -> BigInt {
    let n = m.rows();
    let mut sums = vec![BigInt::zero(); n];
    let mut in_set = vec![false; n];
    let mut total = BigInt::zero();
    let mut size = 0usize;
    for k in 1u64..(1u64 << n) {
        let j = k.trailing_zeros() as usize;
        let adding = !in_set[j];
        in_set[j] = adding;
        if adding {
            size += 1;
        } else {
            size -= 1;
        }
        let mut prod = BigInt::one();
        for (i, s) in sums.iter_mut().enumerate() {
            if adding {
                *s += &m[(i, j)];
            } else {
                *s -= &m[(i, j)];
            }
            prod *= &*s;
        }
        if size.is_multiple_of(2) {
            total += prod;
        } else {
            total -= prod;
        }
    }
    if n % 2 == 1 {
        -total
    } else {
        total
    }
}

/// Row-by-row expansion keyed on the set of columns already used.
///
/// Returns `None` if the number of live states exceeds `state_cap`.
pub fn permanent_by_rows(m: &ExactMatrix, state_cap: usize) -> Option<BigInt> {
    let n = m.rows();
    debug_assert!(m.is_square());
    let words = n.div_ceil(64).max(1);
    let mut states: HashMap<Vec<u64>, BigInt> = HashMap::new();
    states.insert(vec![0; words], BigInt::one());
    for i in 0..n {
        let support: Vec<(usize, &BigInt)> = m
            .row(i)
            .iter()
            .enumerate()
            .filter(|(_, x)| !x.is_zero())
            .collect();
        let mut next: HashMap<Vec<u64>, BigInt> = HashMap::with_capacity(states.len());
        for (used, val) in &states {
            for &(j, a) in &support {
                if used[j / 64] >> (j % 64) & 1 == 1 {
                    continue;
                }
                let mut key = used.clone();
                key[j / 64] |= 1 << (j % 64);
                *next.entry(key).or_insert_with(BigInt::zero) += val * a;
            }
        }
        next.retain(|_, v| !v.is_zero());
        if next.len() > state_cap {
            return None;
        }
        states = next;
    }
    Some(states.into_values().sum())
}
