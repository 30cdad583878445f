use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::ring::RingSpec;

/// Default cell budget for full enumeration.
pub const ENUMERATION_LIMIT: u32 = 64;

/// An `a x b x c` box.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct BoxSpec {
    pub a: u32,
    pub b: u32,
    pub c: u32,
}

impl BoxSpec {
    pub fn new(a: u32, b: u32, c: u32) -> Result<Self> {
        if a == 0 || b == 0 || c == 0 {
            return Err(Error::Precondition(format!("box sides must be positive, got {a}x{b}x{c}")));
        }
        Ok(Self { a, b, c })
    }

    /// Caps `(a + b, a + c, b + c)` of the associated ring.
    pub fn ring(&self) -> RingSpec {
        RingSpec::new(vec![self.a + self.b, self.a + self.c, self.b + self.c]).expect("positive caps")
    }

    /// Middle degree `a + b + c - 2`.
    pub fn middle(&self) -> u32 {
        self.a + self.b + self.c - 2
    }

    pub fn volume(&self) -> u32 {
        self.a * self.b * self.c
    }
}

impl fmt::Display for BoxSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}x{}x{}", self.a, self.b, self.c)
    }
}

/// A plane partition in a box, held as its set of unit cubes. Cube
/// `(i, j, k)` is present iff the stack at `(i, j)` is higher than `k`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PlanePartition {
    dims: (u32, u32, u32),
    cubes: Vec<bool>,
}

impl PlanePartition {
    pub fn empty(bx: BoxSpec) -> Self {
        Self {
            dims: (bx.a, bx.b, bx.c),
            cubes: vec![false; bx.volume() as usize],
        }
    }

    pub fn full(bx: BoxSpec) -> Self {
        Self {
            dims: (bx.a, bx.b, bx.c),
            cubes: vec![true; bx.volume() as usize],
        }
    }

    /// From stack heights (`a` rows of `b` entries, weakly decreasing along
    /// rows and columns, at most `c`).
    pub fn from_heights(bx: BoxSpec, heights: &[Vec<u32>]) -> Result<Self> {
        let bad = || Error::Precondition(format!("{heights:?} is not a plane partition in {bx}"));
        if heights.len() != bx.a as usize || heights.iter().any(|r| r.len() != bx.b as usize) {
            return Err(bad());
        }
        let mut p = Self::empty(bx);
        for i in 0..bx.a as usize {
            for j in 0..bx.b as usize {
                let h = heights[i][j];
                let up = if i > 0 { heights[i - 1][j] } else { bx.c };
                let left = if j > 0 { heights[i][j - 1] } else { bx.c };
                if h > up || h > left {
                    return Err(bad());
                }
                for k in 0..h {
                    p.set(i as u32, j as u32, k, true);
                }
            }
        }
        Ok(p)
    }

    /// From an arbitrary cube set; fails unless it is downward closed.
    pub fn from_cubes(bx: BoxSpec, cubes: Vec<bool>) -> Result<Self> {
        if cubes.len() != bx.volume() as usize {
            return Err(Error::Dimension(format!("{} cubes for box {bx}", cubes.len())));
        }
        let p = Self {
            dims: (bx.a, bx.b, bx.c),
            cubes,
        };
        if !p.is_order_ideal() {
            return Err(Error::Precondition("cube set is not downward closed".into()));
        }
        Ok(p)
    }

    pub fn bx(&self) -> BoxSpec {
        BoxSpec {
            a: self.dims.0,
            b: self.dims.1,
            c: self.dims.2,
        }
    }

    fn index(&self, i: u32, j: u32, k: u32) -> usize {
        ((i * self.dims.1 + j) * self.dims.2 + k) as usize
    }

    pub fn contains(&self, i: u32, j: u32, k: u32) -> bool {
        i < self.dims.0 && j < self.dims.1 && k < self.dims.2 && self.cubes[self.index(i, j, k)]
    }

    fn set(&mut self, i: u32, j: u32, k: u32, v: bool) {
        let idx = self.index(i, j, k);
        self.cubes[idx] = v;
    }

    pub fn cube_count(&self) -> usize {
        self.cubes.iter().filter(|&&x| x).count()
    }

    pub fn cubes(&self) -> impl Iterator<Item = (u32, u32, u32)> + '_ {
        let (a, b, c) = self.dims;
        (0..a).flat_map(move |i| {
            (0..b).flat_map(move |j| (0..c).map(move |k| (i, j, k)))
        })
        .filter(|&(i, j, k)| self.contains(i, j, k))
    }

    pub fn height(&self, i: u32, j: u32) -> u32 {
        (0..self.dims.2).take_while(|&k| self.contains(i, j, k)).count() as u32
    }

    pub fn heights(&self) -> Vec<Vec<u32>> {
        (0..self.dims.0)
            .map(|i| (0..self.dims.1).map(|j| self.height(i, j)).collect())
            .collect()
    }

    pub fn is_order_ideal(&self) -> bool {
        self.cubes().all(|(i, j, k)| {
            (i == 0 || self.contains(i - 1, j, k))
                && (j == 0 || self.contains(i, j - 1, k))
                && (k == 0 || self.contains(i, j, k - 1))
        })
    }

    /// Image of the cube set under a map of coordinates into `target`.
    pub(crate) fn map_cubes(&self, target: BoxSpec, f: impl Fn(u32, u32, u32) -> (u32, u32, u32)) -> Self {
        let mut out = Self::empty(target);
        for (i, j, k) in self.cubes() {
            let (x, y, z) = f(i, j, k);
            out.set(x, y, z, true);
        }
        out
    }

    /// Complement: cube `(a-1-i, b-1-j, c-1-k)` is present iff `(i, j, k)`
    /// is absent.
    pub fn complement(&self) -> Self {
        let (a, b, c) = self.dims;
        let mut out = Self::empty(self.bx());
        for i in 0..a {
            for j in 0..b {
                for k in 0..c {
                    if !self.contains(i, j, k) {
                        out.set(a - 1 - i, b - 1 - j, c - 1 - k, true);
                    }
                }
            }
        }
        out
    }
}

impl fmt::Debug for PlanePartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PlanePartition{:?}", self.heights())
    }
}

/// Serializes as the matrix of stack heights.
impl Serialize for PlanePartition {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.heights().serialize(s)
    }
}

/// Every plane partition in the box, in increasing order of the cube-set
/// representation. Fails if the box has more than `limit` cells.
pub fn enumerate_box_pp(bx: BoxSpec, limit: u32) -> Result<Vec<PlanePartition>> {
    if bx.volume() > limit {
        return Err(Error::Capacity {
            what: format!("enumerating plane partitions in {bx}"),
            limit: limit as usize,
        });
    }
    let mut out = Vec::new();
    let mut heights = vec![vec![0u32; bx.b as usize]; bx.a as usize];
    walk(bx, 0, &mut heights, &mut out);
    out.sort();
    Ok(out)
}

fn walk(bx: BoxSpec, cell: usize, heights: &mut Vec<Vec<u32>>, out: &mut Vec<PlanePartition>) {
    let (a, b) = (bx.a as usize, bx.b as usize);
    if cell == a * b {
        out.push(PlanePartition::from_heights(bx, heights).expect("monotone by construction"));
        return;
    }
    let (i, j) = (cell / b, cell % b);
    let up = if i > 0 { heights[i - 1][j] } else { bx.c };
    let left = if j > 0 { heights[i][j - 1] } else { bx.c };
    for h in 0..=up.min(left) {
        heights[i][j] = h;
        walk(bx, cell + 1, heights, out);
    }
    heights[i][j] = 0;
}

/// Number of plane partitions in the box, by a transfer matrix over rows
/// (weakly decreasing `b`-tuples bounded by `c`). No size limit.
pub fn count_box_pp(bx: BoxSpec) -> BigInt {
    let mut rows = Vec::new();
    let mut cur = Vec::new();
    decreasing_rows(bx.b as usize, bx.c, &mut cur, &mut rows);
    let mut ways: Vec<BigInt> = vec![BigInt::one(); rows.len()];
    for _ in 1..bx.a {
        ways = rows
            .iter()
            .map(|lower| {
                rows.iter()
                    .zip(&ways)
                    .filter(|(upper, _)| upper.iter().zip(lower).all(|(u, l)| u >= l))
                    .map(|(_, w)| w.clone())
                    .sum()
            })
            .collect();
    }
    ways.into_iter().sum()
}

fn decreasing_rows(len: usize, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
    if cur.len() == len {
        out.push(cur.clone());
        return;
    }
    let top = cur.last().copied().unwrap_or(max);
    for v in 0..=top {
        cur.push(v);
        decreasing_rows(len, max, cur, out);
        cur.pop();
    }
}

/// MacMahon's box formula, evaluated in exact rational arithmetic.
pub fn macmahon_count(bx: BoxSpec) -> BigInt {
    let mut acc = BigRational::one();
    for i in 1..=bx.a {
        for j in 1..=bx.b {
            for k in 1..=bx.c {
                let s = (i + j + k) as i64;
                acc *= BigRational::new(BigInt::from(s - 1), BigInt::from(s - 2));
            }
        }
    }
    assert!(acc.is_integer(), "box product is not an integer: {acc}");
    acc.to_integer()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bx(a: u32, b: u32, c: u32) -> BoxSpec {
        BoxSpec::new(a, b, c).unwrap()
    }

    #[test]
    fn small_counts() {
        for (a, b, c, n) in [(1, 1, 1, 2), (2, 2, 2, 20), (1, 2, 3, 10)] {
            let s = bx(a, b, c);
            assert_eq!(enumerate_box_pp(s, ENUMERATION_LIMIT).unwrap().len(), n);
            assert_eq!(macmahon_count(s), BigInt::from(n));
            assert_eq!(count_box_pp(s), BigInt::from(n));
        }
    }

    #[test]
    fn capacity() {
        assert!(matches!(
            enumerate_box_pp(bx(4, 4, 5), ENUMERATION_LIMIT),
            Err(Error::Capacity { .. })
        ));
        assert_eq!(count_box_pp(bx(4, 4, 5)), macmahon_count(bx(4, 4, 5)));
    }

    #[test]
    fn heights_and_cubes() {
        let s = bx(2, 2, 2);
        let p = PlanePartition::from_heights(s, &[vec![2, 1], vec![1, 0]]).unwrap();
        assert_eq!(p.cube_count(), 4);
        assert!(p.contains(0, 0, 1) && !p.contains(1, 1, 0));
        assert_eq!(p.complement().heights(), vec![vec![2, 1], vec![1, 0]]);
        assert!(PlanePartition::from_heights(s, &[vec![1, 2], vec![0, 0]]).is_err());
        assert_eq!(serde_json::to_string(&p).unwrap(), "[[2,1],[1,0]]");
        let mut cubes = vec![false; 8];
        cubes[7] = true;
        assert!(PlanePartition::from_cubes(s, cubes).is_err());
    }
}
