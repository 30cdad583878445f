use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Weakly decreasing sequence of positive integers. Trailing zeros are
/// dropped on construction.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct Partition(Vec<u32>);

impl Partition {
    pub fn new(mut parts: Vec<u32>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) || parts.contains(&0) {
            return Err(Error::Precondition(format!("{parts:?} is not a partition")));
        }
        Ok(Self(parts))
    }

    pub fn empty() -> Self {
        Self(Vec::new())
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `i`-th part (0-based), zero beyond the length.
    pub fn part(&self, i: usize) -> u32 {
        self.0.get(i).copied().unwrap_or(0)
    }

    pub fn size(&self) -> u32 {
        self.0.iter().sum()
    }

    /// The first `k` parts, zero-padded.
    pub fn padded(&self, k: usize) -> Vec<u32> {
        (0..k).map(|i| self.part(i)).collect()
    }
}

impl TryFrom<Vec<u32>> for Partition {
    type Error = Error;

    fn try_from(v: Vec<u32>) -> Result<Self> {
        Self::new(v)
    }
}

impl From<Partition> for Vec<u32> {
    fn from(p: Partition) -> Self {
        p.0
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", join(&self.0))
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

fn join(xs: &[u32]) -> String {
    xs.iter().map(ToString::to_string).collect::<Vec<_>>().join(",")
}

fn parse_parts(s: &str) -> Result<Vec<u32>> {
    let s = s.trim().trim_start_matches('(').trim_end_matches(')');
    if s.trim().is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|t| {
            t.trim()
                .parse::<u32>()
                .map_err(|e| Error::Parse(format!("bad part {t:?}: {e}")))
        })
        .collect()
}

impl FromStr for Partition {
    type Err = Error;

    /// Accepts `5,3,1` or `(5,3,1)`.
    fn from_str(s: &str) -> Result<Self> {
        Self::new(parse_parts(s)?)
    }
}

/// Skew shape `lambda / mu`. The inner partition is stored zero-padded to the
/// length of the outer one.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "ShapeWire", into = "ShapeWire")]
pub struct SkewShape {
    outer: Partition,
    inner: Vec<u32>,
}

#[derive(Serialize, Deserialize)]
struct ShapeWire {
    outer: Vec<u32>,
    inner: Vec<u32>,
}

impl SkewShape {
    pub fn new(outer: Partition, inner: Partition) -> Result<Self> {
        if inner.len() > outer.len() || (0..outer.len()).any(|i| inner.part(i) > outer.part(i)) {
            return Err(Error::Precondition(format!("{inner} is not contained in {outer}")));
        }
        let inner = inner.padded(outer.len());
        Ok(Self { outer, inner })
    }

    /// Convenience constructor from raw part lists.
    pub fn from_parts(outer: &[u32], inner: &[u32]) -> Result<Self> {
        Self::new(Partition::new(outer.to_vec())?, Partition::new(inner.to_vec())?)
    }

    pub fn straight(p: Partition) -> Self {
        let inner = vec![0; p.len()];
        Self { outer: p, inner }
    }

    pub fn outer(&self) -> &Partition {
        &self.outer
    }

    /// Inner parts, zero-padded to the number of rows.
    pub fn inner(&self) -> &[u32] {
        &self.inner
    }

    pub fn inner_partition(&self) -> Partition {
        Partition::new(self.inner.clone()).expect("validated")
    }

    /// Number of rows, i.e. parts of the outer partition.
    pub fn rows(&self) -> usize {
        self.outer.len()
    }

    pub fn lambda(&self, i: usize) -> u32 {
        self.outer.part(i)
    }

    pub fn mu(&self, i: usize) -> u32 {
        self.inner.get(i).copied().unwrap_or(0)
    }

    pub fn is_straight(&self) -> bool {
        self.inner.iter().all(|&m| m == 0)
    }

    pub fn size(&self) -> u32 {
        self.outer.size() - self.inner.iter().sum::<u32>()
    }
}

impl TryFrom<ShapeWire> for SkewShape {
    type Error = Error;

    fn try_from(w: ShapeWire) -> Result<Self> {
        Self::from_parts(&w.outer, &w.inner)
    }
}

impl From<SkewShape> for ShapeWire {
    fn from(s: SkewShape) -> Self {
        ShapeWire {
            outer: s.outer.0,
            inner: s.inner,
        }
    }
}

impl fmt::Display for SkewShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_straight() {
            write!(f, "{}", self.outer)
        } else {
            write!(f, "{}/({})", self.outer, join(&self.inner))
        }
    }
}

impl fmt::Debug for SkewShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl FromStr for SkewShape {
    type Err = Error;

    /// Accepts `5,3/1`, `(5,3)/(1,0)` or a straight `(4,3)`.
    fn from_str(s: &str) -> Result<Self> {
        let (o, i) = s.split_once('/').unwrap_or((s, ""));
        Self::from_parts(&parse_parts(o)?, &parse_parts(i)?)
    }
}

/// `(lambda_1 - lambda_k, ..., lambda_(k-1) - lambda_k)`.
///
/// The derived order is lexicographic: the smaller spread is the one whose
/// first differing entry is smaller.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Spread(pub Vec<u32>);

/// All partitions with exactly `k` parts, each at most `max_part`, in
/// decreasing lexicographic order.
pub fn partitions_with_parts(k: usize, max_part: u32) -> Vec<Partition> {
    fn go(k: usize, cap: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if cur.len() == k {
            out.push(Partition(cur.clone()));
            return;
        }
        for x in (1..=cap).rev() {
            cur.push(x);
            go(k, x, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(k, max_part, &mut Vec::with_capacity(k), &mut out);
    out
}

pub fn spread_of(p: &Partition, k: usize) -> Result<Spread> {
    if p.len() != k || k == 0 {
        return Err(Error::Precondition(format!("{p} does not have exactly {k} parts")));
    }
    let last = p.part(k - 1);
    Ok(Spread(p.parts()[..k - 1].iter().map(|x| x - last).collect()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn partitions() {
        assert_eq!(Partition::new(vec![3, 1, 0]).unwrap().parts(), &[3, 1]);
        assert!(Partition::new(vec![1, 3]).is_err());
        assert!(Partition::new(vec![3, 0, 1]).is_err());
        assert_eq!("(5,3,1)".parse::<Partition>().unwrap().to_string(), "(5,3,1)");
    }

    #[test]
    fn shapes() {
        let s: SkewShape = "(5,3)/(1,0)".parse().unwrap();
        assert_eq!(s.inner(), &[1, 0]);
        assert_eq!(s.size(), 7);
        assert_eq!(s.to_string(), "(5,3)/(1,0)");
        assert_eq!("4,3".parse::<SkewShape>().unwrap().to_string(), "(4,3)");
        assert!("2,1/3".parse::<SkewShape>().is_err());
        assert!("2/1,1".parse::<SkewShape>().is_err());
        let json = serde_json::to_string(&s).unwrap();
        assert_eq!(json, r#"{"outer":[5,3],"inner":[1,0]}"#);
        assert_eq!(serde_json::from_str::<SkewShape>(&json).unwrap(), s);
    }

    #[test]
    fn spreads() {
        let p = Partition::new(vec![11, 9, 8, 7, 5]).unwrap();
        assert_eq!(spread_of(&p, 5).unwrap(), Spread(vec![6, 4, 3, 2]));
        assert_eq!(spread_of(&Partition::new(vec![3, 3, 3]).unwrap(), 3).unwrap(), Spread(vec![0, 0]));
        assert_eq!(spread_of(&Partition::new(vec![5, 2]).unwrap(), 2).unwrap(), Spread(vec![3]));
        assert!(spread_of(&p, 4).is_err());
        assert!(Spread(vec![3, 0]) > Spread(vec![2, 2]));
    }
}
