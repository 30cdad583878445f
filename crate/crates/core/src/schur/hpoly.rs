use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};

use super::SkewShape;
use crate::error::{Error, Result};
use crate::linalg::{determinant, ExactMatrix};

/// Polynomial in formal variables `h_1, h_2, ...`.
///
/// A monomial is the multiset of its indices, stored in decreasing order;
/// `h_0` is folded into the constant term.
#[derive(Clone, Default, PartialEq, Eq)]
pub struct HPolynomial {
    terms: BTreeMap<Vec<u32>, BigInt>,
}

impl HPolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(Vec::new(), BigInt::one())
    }

    /// `h_j`, with `h_0 = 1` and `h_j = 0` for negative `j`.
    pub fn h(j: i64) -> Self {
        match j {
            j if j < 0 => Self::zero(),
            0 => Self::one(),
            j => Self::monomial(vec![j as u32], BigInt::one()),
        }
    }

    pub fn monomial(mut indices: Vec<u32>, coeff: BigInt) -> Self {
        indices.retain(|&i| i != 0);
        indices.sort_unstable_by(|a, b| b.cmp(a));
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(indices, coeff);
        }
        Self { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[u32], &BigInt)> {
        self.terms.iter().map(|(k, v)| (k.as_slice(), v))
    }

    /// Largest index occurring, 0 for constants.
    pub fn max_index(&self) -> u32 {
        self.terms.keys().filter_map(|k| k.first().copied()).max().unwrap_or(0)
    }

    fn add_term(&mut self, key: Vec<u32>, coeff: BigInt) {
        if coeff.is_zero() {
            return;
        }
        let entry = self.terms.entry(key);
        match entry {
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += coeff;
                if o.get().is_zero() {
                    o.remove();
                }
            }
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(coeff);
            }
        }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(k, v)| (k.clone(), v * c)).collect(),
        }
    }

    /// Value at `h_j = values[j - 1]`; fails if an index exceeds the assignment.
    pub fn evaluate(&self, values: &[BigInt]) -> Result<BigInt> {
        let mut total = BigInt::zero();
        for (key, coeff) in &self.terms {
            let mut t = coeff.clone();
            for &i in key {
                let v = values.get(i as usize - 1).ok_or_else(|| {
                    Error::Dimension(format!("no value supplied for h_{i}"))
                })?;
                t *= v;
            }
            total += t;
        }
        Ok(total)
    }

    /// Determinant of the matrix `(h_{idx[i][j]})`, expanded formally.
    pub fn index_determinant(idx: &[Vec<i64>]) -> Self {
        let k = idx.len();
        let mut out = Self::zero();
        let mut used = vec![false; k];
        let mut picked = Vec::with_capacity(k);
        expand(idx, 0, &mut used, &mut picked, 1, &mut out);
        out
    }
}

fn expand(
    idx: &[Vec<i64>],
    row: usize,
    used: &mut [bool],
    picked: &mut Vec<u32>,
    sign: i64,
    out: &mut HPolynomial,
) {
    let k = idx.len();
    if row == k {
        let mut key: Vec<u32> = picked.iter().copied().filter(|&i| i != 0).collect();
        key.sort_unstable_by(|a, b| b.cmp(a));
        out.add_term(key, BigInt::from(sign));
        return;
    }
    // Parity of the permutation is tracked by counting the unused columns
    // to the left of the one picked.
    let mut skipped = 0;
    for j in 0..k {
        if used[j] {
            continue;
        }
        let v = idx[row][j];
        if v >= 0 {
            used[j] = true;
            picked.push(v as u32);
            let s = if skipped % 2 == 0 { sign } else { -sign };
            expand(idx, row + 1, used, picked, s, out);
            picked.pop();
            used[j] = false;
        }
        skipped += 1;
    }
}

/// Index matrix `(lambda_i - mu_j - i + j)` of the Jacobi-Trudi determinant.
pub fn jacobi_trudi_indices(shape: &SkewShape) -> Vec<Vec<i64>> {
    let k = shape.rows();
    (0..k)
        .map(|i| {
            (0..k)
                .map(|j| shape.lambda(i) as i64 - shape.mu(j) as i64 - i as i64 + j as i64)
                .collect()
        })
        .collect()
}

/// Jacobi-Trudi determinant in `h_1..h_n`. Shapes that would need an index
/// above `n` are rejected.
pub fn jacobi_trudi(shape: &SkewShape, n: u32) -> Result<HPolynomial> {
    let idx = jacobi_trudi_indices(shape);
    let top = idx.iter().flatten().copied().max().unwrap_or(0);
    if top > n as i64 {
        return Err(Error::Precondition(format!(
            "{shape} needs h_{top}, beyond h_{n}"
        )));
    }
    Ok(HPolynomial::index_determinant(&idx))
}

/// Jacobi-Trudi determinant with no bound on the indices.
pub fn jacobi_trudi_formal(shape: &SkewShape) -> HPolynomial {
    HPolynomial::index_determinant(&jacobi_trudi_indices(shape))
}

/// Numeric Jacobi-Trudi determinant at `h_j = values[j - 1]`, computed by
/// fraction-free elimination rather than formal expansion.
pub fn jacobi_trudi_value(shape: &SkewShape, values: &[BigInt]) -> Result<BigInt> {
    let idx = jacobi_trudi_indices(shape);
    let k = idx.len();
    let mut entries = Vec::with_capacity(k * k);
    for &v in idx.iter().flatten() {
        entries.push(match v {
            v if v < 0 => BigInt::zero(),
            0 => BigInt::one(),
            v => values
                .get(v as usize - 1)
                .cloned()
                .ok_or_else(|| Error::Dimension(format!("no value supplied for h_{v}")))?,
        });
    }
    determinant(&ExactMatrix::from_entries(k, k, entries)?)
}

impl Add for &HPolynomial {
    type Output = HPolynomial;

    fn add(self, rhs: &HPolynomial) -> HPolynomial {
        let mut out = self.clone();
        for (k, v) in &rhs.terms {
            out.add_term(k.clone(), v.clone());
        }
        out
    }
}

impl Neg for &HPolynomial {
    type Output = HPolynomial;

    fn neg(self) -> HPolynomial {
        self.scale(&-BigInt::one())
    }
}

impl Sub for &HPolynomial {
    type Output = HPolynomial;

    fn sub(self, rhs: &HPolynomial) -> HPolynomial {
        self + &(-rhs)
    }
}

impl Mul for &HPolynomial {
    type Output = HPolynomial;

    fn mul(self, rhs: &HPolynomial) -> HPolynomial {
        let mut out = HPolynomial::zero();
        for (a, x) in &self.terms {
            for (b, y) in &rhs.terms {
                let mut key: Vec<u32> = a.iter().chain(b).copied().collect();
                key.sort_unstable_by(|p, q| q.cmp(p));
                out.add_term(key, x * y);
            }
        }
        out
    }
}

impl fmt::Display for HPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        // Highest-degree terms first.
        let mut terms: Vec<_> = self.terms.iter().collect();
        terms.sort_by(|a, b| b.0.len().cmp(&a.0.len()).then(b.0.cmp(a.0)));
        for (n, (key, coeff)) in terms.into_iter().enumerate() {
            let neg = coeff < &BigInt::zero();
            let mag = if neg { -coeff } else { coeff.clone() };
            match (n, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let body: Vec<String> = key.iter().map(|i| format!("h{i}")).collect();
            match (mag.is_one(), body.is_empty()) {
                (true, false) => write!(f, "{}", body.join("*"))?,
                (_, true) => write!(f, "{mag}")?,
                (false, false) => write!(f, "{mag}*{}", body.join("*"))?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for HPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Serializes as `[{"indices": [..], "coeff": "decimal"}, ...]`.
impl Serialize for HPolynomial {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Term<'a> {
            indices: &'a [u32],
            coeff: String,
        }
        let mut seq = s.serialize_seq(Some(self.terms.len()))?;
        for (k, v) in &self.terms {
            seq.serialize_element(&Term {
                indices: k,
                coeff: v.to_string(),
            })?;
        }
        seq.end()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn shape(s: &str) -> SkewShape {
        s.parse().unwrap()
    }

    #[test]
    fn small_determinants() {
        let h1 = HPolynomial::h(1);
        assert_eq!(jacobi_trudi(&shape("2,1/1"), 3).unwrap(), &h1 * &h1);
        assert_eq!(jacobi_trudi(&shape("4"), 4).unwrap(), HPolynomial::h(4));
        assert!(jacobi_trudi(&shape("5"), 4).is_err());
        assert_eq!(jacobi_trudi(&shape("1,1"), 2).unwrap().to_string(), "h1*h1 - h2");
    }

    #[test]
    fn lr_figure_identity() {
        let lhs = jacobi_trudi(&shape("5,3/1"), 7).unwrap();
        let rhs = &jacobi_trudi(&shape("5,2"), 7).unwrap() + &jacobi_trudi(&shape("4,3"), 7).unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn numeric_route_agrees() {
        let vals: Vec<BigInt> = [3, -2, 5, 7, 1, -4, 2].iter().map(|&v| BigInt::from(v)).collect();
        let s = shape("5,3,2/2,1");
        assert_eq!(
            jacobi_trudi_formal(&s).evaluate(&vals).unwrap(),
            jacobi_trudi_value(&s, &vals).unwrap()
        );
    }

    #[test]
    fn json() {
        let p = &HPolynomial::h(2) - &HPolynomial::h(1);
        assert_eq!(
            serde_json::to_string(&p).unwrap(),
            r#"[{"indices":[1],"coeff":"-1"},{"indices":[2],"coeff":"1"}]"#
        );
    }
}
