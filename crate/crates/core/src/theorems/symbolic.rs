use std::fmt;
use std::ops::Mul;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::Serialize;

use super::{binomial, check_mr_range};
use crate::error::{Error, Result};
use crate::linalg::ExactMatrix;
use crate::ring::{graded_basis, Monomial, RingSpec};

/// A single term `coefficient * y^ypow * z^zpow`. A zero coefficient is the
/// zero polynomial regardless of the exponents.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BivariateTerm {
    #[serde(with = "crate::wire::bigint")]
    pub coefficient: BigInt,
    pub ypow: u32,
    pub zpow: u32,
}

impl BivariateTerm {
    pub fn zero() -> Self {
        Self::new(BigInt::zero(), 0, 0)
    }

    pub fn new(coefficient: BigInt, ypow: u32, zpow: u32) -> Self {
        Self {
            coefficient,
            ypow,
            zpow,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coefficient.is_zero()
    }

    fn is_literal_one(&self) -> bool {
        self.coefficient.is_one() && self.ypow == 0 && self.zpow == 0
    }

    /// `self - other`, provided both are multiples of the same monomial.
    fn sub(&self, other: &Self) -> Option<Self> {
        if other.is_zero() {
            return Some(self.clone());
        }
        if self.is_zero() {
            return Some(Self::new(-&other.coefficient, other.ypow, other.zpow));
        }
        if (self.ypow, self.zpow) != (other.ypow, other.zpow) {
            return None;
        }
        let c = &self.coefficient - &other.coefficient;
        Some(if c.is_zero() {
            Self::zero()
        } else {
            Self::new(c, self.ypow, self.zpow)
        })
    }
}

impl Mul for &BivariateTerm {
    type Output = BivariateTerm;

    fn mul(self, rhs: &BivariateTerm) -> BivariateTerm {
        if self.is_zero() || rhs.is_zero() {
            return BivariateTerm::zero();
        }
        BivariateTerm::new(
            &self.coefficient * &rhs.coefficient,
            self.ypow + rhs.ypow,
            self.zpow + rhs.zpow,
        )
    }
}

impl fmt::Display for BivariateTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        write!(f, "{}", self.coefficient)?;
        for (v, p) in [("y", self.ypow), ("z", self.zpow)] {
            match p {
                0 => {}
                1 => write!(f, "*{v}")?,
                _ => write!(f, "*{v}^{p}")?,
            }
        }
        Ok(())
    }
}

/// The block left over after eliminating every unit pivot of `U_r(y, z)`.
#[derive(Clone, Debug, Serialize)]
pub struct SymbolicBlock {
    pub row_labels: Vec<Monomial>,
    pub col_labels: Vec<Monomial>,
    pub entries: Vec<Vec<BivariateTerm>>,
}

impl SymbolicBlock {
    /// Substitutes `y = z = 1`.
    pub fn coefficients(&self) -> ExactMatrix {
        let cols = self.col_labels.len();
        ExactMatrix::from_fn(self.row_labels.len(), cols, |i, j| {
            self.entries[i][j].coefficient.clone()
        })
    }

    /// The predicted block
    /// `(-1)^(A-1) C(A, r-B+i-j+2) y^(A+B-r-i+j-2) z^(r-B+i-j+2)`.
    pub fn predicted(a: u32, b: u32, c: u32, r: u32) -> Result<Vec<Vec<BivariateTerm>>> {
        check_mr_range(a, b, c, r)?;
        let rows = (b + c - r - 2) as i64;
        let cols = (r + 2 - a) as i64;
        let (a, b, r) = (a as i64, b as i64, r as i64);
        let sign: i64 = if a % 2 == 1 { 1 } else { -1 };
        Ok((1..=rows)
            .map(|i| {
                (1..=cols)
                    .map(|j| {
                        let k = r - b + i - j + 2;
                        let coeff: BigInt = binomial(a, k) * sign;
                        if coeff.is_zero() {
                            BivariateTerm::zero()
                        } else {
                            BivariateTerm::new(coeff, (a + b - r - i + j - 2) as u32, k as u32)
                        }
                    })
                    .collect()
            })
            .collect())
    }
}

/// Runs the unit-pivot elimination on `U_r(y, z)`.
///
/// Each `1` of `U_r` is replaced by `y` or `z` when the row label is the
/// column label times that variable; columns divisible by `x^(A-1)` are moved
/// to the right. Then, while the top-left entry is `1`, the step
/// `M := M' - X Y` removes its row and column. Every tracked entry must stay a
/// single term; anything else is reported as a construction error.
pub fn symbolic_reduction(a: u32, b: u32, c: u32, r: u32) -> Result<SymbolicBlock> {
    check_mr_range(a, b, c, r)?;
    let spec = RingSpec::new(vec![a, b, c])?;
    let row_labels = graded_basis(&spec, r + 1);
    let (mut col_labels, tail): (Vec<Monomial>, Vec<Monomial>) = graded_basis(&spec, r)
        .into_iter()
        .partition(|m| m.exponents()[0] + 1 < a);
    let pivots = col_labels.len();
    col_labels.extend(tail);

    let mut rows = row_labels;
    let mut cols = col_labels;
    let mut m: Vec<Vec<BivariateTerm>> = rows
        .iter()
        .map(|row| {
            cols.iter()
                .map(|col| match col.step_to(row) {
                    Some(0) => BivariateTerm::new(BigInt::one(), 0, 0),
                    Some(1) => BivariateTerm::new(BigInt::one(), 1, 0),
                    Some(2) => BivariateTerm::new(BigInt::one(), 0, 1),
                    _ => BivariateTerm::zero(),
                })
                .collect()
        })
        .collect();

    for _ in 0..pivots {
        if m.is_empty() || !m[0][0].is_literal_one() {
            return Err(Error::Construction(format!(
                "expected a unit pivot at row {} / column {}, found {}",
                rows.first().map_or("-".into(), ToString::to_string),
                cols[0],
                m.first().map_or("nothing".into(), |r| r[0].to_string()),
            )));
        }
        let top: Vec<BivariateTerm> = m[0][1..].to_vec();
        let mut next = Vec::with_capacity(m.len() - 1);
        for (i, row) in m.iter().enumerate().skip(1) {
            let x = &row[0];
            let mut new_row = Vec::with_capacity(top.len());
            for (j, y) in top.iter().enumerate() {
                let entry = &row[j + 1];
                let updated = entry.sub(&(x * y)).ok_or_else(|| {
                    Error::Construction(format!(
                        "entry at {} / {} would stop being a single term: {} - ({})*({})",
                        rows[i],
                        cols[j + 1],
                        entry,
                        x,
                        y
                    ))
                })?;
                new_row.push(updated);
            }
            next.push(new_row);
        }
        m = next;
        rows.remove(0);
        cols.remove(0);
    }

    if let Some(bad) = rows.iter().find(|r| r.exponents()[0] != 0) {
        return Err(Error::Construction(format!(
            "row {bad} survived elimination but is divisible by x"
        )));
    }
    Ok(SymbolicBlock {
        row_labels: rows,
        col_labels: cols,
        entries: m,
    })
}
