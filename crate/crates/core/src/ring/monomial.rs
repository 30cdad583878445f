use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Exponent vector of a monomial. Serializes as a plain array.
///
/// The derived order is lexicographic with earlier variables dominating, so
/// `x^3y > x^2y^2` in three variables.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn new(exponents: Vec<u32>) -> Self {
        Self(exponents)
    }

    pub fn one(n: usize) -> Self {
        Self(vec![0; n])
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    /// `self * x_i`
    pub fn times_var(&self, i: usize) -> Self {
        let mut e = self.0.clone();
        e[i] += 1;
        Self(e)
    }

    pub fn divides(&self, other: &Self) -> bool {
        self.0.len() == other.0.len() && self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// The variable index `i` with `other = self * x_i`, if any.
    pub fn step_to(&self, other: &Self) -> Option<usize> {
        if !self.divides(other) || other.degree() != self.degree() + 1 {
            return None;
        }
        self.0.iter().zip(&other.0).position(|(a, b)| a != b)
    }

    /// Applies a permutation of variables: exponent of variable `i` moves to
    /// variable `perm[i]`.
    pub fn permute(&self, perm: &[usize]) -> Self {
        let mut e = vec![0; self.0.len()];
        for (i, &p) in perm.iter().enumerate() {
            e[p] = self.0[i];
        }
        Self(e)
    }
}

impl From<Vec<u32>> for Monomial {
    fn from(e: Vec<u32>) -> Self {
        Self(e)
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// `x^2yz` for up to three variables, `x1^2*x3` beyond.
impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.degree() == 0 {
            return write!(f, "1");
        }
        let named = self.0.len() <= 3;
        let mut first = true;
        for (i, &e) in self.0.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !named && !first {
                write!(f, "*")?;
            }
            first = false;
            if named {
                write!(f, "{}", ["x", "y", "z"][i])?;
            } else {
                write!(f, "x{}", i + 1)?;
            }
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

/// Exponent caps `(A_1, ..., A_n)` of `k[x_1..x_n] / (x_1^A_1, ..., x_n^A_n)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct RingSpec {
    caps: Vec<u32>,
}

impl RingSpec {
    pub fn new(caps: Vec<u32>) -> Result<Self> {
        if caps.is_empty() {
            return Err(Error::Precondition("a ring needs at least one variable".into()));
        }
        if caps.contains(&0) {
            return Err(Error::Precondition(format!("caps must be positive, got {caps:?}")));
        }
        Ok(Self { caps })
    }

    pub fn caps(&self) -> &[u32] {
        &self.caps
    }

    pub fn nvars(&self) -> usize {
        self.caps.len()
    }

    /// Socle degree `sum(A_i) - n`.
    pub fn socle_degree(&self) -> u32 {
        self.caps.iter().sum::<u32>() - self.caps.len() as u32
    }

    /// `floor((e - 1) / 2)`; `None` when `e = 0`.
    pub fn middle(&self) -> Option<u32> {
        let e = self.socle_degree();
        (e > 0).then(|| (e - 1) / 2)
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        m.nvars() == self.nvars() && m.exponents().iter().zip(&self.caps).all(|(e, a)| e < a)
    }

    /// Exponent-wise complement `A_i - 1 - e_i`.
    pub fn complement(&self, m: &Monomial) -> Monomial {
        Monomial(m.0.iter().zip(&self.caps).map(|(e, a)| a - 1 - e).collect())
    }
}

impl TryFrom<Vec<u32>> for RingSpec {
    type Error = Error;

    fn try_from(caps: Vec<u32>) -> Result<Self> {
        Self::new(caps)
    }
}

impl From<RingSpec> for Vec<u32> {
    fn from(s: RingSpec) -> Self {
        s.caps
    }
}
