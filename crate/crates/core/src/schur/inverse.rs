use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::Serialize;

use super::{is_legal, is_legal_straight, jacobi_trudi, jacobi_trudi_value, lr_expand, spread_of};
use super::{HPolynomial, Partition, SkewShape};
use crate::error::{Error, Result};

/// Integer combination of skew shapes, ordered by decreasing shape.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShapeCombination {
    pub terms: Vec<(SkewShape, BigInt)>,
}

/// Serializes as `[{"shape": {...}, "coeff": "decimal"}, ...]`.
impl Serialize for ShapeCombination {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Term<'a> {
            shape: &'a SkewShape,
            coeff: String,
        }
        s.collect_seq(self.terms.iter().map(|(shape, c)| Term {
            shape,
            coeff: c.to_string(),
        }))
    }
}

impl ShapeCombination {
    /// `sum c_i S_(s_i)` as a polynomial in `h_1..h_n`.
    pub fn polynomial(&self, n: u32) -> Result<HPolynomial> {
        let mut total = HPolynomial::zero();
        for (s, c) in &self.terms {
            total = &total + &jacobi_trudi(s, n)?.scale(c);
        }
        Ok(total)
    }

    /// `sum c_i S_(s_i)` at `h_j = values[j - 1]`.
    pub fn evaluate(&self, values: &[BigInt]) -> Result<BigInt> {
        let mut total = BigInt::zero();
        for (s, c) in &self.terms {
            total += jacobi_trudi_value(s, values)? * c;
        }
        Ok(total)
    }
}

impl std::fmt::Display for ShapeCombination {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (s, c)) in self.terms.iter().enumerate() {
            let neg = c < &BigInt::zero();
            let mag = if neg { -c } else { c.clone() };
            match (i, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            write!(f, "{mag}*[{s}]")?;
        }
        Ok(())
    }
}

/// One step of the inverse Littlewood-Richardson construction.
///
/// For a `(k, k)`-legal `nu` whose spread is too large for `A_c`, the excess
/// `nu_i - nu_k - d` (with `d = n - c - k + 1`) is cut off each row, the
/// removed pieces are rotated by 180 degrees and placed as the inner shape,
/// and everything is shifted right by `w = nu_1 - nu_k - d`. The result is
/// checked: it must be `(k, c)`-legal, its LR expansion must contain `nu`
/// exactly once, and every other term must be `(k, k)`-legal with strictly
/// smaller spread.
pub fn inverse_lr_step(nu: &Partition, k: usize, c: usize, n: usize) -> Result<SkewShape> {
    Ok(step(nu, k, c, n)?.0)
}

fn step(nu: &Partition, k: usize, c: usize, n: usize) -> Result<(SkewShape, BTreeMap<Partition, u64>)> {
    if !is_legal_straight(nu, k, k, n) {
        return Err(Error::Precondition(format!("{nu} is not ({k},{k})-legal for n = {n}")));
    }
    if is_legal_straight(nu, k, c, n) {
        return Err(Error::Precondition(format!(
            "{nu} is already ({k},{c})-legal; nothing to rewrite"
        )));
    }
    let d = n as i64 - c as i64 - k as i64 + 1;
    if d < 0 {
        return Err(Error::Precondition(format!("need c <= n - k + 1, got c = {c}, k = {k}, n = {n}")));
    }
    let nu_i = |i: usize| nu.part(i) as i64;
    let w = nu_i(0) - nu_i(k - 1) - d;
    let excess: Vec<i64> = (0..k).map(|i| (nu_i(i) - nu_i(k - 1) - d).max(0)).collect();
    let mu: Vec<u32> = (0..k).map(|i| (w - excess[k - 1 - i]) as u32).collect();
    let lam: Vec<u32> = (0..k)
        .map(|i| (w + nu_i(i).min(nu_i(k - 1) + d)) as u32)
        .collect();
    let shape = SkewShape::from_parts(&lam, &mu)
        .map_err(|e| Error::Construction(format!("step for {nu}: {e}")))?;

    if !is_legal(&shape, k, c, n)? {
        return Err(Error::Construction(format!(
            "step for {nu} produced {shape}, which is not ({k},{c})-legal"
        )));
    }
    let expansion = lr_expand(&shape);
    if expansion.get(nu) != Some(&1) {
        return Err(Error::Construction(format!(
            "{nu} occurs {} times in the expansion of {shape}",
            expansion.get(nu).copied().unwrap_or(0)
        )));
    }
    let target = spread_of(nu, k)?;
    for pi in expansion.keys().filter(|p| *p != nu) {
        let smaller = spread_of(pi, k).is_ok_and(|s| s < target);
        if !smaller || !is_legal_straight(pi, k, k, n) {
            return Err(Error::Construction(format!(
                "expansion of {shape} contains {pi}, which is not a ({k},{k})-legal term of smaller spread than {nu}"
            )));
        }
    }
    Ok((shape, expansion))
}

/// Writes the Schur polynomial of a `(k, k)`-legal `nu` as an integer
/// combination of `(k, c)`-legal skew Schur polynomials, by repeated
/// [`inverse_lr_step`] on the term of largest spread.
pub fn inverse_lr_decompose(nu: &Partition, k: usize, c: usize, n: usize) -> Result<ShapeCombination> {
    if !(k <= c && 2 * c <= n) {
        return Err(Error::Precondition(format!("need k <= c <= n/2, got k = {k}, c = {c}, n = {n}")));
    }
    if !is_legal_straight(nu, k, k, n) {
        return Err(Error::Precondition(format!("{nu} is not ({k},{k})-legal for n = {n}")));
    }
    let mut pending: BTreeMap<Partition, BigInt> = BTreeMap::from([(nu.clone(), BigInt::one())]);
    let mut result: BTreeMap<SkewShape, BigInt> = BTreeMap::new();
    loop {
        pending.retain(|_, v| !v.is_zero());
        let Some(p) = pending
            .keys()
            .max_by_key(|p| spread_of(p, k).expect("pending terms have k parts"))
            .cloned()
        else {
            break;
        };
        let coeff = pending.remove(&p).expect("key just found");
        if is_legal_straight(&p, k, c, n) {
            *result.entry(SkewShape::straight(p)).or_default() += coeff;
            continue;
        }
        let (shape, expansion) = step(&p, k, c, n)?;
        *result.entry(shape).or_default() += &coeff;
        for (pi, mult) in expansion {
            if pi != p {
                *pending.entry(pi).or_default() -= &coeff * mult;
            }
        }
    }
    Ok(ShapeCombination {
        terms: result
            .into_iter()
            .rev()
            .filter(|(_, c)| !c.is_zero())
            .collect(),
    })
}
