use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use super::{graded_basis, Monomial, RingSpec};
use crate::error::{Error, Result};
use crate::linalg::ExactMatrix;

/// Which permutations of `x, y, z` act.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ActionKind {
    /// `x -> y -> z -> x`; needs `A = B = C`.
    Cycle3,
    /// `y <-> z`; needs `B = C`.
    SwapYz,
    /// Both of the above, i.e. all of `S_3`; needs `A = B = C`.
    /// With [`Sign::Minus`] the basis is cyclically invariant and
    /// anti-invariant under the swap.
    CycleSwap,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Sign {
    Plus,
    Minus,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GroupAction {
    pub kind: ActionKind,
    pub sign: Sign,
}

impl GroupAction {
    pub const fn new(kind: ActionKind, sign: Sign) -> Self {
        Self { kind, sign }
    }

    pub fn check(&self, spec: &RingSpec) -> Result<()> {
        let c = spec.caps();
        if c.len() != 3 {
            return Err(Error::Constraint(format!("{self} acts on three variables only")));
        }
        let ok = match self.kind {
            ActionKind::Cycle3 | ActionKind::CycleSwap => c[0] == c[1] && c[1] == c[2],
            ActionKind::SwapYz => c[1] == c[2],
        };
        if !ok {
            return Err(Error::Constraint(format!("{self} is not defined for caps {c:?}")));
        }
        if self.kind == ActionKind::Cycle3 && self.sign == Sign::Minus {
            return Err(Error::Constraint(
                "the cyclic group of order 3 has no integral sign character".into(),
            ));
        }
        Ok(())
    }

    /// Group elements as variable permutations with their character value.
    fn elements(&self) -> Vec<([usize; 3], i64)> {
        let odd = match self.sign {
            Sign::Plus => 1,
            Sign::Minus => -1,
        };
        match self.kind {
            ActionKind::Cycle3 => vec![([0, 1, 2], 1), ([1, 2, 0], 1), ([2, 0, 1], 1)],
            ActionKind::SwapYz => vec![([0, 1, 2], 1), ([0, 2, 1], odd)],
            ActionKind::CycleSwap => vec![
                ([0, 1, 2], 1),
                ([1, 2, 0], 1),
                ([2, 0, 1], 1),
                ([0, 2, 1], odd),
                ([2, 1, 0], odd),
                ([1, 0, 2], odd),
            ],
        }
    }
}

impl fmt::Display for GroupAction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let k = match self.kind {
            ActionKind::Cycle3 => "cycle3",
            ActionKind::SwapYz => "swap_yz",
            ActionKind::CycleSwap => "cycle_swap",
        };
        let s = match self.sign {
            Sign::Plus => "plus",
            Sign::Minus => "minus",
        };
        write!(f, "{k}/{s}")
    }
}

/// Parses `cycle3/plus`, `swap_yz/minus`, `cycle_swap/minus`.
impl FromStr for GroupAction {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (k, sg) = s
            .split_once('/')
            .ok_or_else(|| Error::Parse(format!("expected KIND/SIGN, got {s:?}")))?;
        let kind = match k {
            "cycle3" => ActionKind::Cycle3,
            "swap_yz" => ActionKind::SwapYz,
            "cycle_swap" => ActionKind::CycleSwap,
            _ => return Err(Error::Parse(format!("unknown action {k:?}"))),
        };
        let sign = match sg {
            "plus" => Sign::Plus,
            "minus" => Sign::Minus,
            _ => return Err(Error::Parse(format!("unknown sign {sg:?}"))),
        };
        Ok(Self { kind, sign })
    }
}

/// A signed orbit sum. The representative is the largest monomial of its
/// orbit and always carries coefficient `+1`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SignedBasisElement {
    pub orbit: Monomial,
    pub terms: Vec<(Monomial, i64)>,
}

impl fmt::Display for SignedBasisElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, (m, c)) in self.terms.iter().enumerate() {
            match (k, *c) {
                (0, 1) => write!(f, "{m}")?,
                (0, _) => write!(f, "-{m}")?,
                (_, 1) => write!(f, " + {m}")?,
                _ => write!(f, " - {m}")?,
            }
        }
        Ok(())
    }
}

/// Basis of the (anti-)invariant part of the degree-`r` component, ordered by
/// decreasing representative. Orbits on which the character does not vanish
/// contribute one element each.
pub fn invariant_basis(
    spec: &RingSpec,
    r: u32,
    action: GroupAction,
) -> Result<Vec<SignedBasisElement>> {
    action.check(spec)?;
    let group = action.elements();
    let mut out = Vec::new();
    for mono in graded_basis(spec, r) {
        let mut terms: BTreeMap<Monomial, i64> = BTreeMap::new();
        for (perm, chi) in &group {
            *terms.entry(mono.permute(perm)).or_default() += chi;
        }
        if terms.keys().next_back() != Some(&mono) {
            continue;
        }
        let content = terms.values().fold(0i64, |g, &c| num_integer::gcd(g, c));
        if content == 0 {
            continue;
        }
        let terms: Vec<(Monomial, i64)> = terms
            .into_iter()
            .rev()
            .filter(|(_, c)| *c != 0)
            .map(|(m, c)| (m, c / content))
            .collect();
        debug_assert_eq!(terms[0], (mono.clone(), 1));
        out.push(SignedBasisElement { orbit: mono, terms });
    }
    Ok(out)
}

/// Multiplication by `x + y + z` from degree `r` to `r + 1` written in the
/// signed bases of [`invariant_basis`]. Rows are indexed by degree `r + 1`.
pub fn restricted_up_map(spec: &RingSpec, r: u32, action: GroupAction) -> Result<ExactMatrix> {
    let e = spec.socle_degree();
    if r >= e {
        return Err(Error::Dimension(format!(
            "up-map from degree {r} needs r < e = {e}"
        )));
    }
    let source = invariant_basis(spec, r, action)?;
    let target = invariant_basis(spec, r + 1, action)?;
    let mut m = ExactMatrix::zeros(target.len(), source.len());
    for (j, s) in source.iter().enumerate() {
        let image = multiply_by_sum(spec, &s.terms);
        let mut rest = image.clone();
        for (i, t) in target.iter().enumerate() {
            let coeff = image.get(&t.orbit).copied().unwrap_or(0);
            if coeff == 0 {
                continue;
            }
            m[(i, j)] = BigInt::from(coeff);
            for (mono, c) in &t.terms {
                *rest.entry(mono.clone()).or_default() -= coeff * c;
            }
        }
        if rest.values().any(|&c| c != 0) {
            return Err(Error::Construction(format!(
                "image of {s} is not in the span of the degree-{} basis",
                r + 1
            )));
        }
    }
    Ok(m)
}

fn multiply_by_sum(spec: &RingSpec, terms: &[(Monomial, i64)]) -> BTreeMap<Monomial, i64> {
    let mut out = BTreeMap::new();
    for (mono, c) in terms {
        for v in 0..spec.nvars() {
            let t = mono.times_var(v);
            if spec.contains(&t) {
                *out.entry(t).or_default() += c;
            }
        }
    }
    out.retain(|_, c| *c != 0);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    const CYC: GroupAction = GroupAction::new(ActionKind::Cycle3, Sign::Plus);
    const TAU_MINUS: GroupAction = GroupAction::new(ActionKind::SwapYz, Sign::Minus);

    fn spec(c: &[u32]) -> RingSpec {
        RingSpec::new(c.to_vec()).unwrap()
    }

    fn shown(b: &[SignedBasisElement]) -> Vec<String> {
        b.iter().map(ToString::to_string).collect()
    }

    #[test]
    fn cyclic_bases() {
        assert_eq!(shown(&invariant_basis(&spec(&[2, 2, 2]), 1, CYC).unwrap()), ["x + y + z"]);
        assert_eq!(shown(&invariant_basis(&spec(&[2, 2, 2]), 2, CYC).unwrap()), ["xy + xz + yz"]);
        let fixed = invariant_basis(&spec(&[3, 3, 3]), 3, CYC).unwrap();
        assert!(fixed.iter().any(|b| b.terms.len() == 1));
    }

    #[test]
    fn swap_bases() {
        assert_eq!(
            shown(&invariant_basis(&spec(&[2, 3, 3]), 2, TAU_MINUS).unwrap()),
            ["xy - xz", "y^2 - z^2"]
        );
        let plus = invariant_basis(&spec(&[2, 3, 3]), 2, GroupAction::new(ActionKind::SwapYz, Sign::Plus));
        assert_eq!(shown(&plus.unwrap()), ["xy + xz", "y^2 + z^2", "yz"]);
    }

    #[test]
    fn restricted_maps() {
        assert_eq!(
            restricted_up_map(&spec(&[2, 2, 2]), 1, CYC).unwrap(),
            ExactMatrix::from_rows(&[vec![2]])
        );
        assert_eq!(
            restricted_up_map(&spec(&[2, 3, 3]), 2, TAU_MINUS).unwrap(),
            ExactMatrix::from_rows(&[vec![1, 1], vec![0, 1]])
        );
    }

    #[test]
    fn constraints() {
        assert!(matches!(
            invariant_basis(&spec(&[2, 2, 3]), 1, CYC),
            Err(Error::Constraint(_))
        ));
        assert!(invariant_basis(&spec(&[2, 3, 2]), 1, TAU_MINUS).is_err());
        let bad = GroupAction::new(ActionKind::Cycle3, Sign::Minus);
        assert!(invariant_basis(&spec(&[2, 2, 2]), 1, bad).is_err());
        assert_eq!("swap_yz/minus".parse::<GroupAction>().unwrap(), TAU_MINUS);
        assert!("swap/minus".parse::<GroupAction>().is_err());
    }
}
