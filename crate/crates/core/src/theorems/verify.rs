use std::str::FromStr;

use num_bigint::BigInt;
use rayon::prelude::*;
use serde_json::json;

use super::{build_mr, build_multinomial_mr, symbolic_reduction, SymbolicBlock};
use crate::error::{Error, Result};
use crate::linalg::{snf, SnfResult};
use crate::report::{Case, VerificationReport};
use crate::ring::{hilbert_function, up_map_matrix, RingSpec};
use crate::wire::strings;

/// Which part of the Smith-form theorem to check.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SnfPart {
    /// Low degrees: every entry is 1.
    I,
    /// Non-unit entries agree with the binomial matrix.
    Ii,
    /// Non-units of lower degrees sit inside the middle one.
    Iii,
}

impl FromStr for SnfPart {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "i" | "1" => Ok(Self::I),
            "ii" | "2" => Ok(Self::Ii),
            "iii" | "3" => Ok(Self::Iii),
            _ => Err(Error::Parse(format!("unknown part {s:?}; expected i, ii or iii"))),
        }
    }
}

fn three_sorted(spec: &RingSpec) -> Result<(u32, u32, u32)> {
    match *spec.caps() {
        [a, b, c] if a >= b && b >= c => Ok((a, b, c)),
        _ => Err(Error::Precondition(format!(
            "expected three caps A >= B >= C, got {:?}",
            spec.caps()
        ))),
    }
}

/// Smith forms of `U_r` for every `r` in `range`, computed in parallel.
pub fn up_map_snfs(spec: &RingSpec, range: impl IntoIterator<Item = u32>) -> Result<Vec<(u32, SnfResult)>> {
    let rs: Vec<u32> = range.into_iter().collect();
    rs.into_par_iter()
        .map(|r| Ok((r, snf(&up_map_matrix(spec, r)?))))
        .collect()
}

pub fn verify_snf_theorem(part: SnfPart, spec: &RingSpec) -> Result<VerificationReport> {
    let (a, _, _) = three_sorted(spec)?;
    let e = spec.socle_degree();
    let caps = spec.caps().to_vec();
    let cases = match part {
        SnfPart::I => {
            let top = (a.saturating_sub(2)).min(e.saturating_sub(1));
            let rs: Vec<u32> = if a >= 2 && e > 0 { (0..=top).collect() } else { Vec::new() };
            up_map_snfs(spec, rs)?
                .into_iter()
                .map(|(r, s)| {
                    let ones = vec!["1".to_string(); s.entries.len()];
                    Case::compare(json!({ "r": r }), ones, strings(&s.entries))
                })
                .collect()
        }
        SnfPart::Ii => {
            let hi = spec.middle().unwrap_or(0);
            let rs: Vec<u32> = (a.saturating_sub(1)..=hi).filter(|_| e > 0).collect();
            rs.into_par_iter()
                .map(|r| -> Result<Case> {
                    let [a, b, c] = [caps[0], caps[1], caps[2]];
                    let expected = snf(&build_mr(a, b, c, r)?).non_units();
                    let actual = snf(&up_map_matrix(spec, r)?).non_units();
                    let bound = (r + 2 - a) as usize;
                    let passed = expected == actual && actual.len() <= bound;
                    Ok(Case::with_verdict(
                        json!({ "r": r }),
                        strings(&expected),
                        strings(&actual),
                        passed,
                    ))
                })
                .collect::<Result<Vec<_>>>()?
        }
        SnfPart::Iii => match spec.middle() {
            None => Vec::new(),
            Some(m) => {
                let h = hilbert_function(spec);
                let snfs = up_map_snfs(spec, 0..=m)?;
                let middle = &snfs[m as usize].1;
                snfs.iter()
                    .rev()
                    .map(|(r, s)| {
                        let shift = m - r;
                        let prefix = (h[m as usize] as usize).saturating_sub(shift as usize);
                        Case::compare(
                            json!({ "s": shift, "r": r }),
                            strings(&middle.non_units_in_prefix(prefix)),
                            strings(&s.non_units()),
                        )
                    })
                    .collect()
            }
        },
    };
    let name = match part {
        SnfPart::I => "snf-thm-i",
        SnfPart::Ii => "snf-thm-ii",
        SnfPart::Iii => "snf-thm-iii",
    };
    Ok(VerificationReport::new(name, json!({ "caps": caps }), cases))
}

/// Compares the eliminated block of `U_r(y, z)` with its closed form for
/// every `r` in the binomial-matrix range.
pub fn verify_symbolic(spec: &RingSpec) -> Result<VerificationReport> {
    let (a, b, c) = three_sorted(spec)?;
    let hi = spec.middle().unwrap_or(0);
    let rs: Vec<u32> = (a.saturating_sub(1)..=hi).filter(|_| spec.socle_degree() > 0).collect();
    let cases = rs
        .into_par_iter()
        .map(|r| {
            let render = |m: &[Vec<super::BivariateTerm>]| -> Vec<String> {
                m.iter().flatten().map(ToString::to_string).collect()
            };
            let expected = render(&SymbolicBlock::predicted(a, b, c, r)?);
            let case = match symbolic_reduction(a, b, c, r) {
                Ok(blk) => Case::compare(json!({ "r": r }), expected, render(&blk.entries)),
                Err(err) => Case::error(json!({ "r": r }), err.to_string()),
            };
            Ok(case)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(VerificationReport::new(
        "symbolic-reduction",
        json!({ "caps": spec.caps() }),
        cases,
    ))
}

/// Non-unit entries of `U_r` against the multinomial matrix, any number of
/// variables, for `A_1 - 1 <= r <= e / 2`.
pub fn verify_multinomial(spec: &RingSpec) -> Result<VerificationReport> {
    let caps = spec.caps();
    let a1 = caps[0];
    let e = spec.socle_degree();
    let rs: Vec<u32> = (a1.saturating_sub(1)..=e / 2).filter(|&r| r < e).collect();
    let cases = rs
        .into_par_iter()
        .map(|r| -> Result<Case> {
            let expected = snf(&build_multinomial_mr(caps, r)?).non_units();
            let actual = snf(&up_map_matrix(spec, r)?).non_units();
            Ok(Case::compare(json!({ "r": r }), strings(&expected), strings(&actual)))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(VerificationReport::new(
        "multinomial-reduction",
        json!({ "caps": caps }),
        cases,
    ))
}

/// True iff `small` is a sub-multiset of `big`; both in divisibility order.
pub fn is_submultiset(small: &[BigInt], big: &[BigInt]) -> bool {
    let mut big: Vec<&BigInt> = big.iter().collect();
    for x in small {
        match big.iter().position(|y| *y == x) {
            Some(i) => {
                big.swap_remove(i);
            }
            None => return false,
        }
    }
    true
}

/// For each `r` in `rs`, checks that the non-units of `U_r` form a
/// sub-multiset of those of `U_(r+1)`.
pub fn verify_containment(spec: &RingSpec, rs: impl IntoIterator<Item = u32>) -> Result<VerificationReport> {
    let rs: Vec<u32> = rs.into_iter().collect();
    let mut needed: Vec<u32> = rs.iter().flat_map(|&r| [r, r + 1]).collect();
    needed.sort_unstable();
    needed.dedup();
    let snfs = up_map_snfs(spec, needed)?;
    let find = |r: u32| &snfs.iter().find(|(q, _)| *q == r).expect("computed above").1;
    let cases = rs
        .iter()
        .map(|&r| {
            let lo = find(r).non_units();
            let hi = find(r + 1).non_units();
            let passed = is_submultiset(&lo, &hi);
            Case::with_verdict(json!({ "r": r }), strings(&lo), strings(&hi), passed)
        })
        .collect();
    Ok(VerificationReport::new(
        "non-unit-containment",
        json!({ "caps": spec.caps() }),
        cases,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spec(c: &[u32]) -> RingSpec {
        RingSpec::new(c.to_vec()).unwrap()
    }

    #[test]
    fn parts_on_444() {
        let s = spec(&[4, 4, 4]);
        let i = verify_snf_theorem(SnfPart::I, &s).unwrap();
        assert!(i.passed, "{}", i.summary());
        assert_eq!(i.cases.len(), 3);
        assert_eq!(i.cases[2].actual.len(), 6);

        let ii = verify_snf_theorem(SnfPart::Ii, &s).unwrap();
        assert!(ii.passed, "{}", ii.summary());
        assert_eq!(ii.cases[0].actual, ["2"]);
        assert_eq!(ii.cases[1].actual, ["2", "10"]);

        let iii = verify_snf_theorem(SnfPart::Iii, &s).unwrap();
        assert!(iii.passed, "{}", iii.summary());
        assert_eq!(iii.cases[1].expected, ["2"]);
    }

    #[test]
    fn symbolic_on_grid_corner() {
        let r = verify_symbolic(&spec(&[5, 4, 3])).unwrap();
        assert!(r.passed, "{}", r.summary());
    }

    #[test]
    fn part_parsing() {
        assert_eq!("ii".parse::<SnfPart>().unwrap(), SnfPart::Ii);
        assert!("iv".parse::<SnfPart>().is_err());
        assert!(verify_snf_theorem(SnfPart::I, &spec(&[3, 4, 4])).is_err());
    }

    #[test]
    fn submultisets() {
        let v = |xs: &[i64]| xs.iter().map(|&x| BigInt::from(x)).collect::<Vec<_>>();
        assert!(is_submultiset(&v(&[2]), &v(&[2, 10])));
        assert!(!is_submultiset(&v(&[2, 2]), &v(&[2, 10])));
    }
}
