//! Named verification sweeps. Each returns its reports in a fixed order, so a
//! run is reproducible from the suite name, the seed and the trial count.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::plane::{verify_bijection, verify_det_identity, BoxSpec, SymmetryClass};
use crate::report::{Case, VerificationReport};
use crate::ring::RingSpec;
use crate::schur::{
    inverse_lr_decompose, is_legal, is_legal_straight, jacobi_trudi, jacobi_trudi_formal,
    jacobi_trudi_value, lr_expand, partitions_with_parts, random_h, verify_toeplitz_lemma,
    HPolynomial, Partition, SkewShape,
};
use crate::theorems::{
    up_map_snfs, verify_containment, verify_multinomial, verify_snf_theorem, verify_symbolic, SnfPart,
};
use crate::wire::strings;

pub const DEFAULT_SEED: u64 = 42;
pub const DEFAULT_TRIALS: usize = 100;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    Thm1Grid,
    PpGrid,
    SymmetryGrid,
    ToeplitzRandom,
    LrSuite,
    SlowN5,
}

impl Suite {
    pub const ALL: [Suite; 6] = [
        Suite::Thm1Grid,
        Suite::PpGrid,
        Suite::SymmetryGrid,
        Suite::ToeplitzRandom,
        Suite::LrSuite,
        Suite::SlowN5,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            Suite::Thm1Grid => "thm1-grid",
            Suite::PpGrid => "pp-grid",
            Suite::SymmetryGrid => "symmetry-grid",
            Suite::ToeplitzRandom => "toeplitz-random",
            Suite::LrSuite => "lr-suite",
            Suite::SlowN5 => "slow-n5",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown suite {s:?}")))
    }
}

#[derive(Clone, Copy, Debug)]
pub struct SuiteConfig {
    pub seed: u64,
    pub trials: usize,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        Self {
            seed: DEFAULT_SEED,
            trials: DEFAULT_TRIALS,
        }
    }
}

pub fn run_suite(suite: Suite, cfg: &SuiteConfig) -> Result<Vec<VerificationReport>> {
    match suite {
        Suite::Thm1Grid => thm1_grid(),
        Suite::PpGrid => pp_grid(),
        Suite::SymmetryGrid => symmetry_grid(),
        Suite::ToeplitzRandom => toeplitz_random(cfg.seed, cfg.trials),
        Suite::LrSuite => lr_suite(cfg.seed),
        Suite::SlowN5 => slow_n5(),
    }
}

/// Caps `A >= B >= C` with entries in `1..=max`.
pub fn sorted_caps(max: u32) -> Vec<[u32; 3]> {
    let mut out = Vec::new();
    for a in 1..=max {
        for b in 1..=a {
            for c in 1..=b {
                out.push([a, b, c]);
            }
        }
    }
    out
}

/// Smith-form theorem parts i, ii, iii and the symbolic reduction for every
/// `A >= B >= C` in `[1, 5]`.
pub fn thm1_grid() -> Result<Vec<VerificationReport>> {
    let per_caps: Vec<Vec<VerificationReport>> = sorted_caps(5)
        .into_par_iter()
        .map(|caps| {
            let spec = RingSpec::new(caps.to_vec())?;
            Ok(vec![
                verify_snf_theorem(SnfPart::I, &spec)?,
                verify_snf_theorem(SnfPart::Ii, &spec)?,
                verify_snf_theorem(SnfPart::Iii, &spec)?,
                verify_symbolic(&spec)?,
            ])
        })
        .collect::<Result<_>>()?;
    let mut out: Vec<VerificationReport> = per_caps.into_iter().flatten().collect();
    out.sort_by_key(|r| r.theorem.clone());
    Ok(out)
}

fn boxes(max: u32) -> Vec<BoxSpec> {
    let mut out = Vec::new();
    for a in 1..=max {
        for b in 1..=max {
            for c in 1..=max {
                out.push(BoxSpec { a, b, c });
            }
        }
    }
    out
}

/// `|det U_m| = perm U_m = MacMahon = order ideals` for boxes up to 3, and
/// the matching bijection for boxes up to 2.
pub fn pp_grid() -> Result<Vec<VerificationReport>> {
    let mut out: Vec<VerificationReport> = boxes(3)
        .into_par_iter()
        .map(|bx| verify_det_identity(bx, SymmetryClass::PP))
        .collect::<Result<_>>()?;
    out.extend(
        boxes(2)
            .into_par_iter()
            .map(verify_bijection)
            .collect::<Result<Vec<_>>>()?,
    );
    Ok(out)
}

/// The restricted determinants against brute-force class counts.
pub fn symmetry_grid() -> Result<Vec<VerificationReport>> {
    let cases = [
        (BoxSpec { a: 1, b: 1, c: 1 }, SymmetryClass::CSPP),
        (BoxSpec { a: 2, b: 2, c: 2 }, SymmetryClass::CSPP),
        (BoxSpec { a: 3, b: 3, c: 3 }, SymmetryClass::CSPP),
        (BoxSpec { a: 1, b: 1, c: 2 }, SymmetryClass::TCPP),
        (BoxSpec { a: 2, b: 2, c: 1 }, SymmetryClass::TCPP),
        (BoxSpec { a: 2, b: 2, c: 2 }, SymmetryClass::TCPP),
        (BoxSpec { a: 2, b: 2, c: 2 }, SymmetryClass::CSTCPP),
    ];
    cases
        .into_par_iter()
        .map(|(bx, cls)| verify_det_identity(bx, cls))
        .collect()
}

/// Random integer Toeplitz matrices with `n <= 10` and entries in `[-20, 20]`.
pub fn toeplitz_random(seed: u64, trials: usize) -> Result<Vec<VerificationReport>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let hs: Vec<Vec<BigInt>> = (0..trials).map(|_| random_h(&mut rng, 10, 20)).collect();
    hs.into_par_iter()
        .enumerate()
        .map(|(t, h)| {
            let mut r = verify_toeplitz_lemma(&h)?;
            r.params.insert("trial".into(), json!(t));
            r.params.insert("seed".into(), json!(seed));
            Ok(r)
        })
        .collect()
}

fn shape(outer: &[u32], inner: &[u32]) -> SkewShape {
    SkewShape::from_parts(outer, inner).expect("literal shape")
}

/// `S_(5,3)/(1,0) = S_(5,2) + S_(4,3)`, both from the LR rule and as
/// Jacobi-Trudi determinants.
pub fn lr_figure() -> VerificationReport {
    let skew = shape(&[5, 3], &[1]);
    let expansion: Vec<String> = lr_expand(&skew)
        .iter()
        .rev()
        .map(|(p, m)| format!("{m}*{p}"))
        .collect();
    let rhs = &jacobi_trudi_formal(&shape(&[5, 2], &[])) + &jacobi_trudi_formal(&shape(&[4, 3], &[]));
    let cases = vec![
        Case::compare(
            json!({"check": "lr expansion"}),
            vec!["1*(5,2)".into(), "1*(4,3)".into()],
            expansion,
        ),
        Case::compare(
            json!({"check": "jacobi-trudi"}),
            vec![rhs.to_string()],
            vec![jacobi_trudi_formal(&skew).to_string()],
        ),
    ];
    VerificationReport::new("lr-figure", json!({"shape": skew.to_string()}), cases)
}

/// Every skew shape `lambda / mu` with `lambda` of exactly `k` parts.
pub fn skew_shapes(k: usize, max_part: u32) -> Vec<SkewShape> {
    let mut out = Vec::new();
    for lam in partitions_with_parts(k, max_part) {
        let mut inners = vec![Vec::new()];
        for i in 0..k {
            let cap = lam.part(i);
            inners = inners
                .into_iter()
                .flat_map(|mu: Vec<u32>| {
                    let top = mu.last().copied().unwrap_or(cap).min(cap);
                    (0..=top).map(move |x| {
                        let mut v = mu.clone();
                        v.push(x);
                        v
                    })
                })
                .collect();
        }
        for mu in inners {
            out.push(shape(lam.parts(), &mu));
        }
    }
    out
}

/// Jacobi-Trudi against the LR expansion for every skew shape with
/// `lambda_1 <= max_part` and at most `max_rows` rows. Indices up to `n` are
/// allowed; larger shapes are compared as formal determinants.
pub fn jt_vs_lr(max_part: u32, max_rows: usize, n: u32) -> VerificationReport {
    let cases = (1..=max_rows)
        .into_par_iter()
        .map(|k| {
            let shapes = skew_shapes(k, max_part);
            let mismatches: Vec<String> = shapes
                .par_iter()
                .filter_map(|s| {
                    let lhs = jacobi_trudi_formal(s);
                    let mut rhs = HPolynomial::zero();
                    for (nu, m) in lr_expand(s) {
                        rhs = &rhs + &jacobi_trudi_formal(&SkewShape::straight(nu)).scale(&BigInt::from(m));
                    }
                    (lhs != rhs).then(|| s.to_string())
                })
                .collect();
            let bounded = shapes.iter().filter(|s| jacobi_trudi(s, n).is_ok()).count();
            Case::compare(json!({"k": k}), Vec::new(), mismatches).note(format!(
                "{} shapes, {bounded} with all indices <= {n}",
                shapes.len()
            ))
        })
        .collect();
    VerificationReport::new(
        "jt-vs-lr",
        json!({"max_part": max_part, "max_rows": max_rows, "n": n}),
        cases,
    )
}

fn det2(a: [i64; 4]) -> HPolynomial {
    HPolynomial::index_determinant(&[vec![a[0], a[1]], vec![a[2], a[3]]])
}

/// `|h6 h7; h1 h2| = |h5 h7; h1 h3| - |h5 h6; h2 h3|` as polynomials.
pub fn minor_identity() -> VerificationReport {
    let lhs = det2([6, 7, 1, 2]);
    let rhs = &det2([5, 7, 1, 3]) - &det2([5, 6, 2, 3]);
    VerificationReport::new(
        "toeplitz-minor-identity",
        json!({"n": 7}),
        vec![Case::compare(json!({}), vec![lhs.to_string()], vec![rhs.to_string()])],
    )
}

/// Inverse LR decomposition of every `(k, k)`-legal `nu` for `n <= max_n` and
/// `k <= c <= n/2`. Up to `formal_max_n` the two sides are compared as
/// polynomials, above it at five random integer points.
pub fn inverse_lr_sweep(max_n: usize, formal_max_n: usize, seed: u64) -> VerificationReport {
    let mut jobs = Vec::new();
    for n in 2..=max_n {
        for c in 1..=n / 2 {
            for k in 1..=c {
                for nu in partitions_with_parts(k, (n - k + 1) as u32) {
                    if is_legal_straight(&nu, k, k, n) {
                        jobs.push((n, c, k, nu));
                    }
                }
            }
        }
    }
    let cases = jobs
        .into_par_iter()
        .enumerate()
        .map(|(idx, (n, c, k, nu))| inverse_case(n, c, k, &nu, n <= formal_max_n, seed.wrapping_add(idx as u64)))
        .collect();
    VerificationReport::new(
        "inverse-lr",
        json!({"max_n": max_n, "formal_max_n": formal_max_n, "seed": seed}),
        cases,
    )
}

fn inverse_case(n: usize, c: usize, k: usize, nu: &Partition, formal: bool, seed: u64) -> Case {
    let params = json!({"n": n, "c": c, "k": k, "nu": nu.to_string()});
    let combo = match inverse_lr_decompose(nu, k, c, n) {
        Ok(x) => x,
        Err(e) => return Case::error(params, e.to_string()),
    };
    let legal = combo
        .terms
        .iter()
        .all(|(s, _)| is_legal(s, k, c, n).unwrap_or(false));
    let straight = SkewShape::straight(nu.clone());
    let (expected, actual) = if formal {
        let lhs = jacobi_trudi(&straight, n as u32).map(|p| p.to_string());
        let rhs = combo.polynomial(n as u32).map(|p| p.to_string());
        match (lhs, rhs) {
            (Ok(l), Ok(r)) => (vec![l], vec![r]),
            (Err(e), _) | (_, Err(e)) => return Case::error(params, e.to_string()),
        }
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut exp = Vec::new();
        let mut act = Vec::new();
        for _ in 0..5 {
            let values: Vec<BigInt> = (0..n).map(|_| BigInt::from(rng.gen_range(-50i64..=50))).collect();
            match (jacobi_trudi_value(&straight, &values), combo.evaluate(&values)) {
                (Ok(l), Ok(r)) => {
                    exp.push(l.to_string());
                    act.push(r.to_string());
                }
                (Err(e), _) | (_, Err(e)) => return Case::error(params, e.to_string()),
            }
        }
        (exp, act)
    };
    let passed = legal && expected == actual;
    let note = if legal {
        combo.to_string()
    } else {
        format!("not all terms are ({k},{c})-legal: {combo}")
    };
    Case::with_verdict(params, expected, actual, passed).note(note)
}

pub fn lr_suite(seed: u64) -> Result<Vec<VerificationReport>> {
    Ok(vec![
        lr_figure(),
        jt_vs_lr(6, 4, 8),
        minor_identity(),
        inverse_lr_sweep(8, 6, seed),
    ])
}

fn membership(params: Value, value: u32, list: &[BigInt], expected: bool) -> Case {
    let found = list.contains(&BigInt::from(value));
    Case::with_verdict(params, vec![expected.to_string()], vec![found.to_string()], found == expected)
        .note(format!("non-units {:?}", strings(list)))
}

/// Five variables, caps all 4: 70 is a Smith entry of `U_6` but not `U_7`,
/// so the non-units do not grow monotonically. Four variables, caps all 4:
/// they do, and the multinomial matrix predicts them.
pub fn slow_n5() -> Result<Vec<VerificationReport>> {
    let five = RingSpec::new(vec![4; 5])?;
    let snfs = up_map_snfs(&five, [6, 7])?;
    let u6 = snfs[0].1.non_units();
    let u7 = snfs[1].1.non_units();
    let cases = vec![
        membership(json!({"r": 6, "entry": 70}), 70, &u6, true),
        membership(json!({"r": 7, "entry": 70}), 70, &u7, false),
    ];
    let n5 = VerificationReport::new("n5-counterexample", json!({"caps": five.caps()}), cases);
    let four = RingSpec::new(vec![4; 4])?;
    let top = four.middle().unwrap_or(0);
    Ok(vec![
        n5,
        verify_containment(&four, 0..=top)?,
        verify_multinomial(&four)?,
    ])
}
