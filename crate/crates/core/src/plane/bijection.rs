use std::collections::{BTreeMap, HashMap};

use super::{BoxSpec, HexGraph, Matching, PlanePartition};
use crate::error::{Error, Result};
use crate::ring::Monomial;

/// Position of a left vertex `x^p y^q z^s` of the hexagon graph in the
/// lozenge coordinates `(q - c, p + q - a - c + 1)`.
fn cell_of(bx: BoxSpec, mono: &Monomial) -> (i64, i64) {
    let e = mono.exponents();
    let (p, q) = (e[0] as i64, e[1] as i64);
    let (a, c) = (bx.a as i64, bx.c as i64);
    (q - c, p + q - a - c + 1)
}

fn monomial_at(bx: BoxSpec, (v1, v2): (i64, i64)) -> Option<Monomial> {
    let (a, c) = (bx.a as i64, bx.c as i64);
    let q = v1 + c;
    let p = v2 - v1 + a - 1;
    let s = bx.middle() as i64 - p - q;
    if p < 0 || q < 0 || s < 0 {
        return None;
    }
    let mono = Monomial::new(vec![p as u32, q as u32, s as u32]);
    bx.ring().contains(&mono).then_some(mono)
}

/// Matched edges of a plane partition as `(cell, variable)`: `x` edges are
/// the top faces, `z` and `y` edges the two kinds of side walls.
fn lozenges(p: &PlanePartition) -> Vec<((i64, i64), usize)> {
    let bx = p.bx();
    let mut out = Vec::new();
    for i in 0..bx.a {
        for j in 0..bx.b {
            let h = p.height(i, j) as i64;
            out.push(((i as i64 - h, j as i64 - h), 0));
        }
    }
    for j in 0..bx.b {
        for k in 0..bx.c {
            let depth = (0..bx.a).filter(|&i| p.height(i, j) > k).count() as i64;
            out.push(((depth - 1 - k as i64, j as i64 - k as i64), 2));
        }
    }
    for i in 0..bx.a {
        for k in 0..bx.c {
            let width = (0..bx.b).filter(|&j| p.height(i, j) > k).count() as i64;
            out.push(((i as i64 - k as i64 - 1, width - 1 - k as i64), 1));
        }
    }
    out
}

/// The perfect matching of the hexagon graph that corresponds to the lozenge
/// tiling of `p`. The empty partition matches `y`, `x`, `z`-type corners as
/// in the picture seen from above: every top face is an `x` edge.
pub fn pp_to_matching(g: &HexGraph, p: &PlanePartition) -> Result<Matching> {
    if p.bx() != g.bx {
        return Err(Error::Precondition(format!("partition in {} for a graph of {}", p.bx(), g.bx)));
    }
    let left: HashMap<&Monomial, usize> = g.left.iter().enumerate().map(|(i, m)| (m, i)).collect();
    let right: HashMap<&Monomial, usize> = g.right.iter().enumerate().map(|(i, m)| (m, i)).collect();
    let mut pairs = Vec::new();
    for (cell, v) in lozenges(p) {
        let mono = monomial_at(g.bx, cell)
            .ok_or_else(|| Error::Construction(format!("lozenge at {cell:?} is outside the hexagon")))?;
        let l = left[&mono];
        let r = *right
            .get(&mono.times_var(v))
            .ok_or_else(|| Error::Construction(format!("{mono} has no neighbour along variable {v}")))?;
        pairs.push((l, r));
    }
    pairs.sort_unstable();
    let m = Matching(pairs);
    g.check_perfect(&m).map_err(|e| Error::Construction(format!("tiling gave a bad matching: {e}")))?;
    Ok(m)
}

/// Inverse of [`pp_to_matching`]. The heights are read off the `x` edges and
/// the whole matching is then re-derived and compared.
pub fn matching_to_pp(g: &HexGraph, m: &Matching) -> Result<PlanePartition> {
    g.check_perfect(m)?;
    let bx = g.bx;
    let mut diagonals: BTreeMap<i64, Vec<i64>> = BTreeMap::new();
    for &(l, r) in &m.0 {
        if g.left[l].times_var(0) == g.right[r] {
            let (v1, v2) = cell_of(bx, &g.left[l]);
            diagonals.entry(v2 - v1).or_default().push(v1);
        }
    }
    let mut heights = vec![vec![0u32; bx.b as usize]; bx.a as usize];
    for i in 0..bx.a as i64 {
        for j in 0..bx.b as i64 {
            let d = j - i;
            let tops = diagonals.get_mut(&d).ok_or_else(|| {
                Error::NotPerfectMatching(format!("no top face on diagonal {d}"))
            })?;
            tops.sort_unstable();
            let first = i.min(j);
            let v1 = *tops.get(first as usize).ok_or_else(|| {
                Error::NotPerfectMatching(format!("too few top faces on diagonal {d}"))
            })?;
            let h = i - v1;
            if !(0..=bx.c as i64).contains(&h) {
                return Err(Error::NotPerfectMatching(format!("height {h} at ({i}, {j})")));
            }
            heights[i as usize][j as usize] = h as u32;
        }
    }
    let p = PlanePartition::from_heights(bx, &heights)
        .map_err(|_| Error::NotPerfectMatching(format!("heights {heights:?} are not a plane partition")))?;
    if pp_to_matching(g, &p)? != *m {
        return Err(Error::NotPerfectMatching(
            "matching is not the tiling of the partition it encodes".into(),
        ));
    }
    Ok(p)
}
