use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::Serialize;

use super::BoxSpec;
use crate::error::{Error, Result};
use crate::linalg::ExactMatrix;
use crate::ring::{graded_basis, invariant_basis, ActionKind, GroupAction, Monomial, Sign};

/// Bipartite graph between degree-`m` monomials (left) and degree-`m + 1`
/// monomials (right), with edge multiplicities.
///
/// For a box this is the hexagon graph: left and right vertices are the two
/// kinds of triangles of the triangulated hexagon and edges join monomials
/// that divide one another. Quotient graphs reuse the type with orbit
/// representatives as vertices.
#[derive(Clone, Debug, Serialize)]
pub struct HexGraph {
    pub bx: BoxSpec,
    pub left: Vec<Monomial>,
    pub right: Vec<Monomial>,
    /// `(left index, right index, multiplicity)`, sorted.
    pub edges: Vec<(usize, usize, u32)>,
}

/// A perfect matching as `(left index, right index)` pairs sorted by the left
/// index.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Matching(pub Vec<(usize, usize)>);

impl HexGraph {
    /// Rows indexed by right vertices, columns by left vertices, entries the
    /// edge multiplicities.
    pub fn biadjacency(&self) -> ExactMatrix {
        let mut m = ExactMatrix::zeros(self.right.len(), self.left.len());
        for &(l, r, w) in &self.edges {
            m[(r, l)] = BigInt::from(w);
        }
        m
    }

    fn adjacency(&self) -> Vec<Vec<(usize, u32)>> {
        let mut adj = vec![Vec::new(); self.left.len()];
        for &(l, r, w) in &self.edges {
            adj[l].push((r, w));
        }
        adj
    }

    pub fn multiplicity(&self, l: usize, r: usize) -> u32 {
        self.edges
            .iter()
            .find(|&&(a, b, _)| a == l && b == r)
            .map_or(0, |e| e.2)
    }

    /// Edge multiplicities multiplied over the matching.
    pub fn weight(&self, m: &Matching) -> BigInt {
        m.0.iter().map(|&(l, r)| BigInt::from(self.multiplicity(l, r))).product()
    }

    /// Checks that `m` uses existing edges and covers every vertex once.
    pub fn check_perfect(&self, m: &Matching) -> Result<()> {
        if self.left.len() != self.right.len() || m.0.len() != self.left.len() {
            return Err(Error::NotPerfectMatching(format!(
                "{} pairs for {} + {} vertices",
                m.0.len(),
                self.left.len(),
                self.right.len()
            )));
        }
        let mut seen_l = vec![false; self.left.len()];
        let mut seen_r = vec![false; self.right.len()];
        for &(l, r) in &m.0 {
            if l >= self.left.len() || r >= self.right.len() || self.multiplicity(l, r) == 0 {
                return Err(Error::NotPerfectMatching(format!("({l}, {r}) is not an edge")));
            }
            if std::mem::replace(&mut seen_l[l], true) || std::mem::replace(&mut seen_r[r], true) {
                return Err(Error::NotPerfectMatching(format!("vertex used twice at ({l}, {r})")));
            }
        }
        Ok(())
    }

    /// Sign of the permutation `left -> right` of a perfect matching.
    pub fn sign(&self, m: &Matching) -> i32 {
        let n = m.0.len();
        let mut perm = vec![0; n];
        for &(l, r) in &m.0 {
            perm[l] = r;
        }
        let mut seen = vec![false; n];
        let mut sign = 1;
        for s in 0..n {
            if seen[s] {
                continue;
            }
            let mut len = 0;
            let mut x = s;
            while !seen[x] {
                seen[x] = true;
                x = perm[x];
                len += 1;
            }
            if len % 2 == 0 {
                sign = -sign;
            }
        }
        sign
    }

    /// Matching as pairs of monomials, for display and serialization.
    pub fn labelled(&self, m: &Matching) -> Vec<(Monomial, Monomial)> {
        m.0.iter()
            .map(|&(l, r)| (self.left[l].clone(), self.right[r].clone()))
            .collect()
    }
}

/// The hexagon graph of the box: `B_m` against `B_(m+1)` for the ring with
/// caps `(a + b, a + c, b + c)` and `m = a + b + c - 2`.
pub fn build_hex_graph(bx: BoxSpec) -> Result<HexGraph> {
    let spec = bx.ring();
    let caps_sum: u32 = spec.caps().iter().sum();
    if !caps_sum.is_multiple_of(2) {
        return Err(Error::Precondition(format!("A + B + C = {caps_sum} is odd")));
    }
    let m = bx.middle();
    let left = graded_basis(&spec, m);
    let right = graded_basis(&spec, m + 1);
    let index: HashMap<&Monomial, usize> = right.iter().enumerate().map(|(i, x)| (x, i)).collect();
    let mut edges = Vec::new();
    for (l, mono) in left.iter().enumerate() {
        for v in 0..3 {
            if let Some(&r) = index.get(&mono.times_var(v)) {
                edges.push((l, r, 1));
            }
        }
    }
    edges.sort_unstable();
    Ok(HexGraph {
        bx,
        left,
        right,
        edges,
    })
}

/// All perfect matchings in increasing order.
pub fn enumerate_matchings(g: &HexGraph) -> Vec<Matching> {
    let mut out = Vec::new();
    if g.left.len() != g.right.len() {
        return out;
    }
    let adj = g.adjacency();
    let mut used = vec![false; g.right.len()];
    let mut cur = Vec::with_capacity(g.left.len());
    search(&adj, 0, &mut used, &mut cur, &mut out);
    out
}

fn search(
    adj: &[Vec<(usize, u32)>],
    l: usize,
    used: &mut [bool],
    cur: &mut Vec<(usize, usize)>,
    out: &mut Vec<Matching>,
) {
    if l == adj.len() {
        out.push(Matching(cur.clone()));
        return;
    }
    for &(r, _) in &adj[l] {
        if !used[r] {
            used[r] = true;
            cur.push((l, r));
            search(adj, l + 1, used, cur, out);
            cur.pop();
            used[r] = false;
        }
    }
}

/// Number of perfect matchings counted with edge multiplicities.
pub fn weighted_matching_count(g: &HexGraph) -> BigInt {
    enumerate_matchings(g).iter().map(|m| g.weight(m)).sum()
}

/// Quotient of the hexagon graph by a group action.
///
/// For `cycle3` the vertices are orbits (named by their largest monomial) and
/// the multiplicity of an edge is the number of neighbours the left
/// representative has inside the right orbit. For `swap_yz` the vertices fixed
/// by the swap are deleted and the remaining orbits are joined when their
/// representatives are.
pub fn quotient_structures(bx: BoxSpec, action: GroupAction) -> Result<HexGraph> {
    let spec = bx.ring();
    let m = bx.middle();
    let (left, right) = match (action.kind, action.sign) {
        (ActionKind::Cycle3, Sign::Plus) | (ActionKind::SwapYz, Sign::Minus) => (
            invariant_basis(&spec, m, action)?,
            invariant_basis(&spec, m + 1, action)?,
        ),
        _ => {
            return Err(Error::Constraint(format!(
                "no quotient graph is defined for {action}"
            )))
        }
    };
    let left: Vec<Monomial> = left.into_iter().map(|e| e.orbit).collect();
    let right_orbits: Vec<Vec<Monomial>> = match action.kind {
        ActionKind::Cycle3 => right
            .iter()
            .map(|e| e.terms.iter().map(|(t, _)| t.clone()).collect())
            .collect(),
        _ => right.iter().map(|e| vec![e.orbit.clone()]).collect(),
    };
    let mut edges = Vec::new();
    for (l, rep) in left.iter().enumerate() {
        for (r, orbit) in right_orbits.iter().enumerate() {
            let w = (0..3).filter(|&v| orbit.contains(&rep.times_var(v))).count() as u32;
            if w > 0 {
                edges.push((l, r, w));
            }
        }
    }
    Ok(HexGraph {
        bx,
        left,
        right: right.into_iter().map(|e| e.orbit).collect(),
        edges,
    })
}

/// Total weight of all perfect matchings via the permanent of the biadjacency
/// matrix.
pub fn matching_count_by_permanent(g: &HexGraph) -> Result<BigInt> {
    if g.left.is_empty() && g.right.is_empty() {
        return Ok(BigInt::one());
    }
    if g.left.len() != g.right.len() {
        return Ok(BigInt::zero());
    }
    crate::linalg::permanent(&g.biadjacency())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{restricted_up_map, up_map_matrix};

    fn bx(a: u32, b: u32, c: u32) -> BoxSpec {
        BoxSpec::new(a, b, c).unwrap()
    }

    #[test]
    fn hexagon_graphs() {
        let g = build_hex_graph(bx(1, 1, 1)).unwrap();
        assert_eq!(g.edges.len(), 6);
        assert_eq!(enumerate_matchings(&g).len(), 2);
        let g = build_hex_graph(bx(2, 2, 1)).unwrap();
        assert_eq!(enumerate_matchings(&g).len(), 6);
        assert_eq!(matching_count_by_permanent(&g).unwrap(), BigInt::from(6));
        let g = build_hex_graph(bx(2, 2, 2)).unwrap();
        assert_eq!(g.biadjacency(), up_map_matrix(&bx(2, 2, 2).ring(), 4).unwrap());
        assert_eq!(enumerate_matchings(&g).len(), 20);
    }

    #[test]
    fn cyclic_quotient() {
        let act = GroupAction::new(ActionKind::Cycle3, Sign::Plus);
        let q = quotient_structures(bx(2, 2, 2), act).unwrap();
        assert_eq!(q.left.len() + q.right.len(), 8);
        let doubles: Vec<_> = q.edges.iter().filter(|e| e.2 == 2).collect();
        assert_eq!(doubles.len(), 1);
        let (l, r, _) = *doubles[0];
        assert_eq!((q.left[l].to_string(), q.right[r].to_string()), ("x^2yz".into(), "x^2y^2z".into()));
        assert_eq!(q.biadjacency(), restricted_up_map(&bx(2, 2, 2).ring(), 4, act).unwrap());
        assert_eq!(weighted_matching_count(&q), BigInt::from(5));

        let q = quotient_structures(bx(1, 1, 1), act).unwrap();
        assert_eq!(q.edges, vec![(0, 0, 2)]);
        assert_eq!(weighted_matching_count(&q), BigInt::from(2));
    }

    #[test]
    fn transpose_quotient() {
        let act = GroupAction::new(ActionKind::SwapYz, Sign::Minus);
        let q = quotient_structures(bx(2, 2, 2), act).unwrap();
        assert_eq!(q.biadjacency(), restricted_up_map(&bx(2, 2, 2).ring(), 4, act).unwrap());
        assert!(q.edges.iter().all(|e| e.2 == 1));
    }

    #[test]
    fn signs_and_checks() {
        let g = build_hex_graph(bx(1, 1, 1)).unwrap();
        let ms = enumerate_matchings(&g);
        assert!(ms.iter().all(|m| g.check_perfect(m).is_ok()));
        assert_eq!(g.sign(&ms[0]), g.sign(&ms[1]));
        assert!(g.check_perfect(&Matching(vec![(0, 0), (1, 0), (2, 2)])).is_err());
        assert!(g.check_perfect(&Matching(vec![(0, 2)])).is_err());
    }
}
