use std::collections::HashMap;

use num_bigint::BigInt;
use serde::Serialize;

use super::{Monomial, RingSpec};
use crate::error::{Error, Result};
use crate::linalg::ExactMatrix;

/// Monomials of degree `r` that survive in the ring, higher powers of earlier
/// variables first. Out-of-range degrees give an empty basis.
pub fn graded_basis(spec: &RingSpec, r: u32) -> Vec<Monomial> {
    let mut out = Vec::new();
    if r > spec.socle_degree() {
        return out;
    }
    let caps = spec.caps();
    // suffix[i] = largest degree reachable by variables i.. on their own
    let mut suffix = vec![0u32; caps.len() + 1];
    for i in (0..caps.len()).rev() {
        suffix[i] = suffix[i + 1] + caps[i] - 1;
    }
    let mut exps = vec![0u32; caps.len()];
    fill(caps, &suffix, 0, r, &mut exps, &mut out);
    out
}

fn fill(caps: &[u32], suffix: &[u32], i: usize, left: u32, exps: &mut [u32], out: &mut Vec<Monomial>) {
    if i + 1 == caps.len() {
        if left < caps[i] {
            exps[i] = left;
            out.push(Monomial::new(exps.to_vec()));
        }
        return;
    }
    let hi = left.min(caps[i] - 1);
    let lo = left.saturating_sub(suffix[i + 1]);
    for v in (lo..=hi).rev() {
        exps[i] = v;
        fill(caps, suffix, i + 1, left - v, exps, out);
    }
}

/// `h(0), ..., h(e)`: coefficients of `prod_i (1 + t + ... + t^(A_i - 1))`.
pub fn hilbert_function(spec: &RingSpec) -> Vec<u64> {
    let mut h = vec![1u64];
    for &a in spec.caps() {
        let mut next = vec![0u64; h.len() + a as usize - 1];
        for (d, &v) in h.iter().enumerate() {
            for s in 0..a as usize {
                next[d + s] += v;
            }
        }
        h = next;
    }
    h
}

/// Matrix of multiplication by `x_1 + ... + x_n` from degree `r` to `r + 1`
/// in the bases of [`graded_basis`]. Rows are indexed by degree `r + 1`.
pub fn up_map_matrix(spec: &RingSpec, r: u32) -> Result<ExactMatrix> {
    Ok(up_map(spec, r)?.matrix)
}

/// An up-map together with its row and column labels.
#[derive(Debug, Clone, Serialize)]
pub struct LabeledMatrix {
    pub row_labels: Vec<Monomial>,
    pub col_labels: Vec<Monomial>,
    pub matrix: ExactMatrix,
}

pub fn up_map(spec: &RingSpec, r: u32) -> Result<LabeledMatrix> {
    let e = spec.socle_degree();
    if r >= e {
        return Err(Error::Dimension(format!(
            "up-map from degree {r} needs r < e = {e}"
        )));
    }
    let cols = graded_basis(spec, r);
    let rows = graded_basis(spec, r + 1);
    let index: HashMap<&Monomial, usize> = rows.iter().enumerate().map(|(i, m)| (m, i)).collect();
    let mut matrix = ExactMatrix::zeros(rows.len(), cols.len());
    for (j, mono) in cols.iter().enumerate() {
        for v in 0..spec.nvars() {
            if let Some(&i) = index.get(&mono.times_var(v)) {
                matrix[(i, j)] = BigInt::from(1);
            }
        }
    }
    Ok(LabeledMatrix {
        row_labels: rows,
        col_labels: cols,
        matrix,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spec(c: &[u32]) -> RingSpec {
        RingSpec::new(c.to_vec()).unwrap()
    }

    fn names(b: &[Monomial]) -> Vec<String> {
        b.iter().map(ToString::to_string).collect()
    }

    #[test]
    fn basis_order() {
        assert_eq!(
            names(&graded_basis(&spec(&[4, 4, 4]), 4)),
            [
                "x^3y", "x^3z", "x^2y^2", "x^2yz", "x^2z^2", "xy^3", "xy^2z", "xyz^2", "xz^3",
                "y^3z", "y^2z^2", "yz^3"
            ]
        );
        assert_eq!(names(&graded_basis(&spec(&[2, 2, 2]), 1)), ["x", "y", "z"]);
        assert_eq!(names(&graded_basis(&spec(&[2, 2, 2]), 2)), ["xy", "xz", "yz"]);
        assert!(graded_basis(&spec(&[2, 2, 2]), 4).is_empty());
    }

    #[test]
    fn hilbert() {
        assert_eq!(hilbert_function(&spec(&[2, 2, 2])), [1, 3, 3, 1]);
        assert_eq!(
            hilbert_function(&spec(&[4, 4, 4])),
            [1, 3, 6, 10, 12, 12, 10, 6, 3, 1]
        );
        assert_eq!(hilbert_function(&spec(&[1, 1, 1])), [1]);
    }

    #[test]
    fn up_maps() {
        let u = up_map_matrix(&spec(&[2, 2, 2]), 1).unwrap();
        assert_eq!(
            u,
            ExactMatrix::from_rows(&[vec![1, 1, 0], vec![1, 0, 1], vec![0, 1, 1]])
        );
        assert_eq!(
            up_map_matrix(&spec(&[2, 1, 1]), 0).unwrap(),
            ExactMatrix::from_rows(&[vec![1]])
        );
        let u = up_map_matrix(&spec(&[4, 4, 4]), 4).unwrap();
        assert_eq!((u.rows(), u.cols()), (12, 12));
        assert!(matches!(
            up_map_matrix(&spec(&[2, 2, 2]), 3),
            Err(Error::Dimension(_))
        ));
    }
}
