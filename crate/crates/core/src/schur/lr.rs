use std::collections::BTreeMap;

use super::{Partition, SkewShape};

/// Littlewood-Richardson expansion of a skew Schur function: each partition
/// with the number of LR tableaux of the shape having that content.
///
/// A tableau is filled row by row from the top, each row from right to left,
/// so the reading word is built in order and the ballot condition can be
/// checked as cells are placed. Rows weakly increase to the right and
/// columns strictly increase downward.
pub fn lr_expand(shape: &SkewShape) -> BTreeMap<Partition, u64> {
    let k = shape.rows();
    let cells: Vec<(usize, usize)> = (0..k)
        .flat_map(|i| (shape.mu(i)..shape.lambda(i)).rev().map(move |j| (i, j as usize)))
        .collect();
    let width = shape.lambda(0) as usize;
    let mut grid = vec![vec![0u32; width]; k];
    let mut counts = vec![0u64; k + 1];
    let mut out = BTreeMap::new();
    fill(shape, &cells, 0, &mut grid, &mut counts, &mut out);
    out
}

fn fill(
    shape: &SkewShape,
    cells: &[(usize, usize)],
    pos: usize,
    grid: &mut [Vec<u32>],
    counts: &mut [u64],
    out: &mut BTreeMap<Partition, u64>,
) {
    if pos == cells.len() {
        let parts: Vec<u32> = counts[1..].iter().map(|&c| c as u32).collect();
        let p = Partition::new(parts).expect("ballot condition yields a partition");
        *out.entry(p).or_default() += 1;
        return;
    }
    let (i, j) = cells[pos];
    let k = shape.rows();
    // right neighbour bounds the value from above
    let hi = if j + 1 < shape.lambda(i) as usize {
        grid[i][j + 1]
    } else {
        k as u32
    };
    // cell above (if it belongs to the shape) bounds it strictly from below
    let lo = if i > 0 && j >= shape.mu(i - 1) as usize {
        grid[i - 1][j] + 1
    } else {
        1
    };
    for v in lo..=hi.min(i as u32 + 1) {
        let v_us = v as usize;
        if v > 1 && counts[v_us - 1] == counts[v_us] {
            continue;
        }
        grid[i][j] = v;
        counts[v_us] += 1;
        fill(shape, cells, pos + 1, grid, counts, out);
        counts[v_us] -= 1;
    }
    grid[i][j] = 0;
}

#[cfg(test)]
mod tests {
    use super::*;

    fn expand(s: &str) -> Vec<(String, u64)> {
        lr_expand(&s.parse().unwrap())
            .into_iter()
            .map(|(p, m)| (p.to_string(), m))
            .collect()
    }

    #[test]
    fn examples() {
        assert_eq!(expand("5,3/1"), [("(4,3)".into(), 1), ("(5,2)".into(), 1)]);
        assert_eq!(expand("2,1/1"), [("(1,1)".into(), 1), ("(2)".into(), 1)]);
        assert_eq!(expand("3,2,1"), [("(3,2,1)".into(), 1)]);
    }

    #[test]
    fn multiplicity_two() {
        assert_eq!(
            expand("3,2,1/2,1"),
            [("(1,1,1)".into(), 1), ("(2,1)".into(), 2), ("(3)".into(), 1)]
        );
    }
}
