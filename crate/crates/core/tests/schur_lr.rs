use lefschetz::schur::{
    inverse_lr_decompose, inverse_lr_step, is_legal, jacobi_trudi, jacobi_trudi_formal, jacobi_trudi_value,
    lr_expand, minor_for_shape, minor_shape_correspondence, partitions_with_parts, spread_of, toeplitz_minor,
    HPolynomial, Partition, SkewShape,
};
use lefschetz::suites::skew_shapes;
use num_bigint::BigInt;
use num_traits::Zero;
use proptest::prelude::*;

// Oracle: skew Schur functions evaluated at a numeric point by summing over
// semistandard tableaux, and h_j at the same point by summing over monomials.

const POINT: [i64; 4] = [2, -1, 3, 1];

fn ssyt_value(shape: &SkewShape, x: &[i64]) -> BigInt {
    let k = shape.rows();
    let cells: Vec<(usize, usize)> = (0..k)
        .flat_map(|i| (shape.mu(i) as usize..shape.lambda(i) as usize).map(move |j| (i, j)))
        .collect();
    let width = shape.lambda(0) as usize;
    let mut grid = vec![vec![0usize; width]; k];
    fn go(cells: &[(usize, usize)], idx: usize, grid: &mut Vec<Vec<usize>>, shape: &SkewShape, x: &[i64]) -> BigInt {
        if idx == cells.len() {
            return BigInt::from(1);
        }
        let (i, j) = cells[idx];
        let left = if j > shape.mu(i) as usize { grid[i][j - 1] } else { 1 };
        let above = if i > 0 && j >= shape.mu(i - 1) as usize && j < shape.lambda(i - 1) as usize {
            grid[i - 1][j] + 1
        } else {
            1
        };
        let mut total = BigInt::zero();
        for v in left.max(above)..=x.len() {
            grid[i][j] = v;
            total += BigInt::from(x[v - 1]) * go(cells, idx + 1, grid, shape, x);
        }
        total
    }
    go(&cells, 0, &mut grid, shape, x)
}

fn h_values(x: &[i64], top: usize) -> Vec<BigInt> {
    // h_j(x) via h_j(x_1..x_m) = h_j(x_1..x_(m-1)) + x_m h_(j-1)(x_1..x_m).
    let mut h = vec![BigInt::zero(); top + 1];
    h[0] = BigInt::from(1);
    for &xi in x {
        for j in 1..=top {
            let prev = h[j - 1].clone();
            h[j] += BigInt::from(xi) * prev;
        }
    }
    h[1..].to_vec()
}

fn shape_strategy() -> impl Strategy<Value = SkewShape> {
    (1usize..=3, 1u32..=5).prop_flat_map(|(k, m)| {
        let shapes = skew_shapes(k, m);
        (0..shapes.len()).prop_map(move |i| shapes[i].clone())
    })
}

proptest! {
    #[test]
    fn jacobi_trudi_matches_tableau_sum(shape in shape_strategy()) {
        let h = h_values(&POINT, 12);
        prop_assert_eq!(jacobi_trudi_value(&shape, &h).unwrap(), ssyt_value(&shape, &POINT));
        prop_assert_eq!(jacobi_trudi_formal(&shape).evaluate(&h).unwrap(), ssyt_value(&shape, &POINT));
    }

    #[test]
    fn lr_expansion_matches_tableau_sum(shape in shape_strategy()) {
        let expansion = lr_expand(&shape);
        let sizes_agree = expansion.keys().all(|p| p.size() == shape.size());
        prop_assert!(sizes_agree);
        let total: BigInt = expansion
            .iter()
            .map(|(p, m)| ssyt_value(&SkewShape::straight(p.clone()), &POINT) * BigInt::from(*m))
            .sum();
        prop_assert_eq!(total, ssyt_value(&shape, &POINT));
    }

    #[test]
    fn lr_expansion_matches_jacobi_trudi(shape in shape_strategy()) {
        let mut rhs = HPolynomial::zero();
        for (nu, m) in lr_expand(&shape) {
            rhs = &rhs + &jacobi_trudi_formal(&SkewShape::straight(nu)).scale(&BigInt::from(m));
        }
        prop_assert_eq!(jacobi_trudi_formal(&shape), rhs);
    }
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    (0u32..(1 << n))
        .filter(|m| m.count_ones() as usize == k)
        .map(|m| (1..=n).filter(|i| m >> (i - 1) & 1 == 1).collect())
        .collect()
}

#[test]
fn every_legal_shape_is_a_toeplitz_minor() {
    for n in 2..=8 {
        for c in 1..=n / 2 {
            for k in 1..=c {
                for shape in skew_shapes(k, n as u32) {
                    if !is_legal(&shape, k, c, n).unwrap() {
                        assert!(minor_for_shape(&shape, c, n).is_err());
                        continue;
                    }
                    let (rows, cols) = minor_for_shape(&shape, c, n).unwrap();
                    assert_eq!(toeplitz_minor(n, c, &rows, &cols).unwrap(), jacobi_trudi(&shape, n as u32).unwrap());
                    let back = minor_shape_correspondence(n, c, &rows, &cols).unwrap();
                    assert_eq!(jacobi_trudi_formal(&back), jacobi_trudi_formal(&shape));
                }
            }
        }
    }
}

#[test]
fn minors_without_zero_entries_give_legal_shapes() {
    // A minor of A_c avoiding the zeros above the diagonal is a legal
    // Jacobi-Trudi determinant.
    for n in 2..=7 {
        for c in 1..=n / 2 {
            for k in 1..=c {
                for rows in subsets(n - c + 1, k) {
                    for cols in subsets(c, k) {
                        let no_zero = rows.iter().all(|&p| cols.iter().all(|&q| n - c + 1 + q - p <= n));
                        if !no_zero {
                            continue;
                        }
                        let shape = minor_shape_correspondence(n, c, &rows, &cols).unwrap();
                        assert!(is_legal(&shape, k, c, n).unwrap(), "{shape} n={n} c={c}");
                        assert_eq!(toeplitz_minor(n, c, &rows, &cols).unwrap(), jacobi_trudi_formal(&shape));
                    }
                }
            }
        }
    }
}

#[test]
fn two_by_two_minors_for_n_7() {
    let d = |a: [i64; 4]| HPolynomial::index_determinant(&[vec![a[0], a[1]], vec![a[2], a[3]]]);
    assert_eq!(d([6, 7, 1, 2]), &d([5, 7, 1, 3]) - &d([5, 6, 2, 3]));
    assert_eq!(toeplitz_minor(7, 2, &[1, 6], &[1, 2]).unwrap(), d([6, 7, 1, 2]));
    assert_eq!(minor_shape_correspondence(7, 2, &[1, 6], &[1, 2]).unwrap().to_string(), "(6,2)");
    assert_eq!(toeplitz_minor(7, 3, &[1, 5], &[1, 3]).unwrap(), d([5, 7, 1, 3]));
    assert_eq!(minor_shape_correspondence(7, 3, &[1, 5], &[1, 3]).unwrap().to_string(), "(6,3)/(1,0)");
}

#[test]
fn inverse_steps_have_smaller_spreads() {
    for n in 4..=8 {
        for c in 2..=n / 2 {
            for k in 1..c {
                for nu in partitions_with_parts(k, (n - k + 1) as u32) {
                    let straight = SkewShape::straight(nu.clone());
                    if !is_legal(&straight, k, k, n).unwrap() || is_legal(&straight, k, c, n).unwrap() {
                        continue;
                    }
                    let step = inverse_lr_step(&nu, k, c, n).unwrap();
                    assert!(is_legal(&step, k, c, n).unwrap());
                    let expansion = lr_expand(&step);
                    assert_eq!(expansion.get(&nu), Some(&1));
                    let s = spread_of(&nu, k).unwrap();
                    for p in expansion.keys().filter(|p| **p != nu) {
                        assert!(spread_of(p, k).unwrap() < s, "{p} from {nu}");
                    }
                    let combo = inverse_lr_decompose(&nu, k, c, n).unwrap();
                    assert_eq!(combo.polynomial(n as u32).unwrap(), jacobi_trudi(&straight, n as u32).unwrap());
                }
            }
        }
    }
}

#[test]
fn parse_and_display() {
    let s: SkewShape = "5,3/1".parse().unwrap();
    assert_eq!(s.to_string(), "(5,3)/(1,0)");
    assert_eq!("(4,3)".parse::<Partition>().unwrap().to_string(), "(4,3)");
    assert!("3,4".parse::<Partition>().is_err());
    assert!("2,2/3".parse::<SkewShape>().is_err());
}
