//! Skew Schur functions: LR expansions against Jacobi-Trudi determinants, and
//! Toeplitz minors read as skew shapes.

use lefschetz::schur::{
    jacobi_trudi_formal, lr_expand, minor_for_shape, minor_shape_correspondence, toeplitz_minor, SkewShape,
};

fn main() -> lefschetz::Result<()> {
    for s in ["5,3/1", "3,2,1/2,1", "4,4,2/3,1"] {
        let shape: SkewShape = s.parse()?;
        let terms: Vec<String> = lr_expand(&shape).iter().rev().map(|(p, m)| format!("{m}*{p}")).collect();
        println!("S_{shape} = {}", terms.join(" + "));
        println!("  as h: {}", jacobi_trudi_formal(&shape));
    }

    let (n, c) = (7, 3);
    let shape = minor_shape_correspondence(n, c, &[1, 5], &[1, 3])?;
    println!("\nrows (1,5), cols (1,3) of A_3, n = 7: {shape} = {}", toeplitz_minor(n, c, &[1, 5], &[1, 3])?);
    let (rows, cols) = minor_for_shape(&"6,2".parse()?, 2, n)?;
    println!("(6,2) sits on rows {rows:?}, cols {cols:?} of A_2");
    Ok(())
}
