//! Writing a straight Schur function as a combination of skew Schur functions
//! that fit inside the Toeplitz block A_c.

use lefschetz::schur::{inverse_lr_decompose, inverse_lr_step, jacobi_trudi, Partition};

fn main() -> lefschetz::Result<()> {
    let step = inverse_lr_step(&"11,9,8,7,5".parse()?, 5, 9, 15)?;
    println!("one step: (11,9,8,7,5) -> {step}");

    for (nu, c, n) in [("5,2", 3, 6), ("6,2", 3, 7), ("6,4,3", 4, 8)] {
        let nu: Partition = nu.parse()?;
        let combo = inverse_lr_decompose(&nu, nu.len(), c, n)?;
        println!("S_{nu} = {combo}   (c = {c}, n = {n})");
        let lhs = jacobi_trudi(&lefschetz::schur::SkewShape::straight(nu), n as u32)?;
        assert_eq!(lhs, combo.polynomial(n as u32)?);
    }
    Ok(())
}
