//! Smith forms of the matrices (C(a+b, b+i-j)) against their closed forms,
//! and an explicit unimodular reduction for c = 2, a = b.

use lefschetz::linalg::{determinant, snf};
use lefschetz::theorems::{carlitz_closed_forms, carlitz_matrix, carlitz_transform, CarlitzForm};

fn main() -> lefschetz::Result<()> {
    for c in 1..=3 {
        for a in 1..=4 {
            for b in 1..=4 {
                let s = snf(&carlitz_matrix(a, b, c));
                let shown: Vec<String> = s.entries.iter().map(ToString::to_string).collect();
                let closed = match carlitz_closed_forms(a, b, c) {
                    CarlitzForm::Known(v) => format!("{:?}", v.iter().map(ToString::to_string).collect::<Vec<_>>()),
                    CarlitzForm::Unknown => "-".into(),
                };
                println!("a={a} b={b} c={c}: snf {shown:?}  closed form {closed}");
            }
        }
    }

    let a = 3;
    let (p, q) = carlitz_transform(a);
    let m = carlitz_matrix(a, a, 2);
    println!("\nP =\n{p}M =\n{m}Q =\n{q}P M Q =\n{}", &(&p * &m) * &q);
    println!("det P = {}, det Q = {}", determinant(&p)?, determinant(&q)?);
    Ok(())
}
