//! Random integer Toeplitz matrices: the k-th Smith entry of A_c does not
//! depend on c in k..=n/2.

use lefschetz::schur::{binomial_toeplitz_h, random_h, toeplitz_block, verify_toeplitz_lemma};
use lefschetz::theorems::build_mr;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() -> lefschetz::Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(42);
    let mut passed = 0;
    for _ in 0..100 {
        let h = random_h(&mut rng, 10, 20);
        if verify_toeplitz_lemma(&h)?.passed {
            passed += 1;
        }
    }
    println!("{passed}/100 random matrices pass");

    // With binomial h, A_c is the binomial matrix of the Smith-form theorem.
    let (a, b, c) = (7, 7, 7);
    let h = binomial_toeplitz_h(a, b, c)?;
    for k in 1..=h.len() / 2 {
        assert_eq!(toeplitz_block(&h, k)?, build_mr(a, b, c, a - 2 + k as u32)?);
    }
    println!("h = {:?}", h.iter().map(ToString::to_string).collect::<Vec<_>>());
    println!("{}", verify_toeplitz_lemma(&h)?.summary());
    Ok(())
}
