//! Smith forms of the up-maps of k[x,y,z]/(x^4, y^4, z^4), degree by degree,
//! next to the binomial matrices that predict their non-unit entries.

use lefschetz::linalg::snf;
use lefschetz::ring::{hilbert_function, up_map, RingSpec};
use lefschetz::theorems::build_mr;

fn main() -> lefschetz::Result<()> {
    let spec = RingSpec::new(vec![4, 4, 4])?;
    println!("h = {:?}", hilbert_function(&spec));

    let u1 = up_map(&spec, 1)?;
    println!("\nU_1, rows {:?}", u1.row_labels.iter().map(ToString::to_string).collect::<Vec<_>>());
    print!("{}", u1.matrix);

    let m = spec.middle().expect("nonzero socle degree");
    for r in 0..=m {
        let s = snf(&lefschetz::ring::up_map_matrix(&spec, r)?);
        print!("r = {r}: non-units {:?}", s.non_units().iter().map(ToString::to_string).collect::<Vec<_>>());
        if r + 1 >= 4 {
            let mr = build_mr(4, 4, 4, r)?;
            print!("  M_r = {:?}", mr.to_rows());
        }
        println!();
    }
    Ok(())
}
