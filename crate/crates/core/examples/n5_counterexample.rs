//! Five variables with all caps 4: the non-unit Smith entries of consecutive
//! up-maps are not nested. With four variables they are.

use lefschetz::ring::RingSpec;
use lefschetz::theorems::{is_submultiset, up_map_snfs};

fn show(v: &[num_bigint::BigInt]) -> String {
    v.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ")
}

fn main() -> lefschetz::Result<()> {
    for n in [4, 5] {
        let spec = RingSpec::new(vec![4; n])?;
        let top = spec.middle().unwrap_or(0) + 1;
        let snfs = up_map_snfs(&spec, 0..=top)?;
        println!("caps {:?}", spec.caps());
        for w in snfs.windows(2) {
            let (lo, hi) = (w[0].1.non_units(), w[1].1.non_units());
            let nested = is_submultiset(&lo, &hi);
            println!("  r = {}: [{}]{}", w[0].0, show(&lo), if nested { "" } else { "  not inside the next one" });
        }
    }
    Ok(())
}
