//! The ten symmetry classes by brute force, and the three whose counts are
//! determinants of restricted up-maps.

use lefschetz::plane::{symmetry_count, verify_det_identity, BoxSpec, SymmetryClass, ENUMERATION_LIMIT};

fn main() -> lefschetz::Result<()> {
    let bx = BoxSpec::new(2, 2, 2)?;
    for cls in SymmetryClass::all() {
        let gens: Vec<String> = cls.generators().iter().map(|g| format!("{g:?}")).collect();
        match symmetry_count(bx, cls, ENUMERATION_LIMIT) {
            Ok(n) => println!("{:>2} {:<7} <{}>: {n}", cls.id(), cls.name(), gens.join(", ")),
            Err(e) => println!("{:>2} {:<7}: {e}", cls.id(), cls.name()),
        }
    }

    println!();
    for (a, b, c, cls) in [
        (1, 1, 1, SymmetryClass::CSPP),
        (2, 2, 2, SymmetryClass::CSPP),
        (3, 3, 3, SymmetryClass::CSPP),
        (1, 1, 2, SymmetryClass::TCPP),
        (2, 2, 2, SymmetryClass::TCPP),
        (2, 2, 1, SymmetryClass::TCPP),
        (2, 2, 2, SymmetryClass::CSTCPP),
    ] {
        let r = verify_det_identity(BoxSpec::new(a, b, c)?, cls)?;
        println!("{}", r.summary());
    }
    Ok(())
}
