//! Plane partitions in a box counted five ways, and the matching that belongs
//! to one of them.

use lefschetz::linalg::{determinant, permanent};
use lefschetz::plane::{
    build_hex_graph, count_box_pp, enumerate_box_pp, enumerate_matchings, macmahon_count, matching_to_pp,
    pp_to_matching, BoxSpec, PlanePartition, ENUMERATION_LIMIT,
};
use lefschetz::ring::up_map_matrix;

fn main() -> lefschetz::Result<()> {
    for (a, b, c) in [(1, 1, 1), (2, 2, 1), (1, 2, 3), (2, 2, 2), (3, 3, 3)] {
        let bx = BoxSpec::new(a, b, c)?;
        let u = up_map_matrix(&bx.ring(), bx.middle())?;
        let g = build_hex_graph(bx)?;
        println!(
            "{bx}: MacMahon {}  det {}  perm {}  order ideals {}  matchings {}  transfer {}",
            macmahon_count(bx),
            determinant(&u)?,
            permanent(&u)?,
            enumerate_box_pp(bx, ENUMERATION_LIMIT)?.len(),
            enumerate_matchings(&g).len(),
            count_box_pp(bx),
        );
    }

    let bx = BoxSpec::new(2, 2, 2)?;
    let g = build_hex_graph(bx)?;
    let p = PlanePartition::from_heights(bx, &[vec![2, 1], vec![1, 0]])?;
    let m = pp_to_matching(&g, &p)?;
    println!("\nheights {:?} <-> matching", p.heights());
    for (l, r) in g.labelled(&m) {
        println!("  {l} - {r}");
    }
    assert_eq!(matching_to_pp(&g, &m)?, p);
    Ok(())
}
