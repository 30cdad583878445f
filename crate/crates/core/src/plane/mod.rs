//! Plane partitions in a box, the hexagon graph of the middle up-map and the
//! symmetry classes.

mod bijection;
mod box_pp;
mod hex;
mod identity;
mod symmetry;

pub use bijection::{matching_to_pp, pp_to_matching};
pub use box_pp::{count_box_pp, enumerate_box_pp, macmahon_count, BoxSpec, PlanePartition, ENUMERATION_LIMIT};
pub use hex::{
    build_hex_graph, enumerate_matchings, matching_count_by_permanent, quotient_structures,
    weighted_matching_count, HexGraph, Matching,
};
pub use identity::{class_action, verify_bijection, verify_det_identity};
pub use symmetry::{symmetry_count, Generator, SymmetryClass};
