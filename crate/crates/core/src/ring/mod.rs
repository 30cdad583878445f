//! Monomial complete intersections `k[x_1..x_n] / (x_1^A_1, ..., x_n^A_n)`.

mod action;
mod basis;
mod monomial;

pub use action::{invariant_basis, restricted_up_map, ActionKind, GroupAction, Sign, SignedBasisElement};
pub use basis::{graded_basis, hilbert_function, up_map, up_map_matrix, LabeledMatrix};
pub use monomial::{Monomial, RingSpec};
