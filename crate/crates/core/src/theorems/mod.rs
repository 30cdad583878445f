//! The binomial reduction of the up-maps and its companions.

mod carlitz;
mod mr;
mod symbolic;
mod verify;

pub use carlitz::{carlitz_closed_forms, carlitz_matrix, carlitz_transform, CarlitzForm};
pub(crate) use mr::check_mr_range;
pub use mr::{binomial, build_mr, build_multinomial_mr, factorial};
pub use symbolic::{symbolic_reduction, BivariateTerm, SymbolicBlock};
pub use verify::{
    is_submultiset, up_map_snfs, verify_containment, verify_multinomial, verify_snf_theorem,
    verify_symbolic, SnfPart,
};
