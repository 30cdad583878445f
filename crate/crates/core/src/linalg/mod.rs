//! Exact integer linear algebra over `BigInt`.

mod det;
mod matrix;
mod minors;
mod permanent;
mod snf;

pub use det::determinant;
pub use matrix::ExactMatrix;
pub use minors::{combinations, gcd_of_minors};
pub use permanent::{permanent, permanent_by_rows, permanent_ryser, RYSER_MAX_COLS};
pub use snf::{gcd_all, snf, snf_with_transforms, SnfDecomposition, SnfResult};
