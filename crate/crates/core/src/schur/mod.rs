//! Skew Schur polynomials in the complete homogeneous basis, the
//! Littlewood-Richardson rule, and minors of Toeplitz matrices.

mod hpoly;
mod inverse;
mod legal;
mod lr;
mod partition;
mod toeplitz;

pub use hpoly::{jacobi_trudi, jacobi_trudi_formal, jacobi_trudi_indices, jacobi_trudi_value, HPolynomial};
pub use inverse::{inverse_lr_decompose, inverse_lr_step, ShapeCombination};
pub use legal::{is_legal, is_legal_straight, minor_for_shape, minor_shape_correspondence, toeplitz_minor};
pub use lr::lr_expand;
pub use partition::{partitions_with_parts, spread_of, Partition, SkewShape, Spread};
pub use toeplitz::{binomial_toeplitz_h, random_h, toeplitz_block, toeplitz_matrix, verify_toeplitz_lemma};
