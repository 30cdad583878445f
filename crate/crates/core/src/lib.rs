pub mod cli;
pub mod error;
pub mod linalg;
pub mod plane;
pub mod report;
pub mod ring;
pub mod schur;
pub mod suites;
pub mod theorems;
mod wire;

pub use error::{Error, Result};
