//! Quiver Hecke algebra machinery for type A_∞: convolution modules of
//! segment modules, intertwiner R-matrices, and their renormalizations.

pub mod cases;
pub mod engine;
pub mod perm;
pub mod polyrep;
pub mod rmatrix;

pub use cases::{check_pair_case, classify, PairCase};
pub use engine::ShuffleModule;
pub use perm::{Blocks, Perm, WordPolicy};
pub use rmatrix::{CompositionReport, RMatrixPair};
