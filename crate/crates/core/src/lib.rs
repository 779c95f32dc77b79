//! Exact-arithmetic models of type-A quantum affine R-matrix denominators,
//! pole quivers, the quiver Hecke algebra of type A_∞ with its segment
//! calculus, commuting-family rational-function identities, and
//! Grothendieck-ring dimension bookkeeping.

pub mod denom;
pub mod exact;
pub mod klr;
pub mod ktheory;
pub mod quiver;
pub mod rseries;
pub mod segments;
pub mod suites;
pub mod sweep;

use thiserror::Error as ThisError;

#[derive(ThisError, Debug, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("undefined order")]
    UndefinedOrder,
    #[error("non-telescoping product")]
    NonTelescoping,
    #[error("series cross-check mismatch")]
    SeriesMismatch,
    #[error("index out of range: {0}")]
    IndexOutOfRange(String),
    #[error("size cap exceeded: {0}")]
    SizeCap(String),
    #[error("undecidable at desk scale")]
    Undecidable,
}
