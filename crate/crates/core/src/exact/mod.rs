//! Exact arithmetic ground layer: rationals, Laurent polynomials in q,
//! rational functions in z and (u,v), spectral parameters, and the
//! q-Pochhammer telescoping calculus.

pub mod factored;
pub mod laurent;
pub mod poch;
pub mod rfunc;
pub mod ring;
pub mod spectral;

pub use factored::{LinFactored, SplitBivar};
pub use laurent::{rat, ratio, LaurentQ, Rat};
pub use poch::PochhammerExpr;
pub use rfunc::{linear_factor, BivarPoly, BivarRatFunc, PolyZ, QFrac, RatFuncZ};
pub use ring::{Coeff, Poly};
pub use spectral::SpectralParam;
