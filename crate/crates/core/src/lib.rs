//! Exact computer algebra for the Drinfeld double D(D₃).
//!
//! Everything is computed over Q(ω) with ω a primitive cube root of unity, with
//! spectral parameters carried as Laurent polynomials in `x` and `y`. Every
//! identity checked here is an exact polynomial identity.

pub mod double;
pub mod error;
pub mod group;
pub mod json;
pub mod latex;
pub mod lax;
pub mod matrix;
pub mod reps;
pub mod scalars;
pub mod suites;

pub use double::{AlgebraElement, DoubleBasis, TensorElement};
pub use error::{Error, Result};
pub use group::GroupElement;
pub use lax::{AlgebraValuedMatrix, RelationReport, Status, Witness};
pub use matrix::ScalarMatrix;
pub use reps::{IrrepLabel, Representation};
pub use scalars::{CycloNum, LaurentPoly, Rational, Symbol};
