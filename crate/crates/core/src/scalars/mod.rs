//! Exact scalar tower: rationals, the cyclotomic field Q(ω) with ω³ = 1, and
//! sparse bivariate Laurent polynomials over Q(ω).

mod cyclo;
mod laurent;
pub(crate) mod rational;

pub use cyclo::CycloNum;
pub use laurent::{LaurentPoly, Symbol};
pub use rational::{format_rational, parse_rational, Rational};
