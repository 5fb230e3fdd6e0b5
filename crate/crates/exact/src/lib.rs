//! Exact arithmetic over the rationals.
//!
//! Everything downstream (hooks, Jack coefficients, Stanley polynomials) is built
//! from [`Rational`], the sparse [`MultiPoly`] and the quotient type [`RatFunc`].
//! No floating point is used anywhere in the workspace.

mod error;
mod field;
pub mod linalg;
mod parse;
mod poly;
mod ratfunc;
mod uni;
mod rational;
pub mod symmetric;

pub use error::ExactError;
pub use field::Field;
pub use parse::{parse_poly, parse_ratfunc};
pub use poly::{Mono, MultiPoly};
pub use ratfunc::RatFunc;
pub use uni::{divrem, gcd as univariate_gcd, interpolate};
pub use rational::{int, rat, Rational};

/// Name of the variable used for the Jack parameter in every `AlphaPoly`.
pub const ALPHA: &str = "a";

/// A polynomial in the single variable [`ALPHA`].
pub type AlphaPoly = MultiPoly;

/// Shorthand for the polynomial `α`.
pub fn alpha() -> MultiPoly {
    MultiPoly::var(ALPHA)
}
