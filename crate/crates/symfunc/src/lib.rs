//! Symmetric functions in the monomial basis and integral-form Jack
//! polynomials `J_λ(α)`, with their Littlewood–Richardson coefficients.

mod basis;
mod jack;
mod lr;
mod symfunc;

pub use basis::{monomial_product, DegreeData};
pub use jack::{
    jack_strategies, jack_strategy, GramSchmidt, Interpolate, JackStrategy, JackTable,
    DEFAULT_DEGREE_CAP,
};
pub use lr::{expand_in_jack, stanley_coefficients_sampled};
pub use jacklr_partitions::jnorm;
pub use symfunc::SymFunc;

use jacklr_exact::ExactError;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SymError {
    #[error("degree cap: degree {degree} exceeds cap {cap}")]
    DegreeCap { degree: u32, cap: u32 },
    #[error("weight mismatch: |{mu}| + |{nu}| != |{lam}|")]
    WeightMismatch { mu: String, nu: String, lam: String },
    #[error("not in span: {0}")]
    NotInSpan(String),
    #[error("non-polynomial Stanley coefficient: {0}")]
    NonPolynomial(String),
    #[error("unknown Jack strategy {0:?}")]
    UnknownStrategy(String),
    #[error("mixed degrees {0} and {1}")]
    MixedDegree(u32, u32),
    #[error(transparent)]
    Exact(#[from] ExactError),
}
