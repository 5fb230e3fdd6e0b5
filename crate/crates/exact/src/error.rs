use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ExactError {
    #[error("zero divisor")]
    ZeroDivisor,
    #[error("expected a univariate polynomial, found variables {0:?}")]
    NotUnivariate(Vec<String>),
    #[error("unbound variables {0:?}")]
    Unbound(Vec<String>),
    #[error("not symmetric: residual {0}")]
    NotSymmetric(String),
    #[error("not a polynomial: denominator {0}")]
    NotPolynomial(String),
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
}
