use jacklr_exact::ExactError;
use jacklr_stanley::StanleyError;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum HookSpaceError {
    #[error("r2*n4 must be 0")]
    Constraint,
    #[error("virtual hook is not divisible by α (remainder {0})")]
    VirtualRemainder(String),
    #[error(transparent)]
    Exact(#[from] ExactError),
    #[error(transparent)]
    Stanley(#[from] StanleyError),
}
