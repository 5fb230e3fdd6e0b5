use jacklr_exact::ExactError;
use jacklr_partitions::{Cell, Partition, PartitionError};
use jacklr_stanley::StanleyError;
use jacklr_symfunc::SymError;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum PivotError {
    #[error("{a} and {b} are not two distinct addable corners of {base}")]
    NotCorners { base: Partition, a: Cell, b: Cell },
    #[error("correspondence rule inapplicable: {0}")]
    RuleInapplicable(String),
    #[error("fixture {name}: {reason}")]
    Fixture { name: String, reason: String },
    #[error(transparent)]
    Sym(#[from] SymError),
    #[error(transparent)]
    Exact(#[from] ExactError),
    #[error(transparent)]
    Partition(#[from] PartitionError),
    #[error(transparent)]
    Stanley(#[from] StanleyError),
}
