use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Exact(#[from] jacklr_exact::ExactError),
    #[error(transparent)]
    Partition(#[from] jacklr_partitions::PartitionError),
    #[error(transparent)]
    Sym(#[from] jacklr_symfunc::SymError),
    #[error(transparent)]
    Stanley(#[from] jacklr_stanley::StanleyError),
    #[error(transparent)]
    PetJohn(#[from] jacklr_petjohn::PetJohnError),
    #[error(transparent)]
    HookSpace(#[from] jacklr_hookspace::HookSpaceError),
    #[error(transparent)]
    Pivot(#[from] jacklr_pivots::PivotError),
    #[error("io: {0}")]
    Io(#[from] std::io::Error),
    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
}
