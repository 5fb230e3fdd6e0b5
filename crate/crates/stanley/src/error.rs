use jacklr_exact::ExactError;
use jacklr_partitions::Slot;
use thiserror::Error;

use crate::HookChoice;

#[derive(Debug, Error)]
pub enum StanleyError {
    #[error("no hook value for {slot:?} box ({row},{col}) choice {choice}")]
    MissingHook { slot: Slot, row: usize, col: usize, choice: HookChoice },
    #[error("no virtual hook value for {0} choice {1}")]
    MissingVirtualHook(&'static str, HookChoice),
    #[error("bad diagram text: {0}")]
    Parse(String),
    #[error("diagram is not total on the triple: {0}")]
    NotTotal(String),
    #[error(transparent)]
    Exact(#[from] ExactError),
}
