use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PetJohnError {
    #[error("invalid pentagon: {0}")]
    InvalidPentagon(String),
    #[error("bad subset text {0:?}")]
    Parse(String),
}
