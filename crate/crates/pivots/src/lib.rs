pub mod corpus;
pub mod correspondence;
pub mod displayed;
pub mod fixtures;
mod error;
pub mod identities;

pub use error::PivotError;
