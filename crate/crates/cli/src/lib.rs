//! Verification harness: the check groups behind `jacklr verify`, the
//! report format, the seeded generator and the Jack disk cache.

pub mod args;
pub mod cache;
pub mod checks;
mod error;
pub mod report;
pub mod rng;

pub use error::CliError;
