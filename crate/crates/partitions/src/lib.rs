//! Integer partitions in English convention with 0-indexed boxes, α-hook
//! lengths and single-box pivot moves.

mod hooks;
mod partition;
mod pivot;
pub mod root;

pub use hooks::{arm, leg, lower_hook, lower_hook_at, upper_hook, upper_hook_at, jnorm};
pub use partition::{enumerate_partitions, Cell, Partition, PartitionError};
pub use pivot::{pivot_pairs, PivotPair};

/// Which member of a triple `(μ, ν, λ)` a box or partition belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Slot {
    Mu,
    Nu,
    Lam,
}

impl Slot {
    pub const ALL: [Slot; 3] = [Slot::Mu, Slot::Nu, Slot::Lam];

    pub fn name(self) -> &'static str {
        match self {
            Slot::Mu => "mu",
            Slot::Nu => "nu",
            Slot::Lam => "lam",
        }
    }
}
