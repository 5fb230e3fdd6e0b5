//! Named boxes of the root triple `(21, 21, 321)`.
//!
//! The paper draws diagrams with the short row on top; here row 0 is the
//! longest row. The dictionary below reproduces every row of the window
//! hook-length table at zero parameters.

use crate::{Cell, Partition, Slot};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum RootBox {
    A1,
    A2,
    A3,
    B1,
    B2,
    B3,
    C1,
    C2,
    C3,
    C4,
    C5,
    C6,
}

use RootBox::*;

impl RootBox {
    pub const ALL: [RootBox; 12] = [A1, A2, A3, B1, B2, B3, C1, C2, C3, C4, C5, C6];

    pub fn slot(self) -> Slot {
        match self {
            A1 | A2 | A3 => Slot::Mu,
            B1 | B2 | B3 => Slot::Nu,
            _ => Slot::Lam,
        }
    }

    pub fn cell(self) -> Cell {
        match self {
            A1 | B1 => Cell::new(1, 0),
            A2 | B2 => Cell::new(0, 0),
            A3 | B3 => Cell::new(0, 1),
            C1 => Cell::new(2, 0),
            C2 => Cell::new(1, 0),
            C3 => Cell::new(1, 1),
            C4 => Cell::new(0, 0),
            C5 => Cell::new(0, 1),
            C6 => Cell::new(0, 2),
        }
    }

    pub fn name(self) -> &'static str {
        ["a1", "a2", "a3", "b1", "b2", "b3", "c1", "c2", "c3", "c4", "c5", "c6"][self as usize]
    }

    pub fn from_name(s: &str) -> Option<RootBox> {
        Self::ALL.into_iter().find(|b| b.name() == s)
    }

    pub fn at(slot: Slot, cell: Cell) -> Option<RootBox> {
        Self::ALL.into_iter().find(|b| b.slot() == slot && b.cell() == cell)
    }
}

pub fn mu() -> Partition {
    Partition::of(&[2, 1])
}

pub fn nu() -> Partition {
    Partition::of(&[2, 1])
}

pub fn lam() -> Partition {
    Partition::of(&[3, 2, 1])
}

pub fn shape(slot: Slot) -> Partition {
    match slot {
        Slot::Mu => mu(),
        Slot::Nu => nu(),
        Slot::Lam => lam(),
    }
}
