//! Ten-box encoding of diagrams on the root triple `(21, 21, 321)`.
//!
//! The λ boxes `c1` and `c6` are never chosen freely: they follow the virtual
//! box `b̃3`, which carries the choice of `b3`, with `c1 = b3` and
//! `c6 = complement(b3)`. What is left are ten free boxes, identified with the
//! vertices of the Petersen graph through their Kneser labels.

use std::fmt;
use std::ops::{BitAnd, BitOr, BitXor, Not};
use std::str::FromStr;

use jacklr_partitions::root::{self, RootBox};
use jacklr_partitions::{Cell, Slot};

use crate::diagram::split_blocks;
use crate::{Diagram, HookChoice, StanleyDiagram, StanleyError};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum FreeBox {
    A1,
    A2,
    A3,
    B1,
    B2,
    Bt3,
    C2,
    C3,
    C4,
    C5,
}

use FreeBox::*;

impl FreeBox {
    pub const ALL: [FreeBox; 10] = [A1, A2, A3, B1, B2, Bt3, C2, C3, C4, C5];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn from_index(i: usize) -> FreeBox {
        Self::ALL[i]
    }

    pub fn name(self) -> &'static str {
        ["a1", "a2", "a3", "b1", "b2", "bt3", "c2", "c3", "c4", "c5"][self as usize]
    }

    pub fn from_name(s: &str) -> Option<FreeBox> {
        Self::ALL.into_iter().find(|b| b.name() == s)
    }

    /// The physical box; `b̃3` is represented by `b3`.
    pub fn root_box(self) -> RootBox {
        match self {
            A1 => RootBox::A1,
            A2 => RootBox::A2,
            A3 => RootBox::A3,
            B1 => RootBox::B1,
            B2 => RootBox::B2,
            Bt3 => RootBox::B3,
            C2 => RootBox::C2,
            C3 => RootBox::C3,
            C4 => RootBox::C4,
            C5 => RootBox::C5,
        }
    }

    /// λ boxes enter the primed form with the complementary hook.
    pub fn is_lambda(self) -> bool {
        matches!(self, C2 | C3 | C4 | C5)
    }

    /// Kneser label: a 2-subset of `{1,..,5}`. Disjoint labels are adjacent.
    pub fn label(self) -> (u8, u8) {
        match self {
            A1 => (3, 4),
            A2 => (2, 5),
            A3 => (1, 3),
            B1 => (2, 4),
            B2 => (3, 5),
            Bt3 => (1, 2),
            C2 => (4, 5),
            C3 => (1, 4),
            C4 => (2, 3),
            C5 => (1, 5),
        }
    }

    pub fn from_label(i: u8, j: u8) -> Option<FreeBox> {
        let key = (i.min(j), i.max(j));
        Self::ALL.into_iter().find(|b| b.label() == key)
    }

    pub fn adjacent(self, other: FreeBox) -> bool {
        let (a, b) = self.label();
        let (c, d) = other.label();
        a != c && a != d && b != c && b != d
    }

    pub fn neighbours(self) -> BoxSet {
        BoxSet::from_iter(Self::ALL.into_iter().filter(|&o| self.adjacent(o)))
    }

    /// `{b} ∪ neighbours(b)`.
    pub fn claw(self) -> BoxSet {
        self.neighbours() | BoxSet::single(self)
    }

    /// `x_b = ±1`: the sign of the primed hook of the reference diagram `X`.
    pub fn x_sign(self) -> i64 {
        reference_x().effective(self).sign()
    }
}

impl fmt::Display for FreeBox {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// The Petersen graph as drawn on the boxes: outer cycle, spokes, inner star.
pub const PETERSEN_EDGES: [(FreeBox, FreeBox); 15] = [
    (C4, C2),
    (C2, Bt3),
    (Bt3, A1),
    (A1, C5),
    (C5, C4),
    (C4, C3),
    (C2, A3),
    (Bt3, B2),
    (A1, A2),
    (C5, B1),
    (C3, B2),
    (B2, B1),
    (B1, A3),
    (A3, A2),
    (A2, C3),
];

/// Subset of the ten free boxes as a bit mask (bit `i` is `FreeBox::ALL[i]`).
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BoxSet(pub u16);

impl BoxSet {
    pub const FULL: BoxSet = BoxSet(0x3ff);
    pub const EMPTY: BoxSet = BoxSet(0);

    pub fn single(b: FreeBox) -> BoxSet {
        BoxSet(1 << b.index())
    }

    pub fn contains(self, b: FreeBox) -> bool {
        self.0 >> b.index() & 1 == 1
    }

    pub fn len(self) -> u32 {
        self.0.count_ones()
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn is_subset(self, other: BoxSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn iter(self) -> impl Iterator<Item = FreeBox> {
        FreeBox::ALL.into_iter().filter(move |&b| self.contains(b))
    }

    /// Number of Petersen edges inside the set.
    pub fn edges(self) -> u32 {
        PETERSEN_EDGES
            .iter()
            .filter(|(a, b)| self.contains(*a) && self.contains(*b))
            .count() as u32
    }

    /// All 1024 subsets in mask order.
    pub fn all() -> impl Iterator<Item = BoxSet> {
        (0..1u16 << 10).map(BoxSet)
    }
}

impl FromIterator<FreeBox> for BoxSet {
    fn from_iter<T: IntoIterator<Item = FreeBox>>(iter: T) -> Self {
        BoxSet(iter.into_iter().fold(0, |m, b| m | 1 << b.index()))
    }
}

impl Not for BoxSet {
    type Output = BoxSet;
    fn not(self) -> BoxSet {
        BoxSet(!self.0 & Self::FULL.0)
    }
}

impl BitAnd for BoxSet {
    type Output = BoxSet;
    fn bitand(self, o: BoxSet) -> BoxSet {
        BoxSet(self.0 & o.0)
    }
}

impl BitOr for BoxSet {
    type Output = BoxSet;
    fn bitor(self, o: BoxSet) -> BoxSet {
        BoxSet(self.0 | o.0)
    }
}

impl BitXor for BoxSet {
    type Output = BoxSet;
    fn bitxor(self, o: BoxSet) -> BoxSet {
        BoxSet(self.0 ^ o.0)
    }
}

impl fmt::Display for BoxSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<&str> = self.iter().map(FreeBox::name).collect();
        write!(f, "{{{}}}", names.join(","))
    }
}

/// A diagram on the root triple. Bit `i` set means the stored hook choice at
/// `FreeBox::ALL[i]` is `L`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RootDiagram(BoxSet);

/// The reference diagram: everything `U` except `c3 = L` (so `c1 = U`,
/// `c6 = L`).
pub fn reference_x() -> RootDiagram {
    RootDiagram(BoxSet::single(C3))
}

impl RootDiagram {
    pub fn from_lower_set(lower: BoxSet) -> Self {
        RootDiagram(lower)
    }

    /// Boxes whose stored choice is `L`.
    pub fn lower_set(self) -> BoxSet {
        self.0
    }

    pub fn choice(self, b: FreeBox) -> HookChoice {
        if self.0.contains(b) {
            HookChoice::L
        } else {
            HookChoice::U
        }
    }

    /// Choice appearing in the primed (all-numerator) form.
    pub fn effective(self, b: FreeBox) -> HookChoice {
        let c = self.choice(b);
        if b.is_lambda() {
            c.complement()
        } else {
            c
        }
    }

    pub fn flip(self, boxes: BoxSet) -> Self {
        RootDiagram(self.0 ^ boxes)
    }

    pub fn conjugate(self) -> Self {
        self.flip(BoxSet::FULL)
    }

    /// Boxes where the two diagrams disagree.
    pub fn disagreement(self, other: RootDiagram) -> BoxSet {
        self.0 ^ other.0
    }

    /// Choice at a physical box, expanding `b̃3` to `b3, c1, c6`.
    pub fn physical(self, b: RootBox) -> HookChoice {
        let t = self.choice(Bt3);
        match b {
            RootBox::B3 | RootBox::C1 => t,
            RootBox::C6 => t.complement(),
            _ => {
                let free = FreeBox::ALL.into_iter().find(|f| f.root_box() == b).unwrap();
                self.choice(free)
            }
        }
    }

    /// Build from choices on the twelve physical boxes in `RootBox::ALL` order.
    pub fn from_physical(choices: &[HookChoice; 12]) -> Result<Self, StanleyError> {
        let at = |b: RootBox| choices[b as usize];
        let t = at(RootBox::B3);
        if at(RootBox::C1) != t || at(RootBox::C6) != t.complement() {
            return Err(StanleyError::Parse(
                "c1 must equal b3 and c6 its complement".to_string(),
            ));
        }
        Ok(RootDiagram(BoxSet::from_iter(
            FreeBox::ALL.into_iter().filter(|f| at(f.root_box()) == HookChoice::L),
        )))
    }

    pub fn to_stanley_diagram(self) -> StanleyDiagram {
        let choices = RootBox::ALL
            .into_iter()
            .map(|b| ((b.slot(), b.cell()), self.physical(b)))
            .collect();
        StanleyDiagram::new(root::mu(), root::nu(), root::lam(), choices)
            .expect("root assignment is total")
    }

    /// Apply an automorphism of the Petersen graph. Flips relative to `X`
    /// travel with their boxes; the hook signs cancel in pairs.
    pub fn act(self, g: &Permutation5) -> Self {
        let x = reference_x();
        let moved = BoxSet::from_iter(self.disagreement(x).iter().map(|b| g.on_box(b)));
        x.flip(moved)
    }
}

impl Diagram for RootDiagram {
    fn assignment(&self) -> Vec<(Slot, Cell, HookChoice)> {
        RootBox::ALL
            .into_iter()
            .map(|b| (b.slot(), b.cell(), self.physical(b)))
            .collect()
    }
}

fn is_bound(b: RootBox) -> bool {
    matches!(b, RootBox::C1 | RootBox::C6)
}

impl fmt::Display for RootDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, slot) in Slot::ALL.into_iter().enumerate() {
            if i > 0 {
                write!(f, ";")?;
            }
            write!(f, "{}:", slot.name())?;
            for cell in root::shape(slot).boxes() {
                let b = RootBox::at(slot, cell).unwrap();
                if is_bound(b) {
                    write!(f, "?")?;
                } else {
                    write!(f, "{}", self.physical(b))?;
                }
            }
        }
        Ok(())
    }
}

impl FromStr for RootDiagram {
    type Err = StanleyError;

    fn from_str(text: &str) -> Result<Self, StanleyError> {
        let blocks = split_blocks(text)?;
        let mut choices = [HookChoice::U; 12];
        for (slot, block) in Slot::ALL.into_iter().zip(blocks) {
            let cells = root::shape(slot).boxes();
            let symbols: Vec<char> = block.chars().collect();
            if symbols.len() != cells.len() {
                return Err(StanleyError::Parse(format!("{} block length", slot.name())));
            }
            for (cell, ch) in cells.into_iter().zip(symbols) {
                let b = RootBox::at(slot, cell).unwrap();
                match (is_bound(b), ch) {
                    (true, '?') => {}
                    (false, _) => {
                        choices[b as usize] = HookChoice::from_char(ch)
                            .ok_or_else(|| StanleyError::Parse(format!("unexpected symbol {ch:?}")))?
                    }
                    (true, _) => {
                        return Err(StanleyError::Parse(format!("{} is bound, expected '?'", b.name())))
                    }
                }
            }
        }
        let t = choices[RootBox::B3 as usize];
        choices[RootBox::C1 as usize] = t;
        choices[RootBox::C6 as usize] = t.complement();
        RootDiagram::from_physical(&choices)
    }
}

/// A permutation of `{1,..,5}`, stored as the images of `1..=5`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Permutation5(pub [u8; 5]);

impl Permutation5 {
    pub fn identity() -> Self {
        Permutation5([1, 2, 3, 4, 5])
    }

    /// Product of disjoint or overlapping cycles, applied right to left.
    pub fn from_cycles(cycles: &[&[u8]]) -> Self {
        cycles.iter().rev().fold(Self::identity(), |acc, cyc| {
            let mut img = [1, 2, 3, 4, 5];
            for (k, &i) in cyc.iter().enumerate() {
                img[i as usize - 1] = cyc[(k + 1) % cyc.len()];
            }
            Permutation5(img).compose(&acc)
        })
    }

    pub fn apply(&self, i: u8) -> u8 {
        self.0[i as usize - 1]
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Permutation5) -> Self {
        let mut img = [0; 5];
        for i in 1..=5u8 {
            img[i as usize - 1] = self.apply(other.apply(i));
        }
        Permutation5(img)
    }

    pub fn on_box(&self, b: FreeBox) -> FreeBox {
        let (i, j) = b.label();
        FreeBox::from_label(self.apply(i), self.apply(j)).expect("labels are 2-subsets")
    }

    pub fn on_set(&self, s: BoxSet) -> BoxSet {
        BoxSet::from_iter(s.iter().map(|b| self.on_box(b)))
    }
}

/// Generators `R1 = (35)`, `R2 = (25)`, `T = (14)`, `R3 = (13)(24)` of the
/// Petersen automorphism group.
pub fn s5_generators() -> [(&'static str, Permutation5); 4] {
    [
        ("R1", Permutation5::from_cycles(&[&[3, 5]])),
        ("R2", Permutation5::from_cycles(&[&[2, 5]])),
        ("T", Permutation5::from_cycles(&[&[1, 4]])),
        ("R3", Permutation5::from_cycles(&[&[1, 3], &[2, 4]])),
    ]
}
