use std::collections::BTreeMap;
use std::fmt;

use jacklr_partitions::{Cell, Partition, Slot};

use crate::StanleyError;

/// Upper (`α(arm+1)+leg`) or lower (`α·arm+leg+1`) hook.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum HookChoice {
    U,
    L,
}

impl HookChoice {
    pub fn complement(self) -> Self {
        match self {
            HookChoice::U => HookChoice::L,
            HookChoice::L => HookChoice::U,
        }
    }

    /// `+1` for `U`, `-1` for `L`.
    pub fn sign(self) -> i64 {
        match self {
            HookChoice::U => 1,
            HookChoice::L => -1,
        }
    }

    pub fn from_char(c: char) -> Option<Self> {
        match c {
            'U' => Some(HookChoice::U),
            'L' => Some(HookChoice::L),
            _ => None,
        }
    }

    pub fn as_char(self) -> char {
        match self {
            HookChoice::U => 'U',
            HookChoice::L => 'L',
        }
    }
}

impl fmt::Display for HookChoice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.as_char())
    }
}

/// Anything that can be read as a hook assignment on the physical boxes of a
/// triple. Boxes of `μ` and `ν` go to the numerator, boxes of `λ` to the
/// denominator.
pub trait Diagram: Clone + Ord {
    fn assignment(&self) -> Vec<(Slot, Cell, HookChoice)>;
}

/// A hook choice for every box of `(μ, ν, λ)`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct StanleyDiagram {
    shapes: [Partition; 3],
    choices: BTreeMap<(Slot, Cell), HookChoice>,
}

fn slot_index(slot: Slot) -> usize {
    match slot {
        Slot::Mu => 0,
        Slot::Nu => 1,
        Slot::Lam => 2,
    }
}

impl StanleyDiagram {
    pub fn new(
        mu: Partition,
        nu: Partition,
        lam: Partition,
        choices: BTreeMap<(Slot, Cell), HookChoice>,
    ) -> Result<Self, StanleyError> {
        let shapes = [mu, nu, lam];
        let expected: usize = shapes.iter().map(|p| p.weight() as usize).sum();
        for (&(slot, cell), _) in &choices {
            if !shapes[slot_index(slot)].has_box(cell) {
                return Err(StanleyError::NotTotal(format!("{} has no box {cell}", slot.name())));
            }
        }
        if choices.len() != expected {
            return Err(StanleyError::NotTotal(format!(
                "{} of {expected} boxes assigned",
                choices.len()
            )));
        }
        Ok(StanleyDiagram { shapes, choices })
    }

    /// Every box gets the same choice.
    pub fn uniform(mu: Partition, nu: Partition, lam: Partition, choice: HookChoice) -> Self {
        let mut choices = BTreeMap::new();
        for (slot, p) in Slot::ALL.into_iter().zip([&mu, &nu, &lam]) {
            for cell in p.boxes() {
                choices.insert((slot, cell), choice);
            }
        }
        StanleyDiagram { shapes: [mu, nu, lam], choices }
    }

    pub fn shape(&self, slot: Slot) -> &Partition {
        &self.shapes[slot_index(slot)]
    }

    pub fn get(&self, slot: Slot, cell: Cell) -> Option<HookChoice> {
        self.choices.get(&(slot, cell)).copied()
    }

    pub fn set(&mut self, slot: Slot, cell: Cell, choice: HookChoice) -> Result<(), StanleyError> {
        match self.choices.get_mut(&(slot, cell)) {
            Some(c) => {
                *c = choice;
                Ok(())
            }
            None => Err(StanleyError::NotTotal(format!("{} has no box {cell}", slot.name()))),
        }
    }

    /// Flip the hook at every listed box.
    pub fn flip(&self, boxes: &[(Slot, Cell)]) -> Self {
        let mut out = self.clone();
        for key in boxes {
            if let Some(c) = out.choices.get_mut(key) {
                *c = c.complement();
            }
        }
        out
    }

    /// All boxes flipped.
    pub fn conjugate(&self) -> Self {
        let mut out = self.clone();
        for c in out.choices.values_mut() {
            *c = c.complement();
        }
        out
    }

    /// Parse the `mu:..;nu:..;lam:..` text form against known shapes.
    pub fn parse(text: &str, mu: &Partition, nu: &Partition, lam: &Partition) -> Result<Self, StanleyError> {
        let blocks = split_blocks(text)?;
        let mut choices = BTreeMap::new();
        for ((slot, p), block) in Slot::ALL.into_iter().zip([mu, nu, lam]).zip(blocks) {
            let cells = p.boxes();
            let chars: Vec<char> = block.chars().collect();
            if chars.len() != cells.len() {
                return Err(StanleyError::Parse(format!(
                    "{} block has {} symbols, shape has {} boxes",
                    slot.name(),
                    chars.len(),
                    cells.len()
                )));
            }
            for (cell, ch) in cells.into_iter().zip(chars) {
                let choice = HookChoice::from_char(ch)
                    .ok_or_else(|| StanleyError::Parse(format!("unexpected symbol {ch:?}")))?;
                choices.insert((slot, cell), choice);
            }
        }
        StanleyDiagram::new(mu.clone(), nu.clone(), lam.clone(), choices)
    }
}

/// Split `mu:..;nu:..;lam:..` into its three bodies.
pub(crate) fn split_blocks(text: &str) -> Result<[&str; 3], StanleyError> {
    let parts: Vec<&str> = text.trim().split(';').collect();
    if parts.len() != 3 {
        return Err(StanleyError::Parse(format!("expected three blocks in {text:?}")));
    }
    let mut out = [""; 3];
    for (i, (part, slot)) in parts.iter().zip(Slot::ALL).enumerate() {
        let prefix = format!("{}:", slot.name());
        out[i] = part
            .trim()
            .strip_prefix(&prefix)
            .ok_or_else(|| StanleyError::Parse(format!("block {i} should start with {prefix}")))?;
    }
    Ok(out)
}

impl Diagram for StanleyDiagram {
    fn assignment(&self) -> Vec<(Slot, Cell, HookChoice)> {
        self.choices.iter().map(|(&(s, c), &h)| (s, c, h)).collect()
    }
}

impl fmt::Display for StanleyDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, slot) in Slot::ALL.into_iter().enumerate() {
            if i > 0 {
                write!(f, ";")?;
            }
            write!(f, "{}:", slot.name())?;
            for cell in self.shape(slot).boxes() {
                write!(f, "{}", self.choices[&(slot, cell)])?;
            }
        }
        Ok(())
    }
}
