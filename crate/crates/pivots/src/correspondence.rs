//! The hook correspondence `ψ_d` between `κ+a` and `κ+b`.
//!
//! Boxes left of `d` trade rows with the row of `a`; boxes above `d` trade
//! columns with the column of `b`. The leg of `d` slides one row towards `d`
//! unless its row ends in an outer corner of `κ+a+b`, in which case it jumps
//! flipped into the arm, under that corner. The arm does the transposed
//! thing with inner corners. Everything else stays put.

use std::collections::BTreeMap;
use std::fmt;

use jacklr_exact::MultiPoly;
use jacklr_partitions::{lower_hook, upper_hook, Cell, Partition, PivotPair, Slot};
use jacklr_stanley::{HookChoice, StanleyDiagram};

use crate::PivotError;

/// Image of one box: where it goes and whether its hook choice flips.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BoxImage {
    pub cell: Cell,
    pub flipped: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HookCorrespondence {
    pub pivot: PivotPair,
    pub source: Partition,
    pub target: Partition,
    map: BTreeMap<Cell, BoxImage>,
}

fn hook(p: &Partition, c: Cell, choice: HookChoice) -> MultiPoly {
    match choice {
        HookChoice::U => upper_hook(p, c),
        HookChoice::L => lower_hook(p, c),
    }
    .expect("box lies in its shape")
}

/// `ψ_d : κ+a → κ+b` for two addable corners of `κ`, in either order.
pub fn hook_correspondence(base: &Partition, a: Cell, b: Cell) -> Result<HookCorrespondence, PivotError> {
    let pivot = PivotPair::new(base, a, b).ok_or_else(|| PivotError::NotCorners { base: base.clone(), a, b })?;
    HookCorrespondence::from_pivot(pivot)
}

impl HookCorrespondence {
    pub fn from_pivot(pivot: PivotPair) -> Result<Self, PivotError> {
        let d = pivot.pivot_box;
        let (rb, ca) = (d.row, d.col);
        let ra = pivot.corner_a.row;
        let cb = pivot.corner_b.col;
        let union = pivot.lambda1.with_box(pivot.corner_b).ok_or_else(|| {
            PivotError::RuleInapplicable(format!("{} + {} is not a partition", pivot.lambda1, pivot.corner_b))
        })?;
        let union_cols = union.conjugate();
        let row_len = |i: usize| union.row(i) as usize;
        let col_len = |j: usize| union_cols.row(j) as usize;

        let source = pivot.lambda1.clone();
        let mut map = BTreeMap::new();
        for c in source.boxes() {
            let (i, j) = (c.row, c.col);
            let image = if c == d {
                BoxImage { cell: d, flipped: true }
            } else if j == ca && i > rb {
                // leg of d, down to a
                if row_len(i) < row_len(i - 1) {
                    BoxImage { cell: Cell::new(rb, row_len(i)), flipped: true }
                } else {
                    BoxImage { cell: Cell::new(i - 1, ca), flipped: false }
                }
            } else if i == rb && j > ca {
                // arm of d, up to the box before b
                if col_len(j) > col_len(j + 1) {
                    BoxImage { cell: Cell::new(col_len(j) - 1, ca), flipped: true }
                } else {
                    BoxImage { cell: Cell::new(rb, j + 1), flipped: false }
                }
            } else if i == rb && j < ca {
                BoxImage { cell: Cell::new(ra, j), flipped: false }
            } else if i == ra && j < ca {
                BoxImage { cell: Cell::new(rb, j), flipped: false }
            } else if j == ca && i < rb {
                BoxImage { cell: Cell::new(i, cb), flipped: false }
            } else if j == cb && i < rb {
                BoxImage { cell: Cell::new(i, ca), flipped: false }
            } else {
                BoxImage { cell: c, flipped: false }
            };
            map.insert(c, image);
        }

        let target = pivot.lambda2.clone();
        let mut images: Vec<Cell> = map.values().map(|im| im.cell).collect();
        images.sort();
        if images != target.boxes() {
            return Err(PivotError::RuleInapplicable(format!(
                "box map {source} → {target} is not a bijection"
            )));
        }
        Ok(HookCorrespondence { pivot, source, target, map })
    }

    pub fn image(&self, c: Cell) -> Option<BoxImage> {
        self.map.get(&c).copied()
    }

    pub fn iter(&self) -> impl Iterator<Item = (Cell, BoxImage)> + '_ {
        self.map.iter().map(|(&c, &im)| (c, im))
    }

    /// `ψ_d⁻¹ : κ+b → κ+a`.
    pub fn inverse(&self) -> Self {
        let map = self
            .map
            .iter()
            .map(|(&c, im)| (im.cell, BoxImage { cell: c, flipped: im.flipped }))
            .collect();
        HookCorrespondence {
            pivot: self.pivot.clone(),
            source: self.target.clone(),
            target: self.source.clone(),
            map,
        }
    }

    /// Transports the hook choices in `slot`; the other two slots are
    /// untouched.
    pub fn apply(&self, diagram: &StanleyDiagram, slot: Slot) -> Result<StanleyDiagram, PivotError> {
        if diagram.shape(slot) != &self.source {
            return Err(PivotError::RuleInapplicable(format!(
                "{} slot holds {}, correspondence starts at {}",
                slot.name(),
                diagram.shape(slot),
                self.source
            )));
        }
        let mut choices = BTreeMap::new();
        let mut shapes = Vec::new();
        for s in Slot::ALL {
            if s == slot {
                for (c, im) in self.iter() {
                    let choice = diagram.get(s, c).expect("total diagram");
                    choices.insert((s, im.cell), if im.flipped { choice.complement() } else { choice });
                }
                shapes.push(self.target.clone());
            } else {
                for c in diagram.shape(s).boxes() {
                    choices.insert((s, c), diagram.get(s, c).expect("total diagram"));
                }
                shapes.push(diagram.shape(s).clone());
            }
        }
        let [mu, nu, lam]: [Partition; 3] = shapes.try_into().expect("three slots");
        Ok(StanleyDiagram::new(mu, nu, lam, choices)?)
    }

    /// For every box and choice, `h(s) − σ·h(ψ s)` with `σ = −1` on flips
    /// must be an integer multiple `k·x` of the shared hook.
    pub fn verify(&self) -> CorrespondenceCheck {
        let x = &self.pivot.shared_hook;
        let mut boxes = Vec::new();
        for (c, im) in self.iter() {
            for choice in [HookChoice::U, HookChoice::L] {
                let image_choice = if im.flipped { choice.complement() } else { choice };
                let hs = hook(&self.source, c, choice);
                let ht = hook(&self.target, im.cell, image_choice);
                let residual = if im.flipped { &hs + &ht } else { &hs - &ht };
                let multiple = (-2..=2).find(|&k| residual == x.scale(&jacklr_exact::int(k)));
                boxes.push(BoxCheck { source: c, choice, image: im, residual, multiple });
            }
        }
        let pivot_vanishes = hook(&self.source, self.pivot.pivot_box, HookChoice::U) == *x;
        CorrespondenceCheck { source: self.source.clone(), target: self.target.clone(), boxes, pivot_vanishes }
    }
}

impl fmt::Display for HookCorrespondence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ψ at {}: {} → {}", self.pivot.pivot_box, self.source, self.target)?;
        for (c, im) in self.iter() {
            if im.cell != c || im.flipped {
                write!(f, " {c}→{}{}", im.cell, if im.flipped { "'" } else { "" })?;
            }
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoxCheck {
    pub source: Cell,
    pub choice: HookChoice,
    pub image: BoxImage,
    pub residual: MultiPoly,
    /// `k` with `residual = k·x`, if any.
    pub multiple: Option<i64>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CorrespondenceCheck {
    pub source: Partition,
    pub target: Partition,
    pub boxes: Vec<BoxCheck>,
    /// `h^U_{κ+a}(d) = x`, so the pivot hook is zero on the hyperplane.
    pub pivot_vanishes: bool,
}

impl CorrespondenceCheck {
    pub fn passed(&self) -> bool {
        self.pivot_vanishes && self.boxes.iter().all(|b| b.multiple.is_some())
    }

    pub fn failures(&self) -> Vec<&BoxCheck> {
        self.boxes.iter().filter(|b| b.multiple.is_none()).collect()
    }
}

/// Every `ψ_d` for every `κ` with `|κ| ≤ max_weight`.
pub fn all_correspondences(max_weight: u32) -> Result<Vec<HookCorrespondence>, PivotError> {
    (0..=max_weight)
        .flat_map(jacklr_partitions::enumerate_partitions)
        .flat_map(|k| jacklr_partitions::pivot_pairs(&k))
        .map(HookCorrespondence::from_pivot)
        .collect()
}
