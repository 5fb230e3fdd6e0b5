//! The hook identities behind `ψ_d`: for a third corner `c` of `κ`, two
//! hooks through `c` on either side of the pivot add up to `x`.

use std::fmt;

use jacklr_exact::MultiPoly;
use jacklr_partitions::{lower_hook, upper_hook, Cell, Partition, PivotPair};

/// Whether `c` is an outer (addable) or inner (removable) corner of `κ`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum CornerKind {
    Outer,
    Inner,
}

/// Position of `c` relative to the pivot corners, ordered by content.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum CornerPosition {
    /// `c < a`
    Before,
    /// `a < c < b`
    Between,
    /// `b < c`
    After,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LemmaIdentity {
    pub base: Partition,
    pub corner_a: Cell,
    pub corner_b: Cell,
    pub corner_c: Cell,
    pub kind: CornerKind,
    pub position: CornerPosition,
    /// `None` when a box the identity refers to is missing from its shape.
    pub lhs: Option<MultiPoly>,
    pub x: MultiPoly,
}

impl LemmaIdentity {
    pub fn holds(&self) -> bool {
        self.lhs.as_ref() == Some(&self.x)
    }
}

impl fmt::Display for LemmaIdentity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let lhs = self.lhs.as_ref().map_or("undefined".to_string(), |p| p.to_string());
        write!(
            f,
            "κ={} a={} b={} c={} {:?}/{:?}: {} vs x = {}",
            self.base, self.corner_a, self.corner_b, self.corner_c, self.kind, self.position, lhs, self.x
        )
    }
}

fn position(a: Cell, b: Cell, c: Cell) -> CornerPosition {
    if c.content() < a.content() {
        CornerPosition::Before
    } else if c.content() < b.content() {
        CornerPosition::Between
    } else {
        CornerPosition::After
    }
}

/// The identity for one third corner.
pub fn lemma_identity(pair: &PivotPair, c: Cell, kind: CornerKind) -> LemmaIdentity {
    let (a, b) = (pair.corner_a, pair.corner_b);
    let (plus_a, plus_b) = (&pair.lambda1, &pair.lambda2);
    let pos = position(a, b, c);
    let up = |p: &Partition, cell: Cell| upper_hook(p, cell).ok();
    let lo = |p: &Partition, cell: Cell| lower_hook(p, cell).ok();
    let sum = |x: Option<MultiPoly>, y: Option<MultiPoly>, sx: bool, sy: bool| -> Option<MultiPoly> {
        let x = x?;
        let y = y?;
        let x = if sx { x } else { -x };
        let y = if sy { y } else { -y };
        Some(&x + &y)
    };
    let (ac, bc) = (a.meet(c), b.meet(c));
    let lhs = match (kind, pos) {
        (CornerKind::Outer, CornerPosition::Between) => sum(lo(plus_b, bc), up(plus_a, ac), true, true),
        (CornerKind::Outer, CornerPosition::Before) => sum(lo(plus_b, bc), lo(plus_a, ac), true, false),
        (CornerKind::Outer, CornerPosition::After) => sum(up(plus_b, bc), up(plus_a, ac), false, true),
        (CornerKind::Inner, CornerPosition::Between) => sum(up(plus_b, ac), lo(plus_a, bc), true, true),
        // for inner corners the two outer cases trade places
        (CornerKind::Inner, CornerPosition::After) => sum(up(plus_b, ac), up(plus_a, bc), true, false),
        (CornerKind::Inner, CornerPosition::Before) => sum(lo(plus_b, ac), lo(plus_a, bc), false, true),
    };
    LemmaIdentity {
        base: pair.base.clone(),
        corner_a: a,
        corner_b: b,
        corner_c: c,
        kind,
        position: pos,
        lhs,
        x: pair.shared_hook.clone(),
    }
}

/// Inner corners of `κ` that stay inner corners of both `κ+a` and `κ+b`.
/// The box directly above `a` and the box directly left of `b` do not, and
/// no identity holds for them.
pub fn applicable_inner_corners(pair: &PivotPair) -> Vec<Cell> {
    let (ra, rb) = (pair.lambda1.removable_corners(), pair.lambda2.removable_corners());
    pair.base
        .removable_corners()
        .into_iter()
        .filter(|c| ra.contains(c) && rb.contains(c))
        .collect()
}

/// All identities for one pivot: every other outer corner and every
/// applicable inner corner of `κ`.
pub fn lemma_identities(pair: &PivotPair) -> Vec<LemmaIdentity> {
    let outer = pair
        .base
        .addable_corners()
        .into_iter()
        .filter(|&c| c != pair.corner_a && c != pair.corner_b)
        .map(|c| (c, CornerKind::Outer));
    let inner = applicable_inner_corners(pair).into_iter().map(|c| (c, CornerKind::Inner));
    outer.chain(inner).map(|(c, k)| lemma_identity(pair, c, k)).collect()
}

/// Every identity for every `κ` with `|κ| ≤ max_weight` and every pivot.
pub fn all_lemma_identities(max_weight: u32) -> Vec<LemmaIdentity> {
    (0..=max_weight)
        .flat_map(jacklr_partitions::enumerate_partitions)
        .flat_map(|k| jacklr_partitions::pivot_pairs(&k))
        .flat_map(|p| lemma_identities(&p))
        .collect()
}
