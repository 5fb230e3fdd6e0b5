use jacklr_exact::MultiPoly;

use crate::{lower_hook, upper_hook, Cell, Partition};

/// Two shapes `κ+a`, `κ+b` that differ by moving one box between addable
/// corners of `κ`. The corner `a` is the lower-left one (`row(a) > row(b)`),
/// and the pivot box `d = (row b, col a)` has `h^U_{κ+a}(d) = h^L_{κ+b}(d)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PivotPair {
    pub base: Partition,
    pub corner_a: Cell,
    pub corner_b: Cell,
    pub lambda1: Partition,
    pub lambda2: Partition,
    pub pivot_box: Cell,
    pub shared_hook: MultiPoly,
}

impl PivotPair {
    /// Builds the pair for two addable corners given in either order.
    pub fn new(base: &Partition, c1: Cell, c2: Cell) -> Option<Self> {
        let corners = base.addable_corners();
        if c1 == c2 || !corners.contains(&c1) || !corners.contains(&c2) {
            return None;
        }
        let (a, b) = if c1.row > c2.row { (c1, c2) } else { (c2, c1) };
        let lambda1 = base.with_box(a)?;
        let lambda2 = base.with_box(b)?;
        let d = a.meet(b);
        let x = upper_hook(&lambda1, d).expect("pivot box in κ+a");
        let y = lower_hook(&lambda2, d).expect("pivot box in κ+b");
        assert_eq!(x, y, "shared hook mismatch at {d} for {base} (convention bug)");
        Some(PivotPair {
            base: base.clone(),
            corner_a: a,
            corner_b: b,
            lambda1,
            lambda2,
            pivot_box: d,
            shared_hook: x,
        })
    }
}

/// One pair per unordered pair of distinct addable corners.
pub fn pivot_pairs(base: &Partition) -> Vec<PivotPair> {
    let corners = base.addable_corners();
    let mut out = Vec::new();
    for (i, &c1) in corners.iter().enumerate() {
        for &c2 in &corners[i + 1..] {
            out.push(PivotPair::new(base, c1, c2).expect("distinct addable corners"));
        }
    }
    out
}
