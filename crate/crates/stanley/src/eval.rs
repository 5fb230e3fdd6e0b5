use std::collections::BTreeMap;

use jacklr_exact::{int, MultiPoly, RatFunc};
use jacklr_partitions::{lower_hook, upper_hook, Cell, Partition, Slot};

use crate::{Diagram, FreeBox, HookChoice, RootDiagram, StanleyError, StanleySum};

/// Supplies the value of each hook symbol.
pub trait HookContext {
    fn hook(&self, slot: Slot, cell: Cell, choice: HookChoice) -> Option<MultiPoly>;
}

/// Hook values on the ten free boxes of the root triple, with `b̃3` as its own
/// box.
pub trait VirtualHookContext {
    fn free_hook(&self, b: FreeBox, choice: HookChoice) -> Option<MultiPoly>;
}

/// The actual α-hooks of a triple.
#[derive(Clone, Debug)]
pub struct TripleHooks {
    shapes: [Partition; 3],
}

impl TripleHooks {
    pub fn new(mu: Partition, nu: Partition, lam: Partition) -> Self {
        TripleHooks { shapes: [mu, nu, lam] }
    }

    pub fn root() -> Self {
        use jacklr_partitions::root;
        Self::new(root::mu(), root::nu(), root::lam())
    }
}

impl HookContext for TripleHooks {
    fn hook(&self, slot: Slot, cell: Cell, choice: HookChoice) -> Option<MultiPoly> {
        let p = &self.shapes[Slot::ALL.iter().position(|&s| s == slot).unwrap()];
        match choice {
            HookChoice::U => upper_hook(p, cell).ok(),
            HookChoice::L => lower_hook(p, cell).ok(),
        }
    }
}

/// An explicit table of hook values.
#[derive(Clone, Debug, Default)]
pub struct HookTable {
    entries: BTreeMap<(Slot, Cell, HookChoice), MultiPoly>,
}

impl HookTable {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn insert(&mut self, slot: Slot, cell: Cell, choice: HookChoice, value: MultiPoly) {
        self.entries.insert((slot, cell, choice), value);
    }
}

impl HookContext for HookTable {
    fn hook(&self, slot: Slot, cell: Cell, choice: HookChoice) -> Option<MultiPoly> {
        self.entries.get(&(slot, cell, choice)).cloned()
    }
}

fn lookup(ctx: &impl HookContext, slot: Slot, cell: Cell, choice: HookChoice) -> Result<MultiPoly, StanleyError> {
    ctx.hook(slot, cell, choice).ok_or(StanleyError::MissingHook {
        slot,
        row: cell.row,
        col: cell.col,
        choice,
    })
}

/// `Σ c_D ∏_{μ,ν} h^{D_b} / ∏_λ h^{D_b}`.
pub fn evaluate<D: Diagram>(s: &StanleySum<D>, ctx: &impl HookContext) -> Result<RatFunc, StanleyError> {
    let mut total = RatFunc::zero();
    for (d, c) in s.iter() {
        let mut numer = MultiPoly::from_int(c);
        let mut denom = MultiPoly::one();
        for (slot, cell, choice) in d.assignment() {
            let h = lookup(ctx, slot, cell, choice)?;
            if slot == Slot::Lam {
                denom = &denom * &h;
            } else {
                numer = &numer * &h;
            }
        }
        total = total.add(&RatFunc::new(numer, denom)?);
    }
    Ok(total)
}

/// `Σ c_D · D′`, where `D′` multiplies by `j_λ` so that every λ box appears
/// in the numerator with the complementary hook.
pub fn evaluate_poly<D: Diagram>(s: &StanleySum<D>, ctx: &impl HookContext) -> Result<MultiPoly, StanleyError> {
    let mut total = MultiPoly::zero();
    for (d, c) in s.iter() {
        let mut term = MultiPoly::from_int(c);
        for (slot, cell, choice) in d.assignment() {
            let choice = if slot == Slot::Lam { choice.complement() } else { choice };
            term = &term * &lookup(ctx, slot, cell, choice)?;
        }
        total = &total + &term;
    }
    Ok(total)
}

/// Primed form on the ten free boxes: `Σ c_D ∏_b h_b^{D′_b}` with `b̃3` in the
/// numerator. On the root triple this is the twelve-box primed value divided
/// by `α`.
pub fn evaluate_virtual(
    s: &StanleySum<RootDiagram>,
    ctx: &impl VirtualHookContext,
) -> Result<MultiPoly, StanleyError> {
    let mut total = MultiPoly::zero();
    for (d, c) in s.iter() {
        let mut term = MultiPoly::constant(int(c));
        for b in FreeBox::ALL {
            let choice = d.effective(b);
            let h = ctx
                .free_hook(b, choice)
                .ok_or(StanleyError::MissingVirtualHook(b.name(), choice))?;
            term = &term * &h;
        }
        total = &total + &term;
    }
    Ok(total)
}
