//! The five-variable hook space of the window family.
//!
//! Every relation among the window hooks is generated by the claws, so the
//! ring of hook polynomials modulo those relations is a polynomial ring in
//! the upper hooks of `a1, a3, b1, b̃3, c3` and `β`. The other five upper
//! hooks are resolved by fixed linear formulas.

use std::collections::BTreeMap;
use std::fmt;

use jacklr_exact::{int, MultiPoly, Rational};
use num_traits::Zero;
use jacklr_stanley::{
    ell_var, evaluate_virtual, FreeBox, HookChoice, RootDiagram, StanleySum, VirtualHookContext,
    BETA,
};

use crate::window::{beta_value, HookTable};

use FreeBox::*;

/// Boxes whose upper hooks are the free coordinates.
pub const FREE_BOXES: [FreeBox; 5] = [A1, A3, B1, Bt3, C3];

/// Coordinate name of a free upper hook, `h_<box>`.
pub fn hook_var(b: FreeBox) -> String {
    format!("h_{}", b.name())
}

fn h(b: FreeBox) -> MultiPoly {
    MultiPoly::var(&hook_var(b))
}

fn beta() -> MultiPoly {
    MultiPoly::var(BETA)
}

/// Upper hook of any free box in hook-space coordinates.
pub fn upper_hook(b: FreeBox) -> MultiPoly {
    let sum = |bs: &[FreeBox]| bs.iter().map(|&x| h(x)).sum::<MultiPoly>();
    match b {
        A2 => &sum(&[A1, A3, C3]) - &beta(),
        B2 => &sum(&[B1, C3, Bt3]) - &beta(),
        C5 => &sum(&[A3, C3, Bt3]) - &beta(),
        C4 => &sum(&[A1, A3, B1, C3, Bt3]) - &beta().scale(&int(2)),
        C2 => &sum(&[A1, B1, C3]) - &beta(),
        _ => h(b),
    }
}

/// `h^L = h^U − β`.
pub fn quotient_hook(b: FreeBox, choice: HookChoice) -> MultiPoly {
    match choice {
        HookChoice::U => upper_hook(b),
        HookChoice::L => &upper_hook(b) - &beta(),
    }
}

/// `ℓ_b = x_b(h^U + h^L)`.
pub fn ell_image(b: FreeBox) -> MultiPoly {
    let s = &quotient_hook(b, HookChoice::U) + &quotient_hook(b, HookChoice::L);
    s.scale(&int(b.x_sign()))
}

/// Canonical representative of an element of the hook space.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuotientPoly(MultiPoly);

impl QuotientPoly {
    pub fn as_poly(&self) -> &MultiPoly {
        &self.0
    }

    pub fn into_poly(self) -> MultiPoly {
        self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    /// Evaluates at a window: free hooks from the table and `β = α − 1`.
    pub fn specialize(&self, table: &HookTable) -> MultiPoly {
        let mut bindings: BTreeMap<String, MultiPoly> = FREE_BOXES
            .into_iter()
            .map(|b| (hook_var(b), table.free(b, HookChoice::U)))
            .collect();
        bindings.insert(BETA.to_string(), beta_value());
        self.0.substitute(&bindings)
    }

    /// Imposes the linear condition `form = 0` by eliminating one variable:
    /// the lexicographically last hook coordinate that occurs, or `β`.
    /// Returns the eliminated variable and the restricted polynomial.
    pub fn restrict(&self, form: &MultiPoly) -> (String, QuotientPoly) {
        let pivot = form
            .vars()
            .iter()
            .filter(|v| v.as_str() != BETA && !form.coeff(&[(v.as_str(), 1)]).is_zero())
            .max()
            .cloned()
            .unwrap_or_else(|| BETA.to_string());
        let c: Rational = form.coeff(&[(pivot.as_str(), 1)]);
        let rest = form
            .substitute_one(&pivot, &MultiPoly::zero())
            .scale(&-c.recip());
        (pivot.clone(), QuotientPoly(self.0.substitute_one(&pivot, &rest)))
    }
}

impl fmt::Display for QuotientPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// Hook values in hook-space coordinates.
#[derive(Clone, Copy, Debug, Default)]
pub struct QuotientHooks;

impl VirtualHookContext for QuotientHooks {
    fn free_hook(&self, b: FreeBox, choice: HookChoice) -> Option<MultiPoly> {
        Some(quotient_hook(b, choice))
    }
}

/// `ι*` on polynomials in the ℓ-variables and `β`.
pub fn pullback(p: &MultiPoly) -> QuotientPoly {
    let bindings: BTreeMap<String, MultiPoly> =
        FreeBox::ALL.into_iter().map(|b| (ell_var(b), ell_image(b))).collect();
    QuotientPoly(p.substitute(&bindings))
}

/// `ι*` of the virtual primed form of a Stanley sum.
pub fn pullback_sum(s: &StanleySum<RootDiagram>) -> QuotientPoly {
    QuotientPoly(evaluate_virtual(s, &QuotientHooks).expect("every free hook is defined"))
}

/// The claw polynomial `ℓ_b − Σ_{a~b} ℓ_a`.
pub fn claw_polynomial(b: FreeBox) -> MultiPoly {
    let nb: MultiPoly = b.neighbours().iter().map(|a| MultiPoly::var(&ell_var(a))).sum();
    &MultiPoly::var(&ell_var(b)) - &nb
}
