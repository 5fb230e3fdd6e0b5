//! Boundary data: on each hyperplane `h_b^A = 0`, `g⋆` collapses to a single
//! diagram in the hook space.

use jacklr_stanley::{build_gstar, reference_x, s5_generators, FreeBox, HookChoice, RootDiagram, StanleySum};

use crate::quotient::{pullback_sum, quotient_hook};
use crate::Check;

/// `E(b, X_b) = X^{cl(b)}` and `E(b, X̄_b) = X̄^{cl(b)}`. The choice is the
/// stored hook choice of the diagram at `b`.
pub fn boundary_datum(b: FreeBox, choice: HookChoice) -> RootDiagram {
    let x = reference_x();
    let base = if x.choice(b) == choice { x } else { x.conjugate() };
    base.flip(b.claw())
}

/// The hook whose vanishing defines the hyperplane of `(b, choice)`. λ boxes
/// enter the primed form with the complementary hook.
pub fn hyperplane_form(b: FreeBox, choice: HookChoice) -> jacklr_exact::MultiPoly {
    let effective = if b.is_lambda() { choice.complement() } else { choice };
    quotient_hook(b, effective)
}

/// Compares `g⋆` and its boundary datum on the hyperplane of `(b, choice)`.
pub fn verify_hyperplane(b: FreeBox, choice: HookChoice) -> Check {
    let datum = boundary_datum(b, choice);
    let form = hyperplane_form(b, choice);
    let gs = pullback_sum(&build_gstar());
    let single = pullback_sum(&StanleySum::single(datum, 1));
    let (pivot, lhs) = gs.restrict(&form);
    let (_, rhs) = single.restrict(&form);
    let passed = lhs == rhs;
    let mut c = Check::new(
        format!("hyperplane {b}^{choice}"),
        passed,
        format!("datum {datum}; eliminated {pivot} from {form} = 0"),
    );
    if !passed {
        c = c.witness(&lhs).witness(&rhs);
    }
    c
}

/// All twenty hyperplane checks.
pub fn verify_all_hyperplanes() -> Vec<Check> {
    FreeBox::ALL
        .into_iter()
        .flat_map(|b| [HookChoice::U, HookChoice::L].map(|c| verify_hyperplane(b, c)))
        .collect()
}

/// The claw-flip data `X^{cl(b)}` as drawn in the figure of boundary data.
pub const CLAW_FLIP_FIGURE: [(FreeBox, &str); 10] = [
    (FreeBox::A1, "mu:LUL;nu:ULU;lam:UL?UL?"),
    (FreeBox::A2, "mu:LLL;nu:UUU;lam:UU?UU?"),
    (FreeBox::A3, "mu:LLU;nu:UUL;lam:UU?LL?"),
    (FreeBox::B1, "mu:ULU;nu:LUL;lam:UL?UL?"),
    (FreeBox::B2, "mu:UUU;nu:LLL;lam:UU?UU?"),
    (FreeBox::Bt3, "mu:UUL;nu:LLU;lam:UU?LL?"),
    (FreeBox::C2, "mu:ULU;nu:ULU;lam:LU?LL?"),
    (FreeBox::C3, "mu:LUU;nu:LUU;lam:LU?UU?"),
    (FreeBox::C4, "mu:UUU;nu:UUU;lam:LL?LU?"),
    (FreeBox::C5, "mu:UUL;nu:UUL;lam:LL?UL?"),
];

/// Boundary data against the figure, and their conjugates.
pub fn verify_boundary_figure() -> Vec<Check> {
    let x = reference_x();
    let mut checks = Vec::new();
    for (b, text) in CLAW_FLIP_FIGURE {
        let datum = boundary_datum(b, x.choice(b));
        let conj = boundary_datum(b, x.choice(b).complement());
        let passed = datum.to_string() == text && conj == datum.conjugate();
        let mut c = Check::new(format!("boundary datum of {b} matches the figure"), passed, text);
        if !passed {
            c = c.witness(datum).witness(conj);
        }
        checks.push(c);
    }
    checks
}

/// `E(g·b) = g·E(b)` for the S₅ generators.
pub fn verify_boundary_equivariance() -> Check {
    let x = reference_x();
    let mut bad = Vec::new();
    for (name, g) in s5_generators() {
        for b in FreeBox::ALL {
            let gb = g.on_box(b);
            if boundary_datum(b, x.choice(b)).act(&g) != boundary_datum(gb, x.choice(gb)) {
                bad.push(format!("{name} on {b}"));
            }
        }
    }
    let mut c = Check::new("boundary data are S5-equivariant", bad.is_empty(), "four generators on ten boxes");
    for w in bad {
        c = c.witness(w);
    }
    c
}
