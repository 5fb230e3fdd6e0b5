//! The Z₂ and σ₅₆ symmetries of `g⋆` in the hook space.

use std::collections::BTreeMap;

use jacklr_exact::{int, MultiPoly};
use jacklr_petjohn::{sigma56_on_ell, Subset};
use jacklr_stanley::{build_gstar, ell_var, BoxSet, FreeBox, RootDiagram, StanleySum};

use crate::orbits::{conjugate_ell, ell_slice, gstar_ell, orbit_sum, orbit_weight};
use crate::quotient::{pullback, pullback_sum};
use crate::Check;

/// Kneser vertex of a free box.
pub fn kneser_vertex(b: FreeBox) -> Subset {
    let (i, j) = b.label();
    Subset::from_elems(&[i, j])
}

pub fn box_of_vertex(d: Subset) -> FreeBox {
    let e = d.elems();
    FreeBox::from_label(e[0], e[1]).expect("Petersen vertex")
}

/// `σ₅₆` on the ℓ-variables: `ℓ_b ↦ ±ℓ_{b′}`.
pub fn sigma56_boxes() -> Vec<(FreeBox, i64, FreeBox)> {
    sigma56_on_ell()
        .iter()
        .map(|(d, s, e)| (box_of_vertex(d), s, box_of_vertex(e)))
        .collect()
}

pub fn apply_sigma56(p: &MultiPoly) -> MultiPoly {
    let bindings: BTreeMap<String, MultiPoly> = sigma56_boxes()
        .into_iter()
        .map(|(b, s, c)| (ell_var(b), MultiPoly::var(&ell_var(c)).scale(&int(s))))
        .collect();
    p.substitute(&bindings)
}

/// `pullback(T_k) = 0` for odd `k`, `pullback(T₂) ≠ 0`, and the resulting
/// conjugation invariance `g⋆ ≃ ḡ⋆`.
pub fn verify_odd_vanishing() -> Vec<Check> {
    let mut checks = Vec::new();
    for k in [1, 3, 5, 7, 9] {
        let t = orbit_sum(k);
        let q = pullback(&t);
        let name = format!("odd orbit sum T{k} vanishes in the hook space");
        let mut c = Check::new(name, q.is_zero(), format!("{} terms in T{k}", t.num_terms()));
        if !q.is_zero() {
            c = c.witness(&q);
        }
        checks.push(c);
    }
    checks.push(Check::new("T9 is identically zero", orbit_sum(9).is_zero(), "every weight vanishes"));
    let q2 = pullback(&orbit_sum(2));
    checks.push(
        Check::new("T2 survives in the hook space", !q2.is_zero(), "even degrees do not cancel").witness(&q2),
    );

    let g = gstar_ell();
    let lhs = pullback(&g);
    let rhs = pullback(&conjugate_ell(&g));
    let mut c = Check::new("pullback(C G) = pullback(G)", lhs == rhs, "ℓ ↦ −ℓ");
    if lhs != rhs {
        c = c.witness(&lhs).witness(&rhs);
    }
    checks.push(c);

    let gs = build_gstar();
    let conj: StanleySum<RootDiagram> = gs.map(|d| d.conjugate());
    let a = pullback_sum(&gs);
    let b = pullback_sum(&conj);
    let mut c = Check::new("g⋆ ≃ conjugate(g⋆)", a == b, "diagram-level conjugation");
    if a != b {
        c = c.witness(&a).witness(&b);
    }
    checks.push(c);
    checks
}

/// `σ₅₆`-invariance of `G⋆` in the hook space.
pub fn verify_sigma56_invariance() -> Vec<Check> {
    let mut checks = Vec::new();
    let g = gstar_ell();
    let sg = apply_sigma56(&g);
    let (a, b) = (pullback(&g), pullback(&sg));
    let mut c = Check::new("σ56 G ≃ G", a == b, "transported through the ℓ-variables");
    if a != b {
        c = c.witness(&a).witness(&b);
    }
    checks.push(c);

    let top = ell_slice(&g, 10);
    let sign: i64 = sigma56_boxes().iter().map(|&(_, s, _)| s).product();
    checks.push(
        Check::new(
            "degree-10 slice is σ56-invariant",
            apply_sigma56(&top) == top && sign == 1,
            format!("product of signs {sign}"),
        )
        .witness(&top),
    );

    let star = FreeBox::A1.claw();
    let independent = BoxSet::all()
        .find(|s| s.len() == 4 && s.edges() == 0)
        .expect("Petersen has independent 4-sets");
    let w1 = orbit_weight(star) + orbit_weight(independent);
    checks.push(Check::new(
        "W1 = w(4-star) + w(4-independent) = 0",
        w1 == 0,
        format!("{} + {}", orbit_weight(star), orbit_weight(independent)),
    ));

    let involution = sigma56_boxes().iter().all(|&(b, s, c)| {
        sigma56_boxes().iter().any(|&(b2, s2, c2)| b2 == c && c2 == b && s2 == s)
    });
    checks.push(Check::new("σ56 is a signed involution", involution, "on the ten ℓ-variables"));
    checks
}
