//! Orbit sums of `G⋆ = Σ_I β^{|I|} w_I ℓ_{H∖I}` graded by ℓ-degree.

use std::collections::BTreeSet;

use jacklr_exact::{int, MultiPoly};
use jacklr_stanley::{
    build_gstar, ell_expansion, ell_var, reference_x, s5_generators, BoxSet, FreeBox, BETA,
};

/// `G⋆`: the ℓ-expansion of `g⋆` relative to `X`. Its `β^{10}` coefficient
/// is 42 and its top ℓ-degree part is `2∏ℓ_b`.
pub fn gstar_ell() -> MultiPoly {
    ell_expansion(&build_gstar(), reference_x())
}

/// Orbit weight `w_Ō = 2e(Ō) − |Ō| + 1` of the β-set `Ō`; half of the
/// coefficient in `G⋆`.
pub fn orbit_weight(beta_set: BoxSet) -> i64 {
    2 * beta_set.edges() as i64 - beta_set.len() as i64 + 1
}

fn ell_monomial(support: BoxSet) -> MultiPoly {
    let names: Vec<String> = support.iter().map(ell_var).collect();
    let pw: Vec<(&str, u32)> = names.iter().map(|n| (n.as_str(), 1)).collect();
    MultiPoly::monomial(int(1), &pw)
}

/// `T_k = Σ_{|O|=k} w_Ō ℓ_O`, so that `G⋆ = 2 Σ_k β^{10−k} T_k`.
pub fn orbit_sum(k: u32) -> MultiPoly {
    BoxSet::all()
        .filter(|s| s.len() == k)
        .map(|s| ell_monomial(s).scale(&int(orbit_weight(!s))))
        .sum()
}

/// One S₅-orbit of ℓ-supports.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Orbit {
    /// Smallest mask in the orbit.
    pub representative: BoxSet,
    pub size: usize,
    /// Petersen edges inside the support.
    pub edges: u32,
    /// `w_Ō` of the complementary β-set.
    pub weight: i64,
}

/// S₅-orbits of `k`-subsets of the Petersen vertices, by representative.
pub fn orbits(k: u32) -> Vec<Orbit> {
    let gens: Vec<_> = s5_generators().into_iter().map(|(_, g)| g).collect();
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for s in BoxSet::all().filter(|s| s.len() == k) {
        if seen.contains(&s) {
            continue;
        }
        let mut orbit = BTreeSet::from([s]);
        let mut frontier = vec![s];
        while let Some(t) = frontier.pop() {
            for g in &gens {
                let u = g.on_set(t);
                if orbit.insert(u) {
                    frontier.push(u);
                }
            }
        }
        seen.extend(orbit.iter().copied());
        out.push(Orbit {
            representative: s,
            size: orbit.len(),
            edges: s.edges(),
            weight: orbit_weight(!s),
        });
    }
    out
}

/// The adjacency operator `A`, extended multiplicatively:
/// `ℓ_b ↦ Σ_{a~b} ℓ_a`.
pub fn adjacency_operator(p: &MultiPoly) -> MultiPoly {
    let bindings = FreeBox::ALL
        .into_iter()
        .map(|b| {
            let image: MultiPoly = b.neighbours().iter().map(|a| MultiPoly::var(&ell_var(a))).sum();
            (ell_var(b), image)
        })
        .collect();
    p.substitute(&bindings)
}

/// Conjugation `C: ℓ ↦ −ℓ` (β fixed).
pub fn conjugate_ell(p: &MultiPoly) -> MultiPoly {
    let bindings = FreeBox::ALL
        .into_iter()
        .map(|b| (ell_var(b), -MultiPoly::var(&ell_var(b))))
        .collect();
    p.substitute(&bindings)
}

/// The coefficient of `β^{10−k}` in `p`, as a polynomial in ℓ.
pub fn ell_slice(p: &MultiPoly, k: u32) -> MultiPoly {
    p.coefficients_in(BETA).remove(&(10 - k)).unwrap_or_else(MultiPoly::zero)
}
