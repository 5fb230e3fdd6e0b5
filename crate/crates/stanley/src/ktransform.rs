//! K-values, their inverse, and the ℓ-basis weights.
//!
//! Subsets of the ten free boxes are indexed by [`BoxSet`] masks, so all
//! transforms here are zeta/Möbius transforms over the Boolean lattice 2^10.

use jacklr_exact::{int, MultiPoly};

use crate::{BoxSet, FreeBox, RootDiagram, StanleySum};

pub const BETA: &str = "beta";

const N: usize = 1 << 10;

/// Name of the ℓ variable of a free box, e.g. `l_a1`.
pub fn ell_var(b: FreeBox) -> String {
    format!("l_{}", b.name())
}

/// `K^B_I` for every subset `I`, relative to a fixed reference `B`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KValues {
    reference: RootDiagram,
    values: Vec<i64>,
}

impl KValues {
    pub fn reference(&self) -> RootDiagram {
        self.reference
    }

    pub fn get(&self, i: BoxSet) -> i64 {
        self.values[i.0 as usize]
    }

    pub fn iter(&self) -> impl Iterator<Item = (BoxSet, i64)> + '_ {
        self.values.iter().enumerate().map(|(m, &k)| (BoxSet(m as u16), k))
    }

    /// Subsets with non-zero K-value.
    pub fn support(&self) -> Vec<(BoxSet, i64)> {
        self.iter().filter(|&(_, k)| k != 0).collect()
    }
}

/// In place: `v[I] ← Σ_{J ⊆ I} v[J]`.
fn subset_zeta(v: &mut [i64]) {
    for bit in 0..10 {
        for m in 0..N {
            if m >> bit & 1 == 1 {
                v[m] += v[m ^ 1 << bit];
            }
        }
    }
}

/// In place: `v[I] ← Σ_{J ⊇ I} (−1)^{|J∖I|} v[J]`.
fn superset_mobius(v: &mut [i64]) {
    for bit in 0..10 {
        for m in 0..N {
            if m >> bit & 1 == 0 {
                v[m] -= v[m | 1 << bit];
            }
        }
    }
}

/// `K^B_I(s) = Σ_{D : D_I = B_I} c_D`.
pub fn k_transform(s: &StanleySum<RootDiagram>, reference: RootDiagram) -> KValues {
    // g[F] collects coefficients by disagreement set; K_I sums g over F ⊆ ~I.
    let mut g = vec![0i64; N];
    for (d, c) in s.iter() {
        g[d.disagreement(reference).0 as usize] += c;
    }
    subset_zeta(&mut g);
    let values = (0..N).map(|m| g[(!BoxSet(m as u16)).0 as usize]).collect();
    KValues { reference, values }
}

/// Rebuild the Stanley sum from its K-values.
pub fn k_inverse(k: &KValues) -> StanleySum<RootDiagram> {
    // c at the diagram agreeing with B exactly on I.
    let mut c = k.values.clone();
    superset_mobius(&mut c);
    c.into_iter()
        .enumerate()
        .map(|(m, coeff)| (k.reference.flip(!BoxSet(m as u16)), coeff))
        .collect()
}

/// Re-express K-values against a new reference by single-box flips.
pub fn change_reference(k: &KValues, target: RootDiagram) -> KValues {
    let mut values = k.values.clone();
    for b in k.reference.disagreement(target).iter() {
        let bit = 1 << b.index();
        let old = values.clone();
        for m in 0..N {
            if m & bit != 0 {
                values[m] = -old[m] + old[m ^ bit];
            }
        }
    }
    KValues { reference: target, values }
}

/// `w_I = (−1)^{|I|} Σ_{J ⊆ I} (−2)^{|J|} K_J`, indexed by mask.
pub fn ell_weights(k: &KValues) -> Vec<i64> {
    let mut w: Vec<i64> = k
        .iter()
        .map(|(j, kj)| kj * (-2i64).pow(j.len()))
        .collect();
    subset_zeta(&mut w);
    for (m, x) in w.iter_mut().enumerate() {
        if (m as u16).count_ones() % 2 == 1 {
            *x = -*x;
        }
    }
    w
}

/// Closed form of the weights of `g⋆` against `X`: `2(2e_I − |I| + 1)`.
pub fn gstar_weight(i: BoxSet) -> i64 {
    2 * (2 * i.edges() as i64 - i.len() as i64 + 1)
}

/// `Σ_I β^{|I|} w_I ℓ_{H∖I}` in the variables `l_<box>` and `beta`.
///
/// With `ℓ_b = x_b(h^U_b + h^L_b)` and `x_b` the sign of the reference's
/// primed hook at `b`, this equals `2^10 · (∏_b x_b) · s′` on the ten free
/// boxes.
pub fn ell_expansion(s: &StanleySum<RootDiagram>, reference: RootDiagram) -> MultiPoly {
    let w = ell_weights(&k_transform(s, reference));
    let names: Vec<String> = FreeBox::ALL.into_iter().map(ell_var).collect();
    let mut total = MultiPoly::zero();
    for i in BoxSet::all() {
        let wi = w[i.0 as usize];
        if wi == 0 {
            continue;
        }
        let mut powers: Vec<(&str, u32)> = (!i).iter().map(|b| (names[b.index()].as_str(), 1)).collect();
        if !i.is_empty() {
            powers.push((BETA, i.len()));
        }
        total = &total + &MultiPoly::monomial(int(wi), &powers);
    }
    total
}
