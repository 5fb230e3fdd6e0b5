//! Kernel sums: Stanley sums whose evaluation is a multiple of a linear hook
//! relation, hence zero wherever the relation holds.

use std::collections::BTreeMap;

use jacklr_exact::{int, MultiPoly};

use crate::{BoxSet, FreeBox, RootDiagram, StanleySum, BETA};

/// `f = Σ_{b∈Y} a_b h_b^{B_b} + d·β`, with hooks taken in the primed form of
/// the reference `B`. The support `Y` is the key set of `coeffs`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearHookForm {
    pub coeffs: BTreeMap<FreeBox, i64>,
    pub beta: i64,
}

fn hook_var(b: FreeBox) -> String {
    format!("h_{}", b.name())
}

/// Shift sign at `b`: the complementary primed hook is `h + σ_b β`.
fn shift_sign(reference: RootDiagram, b: FreeBox) -> i64 {
    -reference.effective(b).sign()
}

impl LinearHookForm {
    pub fn support(&self) -> BoxSet {
        self.coeffs.keys().copied().collect()
    }

    /// The form in the formal variables `h_<box>` and `beta`.
    pub fn to_poly(&self) -> MultiPoly {
        let mut p = MultiPoly::monomial(int(self.beta), &[(BETA, 1)]);
        for (&b, &a) in &self.coeffs {
            p = &p + &MultiPoly::monomial(int(a), &[(hook_var(b).as_str(), 1)]);
        }
        p
    }
}

/// The claw relation at `b`: `−x_b h_b + Σ_{a~b} x_a h_a − β`, hooks taken
/// from the primed form of `X`.
pub fn claw_form(b: FreeBox) -> LinearHookForm {
    let mut coeffs = BTreeMap::new();
    coeffs.insert(b, -b.x_sign());
    for a in b.neighbours().iter() {
        coeffs.insert(a, a.x_sign());
    }
    LinearHookForm { coeffs, beta: -1 }
}

/// `Σ_{L⊆Y} c_L B^L` with `c_L = (−1)^{|L|}(d − Σ_{b∈Y∖L} σ_b a_b)`.
///
/// An empty support degenerates to the scalar `d·B`.
pub fn kernel_sum(f: &LinearHookForm, reference: RootDiagram) -> StanleySum<RootDiagram> {
    let y = f.support();
    if y.is_empty() {
        return StanleySum::single(reference, f.beta);
    }
    let mut s = StanleySum::zero();
    let members: Vec<FreeBox> = y.iter().collect();
    for bits in 0u32..1 << members.len() {
        let l: BoxSet = members
            .iter()
            .enumerate()
            .filter(|(i, _)| bits >> i & 1 == 1)
            .map(|(_, &b)| b)
            .collect();
        let outside: i64 = (y ^ l)
            .iter()
            .map(|b| shift_sign(reference, b) * f.coeffs[&b])
            .sum();
        let sign = if l.len() % 2 == 0 { 1 } else { -1 };
        s.add_term(reference.flip(l), sign * (f.beta - outside));
    }
    s
}

/// Primed product of `d` in formal variables: `h_b` for the reference's
/// primed hook and `h_b + σ_b β` for its complement.
pub fn formal_product(d: RootDiagram, reference: RootDiagram) -> MultiPoly {
    let flipped = d.disagreement(reference);
    FreeBox::ALL
        .into_iter()
        .map(|b| {
            let h = MultiPoly::var(&hook_var(b));
            if flipped.contains(b) {
                &h + &MultiPoly::monomial(int(shift_sign(reference, b)), &[(BETA, 1)])
            } else {
                h
            }
        })
        .product()
}
