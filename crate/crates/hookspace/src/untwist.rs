//! Untwisting `G⋆` from the Petersen ℓ-variables to `x1..x6` on `Σx = 0`,
//! and the non-negativity observations.

use std::collections::BTreeMap;

use jacklr_exact::symmetric::{expand_in_elementary, from_elementary, monomial_coefficients, x_var};
use jacklr_exact::{int, parse_poly, rat, MultiPoly, Rational, ALPHA};
use jacklr_petjohn::{psi, Embedding, MysticPentagon};
use jacklr_stanley::{ell_var, FreeBox, BETA};
use num_traits::Signed;

use crate::orbits::gstar_ell;
use crate::quotient::FREE_BOXES;
use crate::symmetry::box_of_vertex;
use crate::window::{beta_value, HookTable};
use crate::Check;

use FreeBox::*;

/// The observed expansion of `G⋆` in `e2..e6` and `β`.
pub const E_EXPANSION: &str = "42*beta^10 + 54*e2*beta^8 + (34*e4 + 14*e2^2)*beta^6 \
    + (42*e6 + 30*e3^2 + 4*e2*e4 + 2*e2^3)*beta^4 \
    + (-8*e4^2 - 18*e3*e5 + 12*e2*e6 + 6*e2*e3^2 + 2*e2^2*e4)*beta^2 \
    + (2*e5^2 - 8*e4*e6 + 2*e3^2*e4 - 2*e2*e3*e5 + 2*e2^2*e6)";

pub fn expected_e_expansion() -> MultiPoly {
    parse_poly(E_EXPANSION).expect("literal parses")
}

/// Ground element `i` of `{0..5}` as a coordinate; `0` is `x6`.
fn coordinate(i: u8) -> MultiPoly {
    MultiPoly::var(&x_var(if i == 0 { 6 } else { i as usize }))
}

/// The pentagon `(12)(23)(34)(45)(15)` and its embedding.
pub fn standard_embedding() -> Embedding {
    Embedding::new(MysticPentagon::from_cycle(&[1, 2, 3, 4, 5]).expect("valid pentagon"))
}

/// `ℓ_b ↦ ±x_T` with `x_T = Σ_{i∈T} x_i`, read off `ψ`.
pub fn untwist_images(emb: &Embedding) -> BTreeMap<FreeBox, MultiPoly> {
    psi(emb)
        .into_iter()
        .map(|(d, sign, t)| {
            let xt: MultiPoly = t.elems().into_iter().map(coordinate).sum();
            (box_of_vertex(d), xt.scale(&int(sign)))
        })
        .collect()
}

fn substitute_ell(p: &MultiPoly, images: &BTreeMap<FreeBox, MultiPoly>) -> MultiPoly {
    let bindings = images.iter().map(|(&b, img)| (ell_var(b), img.clone())).collect();
    p.substitute(&bindings)
}

/// `G⋆` as a polynomial in `x1..x6` and `β`.
pub fn untwist_to_x() -> MultiPoly {
    substitute_ell(&gstar_ell(), &untwist_images(&standard_embedding()))
}

/// Monomial-symmetric coefficients `a_λ` (polynomials in `β`) of the
/// representative free of `e1`.
pub fn monomial_expansion(e_expansion: &MultiPoly) -> BTreeMap<Vec<u32>, MultiPoly> {
    monomial_coefficients(&from_elementary(e_expansion))
}

fn nonnegative(p: &MultiPoly) -> bool {
    p.terms().all(|(_, c)| !c.is_negative())
}

fn negative_terms(p: &MultiPoly) -> MultiPoly {
    p.term_list()
        .into_iter()
        .filter(|(_, c)| c.is_negative())
        .map(|(pw, c)| {
            let pw: Vec<(&str, u32)> = pw.iter().map(|(v, e)| (v.as_str(), *e)).collect();
            MultiPoly::monomial(c, &pw)
        })
        .sum()
}

pub fn verify_e_expansion() -> Vec<Check> {
    let mut checks = Vec::new();
    let expected = expected_e_expansion();
    let got = match expand_in_elementary(&untwist_to_x()) {
        Ok(e) => e,
        Err(err) => {
            return vec![Check::new("e-basis expansion", false, format!("not symmetric: {err}"))];
        }
    };
    let mut c = Check::new("e-basis expansion of G", got == expected, "six β-degree groups");
    if got != expected {
        c = c.witness(&got).witness(&expected);
    }
    checks.push(c);
    let b10 = got.coeff(&[(BETA, 10)]);
    checks.push(Check::new("β^10 coefficient", b10 == int(42), format!("{b10}")));
    let e2b8 = got.coeff(&[("e2", 1), (BETA, 8)]);
    checks.push(Check::new("e2 β^8 coefficient", e2b8 == int(54), format!("{e2b8}")));

    let mono = monomial_expansion(&got);
    let too_long: Vec<String> = mono
        .iter()
        .filter(|(lam, _)| lam.first().is_some_and(|&l| l >= 4))
        .map(|(lam, a)| format!("{lam:?}: {a}"))
        .collect();
    let mut c = Check::new("monomial support has λ1 ≤ 3", too_long.is_empty(), format!("{} shapes", mono.len()));
    for w in too_long {
        c = c.witness(w);
    }
    checks.push(c);
    checks
}

/// `φ`: the five free ℓ's from coordinates, the rest by the claws.
pub fn phi_images(free: [MultiPoly; 5]) -> BTreeMap<FreeBox, MultiPoly> {
    let [a1, a3, b1, b3, c3] = free;
    let mut m = BTreeMap::new();
    m.insert(B2, &(&b1 + &b3) + &c3);
    m.insert(A2, &(&a1 + &a3) + &c3);
    m.insert(C2, -(&(&a1 + &b1) + &c3));
    m.insert(C5, -(&(&a3 + &b3) + &c3));
    m.insert(C4, -(&(&(&a1 + &a3) + &(&b1 + &b3)) + &c3));
    for (b, v) in [(A1, a1), (A3, a3), (B1, b1), (Bt3, b3), (C3, c3)] {
        m.insert(b, v);
    }
    m
}

/// `ℓ = 2(1 + x_i) + β` on the free boxes.
pub fn phi_map() -> BTreeMap<FreeBox, MultiPoly> {
    let two = MultiPoly::from_int(2);
    let beta = MultiPoly::var(BETA);
    phi_images(std::array::from_fn(|i| {
        &(&two * &(&MultiPoly::one() + &MultiPoly::var(&x_var(i + 1)))) + &beta
    }))
}

/// `x_i` values that make `φ` reproduce the window hooks.
pub fn phi_coordinates(table: &HookTable) -> [MultiPoly; 5] {
    let p = table.params();
    let a = MultiPoly::var(ALPHA);
    let affine = |c: u32, n: u32| &MultiPoly::from_int(c as i64) + &a.scale(&int(n as i64));
    [affine(p.m1, p.n1), affine(p.m2, p.n2), affine(p.m3, 0), affine(p.r2, p.n4), affine(p.r1, 0)]
}

/// `−G⋆(φ(x), β)` with `β = α − 1`.
pub fn stanley_form() -> MultiPoly {
    -substitute_ell(&gstar_ell(), &phi_map()).substitute_one(BETA, &beta_value())
}

/// `−G⋆(φ(y))` with `ℓ = y_i + β` on the free boxes.
pub fn y_form() -> MultiPoly {
    let beta = MultiPoly::var(BETA);
    let images = phi_images(std::array::from_fn(|i| &MultiPoly::var(&format!("y{}", i + 1)) + &beta));
    -substitute_ell(&gstar_ell(), &images)
}

pub fn verify_nonnegativity() -> Vec<Check> {
    let mut checks = Vec::new();
    match expand_in_elementary(&untwist_to_x()) {
        Ok(e) => {
            let bad: Vec<String> = monomial_expansion(&e)
                .into_iter()
                .filter(|(_, a)| !nonnegative(a))
                .map(|(lam, a)| format!("{lam:?}: {a}"))
                .collect();
            let mut c = Check::new("monomial coefficients a_λ ≥ 0", bad.is_empty(), "as polynomials in β");
            for w in bad {
                c = c.witness(w);
            }
            checks.push(c);
        }
        Err(err) => checks.push(Check::new("monomial coefficients a_λ ≥ 0", false, err.to_string())),
    }

    let s = stanley_form();
    let mut c = Check::new(
        "−G(φ(x), α−1) has non-negative coefficients",
        nonnegative(&s),
        format!("{} terms in x1..x5, α", s.num_terms()),
    );
    if !nonnegative(&s) {
        c = c.witness(negative_terms(&s));
    }
    checks.push(c);

    let y = y_form();
    let homogeneous = y.terms().all(|(m, _)| m.degree() == 10);
    let beta_deg = y.degree_in(BETA);
    let ok = nonnegative(&y) && homogeneous && beta_deg <= 7;
    let mut c = Check::new(
        "−G(φ(y), β) is homogeneous, non-negative, β-degree ≤ 7",
        ok,
        format!("β-degree {beta_deg}, homogeneous {homogeneous}"),
    );
    if !nonnegative(&y) {
        c = c.witness(negative_terms(&y));
    }
    checks.push(c);
    checks
}

/// The printed coordinate change `x(z)`; index 0 is the ground element 0.
pub fn xcoords() -> [MultiPoly; 6] {
    let rows: [[i64; 5]; 6] = [
        [-1, -2, 1, -1, 0],
        [2, 1, 1, 2, 3],
        [-1, 1, 1, 2, 0],
        [-1, 1, -2, -1, 0],
        [-1, -2, -2, -1, -3],
        [2, 1, 1, -1, 0],
    ];
    rows.map(|r| {
        r.iter()
            .enumerate()
            .map(|(i, &c)| MultiPoly::var(&format!("z{}", i + 1)).scale(&rat(c, 3)))
            .sum()
    })
}

/// A reading of `z1..z5` as free ℓ's under which the printed `x(z)` is the
/// inverse of `ψ`, up to a relabelling of the six coordinates and a sign.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct XcoordMatch {
    pub embedding: usize,
    pub sign: i64,
    /// `z_i` is `ℓ` of `boxes[i]`.
    pub boxes: [FreeBox; 5],
    /// Printed `x_j` is the coordinate of ground element `relabel[j]`.
    pub relabel: [u8; 6],
}

fn permutations5() -> Vec<[usize; 5]> {
    let mut out = Vec::new();
    fn rec(p: &mut [usize; 5], k: usize, out: &mut Vec<[usize; 5]>) {
        if k == 5 {
            out.push(*p);
            return;
        }
        for i in k..5 {
            p.swap(k, i);
            rec(p, k + 1, out);
            p.swap(k, i);
        }
    }
    rec(&mut [0, 1, 2, 3, 4], 0, &mut out);
    out.sort();
    out
}

fn linear_coeffs(p: &MultiPoly, vars: &[String]) -> Vec<Rational> {
    vars.iter().map(|v| p.coeff(&[(v.as_str(), 1)])).collect()
}

/// Searches the 120 assignments of `z` to the free boxes, for every
/// embedding and both signs. For each assignment the inverse of `ψ` is
/// solved for exactly and compared with the printed rows.
pub fn xcoord_matches(embeddings: &[Embedding]) -> Vec<XcoordMatch> {
    let zs: Vec<String> = (1..=5).map(|i| format!("z{i}")).collect();
    // ground element j sits in column j-1, element 0 in the last column
    let xs: Vec<String> = (1..=6).map(x_var).collect();
    let element = |col: usize| if col == 5 { 0u8 } else { col as u8 + 1 };
    let printed: Vec<Vec<Rational>> = xcoords().iter().map(|p| linear_coeffs(p, &zs)).collect();
    let mut out = Vec::new();
    for (k, emb) in embeddings.iter().enumerate() {
        let images = untwist_images(emb);
        let mut system: Vec<Vec<Rational>> = FreeBox::ALL.iter().map(|b| linear_coeffs(&images[b], &xs)).collect();
        system.push(vec![int(1); 6]);
        for perm in permutations5() {
            let boxes = perm.map(|i| FREE_BOXES[i]);
            let mut free: [MultiPoly; 5] = std::array::from_fn(|_| MultiPoly::zero());
            for (i, &slot) in perm.iter().enumerate() {
                free[slot] = MultiPoly::var(&zs[i]);
            }
            let ell = phi_images(free);
            let rhs: Vec<Vec<Rational>> = zs
                .iter()
                .map(|z| {
                    let mut col: Vec<Rational> = FreeBox::ALL.iter().map(|b| ell[b].coeff(&[(z.as_str(), 1)])).collect();
                    col.push(int(0));
                    col
                })
                .collect();
            let Some(sol) = jacklr_exact::linalg::solve_many(&system, &rhs) else {
                continue;
            };
            for sign in [1i64, -1] {
                let rows: Vec<Vec<Rational>> =
                    (0..6).map(|col| sol.iter().map(|s| &s[col] * &int(sign)).collect()).collect();
                let relabel: Option<Vec<u8>> = printed
                    .iter()
                    .map(|r| rows.iter().position(|row| row == r).map(element))
                    .collect();
                if let Some(relabel) = relabel {
                    out.push(XcoordMatch { embedding: k, sign, boxes, relabel: relabel.try_into().unwrap() });
                }
            }
        }
    }
    out
}
