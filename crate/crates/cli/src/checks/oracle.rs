//! Schur functions by Jacobi–Trudi, independent of the Jack engine. At
//! `α = 1` Jack coefficients must reduce to these.

use std::collections::BTreeMap;

use jacklr_exact::{RatFunc, Rational};
use jacklr_partitions::{enumerate_partitions, Partition};
use jacklr_symfunc::SymFunc;
use num_traits::Zero;

type Numeric = BTreeMap<Partition, Rational>;

fn numeric(f: &SymFunc) -> Numeric {
    f.terms()
        .map(|(p, c)| (p.clone(), c.to_poly().expect("numeric coefficient").constant_term()))
        .collect()
}

/// `h_k` (`complete`) or `e_k` in the monomial basis; `None` for `k < 0`.
fn basic(k: i64, complete: bool) -> Option<SymFunc> {
    if k < 0 {
        return None;
    }
    let terms: Vec<_> = enumerate_partitions(k as u32)
        .into_iter()
        .filter(|p| complete || p.parts().iter().all(|&x| x == 1))
        .map(|p| (p, RatFunc::one()))
        .collect();
    Some(SymFunc::from_terms(k as u32, terms).expect("homogeneous"))
}

fn det(rows: &[usize], cols: &[usize], entry: &dyn Fn(usize, usize) -> Option<SymFunc>, deg: u32) -> SymFunc {
    if rows.is_empty() {
        return SymFunc::unit();
    }
    let mut acc = SymFunc::zero(deg);
    for (k, &c) in cols.iter().enumerate() {
        let Some(e) = entry(rows[0], c) else { continue };
        if e.degree() > deg {
            continue;
        }
        let rest: Vec<usize> = cols.iter().copied().filter(|&x| x != c).collect();
        let term = e.multiply(&det(&rows[1..], &rest, entry, deg - e.degree()));
        let sign = if k % 2 == 0 { RatFunc::one() } else { RatFunc::one().neg() };
        acc = acc.add(&term.scale(&sign)).expect("same degree");
    }
    acc
}

/// `s_λ` as `det(h_{λ_i − i + j})`, or the dual `e`-form when `λ'` is
/// shorter.
pub fn schur(lam: &Partition) -> SymFunc {
    let conj = lam.conjugate();
    let (shape, complete) = if lam.len() <= conj.len() { (lam.clone(), true) } else { (conj, false) };
    let entry = |i: usize, j: usize| basic(shape.row(i) as i64 - i as i64 + j as i64, complete);
    let idx: Vec<usize> = (0..shape.len()).collect();
    det(&idx, &idx, &entry, lam.weight())
}

/// `c_{μν}^λ` by peeling leading monomials off `s_μ s_ν`.
pub fn schur_lr(mu: &Partition, nu: &Partition) -> BTreeMap<Partition, Rational> {
    let mut rest = numeric(&schur(mu).multiply(&schur(nu)));
    let mut out = BTreeMap::new();
    for lam in enumerate_partitions(mu.weight() + nu.weight()) {
        let c = rest.get(&lam).cloned().unwrap_or_else(Rational::zero);
        if c.is_zero() {
            continue;
        }
        for (p, v) in numeric(&schur(&lam)) {
            *rest.entry(p).or_insert_with(Rational::zero) -= &c * v;
        }
        out.insert(lam, c);
    }
    out
}
