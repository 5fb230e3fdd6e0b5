//! Symmetric polynomials in `x1..x6` on the hyperplane `e1 = 0`.

use std::collections::BTreeMap;

use num_traits::Zero;

use crate::linalg;
use crate::{ExactError, MultiPoly, Rational};

pub fn x_var(i: usize) -> String {
    format!("x{i}")
}

pub fn e_var(k: usize) -> String {
    format!("e{k}")
}

/// `e_k(x1..xn)`.
pub fn elementary(k: usize, n: usize) -> MultiPoly {
    // Coefficient extraction from ∏(1 + x_i t) would need an extra variable;
    // the recurrence e_k(n) = e_k(n-1) + x_n e_{k-1}(n-1) is simpler.
    let mut row: Vec<MultiPoly> = vec![MultiPoly::one()];
    row.extend((1..=k).map(|_| MultiPoly::zero()));
    for i in 1..=n {
        let x = MultiPoly::var(&x_var(i));
        for j in (1..=k.min(i)).rev() {
            row[j] = &row[j] + &(&x * &row[j - 1]);
        }
    }
    row[k].clone()
}

/// Imposes `x6 = −(x1+…+x5)`.
pub fn eliminate_x6(p: &MultiPoly) -> MultiPoly {
    let sum: MultiPoly = (1..=5).map(|i| MultiPoly::var(&x_var(i))).sum();
    p.substitute_one(&x_var(6), &-sum)
}

/// Replaces `e2..e6` by the genuine elementary polynomials in `x1..x6`.
pub fn from_elementary(q: &MultiPoly) -> MultiPoly {
    let bindings = (2..=6).map(|k| (e_var(k), elementary(k, 6))).collect();
    q.substitute(&bindings)
}

fn partitions_into(d: u32, max_part: u32, min_part: u32) -> Vec<Vec<u32>> {
    if d == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for first in (min_part..=max_part.min(d)).rev() {
        for mut rest in partitions_into(d - first, first, min_part) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

type Split = BTreeMap<Vec<(String, u32)>, BTreeMap<Vec<u32>, Rational>>;

/// Groups terms by their non-x part; inner keys are exponents of `x1..x5`.
fn split_x(p: &MultiPoly) -> Split {
    let mut out: Split = BTreeMap::new();
    for (powers, c) in p.term_list() {
        let mut xe = vec![0u32; 5];
        let mut rest = Vec::new();
        for (v, e) in powers {
            match v.strip_prefix('x').and_then(|s| s.parse::<usize>().ok()) {
                Some(i @ 1..=5) => xe[i - 1] = e,
                _ => rest.push((v, e)),
            }
        }
        *out.entry(rest).or_default().entry(xe).or_insert_with(Rational::zero) += c;
    }
    out
}

/// Writes a polynomial that is symmetric in `x1..x6` modulo `e1` in terms of
/// `e2..e6` (other variables are carried along as coefficients).
pub fn expand_in_elementary(p: &MultiPoly) -> Result<MultiPoly, ExactError> {
    let q = eliminate_x6(p);
    let xs: Vec<String> = (1..=5).map(x_var).collect();
    let xs_ref: Vec<&str> = xs.iter().map(|s| s.as_str()).collect();
    let elim: Vec<MultiPoly> = (0..=6)
        .map(|k| if k < 2 { MultiPoly::zero() } else { eliminate_x6(&elementary(k, 6)) })
        .collect();
    let max_deg = q
        .term_list()
        .iter()
        .map(|(pw, _)| {
            pw.iter()
                .filter(|(v, _)| xs.contains(v))
                .map(|(_, e)| *e)
                .sum::<u32>()
        })
        .max()
        .unwrap_or(0);
    let mut result = MultiPoly::zero();
    for d in 0..=max_deg {
        let slice = q.homogeneous_part(&xs_ref, d);
        if slice.is_zero() {
            continue;
        }
        let groups = split_x(&slice);
        let shapes = partitions_into(d, 6, 2);
        let basis: Vec<BTreeMap<Vec<u32>, Rational>> = shapes
            .iter()
            .map(|sh| {
                let prod: MultiPoly = sh.iter().map(|&k| elim[k as usize].clone()).product();
                split_x(&prod).remove(&vec![]).unwrap_or_default()
            })
            .collect();
        let mut rows: Vec<Vec<u32>> = basis.iter().flat_map(|b| b.keys().cloned()).collect();
        rows.extend(groups.values().flat_map(|g| g.keys().cloned()));
        rows.sort();
        rows.dedup();
        let a: Vec<Vec<Rational>> = rows
            .iter()
            .map(|r| {
                basis
                    .iter()
                    .map(|b| b.get(r).cloned().unwrap_or_else(Rational::zero))
                    .collect()
            })
            .collect();
        let keys: Vec<&Vec<(String, u32)>> = groups.keys().collect();
        let rhs: Vec<Vec<Rational>> = groups
            .values()
            .map(|g| {
                rows.iter()
                    .map(|r| g.get(r).cloned().unwrap_or_else(Rational::zero))
                    .collect()
            })
            .collect();
        let sols = linalg::solve_many(&a, &rhs)
            .ok_or_else(|| ExactError::NotSymmetric(format!("degree {d} slice {slice}")))?;
        for (key, sol) in keys.iter().zip(sols) {
            let outer: Vec<(&str, u32)> = key.iter().map(|(v, e)| (v.as_str(), *e)).collect();
            for (sh, c) in shapes.iter().zip(sol) {
                if c.is_zero() {
                    continue;
                }
                let mut pw = outer.clone();
                let names: Vec<String> = sh.iter().map(|&k| e_var(k as usize)).collect();
                pw.extend(names.iter().map(|n| (n.as_str(), 1)));
                result = &result + &MultiPoly::monomial(c, &pw);
            }
        }
    }
    Ok(result)
}

/// Coefficients `a_λ` of the monomial symmetric functions `m_λ(x1..x6)`,
/// read off from the sorted exponent vectors. Values may involve the
/// non-x variables.
pub fn monomial_coefficients(p: &MultiPoly) -> BTreeMap<Vec<u32>, MultiPoly> {
    let mut out: BTreeMap<Vec<u32>, MultiPoly> = BTreeMap::new();
    for (powers, c) in p.term_list() {
        let mut xe = vec![0u32; 6];
        let mut rest: Vec<(&str, u32)> = Vec::new();
        for (v, e) in &powers {
            match v.strip_prefix('x').and_then(|s| s.parse::<usize>().ok()) {
                Some(i @ 1..=6) => xe[i - 1] = *e,
                _ => rest.push((v.as_str(), *e)),
            }
        }
        if xe.windows(2).all(|w| w[0] >= w[1]) {
            while xe.last() == Some(&0) {
                xe.pop();
            }
            let term = MultiPoly::monomial(c, &rest);
            let slot = out.entry(xe).or_insert_with(MultiPoly::zero);
            *slot = &*slot + &term;
        }
    }
    out.retain(|_, v| !v.is_zero());
    out
}

