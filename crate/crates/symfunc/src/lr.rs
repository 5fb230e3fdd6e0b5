use std::collections::BTreeMap;

use jacklr_exact::{int, MultiPoly, RatFunc, Rational, ALPHA};
use jacklr_partitions::{jnorm, lower_hook_at, upper_hook_at, Partition};
use num_traits::Zero;

use crate::basis::{monomial_product, DegreeData};
use crate::{JackTable, SymError, SymFunc};

/// Coefficients `c_λ` with `f = Σ c_λ J_λ`, by back-substitution from the top
/// of dominance order.
pub fn expand_in_jack(table: &JackTable, f: &SymFunc) -> Result<BTreeMap<Partition, RatFunc>, SymError> {
    let mut out = BTreeMap::new();
    if f.is_zero() {
        return Ok(out);
    }
    let jacks = table.degree(f.degree())?;
    let data = DegreeData::get(f.degree());
    let mut rest = f.clone();
    for lam in &data.parts {
        let c = rest.coeff(lam);
        if c.is_zero() {
            continue;
        }
        let j = &jacks[lam];
        let c = c.div(&j.coeff(lam))?;
        rest = rest.add(&j.scale(&c.neg()))?;
        out.insert(lam.clone(), c);
    }
    if !rest.is_zero() {
        return Err(SymError::NotInSpan(rest.to_string()));
    }
    Ok(out)
}

fn weight_check(mu: &Partition, nu: &Partition, lam: &Partition) -> Result<(), SymError> {
    if mu.weight() + nu.weight() != lam.weight() {
        return Err(SymError::WeightMismatch {
            mu: mu.to_string(),
            nu: nu.to_string(),
            lam: lam.to_string(),
        });
    }
    Ok(())
}

impl JackTable {
    /// All `g_{μν}^λ` at once: the Jack expansion of `J_μ·J_ν`.
    pub fn lr_coefficients(
        &self,
        mu: &Partition,
        nu: &Partition,
    ) -> Result<BTreeMap<Partition, RatFunc>, SymError> {
        self.check_degree(mu.weight() + nu.weight())?;
        let prod = self.jack(mu)?.multiply(&*self.jack(nu)?);
        expand_in_jack(self, &prod)
    }

    pub fn lr_coefficient(&self, mu: &Partition, nu: &Partition, lam: &Partition) -> Result<RatFunc, SymError> {
        weight_check(mu, nu, lam)?;
        self.check_degree(lam.weight())?;
        if !lam.contains(mu) || !lam.contains(nu) {
            return Ok(RatFunc::zero());
        }
        Ok(self
            .lr_coefficients(mu, nu)?
            .remove(lam)
            .unwrap_or_else(RatFunc::zero))
    }

    /// `g_{μν;λ} = g_{μν}^λ · j_λ`, which must be a polynomial with integer
    /// coefficients.
    pub fn stanley_coefficient(&self, mu: &Partition, nu: &Partition, lam: &Partition) -> Result<MultiPoly, SymError> {
        let g = self.lr_coefficient(mu, nu, lam)?;
        let p = g
            .mul_poly(&jnorm(lam))
            .to_poly()
            .map_err(|_| SymError::NonPolynomial(format!("g[{mu};{nu};{lam}] = {g}")))?;
        if !p.is_integral() {
            return Err(SymError::NonPolynomial(format!("non-integer coefficients in {p}")));
        }
        Ok(p)
    }

    /// Numeric monomial coefficients of `J_λ` at a rational α.
    fn jack_at(&self, lam: &Partition, a: &Rational) -> Result<Vec<(Partition, Rational)>, SymError> {
        let j = self.jack(lam)?;
        j.terms()
            .map(|(mu, c)| Ok((mu.clone(), c.eval_at(a)?)))
            .collect()
    }
}

/// Every Stanley coefficient `g_{μν;λ}` for `λ ⊢ |μ|+|ν|`, by exact
/// evaluation at `α = 1, 2, …` and interpolation. Each primed diagram is a
/// product of `2n` hooks, so degree `≤ 2n`; one extra point checks the fit.
pub fn stanley_coefficients_sampled(
    table: &JackTable,
    mu: &Partition,
    nu: &Partition,
) -> Result<BTreeMap<Partition, MultiPoly>, SymError> {
    let n = mu.weight() + nu.weight();
    table.check_degree(n)?;
    let data = DegreeData::get(n);
    let jacks = table.degree(n)?;
    let points: Vec<Rational> = (1..=2 * n as i64 + 2).map(int).collect();
    let mut values: Vec<Vec<Rational>> = vec![Vec::with_capacity(points.len()); data.len()];
    for a in &points {
        let jm = table.jack_at(mu, a)?;
        let jn = table.jack_at(nu, a)?;
        let mut f: BTreeMap<Partition, Rational> = BTreeMap::new();
        for (p, x) in &jm {
            for (q, y) in &jn {
                let xy = x * y;
                for (lam, k) in monomial_product(p, q).iter() {
                    *f.entry(lam.clone()).or_insert_with(Rational::zero) += &xy * int(*k as i64);
                }
            }
        }
        for (idx, lam) in data.parts.iter().enumerate() {
            let c = f.get(lam).cloned().unwrap_or_else(Rational::zero);
            let g = if c.is_zero() {
                c
            } else {
                let j = &jacks[lam];
                let lead = j.coeff(lam).eval_at(a)?;
                let g = c / lead;
                for (mu2, d) in j.terms() {
                    let e = f.entry(mu2.clone()).or_insert_with(Rational::zero);
                    *e -= &g * d.eval_at(a)?;
                }
                g
            };
            let norm: Rational = lam
                .boxes()
                .into_iter()
                .map(|b| upper_hook_at(lam, b, a).unwrap() * lower_hook_at(lam, b, a).unwrap())
                .product();
            values[idx].push(g * norm);
        }
        if f.values().any(|v| !v.is_zero()) {
            return Err(SymError::NotInSpan(format!("J[{mu}]·J[{nu}] at α={a}")));
        }
    }
    let fit = points.len() - 1;
    let mut out = BTreeMap::new();
    for (lam, ys) in data.parts.iter().zip(values) {
        let poly = MultiPoly::from_dense(ALPHA, &jacklr_exact::interpolate(&points[..fit], &ys[..fit]));
        if poly.eval_at(&points[fit])? != ys[fit] {
            return Err(SymError::NonPolynomial(format!("g[{mu};{nu};{lam}] exceeds degree {}", 2 * n)));
        }
        if !poly.is_integral() {
            return Err(SymError::NonPolynomial(format!("non-integer coefficients in {poly}")));
        }
        out.insert(lam.clone(), poly);
    }
    Ok(out)
}
