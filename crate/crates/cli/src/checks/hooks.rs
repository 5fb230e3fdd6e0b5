use std::collections::BTreeSet;

use jacklr_exact::linalg::rank;
use jacklr_exact::{int, MultiPoly, Rational};
use jacklr_hookspace::quotient::FREE_BOXES;
use jacklr_hookspace::window::{beta_value, symbolic_free_hooks};
use jacklr_hookspace::{
    hook_table, verify_all_hyperplanes, verify_boundary_equivariance, verify_boundary_figure, verify_e_expansion,
    verify_nonnegativity, verify_odd_vanishing, verify_sigma56_invariance, HookTable, WindowParams,
};
use jacklr_stanley::{build_gstar, claw_form, k_transform, reference_x, FreeBox};

use super::Context;
use crate::report::Outcome;
use crate::rng::Lcg64;
use crate::CliError;

/// A window drawn from `{0..4}⁸`, with one of `r2`, `n4` zeroed.
pub fn sample_window(rng: &mut Lcg64) -> WindowParams {
    let mut v = [0u32; 8];
    for x in &mut v {
        *x = rng.below(5);
    }
    if rng.below(2) == 0 {
        v[7] = 0;
    } else {
        v[5] = 0;
    }
    WindowParams::from_array(v).expect("r2·n4 = 0 by construction")
}

/// `β·c_β + Σ c_a h_a` for the claw relation of `b`; zero on every window.
fn claw_value(t: &HookTable, b: FreeBox) -> MultiPoly {
    let f = claw_form(b);
    let x = reference_x();
    let mut v = beta_value().scale(&int(f.beta));
    for (&a, &c) in &f.coeffs {
        v = &v + &t.free(a, x.effective(a)).scale(&int(c));
    }
    v
}

/// Coefficient vectors of affine hooks over their joint monomial support.
fn coefficient_rows(hooks: &[MultiPoly]) -> Vec<Vec<Rational>> {
    let mut keys: Vec<Vec<(String, u32)>> = hooks.iter().flat_map(|h| h.term_list().into_iter().map(|(k, _)| k)).collect();
    keys.sort();
    keys.dedup();
    hooks
        .iter()
        .map(|h| {
            keys.iter()
                .map(|k| {
                    let pw: Vec<(&str, u32)> = k.iter().map(|(v, e)| (v.as_str(), *e)).collect();
                    h.coeff(&pw)
                })
                .collect()
        })
        .collect()
}

pub fn hook_space(ctx: &Context) -> Result<Vec<Outcome>, CliError> {
    let mut out = Vec::new();
    let mut rng = Lcg64::new(ctx.settings.seed);
    let mut bad = Vec::new();
    for _ in 0..ctx.settings.samples {
        let params = sample_window(&mut rng);
        let t = hook_table(params)?;
        for b in FreeBox::ALL {
            let v = claw_value(&t, b);
            if !v.is_zero() {
                bad.push(format!("claw {b} at {params}: {v}"));
            }
        }
    }
    let mut c = Outcome::new(
        "ten claw relations vanish on sampled windows",
        bad.is_empty(),
        format!("{} windows", ctx.settings.samples),
    );
    c.witnesses = bad.into_iter().take(10).collect();
    out.push(c);

    let hooks: std::collections::BTreeMap<FreeBox, MultiPoly> = symbolic_free_hooks().into_iter().collect();
    let mut all: Vec<MultiPoly> = hooks.values().cloned().collect();
    all.push(beta_value());
    let free: Vec<MultiPoly> = FREE_BOXES.iter().map(|b| hooks[b].clone()).collect();
    let mut free_beta = free.clone();
    free_beta.push(beta_value());
    let ranks = [rank(&coefficient_rows(&all)), rank(&coefficient_rows(&free_beta)), rank(&coefficient_rows(&free))];
    out.push(Outcome::new(
        "exactly five hooks are free",
        ranks == [6, 6, 5],
        format!("rank of all hooks with β {}, of the five free with β {}, of the five free {}", ranks[0], ranks[1], ranks[2]),
    ));

    let xbar = reference_x().conjugate();
    let k = k_transform(&build_gstar(), xbar);
    let bad: Vec<String> = k
        .iter()
        .filter(|(i, v)| {
            let want = match i.len() {
                0 => 2,
                1 => 1,
                2 => i.edges() as i64,
                _ => 0,
            };
            *v != want
        })
        .map(|(i, v)| format!("K({i}) = {v}"))
        .collect();
    let mut c = Outcome::new("K-values of g⋆ against X̄", bad.is_empty(), "2, 1, e_I, then 0 by |I|, over 1024 subsets");
    c.witnesses = bad.into_iter().take(10).collect();
    out.push(c);

    let conj = build_gstar().map(|d| d.conjugate());
    let k = k_transform(&conj, xbar);
    let bad: Vec<String> = k
        .iter()
        .filter(|(i, v)| *v != 2 - i.len() as i64 + i.edges() as i64)
        .map(|(i, v)| format!("K({i}) = {v}"))
        .collect();
    let mut c = Outcome::new("K-values of conjugate g⋆ are 2 − |I| + e_I", bad.is_empty(), "over 1024 subsets");
    c.witnesses = bad.into_iter().take(10).collect();
    out.push(c);
    Ok(out)
}

pub fn invariance(_: &Context) -> Result<Vec<Outcome>, CliError> {
    Ok(verify_odd_vanishing().into_iter().chain(verify_sigma56_invariance()).map(Outcome::from).collect())
}

pub fn hyperplanes(_: &Context) -> Result<Vec<Outcome>, CliError> {
    let mut out: Vec<Outcome> = verify_all_hyperplanes().into_iter().map(Outcome::from).collect();
    let names: BTreeSet<&str> = out.iter().map(|o| o.name.as_str()).collect();
    let distinct = names.len();
    out.push(Outcome::new("twenty distinct hyperplanes", distinct == 20, format!("{distinct}")));
    out.extend(verify_boundary_figure().into_iter().map(Outcome::from));
    out.push(verify_boundary_equivariance().into());
    Ok(out)
}

pub fn untwisting(_: &Context) -> Result<Vec<Outcome>, CliError> {
    Ok(verify_e_expansion().into_iter().chain(verify_nonnegativity()).map(Outcome::from).collect())
}
