use jacklr_exact::{parse_poly, rat};
use jacklr_partitions::{Cell, Partition, PivotPair, Slot};
use jacklr_pivots::corpus::{check_congruence, enumerate_adjacent, run_corpus, AdjacentTriplePair, PairOutcome, Triple};
use jacklr_pivots::correspondence::all_correspondences;
use jacklr_pivots::displayed::verify_displayed_correspondences;
use jacklr_pivots::fixtures::{verify_fixture_congruences, verify_printed_jack_values};
use jacklr_pivots::identities::all_lemma_identities;

use super::Context;
use crate::report::Outcome;
use crate::CliError;

fn p(parts: &[u32]) -> Partition {
    Partition::of(parts)
}

/// `κ = 221` with corners `(3,0)` and `(0,2)`: the pivot between 2211 and 321.
fn basic_pivot() -> PivotPair {
    PivotPair::new(&p(&[2, 2, 1]), Cell::new(3, 0), Cell::new(0, 2)).expect("outer corners of 221")
}

pub fn corpus(ctx: &Context) -> Result<Vec<Outcome>, CliError> {
    let bound = ctx.settings.max_weight;
    let pairs = enumerate_adjacent(bound);
    let mut out = Vec::new();
    let enough = bound < 7 || pairs.len() >= 500;
    out.push(Outcome::new(
        format!("adjacent pairs with |μ|+|ν| ≤ {bound}"),
        enough,
        format!("{} pairs", pairs.len()),
    ));

    let report = run_corpus(&pairs, &ctx.stanley, ctx.settings.jobs)?;
    let bad = report.counterexamples();
    let inconsistent: Vec<_> = report
        .outcomes
        .iter()
        .filter_map(|(pair, o)| match o {
            PairOutcome::Checked(r) if !r.self_consistent() => Some(pair),
            _ => None,
        })
        .collect();
    let mut c = Outcome::new(
        "adjacent Stanley coefficients are congruent modulo the shared hook",
        bad.is_empty(),
        format!(
            "{} pairs checked, {} with both coefficients non-zero, {} counterexamples",
            report.checked(),
            report.nontrivial(),
            bad.len()
        ),
    );
    for (pair, r) in bad.iter().take(10) {
        c = c.witness(format!("{pair}: remainder {}", r.remainder));
    }
    out.push(c);
    let mut c = Outcome::new(
        "division and root evaluation agree on every pair",
        inconsistent.is_empty(),
        "divisibility by a linear hook is vanishing at its root",
    );
    for pair in inconsistent.iter().take(10) {
        c = c.witness(pair);
    }
    out.push(c);
    let skipped = report.skipped();
    if !skipped.is_empty() {
        let mut c = Outcome::skip("pairs beyond the degree cap", format!("{} pairs", skipped.len()));
        c.witnesses = skipped.iter().map(|(pair, why)| format!("{pair}: {why}")).collect();
        out.push(c);
    }

    // the worked example
    if let Some(skip) = ctx.beyond_cap("(21,21; 2211 vs 321)", 6) {
        out.push(skip);
    } else {
        let context = Triple::new(p(&[2, 1]), p(&[2, 1]), p(&[3, 2, 1]));
        let r = check_congruence(&AdjacentTriplePair::new(&context, Slot::Lam, basic_pivot()), &ctx.stanley)?;
        let expected = parse_poly("2*a^4*(1+2*a)*(-4+6*a+a^2)")?;
        let q = r.quotient.clone().unwrap_or_else(jacklr_exact::MultiPoly::zero);
        let passed = (q == expected || q == -expected.clone()) && r.passed();
        let mut c = Outcome::new("(21,21; 2211 vs 321) quotient by 3+2α", passed, expected.to_string());
        if !passed {
            c = c.witness(&r.difference).witness(&r.remainder);
        }
        out.push(c);
        let root = rat(-3, 2);
        let v = rat(1215, 4);
        let passed = r.root == root && r.first_at_root == v && r.second_at_root == v;
        out.push(
            Outcome::new("common value at α = −3/2 is 1215/4", passed, format!("{} and {}", r.first_at_root, r.second_at_root))
                .witness(&r.first_at_root),
        );
    }

    // the printed μ-slot example has weight 11
    let context = Triple::new(p(&[3, 2, 1]), p(&[2, 2, 1]), p(&[4, 3, 2, 1, 1]));
    let pair = AdjacentTriplePair::new(&context, Slot::Mu, basic_pivot());
    let name = format!("μ-slot pivot {pair}");
    match ctx.beyond_cap(&name, 11) {
        Some(skip) => out.push(skip),
        None => {
            let r = check_congruence(&pair, &ctx.stanley)?;
            let mut c = Outcome::new(name, r.passed(), "difference divisible by 3+2α");
            if !r.passed() {
                c = c.witness(&r.remainder);
            }
            out.push(c);
        }
    }
    Ok(out)
}

pub fn correspondences(ctx: &Context) -> Result<Vec<Outcome>, CliError> {
    let mut out = Vec::new();
    let ids = all_lemma_identities(6);
    let failing: Vec<_> = ids.iter().filter(|i| !i.holds()).collect();
    let mut c = Outcome::new("hook identities for every third corner, |κ| ≤ 6", failing.is_empty(), format!("{} identities", ids.len()));
    for i in failing.iter().take(10) {
        c = c.witness(i);
    }
    out.push(c);

    let bound = ctx.settings.max_weight;
    let all = all_correspondences(bound)?;
    let mut bad = Vec::new();
    for psi in &all {
        let check = psi.verify();
        if !check.passed() {
            bad.push(format!("{psi}: {} boxes off", check.failures().len()));
        }
    }
    let mut c = Outcome::new(
        format!("ψ_d is a hook correspondence modulo x for |κ| ≤ {bound}"),
        bad.is_empty(),
        format!("{} correspondences", all.len()),
    );
    c.witnesses = bad.into_iter().take(10).collect();
    out.push(c);

    for d in verify_displayed_correspondences()? {
        let passed = d.passed();
        let mut c = Outcome::new(format!("displayed correspondence {}", d.name), passed, d.expected.to_string());
        if !passed {
            c = c.witness(&d.image);
        }
        out.push(c);
    }
    Ok(out)
}

pub fn fixture_congruences(_: &Context) -> Result<Vec<Outcome>, CliError> {
    Ok(verify_fixture_congruences()?.into_iter().map(Outcome::from).collect())
}

pub fn printed_jack_values(ctx: &Context) -> Result<Vec<Outcome>, CliError> {
    Ok(verify_printed_jack_values(&ctx.stanley)?.into_iter().map(Outcome::from).collect())
}
