use jacklr_exact::{int, parse_poly, parse_ratfunc, rat, MultiPoly, Rational};
use jacklr_hookspace::{hook_table, WindowParams};
use jacklr_partitions::{enumerate_partitions, jnorm, root, upper_hook_at, Partition};
use jacklr_pivots::fixtures::parse_fixtures;
use jacklr_stanley::{
    build_gstar, change_reference, claw_form, evaluate, evaluate_poly, formal_product, k_inverse, k_transform,
    kernel_sum, reference_x, BoxSet, FreeBox, LinearHookForm, RootDiagram, StanleySum, TripleHooks, BETA,
};
use jacklr_symfunc::DegreeData;
use num_traits::Zero;

use super::{oracle, Context};
use crate::report::Outcome;
use crate::rng::Lcg64;
use crate::CliError;

/// `g_{21,21}^{321}` as printed in the abstract.
pub const ROOT_LR: &str = "6*a*(2+11*a+2*a^2)/((1+2*a)*(2+a)*(2+3*a)*(3+2*a))";

fn p(parts: &[u32]) -> Partition {
    Partition::of(parts)
}

fn compare_poly(name: &str, got: &MultiPoly, expected: &MultiPoly) -> Outcome {
    let c = Outcome::new(name, got == expected, expected.to_string());
    if got == expected {
        c
    } else {
        c.witness(got).witness(expected)
    }
}

pub fn jack_fixtures(ctx: &Context) -> Result<Vec<Outcome>, CliError> {
    if let Some(skip) = ctx.beyond_cap("Jack fixtures of (21, 21)", 6) {
        return Ok(vec![skip]);
    }
    let (mu, lam) = (p(&[2, 1]), root::lam());
    let mut out = Vec::new();
    let g = ctx.jacks.lr_coefficient(&mu, &mu, &lam)?;
    let expected = parse_ratfunc(ROOT_LR)?;
    let mut c = Outcome::new("g_{21,21}^{321} equals the closed form", g == expected, ROOT_LR);
    if g != expected {
        c = c.witness(&g);
    }
    out.push(c);
    let printed = parse_fixtures()?;
    for (name, shape) in [("jack_21_21_321", lam.clone()), ("jack_21_21_2211", p(&[2, 2, 1, 1]))] {
        let got = ctx.jacks.stanley_coefficient(&mu, &mu, &shape)?;
        let want = printed[name].to_poly()?;
        out.push(compare_poly(&format!("g_{{21,21;{shape}}} equals the printed polynomial"), &got, &want));
    }
    let one = p(&[1]);
    let got = ctx.jacks.stanley_coefficient(&one, &one, &p(&[1, 1]))?;
    out.push(compare_poly("g_{1,1;1,1} = 2α²", &got, &parse_poly("2*a^2")?));
    Ok(out)
}

pub fn root_evaluation(ctx: &Context) -> Result<Vec<Outcome>, CliError> {
    if let Some(skip) = ctx.beyond_cap("g⋆ at the root", 6) {
        return Ok(vec![skip]);
    }
    let (mu, nu, lam) = (root::mu(), root::nu(), root::lam());
    let lr = ctx.jacks.lr_coefficient(&mu, &nu, &lam)?;
    let window = hook_table(WindowParams::zero())?;
    let mut out = Vec::new();
    for (name, value) in [
        ("g⋆ on the zero window equals g_{21,21}^{321}", evaluate(&build_gstar(), &window)?),
        ("g⋆ on the hooks of (21,21,321) equals g_{21,21}^{321}", evaluate(&build_gstar(), &TripleHooks::root())?),
    ] {
        let mut c = Outcome::new(name, value == lr, lr.to_string());
        if value != lr {
            c = c.witness(&value);
        }
        out.push(c);
    }
    let stanley = ctx.jacks.stanley_coefficient(&mu, &nu, &lam)?;
    out.push(compare_poly("primed g⋆ equals the Stanley coefficient", &evaluate_poly(&build_gstar(), &window)?, &stanley));
    Ok(out)
}

/// `⟨f, g⟩ = Σ_ρ f_ρ g_ρ z_ρ α^{ℓ(ρ)}` on power-sum coordinates.
fn inner(data: &DegreeData, f: &[MultiPoly], g: &[MultiPoly]) -> MultiPoly {
    let a = jacklr_exact::alpha();
    (0..data.len())
        .filter(|&r| !f[r].is_zero() && !g[r].is_zero())
        .map(|r| (&f[r] * &g[r]).scale(&data.z[r]) * a.pow(data.parts[r].len() as u32))
        .sum()
}

fn orthogonality(ctx: &Context, top: u32) -> Result<Outcome, CliError> {
    let mut bad = Vec::new();
    let mut count = 0;
    for n in 1..=top {
        let data = DegreeData::get(n);
        let coords: Vec<Vec<MultiPoly>> = data
            .parts
            .iter()
            .map(|lam| {
                let j = ctx.jacks.jack(lam)?;
                let mut v = vec![MultiPoly::zero(); data.len()];
                for (mu, c) in j.terms() {
                    let c = c.to_poly()?;
                    for (r, x) in data.m_to_p[data.index[mu]].iter().enumerate() {
                        if !x.is_zero() {
                            v[r] = &v[r] + &c.scale(x);
                        }
                    }
                }
                Ok(v)
            })
            .collect::<Result<_, CliError>>()?;
        for i in 0..data.len() {
            for k in i..data.len() {
                let ip = inner(&data, &coords[i], &coords[k]);
                let want = if i == k { jnorm(&data.parts[i]) } else { MultiPoly::zero() };
                count += 1;
                if ip != want {
                    bad.push(format!("<J[{}], J[{}]> = {ip}", data.parts[i], data.parts[k]));
                }
            }
        }
    }
    let mut c = Outcome::new(
        format!("Jack polynomials are orthogonal with norm j_λ for |λ| ≤ {top}"),
        bad.is_empty(),
        format!("{count} inner products"),
    );
    for w in bad.into_iter().take(5) {
        c = c.witness(w);
    }
    Ok(c)
}

fn m1n(ctx: &Context, top: u32) -> Result<Outcome, CliError> {
    let mut bad = Vec::new();
    for n in 1..=top {
        let ones = Partition::new(vec![1; n as usize])?;
        let fact: i64 = (1..=n as i64).product();
        for lam in enumerate_partitions(n) {
            let c = ctx.jacks.jack(&lam)?.coeff_poly(&ones);
            if c != MultiPoly::from_int(fact) {
                bad.push(format!("J[{lam}] has {c}·m[{ones}]"));
            }
        }
    }
    let mut c = Outcome::new(format!("coefficient of m_(1^n) in J_λ is n! for |λ| ≤ {top}"), bad.is_empty(), "integral normalization");
    for w in bad.into_iter().take(5) {
        c = c.witness(w);
    }
    Ok(c)
}

/// Classical hook product `H_λ`.
fn hook_product(lam: &Partition) -> Result<Rational, CliError> {
    let one = int(1);
    lam.boxes().into_iter().map(|b| Ok(upper_hook_at(lam, b, &one)?)).product()
}

fn schur_limit(ctx: &Context, top: u32) -> Result<Vec<Outcome>, CliError> {
    let (mu, lam) = (p(&[2, 1]), root::lam());
    let g1 = ctx.jacks.lr_coefficient(&mu, &mu, &lam)?.eval_at(&int(1))?;
    let mut out = vec![Outcome::new("g_{21,21}^{321}(1) = 2/5", g1 == rat(2, 5), g1.to_string())];
    let mut bad = Vec::new();
    let mut count = 0;
    for n in 2..=top {
        for k in 1..n {
            for mu in enumerate_partitions(k) {
                for nu in enumerate_partitions(n - k) {
                    let jack = ctx.jacks.lr_coefficients(&mu, &nu)?;
                    let schur = oracle::schur_lr(&mu, &nu);
                    let scale = hook_product(&mu)? * hook_product(&nu)?;
                    for lam in enumerate_partitions(n) {
                        let g = match jack.get(&lam) {
                            Some(g) => g.eval_at(&int(1))?,
                            None => Rational::zero(),
                        };
                        let c = g * hook_product(&lam)? / &scale;
                        let want = schur.get(&lam).cloned().unwrap_or_else(Rational::zero);
                        count += 1;
                        if c != want {
                            bad.push(format!("({mu}, {nu}; {lam}): {c} vs {want}"));
                        }
                    }
                }
            }
        }
    }
    let mut c = Outcome::new(
        format!("at α = 1 Jack LR coefficients match the Schur oracle for |λ| ≤ {top}"),
        bad.is_empty(),
        format!("{count} coefficients"),
    );
    for w in bad.into_iter().take(5) {
        c = c.witness(w);
    }
    out.push(c);
    Ok(out)
}

fn random_sum(rng: &mut Lcg64) -> StanleySum<RootDiagram> {
    let terms = rng.below(12);
    (0..terms)
        .map(|_| (RootDiagram::from_lower_set(BoxSet(rng.below(1024) as u16)), rng.between(-5, 5)))
        .collect()
}

fn random_reference(rng: &mut Lcg64) -> RootDiagram {
    RootDiagram::from_lower_set(BoxSet(rng.below(1024) as u16))
}

fn mobius(ctx: &Context) -> Vec<Outcome> {
    let mut rng = Lcg64::new(ctx.settings.seed);
    let mut round_trip = Vec::new();
    let mut change = Vec::new();
    for _ in 0..ctx.settings.samples {
        let s = random_sum(&mut rng);
        let (ra, rb) = (random_reference(&mut rng), random_reference(&mut rng));
        let ka = k_transform(&s, ra);
        if k_inverse(&ka) != s {
            round_trip.push(format!("reference {ra}: {} terms", s.len()));
        }
        if change_reference(&ka, rb) != k_transform(&s, rb) {
            change.push(format!("{ra} → {rb}"));
        }
    }
    let n = ctx.settings.samples;
    let mut a = Outcome::new("K-transform inverts by Möbius inversion", round_trip.is_empty(), format!("{n} random sums"));
    a.witnesses = round_trip.into_iter().take(5).collect();
    let mut b = Outcome::new("change of reference commutes with the K-transform", change.is_empty(), format!("{n} random pairs"));
    b.witnesses = change.into_iter().take(5).collect();
    vec![a, b]
}

/// `Σ_d c_d Π_d = sign · Π_{b∉Y} h_b · β^{|Y|−1} · f` for the kernel sum of a
/// linear form `f` with support `Y`.
fn kernel_identity_holds(f: &LinearHookForm, reference: RootDiagram) -> bool {
    let y = f.support();
    let lhs: MultiPoly = kernel_sum(f, reference)
        .iter()
        .map(|(d, c)| formal_product(*d, reference).scale(&int(c)))
        .sum();
    let sigma: i64 = y.iter().map(|b| -reference.effective(b).sign()).product();
    let sign = if y.len() % 2 == 0 { sigma } else { -sigma };
    let outside: MultiPoly = (!y).iter().map(|b| MultiPoly::var(&format!("h_{}", b.name()))).product();
    let beta = MultiPoly::var(BETA).pow(y.len().saturating_sub(1));
    lhs == &(&outside * &beta) * &f.to_poly().scale(&int(sign))
}

fn kernel_identity(ctx: &Context) -> Outcome {
    let mut rng = Lcg64::new(ctx.settings.seed ^ 0x6b65_726e);
    let mut bad = Vec::new();
    for b in FreeBox::ALL {
        if !kernel_identity_holds(&claw_form(b), reference_x()) {
            bad.push(format!("claw {b}"));
        }
    }
    for _ in 0..ctx.settings.samples {
        let size = 1 + rng.below(4);
        let coeffs = (0..size).map(|_| (FreeBox::from_index(rng.below(10) as usize), rng.between(-3, 3))).collect();
        let f = LinearHookForm { coeffs, beta: rng.between(-3, 3) };
        let reference = random_reference(&mut rng);
        if f.support().is_empty() {
            continue;
        }
        if !kernel_identity_holds(&f, reference) {
            bad.push(format!("{} at {reference}", f.to_poly()));
        }
    }
    let mut c = Outcome::new(
        "kernel sums factor as formal polynomials",
        bad.is_empty(),
        format!("ten claws and {} random forms", ctx.settings.samples),
    );
    c.witnesses = bad.into_iter().take(5).collect();
    c
}

pub fn properties(ctx: &Context) -> Result<Vec<Outcome>, CliError> {
    let top = ctx.settings.degree_cap.min(8);
    let mut out = vec![orthogonality(ctx, top)?, m1n(ctx, top)?];
    if top < 8 {
        out.push(Outcome::skip("Jack normalization for |λ| ≤ 8", format!("degree cap {top}")));
    }
    if ctx.beyond_cap("Schur limit", 6).is_none() {
        out.extend(schur_limit(ctx, 6)?);
    } else {
        out.push(Outcome::skip("Schur limit", "degree cap below 6"));
    }
    out.extend(mobius(ctx));
    out.push(kernel_identity(ctx));
    Ok(out)
}
