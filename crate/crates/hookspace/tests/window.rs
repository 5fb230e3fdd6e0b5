use std::collections::BTreeMap;

use jacklr_exact::linalg::rank;
use jacklr_exact::{alpha, int, parse_poly, MultiPoly, Rational};
use jacklr_hookspace::quotient::{upper_hook, FREE_BOXES};
use jacklr_hookspace::window::symbolic_free_hooks;
use jacklr_hookspace::*;
use jacklr_partitions::root::{self, RootBox};
use jacklr_partitions::{lower_hook, upper_hook as partition_upper_hook, Partition, Slot};
use jacklr_stanley::{
    build_gstar, claw_form, evaluate, evaluate_poly, evaluate_virtual, reference_x, FreeBox, HookChoice,
    StanleyDiagram, StanleySum, TripleHooks,
};
use jacklr_symfunc::JackTable;
use proptest::prelude::*;

fn poly(s: &str) -> MultiPoly {
    parse_poly(s).unwrap()
}

#[test]
fn table_rows_at_documented_points() {
    let t = hook_table(WindowParams::zero()).unwrap();
    assert_eq!(t.hook(RootBox::C4, HookChoice::U), poly("2+3a"));
    assert_eq!(t.virtual_hook(HookChoice::U), alpha());
    let p = WindowParams { m1: 1, ..WindowParams::zero() };
    assert_eq!(hook_table(p).unwrap().hook(RootBox::A1, HookChoice::U), poly("1+a"));
}

#[test]
fn constraint_is_enforced() {
    let bad = WindowParams { r2: 1, n4: 2, ..WindowParams::zero() };
    let err = hook_table(bad).unwrap_err();
    assert_eq!(err.to_string(), "r2*n4 must be 0");
    assert!(WindowParams::from_array([0, 0, 0, 0, 0, 3, 0, 1]).is_err());
}

#[test]
fn zero_window_is_the_root_triple() {
    let t = hook_table(WindowParams::zero()).unwrap();
    for b in RootBox::ALL {
        let shape = root::shape(b.slot());
        assert_eq!(t.hook(b, HookChoice::U), partition_upper_hook(&shape, b.cell()).unwrap(), "{}", b.name());
        assert_eq!(t.hook(b, HookChoice::L), lower_hook(&shape, b.cell()).unwrap(), "{}", b.name());
    }
}

#[test]
fn upper_minus_lower_is_beta() {
    let p = WindowParams { m1: 2, m2: 1, n1: 3, r1: 1, r2: 4, ..WindowParams::zero() };
    let t = hook_table(p).unwrap();
    for b in FreeBox::ALL {
        assert_eq!(&t.free(b, HookChoice::U) - &t.free(b, HookChoice::L), poly("a-1"));
    }
}

#[test]
fn virtual_hook_matches_closed_form() {
    for (r2, n4) in [(0, 0), (3, 0), (0, 2), (1, 0)] {
        let p = WindowParams { r2, n4, m1: 1, ..WindowParams::zero() };
        let t = hook_table(p).unwrap();
        let expected = &MultiPoly::from_int(r2 as i64) + &alpha().scale(&int(n4 as i64 + 1));
        assert_eq!(t.virtual_hook(HookChoice::U), expected);
    }
}

fn window_params() -> impl Strategy<Value = WindowParams> {
    (proptest::array::uniform8(0u32..5), any::<bool>()).prop_map(|(mut v, zero_r2)| {
        // keep r2·n4 = 0 by zeroing one of the two
        if zero_r2 {
            v[7] = 0;
        } else {
            v[5] = 0;
        }
        WindowParams::from_array(v).unwrap()
    })
}

fn claw_value(t: &HookTable, b: FreeBox) -> MultiPoly {
    let f = claw_form(b);
    let x = reference_x();
    let mut v = hook_beta().scale(&int(f.beta));
    for (&a, &c) in &f.coeffs {
        v = &v + &t.free(a, x.effective(a)).scale(&int(c));
    }
    v
}

fn hook_beta() -> MultiPoly {
    poly("a-1")
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn claws_vanish_on_every_window(p in window_params()) {
        let t = hook_table(p).unwrap();
        for b in FreeBox::ALL {
            prop_assert!(claw_value(&t, b).is_zero(), "claw {} at {}", b, p);
        }
    }

    #[test]
    fn resolution_formulas_hold_on_every_window(p in window_params()) {
        let t = hook_table(p).unwrap();
        for b in FreeBox::ALL {
            let q = jacklr_hookspace::quotient::quotient_hook(b, HookChoice::U);
            let bindings: BTreeMap<String, MultiPoly> = FREE_BOXES
                .iter()
                .map(|&f| (jacklr_hookspace::quotient::hook_var(f), t.free(f, HookChoice::U)))
                .chain([("beta".to_string(), hook_beta())])
                .collect();
            prop_assert_eq!(q.substitute(&bindings), t.free(b, HookChoice::U));
        }
    }
}

/// Coefficient vector of an affine hook over the monomials `1, params, α, params·α`.
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

#[test]
fn exactly_five_hooks_are_free() {
    let hooks: BTreeMap<FreeBox, MultiPoly> = symbolic_free_hooks().into_iter().collect();
    let beta = hook_beta();
    let mut all: Vec<MultiPoly> = hooks.values().cloned().collect();
    all.push(beta.clone());
    let mut free: Vec<MultiPoly> = FREE_BOXES.iter().map(|b| hooks[b].clone()).collect();
    free.push(beta);
    assert_eq!(rank(&coefficient_rows(&all)), 6);
    assert_eq!(rank(&coefficient_rows(&free)), 6);
    // the symbolic table satisfies the resolution formulas as identities
    let bindings: BTreeMap<String, MultiPoly> = FREE_BOXES
        .iter()
        .map(|&f| (jacklr_hookspace::quotient::hook_var(f), hooks[&f].clone()))
        .chain([("beta".to_string(), hook_beta())])
        .collect();
    for (b, h) in &hooks {
        assert_eq!(&upper_hook(*b).substitute(&bindings), h, "{b}");
    }
}

#[test]
fn gstar_at_the_root_window_is_the_jack_coefficient() {
    let t = hook_table(WindowParams::zero()).unwrap();
    let jacks = JackTable::default();
    let (mu, nu, lam) = (root::mu(), root::nu(), root::lam());
    let value = evaluate(&build_gstar(), &t).unwrap();
    assert!(value == jacks.lr_coefficient(&mu, &nu, &lam).unwrap());
    let stanley = jacks.stanley_coefficient(&mu, &nu, &lam).unwrap();
    assert_eq!(evaluate_poly(&build_gstar(), &t).unwrap(), stanley);
    // the virtual form drops one factor α
    let v = evaluate_virtual(&build_gstar(), &t).unwrap();
    assert_eq!(&v * &alpha(), stanley);
    let q = pullback_sum(&build_gstar());
    assert_eq!(&q.specialize(&t) * &alpha(), stanley);
}

/// `μ = 1^{m+1}`, `ν = (n+1)`, `λ = (n+1)1^{m+1}` with the single rule
/// diagram: everything upper except the arm of the first row of `ν` and `λ`.
fn window_1112(m: u32, n: u32) -> StanleyDiagram {
    let mu = Partition::new(vec![1; m as usize + 1]).unwrap();
    let nu = Partition::of(&[n + 1]);
    let mut lam_parts = vec![n + 1];
    lam_parts.extend(std::iter::repeat(1).take(m as usize + 1));
    let lam = Partition::new(lam_parts).unwrap();
    let mut choices = BTreeMap::new();
    for c in mu.boxes() {
        choices.insert((Slot::Mu, c), HookChoice::U);
    }
    for (slot, shape) in [(Slot::Nu, &nu), (Slot::Lam, &lam)] {
        for c in shape.boxes() {
            let choice = if c.row == 0 && c.col > 0 { HookChoice::L } else { HookChoice::U };
            choices.insert((slot, c), choice);
        }
    }
    StanleyDiagram::new(mu, nu, lam, choices).unwrap()
}

#[test]
fn window_family_of_the_smallest_root() {
    let jacks = JackTable::default();
    for m in 0..=2 {
        for n in 0..=2 {
            let d = window_1112(m, n);
            let [mu, nu, lam] = [d.shape(Slot::Mu).clone(), d.shape(Slot::Nu).clone(), d.shape(Slot::Lam).clone()];
            let ctx = TripleHooks::new(mu.clone(), nu.clone(), lam.clone());
            let rule = evaluate(&StanleySum::single(d, 1), &ctx).unwrap();
            let lr = jacks.lr_coefficient(&mu, &nu, &lam).unwrap();
            assert!(rule == lr, "m={m} n={n}: {rule} vs {lr}");
        }
    }
}
