use std::collections::{BTreeMap, BTreeSet};

use jacklr_exact::{int, MultiPoly};
use jacklr_stanley::*;
use proptest::prelude::*;

use FreeBox::*;

fn set(boxes: &[FreeBox]) -> BoxSet {
    boxes.iter().copied().collect()
}

#[test]
fn petersen_labelling() {
    let figure: BTreeSet<BoxSet> = PETERSEN_EDGES.iter().map(|&(a, b)| set(&[a, b])).collect();
    let mut kneser = BTreeSet::new();
    for a in FreeBox::ALL {
        for b in FreeBox::ALL {
            if a < b && a.adjacent(b) {
                kneser.insert(set(&[a, b]));
            }
        }
    }
    assert_eq!(figure, kneser);
    assert!(FreeBox::ALL.iter().all(|b| b.neighbours().len() == 3));
    assert_eq!(A2.claw(), set(&[A2, A1, A3, C3]));
}

#[test]
fn generators_span_s5_and_fix_gstar() {
    let gens = s5_generators();
    let mut group = BTreeSet::from([Permutation5::identity()]);
    let mut frontier = vec![Permutation5::identity()];
    while let Some(g) = frontier.pop() {
        for (_, h) in &gens {
            let gh = h.compose(&g);
            if group.insert(gh) {
                frontier.push(gh);
            }
        }
    }
    assert_eq!(group.len(), 120);

    let g = build_gstar();
    for (name, h) in &gens {
        let moved = FreeBox::ALL.iter().filter(|&&b| h.on_box(b) != b).count();
        assert!(moved == 6 || moved == 8, "{name} moves {moved} boxes");
        for (a, b) in PETERSEN_EDGES {
            assert!(h.on_box(a).adjacent(h.on_box(b)));
        }
        assert_eq!(g.map(|d| d.act(h)), g, "{name}");
    }
}

#[test]
fn k_values_of_gstar() {
    let xbar = reference_x().conjugate();
    let k = k_transform(&build_gstar(), xbar);
    for (i, v) in k.iter() {
        let expected = match i.len() {
            0 => 2,
            1 => 1,
            2 => i.edges() as i64,
            _ => 0,
        };
        assert_eq!(v, expected, "K at {i}");
    }
}

#[test]
fn k_values_of_conjugate() {
    let xbar = reference_x().conjugate();
    let conj = build_gstar().map(|d| d.conjugate());
    let k = k_transform(&conj, xbar);
    for (i, v) in k.iter() {
        assert_eq!(v, 2 - i.len() as i64 + i.edges() as i64, "K at {i}");
    }
    let k_plain = k_transform(&build_gstar(), xbar);
    for (i, v) in k.iter() {
        if i.len() < 3 {
            assert_eq!(v, k_plain.get(i));
        }
    }
}

#[test]
fn zero_sum_has_zero_k_values() {
    let k = k_transform(&StanleySum::zero(), reference_x());
    assert!(k.support().is_empty());
    assert!(k_inverse(&k).is_empty());
}

#[test]
fn gstar_weights_closed_form() {
    let w = ell_weights(&k_transform(&build_gstar(), reference_x()));
    for i in BoxSet::all() {
        assert_eq!(w[i.0 as usize], gstar_weight(i), "w at {i}");
    }
    assert_eq!(w[BoxSet::FULL.0 as usize], 42);
    assert_eq!(w[0], 2);
    let independent = set(&[A1, A3, B2, C4]);
    assert_eq!(independent.edges(), 0);
    assert_eq!(w[independent.0 as usize], -6);

    // Against X̄ the weights pick up (−1)^{|J|}.
    let wbar = ell_weights(&k_transform(&build_gstar(), reference_x().conjugate()));
    for i in BoxSet::all() {
        let sign = if i.len() % 2 == 0 { 1 } else { -1 };
        assert_eq!(wbar[i.0 as usize], sign * gstar_weight(i));
    }
}

/// Upper hook `u_b`, lower hook `u_b − β` on every free box.
struct Formal;

impl VirtualHookContext for Formal {
    fn free_hook(&self, b: FreeBox, choice: HookChoice) -> Option<MultiPoly> {
        let u = MultiPoly::var(&format!("u_{}", b.name()));
        Some(match choice {
            HookChoice::U => u,
            HookChoice::L => &u - &MultiPoly::var(BETA),
        })
    }
}

fn check_ell_expansion(s: &StanleySum<RootDiagram>, reference: RootDiagram) {
    let primed = evaluate_virtual(s, &Formal).unwrap();
    let mut bindings = BTreeMap::new();
    let mut sign = 1;
    for b in FreeBox::ALL {
        let x = reference.effective(b).sign();
        sign *= x;
        let u = MultiPoly::var(&format!("u_{}", b.name()));
        let ell = (&u.scale(&int(2)) - &MultiPoly::var(BETA)).scale(&int(x));
        bindings.insert(ell_var(b), ell);
    }
    let lhs = ell_expansion(s, reference).substitute(&bindings);
    assert_eq!(lhs, primed.scale(&int(1024 * sign)));
}

#[test]
fn ell_expansion_reproduces_primed_form() {
    check_ell_expansion(&build_gstar(), reference_x());
    check_ell_expansion(&build_gstar(), reference_x().conjugate());
    let odd = StanleySum::from_iter([(reference_x().flip(set(&[A1, C4])), 3), (reference_x().conjugate(), -1)]);
    check_ell_expansion(&odd, reference_x().flip(set(&[B2])));
}

#[test]
fn claw_kernel_at_a2() {
    let k = kernel_sum(&claw_form(A2), reference_x());
    assert_eq!(k.len(), 10);
    let x = reference_x();
    let flip = |b: &[FreeBox]| x.flip(set(b));
    assert_eq!(k.coeff(&x), 1);
    assert_eq!(k.coeff(&flip(&[A2])), -2);
    for a in [A1, A3, C3] {
        assert_eq!(k.coeff(&flip(&[A2, a])), 1);
        assert_eq!(k.coeff(&flip(&[a])), 0);
    }
    assert_eq!(k.coeff(&flip(&[A1, A3])), -1);
    assert_eq!(k.coeff(&flip(&[A1, C3])), -1);
    assert_eq!(k.coeff(&flip(&[A3, C3])), -1);
    assert_eq!(k.coeff(&flip(&[A1, A3, C3])), 2);
    assert_eq!(k.coeff(&flip(&[A1, A2, A3, C3])), -1);
    let mut coeffs: Vec<i64> = k.iter().map(|(_, c)| c).collect();
    coeffs.sort();
    assert_eq!(coeffs, [-2, -1, -1, -1, -1, 1, 1, 1, 1, 2]);
}

#[test]
fn claw_relation_holds_at_root_hooks() {
    // Every claw relation vanishes on the actual hooks, and so does its kernel sum.
    struct Root;
    impl VirtualHookContext for Root {
        fn free_hook(&self, b: FreeBox, choice: HookChoice) -> Option<MultiPoly> {
            let a = jacklr_exact::alpha();
            if b == Bt3 {
                return Some(match choice {
                    HookChoice::U => a,
                    HookChoice::L => MultiPoly::one(),
                });
            }
            let rb = b.root_box();
            TripleHooks::root().hook(rb.slot(), rb.cell(), choice)
        }
    }
    let beta = &jacklr_exact::alpha() - &MultiPoly::one();
    for b in FreeBox::ALL {
        let f = claw_form(b);
        let mut value = beta.scale(&int(f.beta));
        for (&c, &a) in &f.coeffs {
            value = &value + &Root.free_hook(c, reference_x().effective(c)).unwrap().scale(&int(a));
        }
        assert!(value.is_zero(), "claw at {b}: {value}");
        let k = kernel_sum(&f, reference_x());
        assert!(evaluate_virtual(&k, &Root).unwrap().is_zero(), "kernel at {b}");
    }
}

fn check_kernel_identity(f: &LinearHookForm, reference: RootDiagram) {
    let y = f.support();
    let k = kernel_sum(f, reference);
    let lhs: MultiPoly = k
        .iter()
        .map(|(d, c)| formal_product(*d, reference).scale(&int(c)))
        .sum();
    let sigma: i64 = y.iter().map(|b| -reference.effective(b).sign()).product();
    let sign = if y.len() % 2 == 0 { sigma } else { -sigma };
    let outside: MultiPoly = (!y)
        .iter()
        .map(|b| MultiPoly::var(&format!("h_{}", b.name())))
        .product();
    let rhs = &(&outside * &MultiPoly::var(BETA).pow(y.len() - 1)) * &f.to_poly().scale(&int(sign));
    assert_eq!(lhs, rhs);
}

#[test]
fn kernel_identity_for_claws() {
    for b in FreeBox::ALL {
        check_kernel_identity(&claw_form(b), reference_x());
        let k = k_transform(&kernel_sum(&claw_form(b), reference_x()), reference_x());
        let y = b.claw();
        for (i, v) in k.iter() {
            if v != 0 {
                assert!(y.is_subset(i) || (i & y).len() + 1 == y.len(), "K at {i}");
            }
        }
    }
}

#[test]
fn empty_support_is_scalar() {
    let f = LinearHookForm { coeffs: BTreeMap::new(), beta: 1 };
    let k = kernel_sum(&f, reference_x());
    assert_eq!(k, StanleySum::single(reference_x(), 1));
}

fn arb_sum() -> impl Strategy<Value = StanleySum<RootDiagram>> {
    prop::collection::vec((0u16..1024, -5i64..=5), 0..12).prop_map(|terms| {
        terms
            .into_iter()
            .map(|(m, c)| (RootDiagram::from_lower_set(BoxSet(m)), c))
            .collect()
    })
}

fn arb_form() -> impl Strategy<Value = LinearHookForm> {
    (prop::collection::btree_map(0usize..10, -3i64..=3, 1..5), -3i64..=3).prop_map(|(m, beta)| LinearHookForm {
        coeffs: m.into_iter().map(|(i, a)| (FreeBox::from_index(i), a)).collect(),
        beta,
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn k_inverse_round_trip(s in arb_sum(), conj in any::<bool>()) {
        let reference = if conj { reference_x().conjugate() } else { reference_x() };
        prop_assert_eq!(k_inverse(&k_transform(&s, reference)), s);
    }

    #[test]
    fn change_of_reference(s in arb_sum(), a in 0u16..1024, b in 0u16..1024) {
        let (ra, rb) = (RootDiagram::from_lower_set(BoxSet(a)), RootDiagram::from_lower_set(BoxSet(b)));
        let ka = k_transform(&s, ra);
        let kb = k_transform(&s, rb);
        prop_assert_eq!(change_reference(&ka, rb), kb.clone());
        let (wa, wb) = (ell_weights(&ka), ell_weights(&kb));
        let d = ra.disagreement(rb);
        for j in BoxSet::all() {
            let sign = if (j & d).len() % 2 == 0 { 1 } else { -1 };
            prop_assert_eq!(wa[j.0 as usize], sign * wb[j.0 as usize]);
        }
    }

    #[test]
    fn kernel_identity_random(f in arb_form(), m in 0u16..1024) {
        check_kernel_identity(&f, RootDiagram::from_lower_set(BoxSet(m)));
    }
}
