use jacklr_exact::{alpha, int, parse_ratfunc, rat, MultiPoly, Rational};
use jacklr_partitions::root::{self, RootBox};
use jacklr_partitions::{Cell, Partition, Slot};
use jacklr_stanley::*;
use jacklr_symfunc::JackTable;

use FreeBox::*;

/// The 26 diagrams of the displayed rule, boxes in order a1 a2 a3 b1 b2 b3 c1..c6.
const DISPLAYED_RULE: &[(i64, &str)] = &[
    (7, "UUUUUUUULUUL"),
    (-2, "UUUUUUUUUUUL"),
    (-2, "LUUUUUUULUUL"),
    (-2, "UULUUUUULUUL"),
    (-2, "UUULUUUULUUL"),
    (-2, "UUUUULLULUUU"),
    (-2, "UUUUUUULLUUL"),
    (-2, "UUUUUUUULULL"),
    (-2, "ULUUUUUULUUL"),
    (-2, "UUUULUUULUUL"),
    (-2, "UUUUUUUULLUL"),
    (1, "ULUUUUUUUUUL"),
    (1, "UUUULUUUUUUL"),
    (1, "UUUUUUUUULUL"),
    (1, "LLUUUUUULUUL"),
    (1, "ULLUUUUULUUL"),
    (1, "UUULLUUULUUL"),
    (1, "UUUULLLULUUU"),
    (1, "UUUUUUULLLUL"),
    (1, "UUUUUUUULLLL"),
    (1, "LUUUULLULUUU"),
    (1, "UULLUUUULUUL"),
    (1, "LUUUUUUULULL"),
    (1, "UULUUUULLUUL"),
    (1, "UUULUUUULULL"),
    (1, "UUUUULLLLUUU"),
];

fn from_box_string(s: &str) -> RootDiagram {
    let mut choices = [HookChoice::U; 12];
    for (i, ch) in s.chars().enumerate() {
        choices[i] = HookChoice::from_char(ch).unwrap();
    }
    RootDiagram::from_physical(&choices).unwrap()
}

fn set(boxes: &[FreeBox]) -> BoxSet {
    boxes.iter().copied().collect()
}

#[test]
fn reference_diagram() {
    let x = reference_x();
    assert_eq!(x.physical(RootBox::A1), HookChoice::U);
    assert_eq!(x.physical(RootBox::C3), HookChoice::L);
    assert_eq!(x.conjugate().physical(RootBox::C3), HookChoice::U);
    assert_eq!(x.physical(RootBox::C1), HookChoice::U);
    assert_eq!(x.physical(RootBox::C6), HookChoice::L);
    assert_eq!(x.to_string(), "mu:UUU;nu:UUU;lam:UU?UL?");
    let signs: Vec<i64> = FreeBox::ALL.iter().map(|b| b.x_sign()).collect();
    assert_eq!(signs, [1, 1, 1, 1, 1, 1, -1, 1, -1, -1]);
}

#[test]
fn flips() {
    let x = reference_x();
    assert_eq!(x.flip(BoxSet::EMPTY), x);
    assert_eq!(x.flip(BoxSet::FULL), x.conjugate());
    let t = x.flip(BoxSet::single(Bt3));
    assert_eq!(t.physical(RootBox::B3), HookChoice::L);
    assert_eq!(t.physical(RootBox::C1), HookChoice::L);
    assert_eq!(t.physical(RootBox::C6), HookChoice::U);
    let j = set(&[A1, C3, C5]);
    assert_eq!(x.flip(j).flip(j), x);
}

#[test]
fn text_form_round_trip() {
    for (_, s) in DISPLAYED_RULE {
        let d = from_box_string(s);
        let parsed: RootDiagram = d.to_string().parse().unwrap();
        assert_eq!(parsed, d);
    }
    assert!("mu:UUU;nu:UUU;lam:UUUUL?".parse::<RootDiagram>().is_err());
    assert!("mu:UUU;nu:UU;lam:UU?UL?".parse::<RootDiagram>().is_err());
    let general = reference_x().to_stanley_diagram();
    let back = StanleyDiagram::parse(&general.to_string(), &root::mu(), &root::nu(), &root::lam()).unwrap();
    assert_eq!(back, general);
    assert_eq!(general.to_string(), "mu:UUU;nu:UUU;lam:UULULU");
}

#[test]
fn gstar_matches_displayed_rule() {
    let g = build_gstar();
    assert_eq!(g.len(), 26);
    assert_eq!(g.coeff(&reference_x()), 7);
    assert_eq!(g.total(), 2);
    let displayed: StanleySum<RootDiagram> =
        DISPLAYED_RULE.iter().map(|&(c, s)| (from_box_string(s), c)).collect();
    assert_eq!(g, displayed);
}

#[test]
fn gstar_evaluates_to_jack_lr_coefficient() {
    let value = evaluate(&build_gstar(), &TripleHooks::root()).unwrap();
    let expected = parse_ratfunc("6*a*(2+11*a+2*a^2)/((1+2*a)*(2+a)*(2+3*a)*(3+2*a))").unwrap();
    assert!(value == expected, "{value}");

    let table = JackTable::default();
    let (mu, nu, lam) = (root::mu(), root::nu(), root::lam());
    assert!(value == table.lr_coefficient(&mu, &nu, &lam).unwrap());
    let primed = evaluate_poly(&build_gstar(), &TripleHooks::root()).unwrap();
    assert_eq!(primed, table.stanley_coefficient(&mu, &nu, &lam).unwrap());
}

#[test]
fn smallest_example() {
    let one = Partition::of(&[1]);
    let lam = Partition::of(&[1, 1]);
    let d = StanleyDiagram::uniform(one.clone(), one.clone(), lam.clone(), HookChoice::U);
    let s = StanleySum::single(d, 1);
    let ctx = TripleHooks::new(one.clone(), one, lam);
    let value = evaluate(&s, &ctx).unwrap();
    assert!(value == parse_ratfunc("a^2/(a*(1+a))").unwrap());
    assert_eq!(evaluate_poly(&s, &ctx).unwrap().to_string(), "2*a^2");

    let empty: StanleySum<RootDiagram> = StanleySum::zero();
    assert!(evaluate(&empty, &TripleHooks::root()).unwrap().is_zero());
}

#[test]
fn missing_hook_is_an_error() {
    let mut table = HookTable::new();
    table.insert(Slot::Mu, Cell::new(0, 0), HookChoice::U, alpha());
    let s = StanleySum::single(reference_x(), 1);
    assert!(matches!(evaluate(&s, &table), Err(StanleyError::MissingHook { .. })));
}

#[test]
fn schur_limit_recovers_k_empty() {
    // At α = 1 both hooks coincide, so every diagram has the same value and
    // the sum collapses to K_∅ times the ordinary hook ratio.
    let value = evaluate(&build_gstar(), &TripleHooks::root()).unwrap();
    let at_one = value.eval_at(&int(1)).unwrap();
    let hooks = |p: &Partition| -> Rational {
        p.boxes()
            .into_iter()
            .map(|b| jacklr_partitions::upper_hook_at(p, b, &int(1)).unwrap())
            .product()
    };
    let ratio = hooks(&root::mu()) * hooks(&root::nu()) / hooks(&root::lam());
    assert_eq!(ratio, rat(1, 5));
    let k_empty = k_transform(&build_gstar(), reference_x()).get(BoxSet::EMPTY);
    assert_eq!(k_empty, 2);
    assert_eq!(at_one, ratio * int(k_empty));
}

#[test]
fn virtual_box_matches_twelve_box_primed_form() {
    // b̃3 carries r2+(n4+1)α at the root, i.e. α; its lower hook is 1.
    struct Root;
    impl VirtualHookContext for Root {
        fn free_hook(&self, b: FreeBox, choice: HookChoice) -> Option<MultiPoly> {
            if b == Bt3 {
                return Some(match choice {
                    HookChoice::U => alpha(),
                    HookChoice::L => MultiPoly::one(),
                });
            }
            let rb = b.root_box();
            TripleHooks::root().hook(rb.slot(), rb.cell(), choice)
        }
    }
    let g = build_gstar();
    let twelve = evaluate_poly(&g, &TripleHooks::root()).unwrap();
    let ten = evaluate_virtual(&g, &Root).unwrap();
    assert_eq!(twelve, &alpha() * &ten);
}
