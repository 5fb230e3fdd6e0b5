use jacklr_exact::{int, parse_poly, parse_ratfunc, RatFunc};
use jacklr_partitions::{enumerate_partitions, Partition};
use jacklr_symfunc::{
    expand_in_jack, jack_strategies, jack_strategy, jnorm, stanley_coefficients_sampled, JackTable, SymError,
    SymFunc,
};

fn part(s: &str) -> Partition {
    s.parse().unwrap()
}

fn rf(s: &str) -> RatFunc {
    parse_ratfunc(s).unwrap()
}

#[test]
fn small_jacks() {
    let t = JackTable::default();
    assert_eq!(*t.jack(&part("1")).unwrap(), SymFunc::monomial(part("1")));
    let j2 = t.jack(&part("2")).unwrap();
    assert!(j2.coeff(&part("2")) == rf("1+a"));
    assert!(j2.coeff(&part("1,1")) == rf("2"));
    let j11 = t.jack(&part("1,1")).unwrap();
    assert!(j11.coeff(&part("2")).is_zero());
    assert!(j11.coeff(&part("1,1")) == rf("2"));
    assert_eq!(*t.jack(&Partition::empty()).unwrap(), SymFunc::unit());
}

#[test]
fn strategies_agree() {
    let names: Vec<_> = jack_strategies().iter().map(|s| s.name()).collect();
    assert_eq!(names, ["interpolate", "gram-schmidt"]);
    let sampled = JackTable::with_strategy(12, jack_strategy("interpolate").unwrap());
    let symbolic = JackTable::with_strategy(12, jack_strategy("gram-schmidt").unwrap());
    for n in 0..=6 {
        assert_eq!(*sampled.degree(n).unwrap(), *symbolic.degree(n).unwrap(), "degree {n}");
    }
    assert!(matches!(jack_strategy("nope"), Err(SymError::UnknownStrategy(_))));
}

#[test]
fn degree_cap_is_enforced() {
    let t = JackTable::new(4);
    let err = t.jack(&part("5")).unwrap_err();
    assert!(err.to_string().starts_with("degree cap"));
}

#[test]
fn monomial_products() {
    let m1 = SymFunc::monomial(part("1"));
    let sq = m1.multiply(&m1);
    assert!(sq.coeff(&part("2")) == rf("1"));
    assert!(sq.coeff(&part("1,1")) == rf("2"));
    let f = SymFunc::monomial(part("2,1"));
    assert_eq!(f.multiply(&SymFunc::unit()), f);
}

#[test]
fn product_round_trip() {
    let t = JackTable::default();
    let prod = t.jack(&part("2")).unwrap().multiply(&*t.jack(&part("1")).unwrap());
    let exp = expand_in_jack(&t, &prod).unwrap();
    let mut back = SymFunc::zero(3);
    for (lam, c) in &exp {
        back = back.add(&t.jack(lam).unwrap().scale(c)).unwrap();
    }
    assert_eq!(back, prod);
}

#[test]
fn expand_examples() {
    let t = JackTable::default();
    let j3 = t.jack(&part("3")).unwrap();
    let e = expand_in_jack(&t, &j3).unwrap();
    assert_eq!(e.len(), 1);
    assert!(e[&part("3")] == RatFunc::one());

    let m1 = SymFunc::monomial(part("1"));
    let e = expand_in_jack(&t, &m1.multiply(&m1)).unwrap();
    assert!(e[&part("2")] == rf("1/(1+a)"));
    assert!(e[&part("1,1")] == rf("a/(1+a)"));

    assert!(expand_in_jack(&t, &SymFunc::zero(3)).unwrap().is_empty());
}

#[test]
fn lr_examples() {
    let t = JackTable::default();
    let g = t.lr_coefficient(&part("2,1"), &part("2,1"), &part("3,2,1")).unwrap();
    assert!(g == rf("6a(2+11a+2a^2)/((1+2a)(2+a)(2+3a)(3+2a))"));
    assert!(t.lr_coefficient(&part("3,1"), &Partition::empty(), &part("3,1")).unwrap() == RatFunc::one());
    assert!(t.lr_coefficient(&part("1"), &part("1"), &part("1,1")).unwrap() == rf("a/(1+a)"));
    assert!(t.lr_coefficient(&part("1"), &part("1"), &part("3")).is_err());
    assert!(t.lr_coefficient(&part("3"), &part("1"), &part("2,2")).unwrap().is_zero());
}

#[test]
fn stanley_examples() {
    let t = JackTable::default();
    let s = |m: &str, n: &str, l: &str| t.stanley_coefficient(&part(m), &part(n), &part(l)).unwrap();
    assert_eq!(s("1", "1", "1,1"), parse_poly("2a^2").unwrap());
    assert_eq!(s("2,1", "2,1", "3,2,1"), parse_poly("6a^4(1+2a)(2+a)(2+11a+2a^2)").unwrap());
    assert_eq!(s("2,1", "2,1", "2,2,1,1"), parse_poly("4a^4(1+2a)^2(3+a)(4+a)").unwrap());
    assert_eq!(s("1", "1", "1,1").to_string(), "2*a^2");
}

#[test]
fn sampled_stanley_matches_symbolic() {
    let t = JackTable::default();
    for (m, n) in [("2,1", "2,1"), ("2", "1,1"), ("3", "2,1"), ("1,1,1", "1")] {
        let (mu, nu) = (part(m), part(n));
        let sampled = stanley_coefficients_sampled(&t, &mu, &nu).unwrap();
        for lam in enumerate_partitions(mu.weight() + nu.weight()) {
            let direct = t.stanley_coefficient(&mu, &nu, &lam).unwrap();
            assert_eq!(sampled[&lam], direct, "{mu} {nu} {lam}");
        }
    }
}

#[test]
fn jnorm_examples() {
    assert_eq!(jnorm(&part("1,1")), parse_poly("2a(1+a)").unwrap());
    assert_eq!(jnorm(&part("1")), parse_poly("a").unwrap());
    // at α = 1 both hooks are the ordinary hook, so j = H²
    assert_eq!(jnorm(&part("3,2,1")).eval_at(&int(1)).unwrap(), int(45 * 45));
    // six upper hooks carry α, and only the three boxes with an arm do below
    assert_eq!(jnorm(&part("3,2,1")).total_degree(), Some(9));
}
