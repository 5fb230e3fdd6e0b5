use std::collections::BTreeMap;

use jacklr_exact::symmetric::{
    elementary, eliminate_x6, expand_in_elementary, from_elementary, monomial_coefficients, x_var,
};
use jacklr_exact::{divrem, int, parse_poly, parse_ratfunc, rat, univariate_gcd, MultiPoly, RatFunc};

fn p(s: &str) -> MultiPoly {
    parse_poly(s).unwrap()
}

#[test]
fn divrem_examples() {
    let a = p("2a^4(1+2a)(3+2a)(-4+6a+a^2)");
    let (_, r) = divrem(&a, &p("3+2a")).unwrap();
    assert!(r.is_zero());

    let (q, r) = divrem(&p("a^2"), &p("a")).unwrap();
    assert_eq!(q, p("a"));
    assert!(r.is_zero());

    let (q, r) = divrem(&p("a^2+1"), &p("a+1")).unwrap();
    assert_eq!(q, p("a-1"));
    assert_eq!(r, MultiPoly::from_int(2));
}

#[test]
fn divrem_rejects_zero_divisor() {
    let err = divrem(&p("a"), &MultiPoly::zero()).unwrap_err();
    assert_eq!(err.to_string(), "zero divisor");
}

#[test]
fn substitution_examples() {
    let mut b = BTreeMap::new();
    b.insert("beta".to_string(), p("a-1"));
    assert_eq!(p("beta").substitute(&b), p("a-1"));

    assert!(p("x^2").substitute_one("x", &MultiPoly::zero()).is_zero());

    let diff = p("(l+beta)(l-beta)").substitute_one("l", &p("beta"));
    assert!(diff.is_zero());
}

#[test]
fn canonical_text() {
    assert_eq!(p("2a^2").to_string(), "2*a^2");
    assert_eq!(p("1 - a + a^2/2").to_string(), "1/2*a^2 - 1*a + 1");
    assert_eq!(MultiPoly::zero().to_string(), "0");
    assert_eq!(p("x*y - 3").to_string(), "1*x*y - 3");
    // display re-parses to the same value
    let q = p("(1+a)^3(2-b)/7");
    assert_eq!(p(&q.to_string()), q);
}

#[test]
fn ratfunc_reduces_univariate() {
    let f = parse_ratfunc("(a^2 - 1)/(2a + 2)").unwrap();
    assert_eq!(f.numer(), &p("(a-1)/2"));
    assert_eq!(f.denom(), &MultiPoly::one());
    let g = parse_ratfunc("a/(1+a)").unwrap();
    assert_eq!(g.to_string(), "(1*a)/(1*a + 1)");
    assert!(parse_ratfunc("(-a)/(-1-a)").unwrap() == g);
    assert_eq!(g.eval_at(&int(1)).unwrap(), rat(1, 2));
}

#[test]
fn ratfunc_multivariate_equality_by_cross_multiplication() {
    let f = parse_ratfunc("(x^2 - y^2)/(x + y)").unwrap();
    assert!(f == RatFunc::from_poly(p("x - y")));
    assert!(f != RatFunc::from_poly(p("x + y")));
}

#[test]
fn parser_errors_carry_position() {
    match parse_ratfunc("1 + * a") {
        Err(jacklr_exact::ExactError::Parse { pos, .. }) => assert_eq!(pos, 4),
        other => panic!("unexpected {other:?}"),
    }
    assert!(parse_ratfunc("a^-1").unwrap().denom() == &p("a"));
    assert!(parse_poly("1/a").is_err());
}

#[test]
fn gcd_is_monic() {
    let g = univariate_gcd(&p("2(a+1)(a+2)"), &p("6(a+1)(a-5)")).unwrap();
    assert_eq!(g, p("a+1"));
}

#[test]
fn elementary_expansion_examples() {
    let e2 = elementary(2, 6);
    assert_eq!(expand_in_elementary(&e2).unwrap(), p("e2"));

    let sq: MultiPoly = (1..=6).map(|i| MultiPoly::var(&x_var(i)).pow(2)).sum();
    assert_eq!(expand_in_elementary(&sq).unwrap(), p("-2e2"));

    let mixed = &(&e2 * &p("beta^2")) + &elementary(3, 6).pow(2);
    let got = expand_in_elementary(&mixed).unwrap();
    assert_eq!(got, p("e2*beta^2 + e3^2"));
}

#[test]
fn elementary_expansion_rejects_asymmetric() {
    let err = expand_in_elementary(&p("x1")).unwrap_err();
    assert!(err.to_string().starts_with("not symmetric"));
}

#[test]
fn monomial_coefficients_of_e2_squared() {
    // e2^2 = m22 + 2 m211 + 6 m1111
    let m = monomial_coefficients(&elementary(2, 6).pow(2));
    assert_eq!(m[&vec![2, 2]], MultiPoly::one());
    assert_eq!(m[&vec![2, 1, 1]], MultiPoly::from_int(2));
    assert_eq!(m[&vec![1, 1, 1, 1]], MultiPoly::from_int(6));
    assert_eq!(m.len(), 3);
}

#[test]
fn round_trip_through_elementary() {
    let f = &elementary(3, 6).pow(2) + &(&elementary(2, 6) * &elementary(4, 6));
    let e = expand_in_elementary(&f).unwrap();
    assert_eq!(eliminate_x6(&from_elementary(&e)), eliminate_x6(&f));
}

#[test]
fn interpolation_recovers_cubic() {
    let f = p("3a^3 - a/2 + 7");
    let xs: Vec<_> = (0..4).map(|k| int(k)).collect();
    let ys: Vec<_> = xs.iter().map(|x| f.eval_at(x).unwrap()).collect();
    let c = jacklr_exact::interpolate(&xs, &ys);
    assert_eq!(MultiPoly::from_dense("a", &c), f);
}
