use std::collections::BTreeMap;

use jacklr_exact::{divrem, rat, MultiPoly};
use proptest::prelude::*;

const VARS: [&str; 3] = ["a", "b", "c"];

fn poly() -> impl Strategy<Value = MultiPoly> {
    prop::collection::vec((-9i64..10, 1i64..4, 0u32..3, 0u32..3, 0u32..3), 0..6).prop_map(|ts| {
        ts.into_iter()
            .map(|(n, d, i, j, k)| {
                MultiPoly::monomial(rat(n, d), &[(VARS[0], i), (VARS[1], j), (VARS[2], k)])
            })
            .sum()
    })
}

fn univariate() -> impl Strategy<Value = MultiPoly> {
    prop::collection::vec(-6i64..7, 1..7).prop_map(|cs| {
        let cs: Vec<_> = cs.into_iter().map(|c| rat(c, 1)).collect();
        MultiPoly::from_dense("a", &cs)
    })
}

proptest! {
    #[test]
    fn addition_associates(x in poly(), y in poly(), z in poly()) {
        prop_assert_eq!(&(&x + &y) + &z, &x + &(&y + &z));
    }

    #[test]
    fn multiplication_commutes(x in poly(), y in poly()) {
        prop_assert_eq!(&x * &y, &y * &x);
    }

    #[test]
    fn distributes(x in poly(), y in poly(), z in poly()) {
        prop_assert_eq!(&x * &(&y + &z), &(&x * &y) + &(&x * &z));
    }

    #[test]
    fn divrem_reconstructs(a in univariate(), b in univariate()) {
        prop_assume!(!b.is_zero());
        let (q, r) = divrem(&a, &b).unwrap();
        prop_assert_eq!(&(&q * &b) + &r, a);
        if !r.is_zero() {
            prop_assert!(r.degree_in("a") < b.degree_in("a") || b.vars().is_empty());
        }
    }

    #[test]
    fn substitution_is_a_ring_map(x in poly(), y in poly(), s in poly(), t in poly()) {
        let mut b = BTreeMap::new();
        b.insert("a".to_string(), s);
        b.insert("c".to_string(), t);
        prop_assert_eq!((&x * &y).substitute(&b), &x.substitute(&b) * &y.substitute(&b));
        prop_assert_eq!((&x + &y).substitute(&b), &x.substitute(&b) + &y.substitute(&b));
    }
}
