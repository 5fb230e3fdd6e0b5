use jacklr_exact::parse_poly;
use jacklr_partitions::{
    arm, enumerate_partitions, leg, lower_hook, pivot_pairs, upper_hook, Cell, Partition,
};
use proptest::prelude::*;

fn part(s: &str) -> Partition {
    s.parse().unwrap()
}

#[test]
fn arm_and_leg_examples() {
    let o = Cell::new(0, 0);
    assert_eq!((arm(&part("3,2,1"), o).unwrap(), leg(&part("3,2,1"), o).unwrap()), (2, 2));
    assert_eq!((arm(&part("1"), o).unwrap(), leg(&part("1"), o).unwrap()), (0, 0));
    assert_eq!((arm(&part("2,2,1,1"), o).unwrap(), leg(&part("2,2,1,1"), o).unwrap()), (1, 3));
    let err = arm(&part("1"), Cell::new(0, 1)).unwrap_err();
    assert!(err.to_string().starts_with("box not in diagram"));
}

#[test]
fn hook_examples() {
    let o = Cell::new(0, 0);
    assert_eq!(lower_hook(&part("3,2,1"), o).unwrap(), parse_poly("3+2a").unwrap());
    assert_eq!(upper_hook(&part("2,2,1,1"), o).unwrap(), parse_poly("3+2a").unwrap());
    assert_eq!(upper_hook(&part("1"), o).unwrap(), parse_poly("a").unwrap());
    assert_eq!(lower_hook(&part("1"), o).unwrap(), parse_poly("1").unwrap());
}

#[test]
fn corners() {
    assert_eq!(
        part("2,2,1").addable_corners(),
        vec![Cell::new(0, 2), Cell::new(2, 1), Cell::new(3, 0)]
    );
    assert_eq!(Partition::empty().addable_corners(), vec![Cell::new(0, 0)]);
    assert!(Partition::empty().removable_corners().is_empty());
    assert_eq!(
        part("3,2,1").removable_corners(),
        vec![Cell::new(0, 2), Cell::new(1, 1), Cell::new(2, 0)]
    );
}

#[test]
fn pivot_pair_examples() {
    let pairs = pivot_pairs(&part("2,2,1"));
    let p = pairs
        .iter()
        .find(|p| p.corner_a == Cell::new(3, 0) && p.corner_b == Cell::new(0, 2))
        .unwrap();
    assert_eq!(p.lambda1, part("2,2,1,1"));
    assert_eq!(p.lambda2, part("3,2,1"));
    assert_eq!(p.pivot_box, Cell::new(0, 0));
    assert_eq!(p.shared_hook, parse_poly("3+2a").unwrap());

    let pairs = pivot_pairs(&part("1"));
    assert_eq!(pairs.len(), 1);
    assert_eq!((pairs[0].lambda1.clone(), pairs[0].lambda2.clone()), (part("1,1"), part("2")));
    assert_eq!(pairs[0].shared_hook, parse_poly("1+a").unwrap());

    assert!(pivot_pairs(&Partition::empty()).is_empty());
}

/// Euler's pentagonal recurrence, independent of the enumerator.
fn partition_counts(n: usize) -> Vec<i64> {
    let mut p = vec![0i64; n + 1];
    p[0] = 1;
    for m in 1..=n {
        let mut k: i64 = 1;
        loop {
            let g1 = (k * (3 * k - 1) / 2) as usize;
            if g1 > m {
                break;
            }
            let sign = if k % 2 == 1 { 1 } else { -1 };
            p[m] += sign * p[m - g1];
            let g2 = (k * (3 * k + 1) / 2) as usize;
            if g2 <= m {
                p[m] += sign * p[m - g2];
            }
            k += 1;
        }
    }
    p
}

#[test]
fn enumeration_counts() {
    assert_eq!(enumerate_partitions(0), vec![Partition::empty()]);
    assert_eq!(enumerate_partitions(4).len(), 5);
    assert_eq!(enumerate_partitions(10).len(), 42);
    let oracle = partition_counts(16);
    for n in 0..=16 {
        assert_eq!(enumerate_partitions(n as u32).len() as i64, oracle[n], "n={n}");
    }
}

#[test]
fn enumeration_is_reverse_lex_and_extends_dominance() {
    for n in 1..=9 {
        let ps = enumerate_partitions(n);
        for w in ps.windows(2) {
            assert!(w[0] > w[1]);
        }
        for (i, a) in ps.iter().enumerate() {
            for b in &ps[i + 1..] {
                assert!(!b.dominates(a) || a == b, "{b} dominates earlier {a}");
            }
        }
    }
}

#[test]
fn text_round_trip() {
    assert_eq!(part("3,2,1").to_string(), "3,2,1");
    assert_eq!(part(""), Partition::empty());
    assert!("2,3".parse::<Partition>().is_err());
    assert!("2,x".parse::<Partition>().is_err());
}

fn any_partition() -> impl Strategy<Value = Partition> {
    (0u32..12, any::<prop::sample::Index>()).prop_map(|(n, i)| {
        let ps = enumerate_partitions(n);
        ps[i.index(ps.len())].clone()
    })
}

proptest! {
    #[test]
    fn upper_minus_lower_is_beta(lam in any_partition()) {
        let beta = parse_poly("a-1").unwrap();
        for b in lam.boxes() {
            prop_assert_eq!(&upper_hook(&lam, b).unwrap() - &lower_hook(&lam, b).unwrap(), beta.clone());
        }
    }

    #[test]
    fn arm_is_conjugate_leg(lam in any_partition()) {
        let conj = lam.conjugate();
        prop_assert_eq!(conj.conjugate(), lam.clone());
        for b in lam.boxes() {
            prop_assert_eq!(arm(&lam, b).unwrap(), leg(&conj, b.transpose()).unwrap());
        }
    }

    #[test]
    fn pivot_hooks_agree(kappa in any_partition()) {
        for p in pivot_pairs(&kappa) {
            prop_assert_eq!(upper_hook(&p.lambda1, p.pivot_box).unwrap(), lower_hook(&p.lambda2, p.pivot_box).unwrap());
            prop_assert!(p.corner_a.row > p.corner_b.row);
        }
    }
}
