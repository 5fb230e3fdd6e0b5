use jacklr_exact::parse_poly;
use jacklr_partitions::{enumerate_partitions, pivot_pairs, Cell, Partition, PivotPair};
use jacklr_pivots::identities::{all_lemma_identities, applicable_inner_corners, lemma_identities, lemma_identity, CornerKind, CornerPosition};

#[test]
fn all_identities_hold_up_to_weight_six() {
    let ids = all_lemma_identities(6);
    assert!(ids.len() >= 70, "{}", ids.len());
    for id in &ids {
        assert!(id.holds(), "{id}");
    }
    for kind in [CornerKind::Outer, CornerKind::Inner] {
        for pos in [CornerPosition::Before, CornerPosition::Between, CornerPosition::After] {
            assert!(ids.iter().any(|i| i.kind == kind && i.position == pos), "{kind:?}/{pos:?} never exercised");
        }
    }
}

#[test]
fn outer_corner_between_the_pivot_corners() {
    // κ = 221 has outer corners (3,0), (2,1), (0,2).
    let pair = PivotPair::new(&Partition::of(&[2, 2, 1]), Cell::new(3, 0), Cell::new(0, 2)).unwrap();
    assert_eq!(pair.shared_hook, parse_poly("3+2*a").unwrap());
    let id = lemma_identity(&pair, Cell::new(2, 1), CornerKind::Outer);
    assert_eq!(id.position, CornerPosition::Between);
    assert!(id.holds(), "{id}");
}

#[test]
fn inner_corners_adjacent_to_the_pivot_corners_are_excluded() {
    let k = Partition::of(&[3, 1]);
    let pair = PivotPair::new(&k, Cell::new(2, 0), Cell::new(0, 3)).unwrap();
    // (1,0) sits above a and (0,2) left of b.
    assert!(applicable_inner_corners(&pair).is_empty());
    assert!(!lemma_identity(&pair, Cell::new(1, 0), CornerKind::Inner).holds());
}

#[test]
fn identities_hold_on_larger_shapes() {
    for k in enumerate_partitions(9).into_iter().step_by(3) {
        for pair in pivot_pairs(&k) {
            for id in lemma_identities(&pair) {
                assert!(id.holds(), "{id}");
            }
        }
    }
}
