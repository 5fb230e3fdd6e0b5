use std::collections::BTreeMap;

use jacklr_partitions::{enumerate_partitions, pivot_pairs, Cell, Partition, Slot};
use jacklr_pivots::correspondence::{all_correspondences, hook_correspondence, BoxImage, HookCorrespondence};
use jacklr_stanley::{HookChoice, StanleyDiagram};
use proptest::prelude::*;

fn c(row: usize, col: usize) -> Cell {
    Cell::new(row, col)
}

fn image(row: usize, col: usize, flipped: bool) -> BoxImage {
    BoxImage { cell: c(row, col), flipped }
}

#[test]
fn basic_pivot_matches_figure() {
    // 2211 → 321 with letters a..f placed as in the figure.
    let psi = hook_correspondence(&Partition::of(&[2, 2, 1]), c(3, 0), c(0, 2)).unwrap();
    assert_eq!(psi.source, Partition::of(&[2, 2, 1, 1]));
    assert_eq!(psi.target, Partition::of(&[3, 2, 1]));
    let expected = [
        ((3, 0), image(2, 0, false)), // a
        ((2, 0), image(0, 1, true)),  // c
        ((1, 0), image(0, 2, true)),  // d
        ((1, 1), image(1, 1, false)), // e
        ((0, 1), image(1, 0, true)),  // f
        ((0, 0), image(0, 0, true)),  // b, the pivot
    ];
    for ((r, col), im) in expected {
        assert_eq!(psi.image(c(r, col)), Some(im), "box ({r},{col})");
    }
    assert!(psi.verify().passed());
}

#[test]
fn general_pivot_matches_figure() {
    let base = Partition::of(&[8, 8, 6, 6, 5, 3, 3, 2]);
    let psi = hook_correspondence(&base, c(7, 2), c(2, 6)).unwrap();
    let d = c(2, 2);
    assert_eq!(psi.pivot.pivot_box, d);
    assert_eq!(psi.image(d), Some(image(2, 2, true)));
    // left of d trades rows with a; beneath d trades columns with b
    for j in 0..2 {
        assert_eq!(psi.image(c(2, j)), Some(image(7, j, false)));
        assert_eq!(psi.image(c(7, j)), Some(image(2, j, false)));
    }
    for i in 0..2 {
        assert_eq!(psi.image(c(i, 2)), Some(image(i, 6, false)));
        assert_eq!(psi.image(c(i, 6)), Some(image(i, 2, false)));
    }
    let leg_and_arm = [
        ((3, 2), image(2, 6, true)),
        ((4, 2), image(2, 5, true)),
        ((5, 2), image(2, 3, true)),
        ((6, 2), image(5, 2, false)),
        ((7, 2), image(6, 2, false)),
        ((2, 3), image(2, 4, false)),
        ((2, 4), image(4, 2, true)),
        ((2, 5), image(3, 2, true)),
    ];
    for ((r, col), im) in leg_and_arm {
        assert_eq!(psi.image(c(r, col)), Some(im), "box ({r},{col})");
    }
    let moved: Vec<Cell> = psi.iter().filter(|(s, im)| im.cell != *s || im.flipped).map(|(s, _)| s).collect();
    assert_eq!(moved.len(), 1 + 4 + 4 + 8);
    let check = psi.verify();
    assert!(check.passed(), "{:?}", check.failures());
}

#[test]
fn every_small_correspondence_is_a_hook_correspondence() {
    let all = all_correspondences(7).unwrap();
    assert!(all.len() >= 100);
    for psi in &all {
        let check = psi.verify();
        assert!(check.passed(), "{psi}: {:?}", check.failures());
        for b in &check.boxes {
            if b.source != psi.pivot.pivot_box {
                assert!(b.multiple.unwrap().abs() <= 1, "{psi}: {b:?}");
            }
        }
    }
}

#[test]
fn non_corners_are_rejected() {
    assert!(hook_correspondence(&Partition::of(&[2, 1]), c(0, 1), c(1, 0)).is_err());
    assert!(hook_correspondence(&Partition::of(&[2, 1]), c(0, 2), c(0, 2)).is_err());
}

fn small_pivots() -> Vec<HookCorrespondence> {
    (1..=6)
        .flat_map(enumerate_partitions)
        .flat_map(|k| pivot_pairs(&k))
        .map(|p| HookCorrespondence::from_pivot(p).unwrap())
        .collect()
}

fn diagram(lam: &Partition, bits: u64) -> StanleyDiagram {
    let (mu, nu) = (Partition::of(&[1]), Partition::of(&[1]));
    let mut choices = BTreeMap::new();
    let mut k = 0;
    for slot in Slot::ALL {
        let shape = match slot {
            Slot::Mu => &mu,
            Slot::Nu => &nu,
            Slot::Lam => lam,
        };
        for cell in shape.boxes() {
            let choice = if bits >> (k % 64) & 1 == 1 { HookChoice::U } else { HookChoice::L };
            choices.insert((slot, cell), choice);
            k += 1;
        }
    }
    StanleyDiagram::new(mu, nu, lam.clone(), choices).unwrap()
}

proptest! {
    #[test]
    fn inverse_round_trips(index in 0usize..10_000, bits in any::<u64>()) {
        let all = small_pivots();
        let psi = &all[index % all.len()];
        let inv = psi.inverse();
        prop_assert_eq!(&inv.inverse(), psi);
        let start = diagram(&psi.source, bits);
        let there = psi.apply(&start, Slot::Lam).unwrap();
        prop_assert_eq!(there.shape(Slot::Lam), &psi.target);
        prop_assert_eq!(inv.apply(&there, Slot::Lam).unwrap(), start);
    }
}
