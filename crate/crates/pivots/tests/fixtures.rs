use std::sync::Arc;

use jacklr_partitions::{Cell, Partition, PivotPair, Slot};
use jacklr_pivots::corpus::{check_congruence, AdjacentTriplePair, StanleyCache, Triple};
use jacklr_pivots::fixtures::{fixtures_checksum, parse_fixtures, verify_fixture_congruences, verify_printed_jack_values, FIXTURES_SHA256};
use jacklr_symfunc::JackTable;

#[test]
fn fixture_text_is_pinned() {
    assert_eq!(fixtures_checksum(), FIXTURES_SHA256);
    assert_eq!(parse_fixtures().unwrap().len(), 17);
}

#[test]
fn printed_congruences_hold() {
    let checks = verify_fixture_congruences().unwrap();
    assert_eq!(checks.len(), 1 + 5 + 2);
    for c in &checks {
        assert!(c.passed, "{}: {} {:?}", c.name, c.details, c.witnesses);
    }
    let mu = checks.iter().find(|c| c.name.starts_with("jack c=3 μ-pivot")).unwrap();
    assert!(mu.details.contains("Negated"), "{}", mu.details);
    let lam = checks.iter().find(|c| c.name.starts_with("jack c=3 λ-pivot")).unwrap();
    assert!(lam.details.contains("Equal"), "{}", lam.details);
    let mac: Vec<_> = checks.iter().filter(|c| c.name.starts_with("macdonald")).map(|c| c.details.as_str()).collect();
    assert_eq!(mac, ["equal up to the factor s^-8", "equal up to the factor s^-20"]);
}

#[test]
fn small_printed_values_match_the_engine_and_large_ones_skip() {
    let cache = StanleyCache::new(Arc::new(JackTable::new(8)));
    let checks = verify_printed_jack_values(&cache).unwrap();
    assert_eq!(checks.len(), 5);
    assert!(checks.iter().all(|c| c.passed));
    assert_eq!(checks.iter().filter(|c| c.details.starts_with("skipped")).count(), 3);
}

#[test]
fn degree_eleven_printed_values_match_the_engine() {
    let cache = StanleyCache::new(Arc::new(JackTable::new(12)));
    for c in verify_printed_jack_values(&cache).unwrap() {
        assert!(c.passed && !c.details.starts_with("skipped"), "{}: {} {:?}", c.name, c.details, c.witnesses);
    }
    // the μ-slot pivot at (0,0): 321 and 2211 are 221 plus a corner
    let pivot = PivotPair::new(&Partition::of(&[2, 2, 1]), Cell::new(3, 0), Cell::new(0, 2)).unwrap();
    let context = Triple::new(Partition::of(&[2, 2, 1]), Partition::of(&[2, 2, 1]), Partition::of(&[4, 3, 2, 1, 1]));
    let pair = AdjacentTriplePair::new(&context, Slot::Mu, pivot);
    assert_eq!(pair.second.mu, Partition::of(&[3, 2, 1]));
    let r = check_congruence(&pair, &cache).unwrap();
    assert!(r.passed());
}
