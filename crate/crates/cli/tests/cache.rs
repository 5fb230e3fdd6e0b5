use std::sync::Arc;

use jacklr::cache::{cache_key, JackCache, CACHE_HEADER};
use jacklr_partitions::Partition;
use jacklr_symfunc::JackTable;

#[test]
fn key_is_comma_separated() {
    assert_eq!(cache_key(&Partition::of(&[3, 2, 1])), "3,2,1");
}

#[test]
fn encode_decode_round_trip() {
    let table = JackTable::new(6);
    for d in 1..=6 {
        let jacks = table.degree(d).unwrap();
        let text = JackCache::encode(d, &jacks);
        assert!(text.starts_with(CACHE_HEADER));
        let back = JackCache::decode(d, &text).unwrap();
        assert_eq!(back.len(), jacks.len());
        for (lam, j) in jacks.iter() {
            assert_eq!(back[lam].to_string(), j.to_string(), "{lam}");
        }
    }
}

#[test]
fn damaged_files_are_rejected() {
    let table = JackTable::new(4);
    let text = JackCache::encode(4, &table.degree(4).unwrap());
    assert!(JackCache::decode(3, &text).is_err());
    let truncated: String = text.lines().take(3).map(|l| format!("{l}\n")).collect();
    assert!(JackCache::decode(4, &truncated).is_err());
    let mut lines: Vec<String> = text.lines().map(String::from).collect();
    lines[2].push_str(";junk");
    let garbled = lines.join("\n");
    assert!(JackCache::decode(4, &garbled).is_err());
    let other_convention = text.replacen("hookU=a(arm+1)+leg", "hookU=arm+a(leg+1)", 1);
    assert!(JackCache::decode(4, &other_convention).is_err());
}

#[test]
fn store_then_preload() {
    let dir = tempfile::tempdir().unwrap();
    let cold = Arc::new(JackTable::new(5));
    cold.degree(5).unwrap();
    cold.degree(3).unwrap();
    let cache = JackCache::new(dir.path());
    assert_eq!(cache.store(&cold).unwrap(), [3, 5]);
    assert!(cache.store(&cold).unwrap().is_empty());

    let warm = JackTable::new(5);
    let mut cache = JackCache::new(dir.path());
    assert_eq!(cache.preload(&warm), [3, 5]);
    assert!(cache.warnings().is_empty());
    for d in [3, 5] {
        assert_eq!(*warm.degree(d).unwrap(), *cold.degree(d).unwrap());
    }

    std::fs::write(dir.path().join("jack-3.txt"), "not a cache\n").unwrap();
    let mut cache = JackCache::new(dir.path());
    assert_eq!(cache.preload(&JackTable::new(5)), [5]);
    assert_eq!(cache.warnings().len(), 1);
}
