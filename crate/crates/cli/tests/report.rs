use jacklr::checks::{run_suite, Context, Settings, Suite};
use jacklr::report::{Status, VerificationReport, REPORT_SCHEMA};

fn validator() -> jsonschema::JSONSchema {
    let schema: serde_json::Value = serde_json::from_str(REPORT_SCHEMA).unwrap();
    jsonschema::JSONSchema::compile(&schema).unwrap()
}

fn settings() -> Settings {
    Settings { samples: 20, jobs: 2, ..Settings::default() }
}

#[test]
fn reports_validate_and_repeat() {
    let ctx = Context::new(settings());
    let a = run_suite(Suite::Graphs, &ctx);
    let json: serde_json::Value = serde_json::from_str(&a.to_json().unwrap()).unwrap();
    assert!(validator().is_valid(&json));
    assert!(a.passed());
    assert_eq!(a.meta.seed, 42);
    assert_eq!(a.meta.corpus_bound, 7);

    let b = run_suite(Suite::Graphs, &Context::new(settings()));
    assert_eq!(a.without_timing(), b.without_timing());
    let back: VerificationReport = serde_json::from_value(json).unwrap();
    assert_eq!(back, a);
}

#[test]
fn seeded_suites_repeat() {
    let a = run_suite(Suite::Hookspace, &Context::new(settings()));
    let b = run_suite(Suite::Hookspace, &Context::new(settings()));
    assert_eq!(a.without_timing(), b.without_timing());
    assert!(a.passed());
}

#[test]
fn failures_need_witnesses() {
    let good = serde_json::json!({
        "checks": [{"name": "x", "status": "fail", "details": "", "witnesses": ["1*a"], "elapsed_ms": 3}],
        "meta": {"version": "0.1.0", "seed": 1, "degree_cap": 12, "corpus_bound": 7, "samples": 5}
    });
    assert!(validator().is_valid(&good));
    let mut bad = good.clone();
    bad["checks"][0]["witnesses"] = serde_json::json!([]);
    assert!(!validator().is_valid(&bad));
    let mut bad = good;
    bad["checks"][0]["status"] = serde_json::json!("maybe");
    assert!(!validator().is_valid(&bad));
}

#[test]
fn degree_cap_turns_into_skips() {
    let ctx = Context::new(Settings { degree_cap: 5, max_weight: 5, ..settings() });
    let r = run_suite(Suite::Pivots, &ctx);
    assert!(r.passed(), "{:?}", r.failures().collect::<Vec<_>>());
    let skipped: Vec<_> = r.checks.iter().filter(|c| c.status == Status::Skip).collect();
    assert!(skipped.iter().any(|c| c.name == "pairs beyond the degree cap" && !c.witnesses.is_empty()));
    assert!(skipped.iter().any(|c| c.name.starts_with("μ-slot pivot")));
}
