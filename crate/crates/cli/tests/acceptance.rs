//! One line per acceptance criterion. Runs as a plain binary so the lines
//! show up in `cargo test` output; exits non-zero if any criterion fails.

use std::process::ExitCode;

use jacklr::checks::{groups, run_group, Context, Settings};
use jacklr::report::Status;

const TITLES: [&str; 11] = [
    "Jack LR fixtures",
    "pivot congruence corpus",
    "Stanley-sum root evaluation",
    "hook-space structure",
    "invariance theorems",
    "hyperplane factorization",
    "untwisting",
    "graph layer",
    "ψ_d correspondences",
    "shifted and Macdonald fixtures",
    "property suites",
];

fn main() -> ExitCode {
    let ctx = Context::new(Settings::default());
    let mut failed = 0;
    for group in groups() {
        let Some(n) = group.criterion else { continue };
        let (outcomes, ms) = run_group(&group, &ctx);
        let fails: Vec<_> = outcomes.iter().filter(|o| o.status == Status::Fail).collect();
        let skips = outcomes.iter().filter(|o| o.status == Status::Skip).count();
        let verdict = if fails.is_empty() && skips == 0 { "PASS" } else if fails.is_empty() { "PASS (with skips)" } else { "FAIL" };
        println!(
            "criterion {n:>2}: {verdict:<4} {} ({} checks, {skips} skipped, {ms} ms)",
            TITLES[n as usize - 1],
            outcomes.len()
        );
        for f in &fails {
            println!("    failed: {}: {} {:?}", f.name, f.details, f.witnesses);
        }
        if !fails.is_empty() {
            failed += 1;
        }
    }
    println!("acceptance: {} of 11 criteria pass", 11 - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
