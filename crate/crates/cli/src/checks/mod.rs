//! Check groups. Each group covers one acceptance criterion (or supporting
//! material) and belongs to one suite; `verify all` runs every group.

use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::{Arc, OnceLock};
use std::time::Instant;

use clap::ValueEnum;
use jacklr_pivots::corpus::StanleyCache;
use jacklr_symfunc::JackTable;

use crate::report::{CheckEntry, Meta, Outcome, Status, VerificationReport};
use crate::CliError;

mod graphs;
mod hooks;
mod jack;
mod oracle;
mod pivots;

pub use oracle::{schur, schur_lr};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, ValueEnum)]
pub enum Suite {
    Pivots,
    Stanley,
    Hookspace,
    Symmetry,
    Graphs,
    Fixtures,
    All,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Settings {
    pub degree_cap: u32,
    pub max_weight: u32,
    pub samples: u32,
    pub seed: u64,
    pub jobs: usize,
}

impl Default for Settings {
    fn default() -> Self {
        Settings {
            degree_cap: jacklr_symfunc::DEFAULT_DEGREE_CAP,
            max_weight: 7,
            samples: 200,
            seed: 42,
            jobs: std::thread::available_parallelism().map_or(1, |n| n.get()),
        }
    }
}

pub struct Context {
    pub settings: Settings,
    pub jacks: Arc<JackTable>,
    pub stanley: StanleyCache,
}

impl Context {
    pub fn new(settings: Settings) -> Self {
        Self::with_table(settings.clone(), Arc::new(JackTable::new(settings.degree_cap)))
    }

    pub fn with_table(settings: Settings, jacks: Arc<JackTable>) -> Self {
        let stanley = StanleyCache::new(jacks.clone());
        Context { settings, jacks, stanley }
    }

    /// A skip outcome if degree `d` is beyond the cap.
    fn beyond_cap(&self, name: &str, d: u32) -> Option<Outcome> {
        self.jacks.check_degree(d).err().map(|e| Outcome::skip(name, e.to_string()))
    }
}

type Runner = fn(&Context) -> Result<Vec<Outcome>, CliError>;

pub struct Group {
    pub id: &'static str,
    pub criterion: Option<u8>,
    pub suite: Suite,
    pub run: Runner,
}

/// Every group, in report order.
pub fn groups() -> Vec<Group> {
    let g = |id, criterion, suite, run: Runner| Group { id, criterion, suite, run };
    vec![
        g("jack-fixtures", Some(1), Suite::Stanley, jack::jack_fixtures),
        g("pivot-corpus", Some(2), Suite::Pivots, pivots::corpus),
        g("root-evaluation", Some(3), Suite::Stanley, jack::root_evaluation),
        g("hook-space", Some(4), Suite::Hookspace, hooks::hook_space),
        g("invariance", Some(5), Suite::Symmetry, hooks::invariance),
        g("hyperplanes", Some(6), Suite::Hookspace, hooks::hyperplanes),
        g("untwisting", Some(7), Suite::Hookspace, hooks::untwisting),
        g("graphs", Some(8), Suite::Graphs, graphs::graphs),
        g("correspondences", Some(9), Suite::Pivots, pivots::correspondences),
        g("fixture-congruences", Some(10), Suite::Fixtures, pivots::fixture_congruences),
        g("properties", Some(11), Suite::Stanley, jack::properties),
        g("printed-jack-values", None, Suite::Fixtures, pivots::printed_jack_values),
    ]
}

/// Runs one group; an error becomes a single failing outcome.
pub fn run_group(group: &Group, ctx: &Context) -> (Vec<Outcome>, u64) {
    let start = Instant::now();
    let outcomes = (group.run)(ctx).unwrap_or_else(|e| {
        vec![Outcome::new(format!("{} aborted", group.id), false, "error during computation").witness(e)]
    });
    (outcomes, start.elapsed().as_millis() as u64)
}

/// Runs the groups of `suite` on `jobs` workers and assembles the report in
/// group order.
pub fn run_suite(suite: Suite, ctx: &Context) -> VerificationReport {
    let selected: Vec<Group> = groups().into_iter().filter(|g| suite == Suite::All || g.suite == suite).collect();
    let slots: Vec<OnceLock<(Vec<Outcome>, u64)>> = selected.iter().map(|_| OnceLock::new()).collect();
    let next = AtomicUsize::new(0);
    std::thread::scope(|s| {
        for _ in 0..ctx.settings.jobs.clamp(1, selected.len().max(1)) {
            s.spawn(|| loop {
                let i = next.fetch_add(1, Ordering::Relaxed);
                let Some(group) = selected.get(i) else { break };
                let _ = slots[i].set(run_group(group, ctx));
            });
        }
    });
    let mut checks = Vec::new();
    for slot in slots {
        let (outcomes, elapsed_ms) = slot.into_inner().expect("every group ran");
        checks.extend(outcomes.into_iter().map(|o| entry(o, elapsed_ms)));
    }
    let s = &ctx.settings;
    VerificationReport {
        checks,
        meta: Meta {
            version: env!("CARGO_PKG_VERSION").to_string(),
            seed: s.seed,
            degree_cap: s.degree_cap,
            corpus_bound: s.max_weight,
            samples: s.samples,
        },
    }
}

fn entry(o: Outcome, elapsed_ms: u64) -> CheckEntry {
    let mut witnesses = o.witnesses;
    if o.status == Status::Fail && witnesses.is_empty() {
        witnesses.push(o.details.clone());
    }
    CheckEntry { name: o.name, status: o.status, details: o.details, witnesses, elapsed_ms }
}
