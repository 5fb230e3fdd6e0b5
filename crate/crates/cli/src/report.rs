use std::fmt;

use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skip,
}

/// One check as produced by a group, before timing is attached.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub name: String,
    pub status: Status,
    pub details: String,
    pub witnesses: Vec<String>,
}

impl Outcome {
    pub fn new(name: impl Into<String>, passed: bool, details: impl Into<String>) -> Self {
        Outcome {
            name: name.into(),
            status: if passed { Status::Pass } else { Status::Fail },
            details: details.into(),
            witnesses: Vec::new(),
        }
    }

    pub fn skip(name: impl Into<String>, reason: impl Into<String>) -> Self {
        Outcome { name: name.into(), status: Status::Skip, details: reason.into(), witnesses: Vec::new() }
    }

    pub fn witness(mut self, w: impl fmt::Display) -> Self {
        self.witnesses.push(w.to_string());
        self
    }

    pub fn passed(&self) -> bool {
        self.status != Status::Fail
    }
}

impl From<jacklr_hookspace::Check> for Outcome {
    fn from(c: jacklr_hookspace::Check) -> Self {
        Outcome { name: c.name, status: if c.passed { Status::Pass } else { Status::Fail }, details: c.details, witnesses: c.witnesses }
    }
}

impl From<jacklr_pivots::fixtures::FixtureCheck> for Outcome {
    fn from(c: jacklr_pivots::fixtures::FixtureCheck) -> Self {
        let status = if !c.passed {
            Status::Fail
        } else if c.details.starts_with("skipped") {
            Status::Skip
        } else {
            Status::Pass
        };
        Outcome { name: c.name, status, details: c.details, witnesses: c.witnesses }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckEntry {
    pub name: String,
    pub status: Status,
    pub details: String,
    pub witnesses: Vec<String>,
    /// Wall time of the group that produced the check.
    pub elapsed_ms: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Meta {
    pub version: String,
    pub seed: u64,
    pub degree_cap: u32,
    pub corpus_bound: u32,
    pub samples: u32,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub checks: Vec<CheckEntry>,
    pub meta: Meta,
}

/// The JSON schema every report validates against.
pub const REPORT_SCHEMA: &str = include_str!("../schema/report.schema.json");

impl VerificationReport {
    pub fn failures(&self) -> impl Iterator<Item = &CheckEntry> {
        self.checks.iter().filter(|c| c.status == Status::Fail)
    }

    pub fn passed(&self) -> bool {
        self.failures().next().is_none()
    }

    /// The report with every timing field zeroed, for reproducibility checks.
    pub fn without_timing(&self) -> Self {
        let mut r = self.clone();
        for c in &mut r.checks {
            c.elapsed_ms = 0;
        }
        r
    }

    pub fn to_json(&self) -> serde_json::Result<String> {
        serde_json::to_string_pretty(self)
    }
}

impl fmt::Display for CheckEntry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = match self.status {
            Status::Pass => "pass",
            Status::Fail => "FAIL",
            Status::Skip => "skip",
        };
        write!(f, "[{status}] {}: {}", self.name, self.details)
    }
}
