use std::fmt;

/// Outcome of one verification step, with the polynomials that witness it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub details: String,
    pub witnesses: Vec<String>,
}

impl Check {
    pub fn new(name: impl Into<String>, passed: bool, details: impl Into<String>) -> Self {
        Check {
            name: name.into(),
            passed,
            details: details.into(),
            witnesses: Vec::new(),
        }
    }

    pub fn witness(mut self, w: impl fmt::Display) -> Self {
        self.witnesses.push(w.to_string());
        self
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed { "pass" } else { "FAIL" };
        write!(f, "[{status}] {}: {}", self.name, self.details)
    }
}

pub fn all_passed(checks: &[Check]) -> bool {
    checks.iter().all(|c| c.passed)
}
