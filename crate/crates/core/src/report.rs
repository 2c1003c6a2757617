//! Results of exhaustive verification runs.

use std::fmt;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub identity: String,
    pub cases: usize,
    /// First counterexample, if any.
    pub failure: Option<String>,
}

/// One line per identity checked.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Report {
    pub title: String,
    pub checks: Vec<Check>,
}

impl Report {
    pub fn new(title: impl Into<String>) -> Self {
        Report {
            title: title.into(),
            checks: Vec::new(),
        }
    }

    pub fn record(&mut self, identity: impl Into<String>, cases: usize, failure: Option<String>) {
        self.checks.push(Check {
            identity: identity.into(),
            cases,
            failure,
        });
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.failure.is_none())
    }

    pub fn first_failure(&self) -> Option<&Check> {
        self.checks.iter().find(|c| c.failure.is_some())
    }

    pub fn merge(&mut self, other: Report) {
        self.checks.extend(other.checks);
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}", self.title)?;
        for c in &self.checks {
            match &c.failure {
                None => writeln!(f, "  ok    {} ({} cases)", c.identity, c.cases)?,
                Some(w) => writeln!(f, "  FAIL  {} ({} cases): {}", c.identity, c.cases, w)?,
            }
        }
        Ok(())
    }
}

/// Accumulates the case count and keeps the first failure.
#[derive(Default)]
pub(crate) struct Tally {
    pub cases: usize,
    pub failure: Option<String>,
}

impl Tally {
    pub fn check(&mut self, ok: bool, witness: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok && self.failure.is_none() {
            self.failure = Some(witness());
        }
    }

    pub fn into_report(self, report: &mut Report, identity: impl Into<String>) {
        report.record(identity, self.cases, self.failure);
    }
}
