//! Serializable verification outcomes shared by the suites and the CLI.

use std::fmt::Display;

use serde::{Serialize, Serializer};

/// Big counts go out as decimal strings rather than limb arrays.
pub(crate) fn decimal<T: Display, S: Serializer>(value: &T, s: S) -> Result<S::Ok, S::Error> {
    s.collect_str(value)
}

/// How a number was obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Provenance {
    Enumeration,
    ClosedForm,
    Recursion,
}

impl std::fmt::Display for Provenance {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Provenance::Enumeration => "enumeration",
            Provenance::ClosedForm => "closed-form",
            Provenance::Recursion => "recursion",
        })
    }
}

/// One checked identity: a label, the two sides, and where they came from.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Check {
    pub label: String,
    pub diagram: Option<String>,
    pub pattern: Option<String>,
    pub expected: String,
    pub actual: String,
    pub provenance: Provenance,
    pub passed: bool,
}

impl Check {
    pub fn equal(
        label: impl Into<String>,
        expected: impl ToString,
        actual: impl ToString,
        provenance: Provenance,
    ) -> Self {
        let (expected, actual) = (expected.to_string(), actual.to_string());
        Check {
            label: label.into(),
            diagram: None,
            pattern: None,
            passed: expected == actual,
            expected,
            actual,
            provenance,
        }
    }

    /// A yes/no check; `expected` and `actual` hold the verdict text.
    pub fn holds(label: impl Into<String>, passed: bool, detail: impl Into<String>, provenance: Provenance) -> Self {
        Check {
            label: label.into(),
            diagram: None,
            pattern: None,
            expected: "holds".into(),
            actual: if passed { "holds".into() } else { detail.into() },
            provenance,
            passed,
        }
    }

    pub fn on(mut self, diagram: impl ToString) -> Self {
        self.diagram = Some(diagram.to_string());
        self
    }

    pub fn with_pattern(mut self, pattern: impl ToString) -> Self {
        self.pattern = Some(pattern.to_string());
        self
    }
}

/// A named batch of checks. Passing suites keep only a tally; failures are
/// kept in full so the report names the offending diagram and both sides.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub checked: usize,
    pub failed: usize,
    pub failures: Vec<Check>,
    /// Informational lines (statistics, experiment outcomes).
    pub notes: Vec<String>,
}

impl SuiteReport {
    pub fn new(suite: impl Into<String>) -> Self {
        SuiteReport { suite: suite.into(), checked: 0, failed: 0, failures: Vec::new(), notes: Vec::new() }
    }

    pub fn record(&mut self, check: Check) {
        self.checked += 1;
        if !check.passed {
            self.failed += 1;
            self.failures.push(check);
        }
    }

    pub fn note(&mut self, line: impl Into<String>) {
        self.notes.push(line.into());
    }

    pub fn merge(&mut self, other: SuiteReport) {
        self.checked += other.checked;
        self.failed += other.failed;
        self.failures.extend(other.failures);
        self.notes.extend(other.notes);
    }

    pub fn passed(&self) -> bool {
        self.failed == 0
    }
}
