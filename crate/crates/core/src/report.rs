//! Structured pass/fail evidence shared by every verification routine.

use serde::Serialize;
use serde_json::{Map, Value};

/// Outcome of one verification run.
///
/// `passed` is true exactly when every case passed.
#[derive(Debug, Clone, Serialize)]
pub struct VerificationReport {
    pub theorem: String,
    pub params: Map<String, Value>,
    pub passed: bool,
    pub cases: Vec<Case>,
}

/// One sub-case: its parameters (flattened into the JSON row), the expected
/// and observed values as strings, and the verdict.
#[derive(Debug, Clone, Serialize)]
pub struct Case {
    #[serde(flatten)]
    pub params: Map<String, Value>,
    pub expected: Vec<String>,
    pub actual: Vec<String>,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl Case {
    /// Passes iff `expected == actual`.
    pub fn compare(params: Value, expected: Vec<String>, actual: Vec<String>) -> Self {
        let passed = expected == actual;
        Self::with_verdict(params, expected, actual, passed)
    }

    pub fn with_verdict(params: Value, expected: Vec<String>, actual: Vec<String>, passed: bool) -> Self {
        Self {
            params: object(params),
            expected,
            actual,
            passed,
            note: None,
        }
    }

    /// A case that could not be evaluated (for instance a capacity limit).
    pub fn error(params: Value, message: String) -> Self {
        Self {
            params: object(params),
            expected: Vec::new(),
            actual: Vec::new(),
            passed: false,
            note: Some(message),
        }
    }

    pub fn note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }
}

impl VerificationReport {
    pub fn new(theorem: impl Into<String>, params: Value, cases: Vec<Case>) -> Self {
        let passed = cases.iter().all(|c| c.passed);
        Self {
            theorem: theorem.into(),
            params: object(params),
            passed,
            cases,
        }
    }

    pub fn failures(&self) -> impl Iterator<Item = &Case> {
        self.cases.iter().filter(|c| !c.passed)
    }

    /// One line per failing case, for diagnostics.
    pub fn summary(&self) -> String {
        let mut s = format!(
            "{} {}: {}/{} cases passed",
            self.theorem,
            Value::Object(self.params.clone()),
            self.cases.iter().filter(|c| c.passed).count(),
            self.cases.len()
        );
        for c in self.failures() {
            s.push_str(&format!(
                "\n  FAIL {} expected {:?} actual {:?}{}",
                Value::Object(c.params.clone()),
                c.expected,
                c.actual,
                c.note.as_deref().map(|n| format!(" ({n})")).unwrap_or_default()
            ));
        }
        s
    }
}

fn object(v: Value) -> Map<String, Value> {
    match v {
        Value::Object(m) => m,
        Value::Null => Map::new(),
        other => {
            let mut m = Map::new();
            m.insert("value".into(), other);
            m
        }
    }
}
