use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::time::Duration;

use serde::Serialize;
use serde_json::Value;

/// One verified claim.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Check {
    pub name: String,
    /// The statement being checked, in words.
    pub claim: String,
    pub pass: bool,
    pub detail: String,
}

/// Output of every command. Everything except `runtime` is a function of
/// the parameters, so serialized reports compare byte for byte.
#[derive(Debug, Clone, Serialize)]
pub struct ExperimentReport {
    pub experiment: String,
    pub parameters: BTreeMap<String, Value>,
    pub records: Vec<Value>,
    pub summary: BTreeMap<String, Value>,
    pub checks: Vec<Check>,
    #[serde(skip)]
    pub runtime: Duration,
}

impl ExperimentReport {
    pub fn new(experiment: &str) -> ExperimentReport {
        ExperimentReport {
            experiment: experiment.to_string(),
            parameters: BTreeMap::new(),
            records: Vec::new(),
            summary: BTreeMap::new(),
            checks: Vec::new(),
            runtime: Duration::ZERO,
        }
    }

    pub fn param(mut self, key: &str, value: impl Serialize) -> Self {
        self.parameters.insert(key.to_string(), to_value(value));
        self
    }

    pub fn set(&mut self, key: &str, value: impl Serialize) {
        self.summary.insert(key.to_string(), to_value(value));
    }

    pub fn record(&mut self, value: impl Serialize) {
        self.records.push(to_value(value));
    }

    pub fn check(&mut self, name: impl Into<String>, claim: &str, pass: bool, detail: impl Into<String>) {
        self.checks.push(Check {
            name: name.into(),
            claim: claim.to_string(),
            pass,
            detail: detail.into(),
        });
    }

    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn failed(&self) -> Vec<&Check> {
        self.checks.iter().filter(|c| !c.pass).collect()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }

    /// Plain-text rendering for terminals.
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "{}", self.experiment);
        for (k, v) in &self.parameters {
            let _ = writeln!(s, "  {k} = {v}");
        }
        for c in &self.checks {
            let mark = if c.pass { "pass" } else { "FAIL" };
            let _ = writeln!(s, "[{mark}] {}: {}", c.name, c.detail);
        }
        for (k, v) in &self.summary {
            let _ = writeln!(s, "{k}: {v}");
        }
        if !self.records.is_empty() && self.records.len() <= 40 {
            for r in &self.records {
                let _ = writeln!(s, "  {r}");
            }
        } else if !self.records.is_empty() {
            let _ = writeln!(s, "({} records; use --json for all of them)", self.records.len());
        }
        let _ = writeln!(s, "runtime: {:.2?}", self.runtime);
        s
    }
}

fn to_value(v: impl Serialize) -> Value {
    serde_json::to_value(v).expect("report values serialize")
}
