use std::collections::BTreeMap;

use serde::Serialize;
use serde_json::Value;
use sixvertex_core::exactalg::format_rational;
use sixvertex_core::{Rational, Weights};

#[derive(Debug, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

/// Machine-readable outcome of one invocation. `values` are flattened into
/// the top-level object; all maps are ordered so output is byte-stable.
#[derive(Debug, Serialize)]
pub struct Report {
    pub command: String,
    pub passed: bool,
    pub inputs: BTreeMap<String, String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    pub checks: Vec<Check>,
    #[serde(flatten)]
    pub values: BTreeMap<String, Value>,
}

impl Report {
    pub fn new(command: &str) -> Self {
        Report {
            command: command.to_string(),
            passed: true,
            inputs: BTreeMap::new(),
            seed: None,
            checks: Vec::new(),
            values: BTreeMap::new(),
        }
    }

    pub fn input(&mut self, key: &str, value: impl Into<String>) -> &mut Self {
        self.inputs.insert(key.to_string(), value.into());
        self
    }

    pub fn value(&mut self, key: &str, value: impl Into<Value>) -> &mut Self {
        self.values.insert(key.to_string(), value.into());
        self
    }

    pub fn check(&mut self, name: &str, passed: bool, detail: impl Into<String>) -> &mut Self {
        self.passed &= passed;
        self.checks.push(Check {
            name: name.to_string(),
            passed,
            detail: detail.into(),
        });
        self
    }

    pub fn summary(&self) -> String {
        let ok = self.checks.iter().filter(|c| c.passed).count();
        let mut out = format!(
            "sixvertex {}: {ok}/{} checks passed",
            self.command,
            self.checks.len()
        );
        for c in self.checks.iter().filter(|c| !c.passed) {
            out.push_str(&format!("\n  failed {}: {}", c.name, c.detail));
        }
        out
    }
}

pub fn rat(r: &Rational) -> Value {
    Value::String(format_rational(r))
}

pub fn triple(w: &Weights) -> Value {
    Value::Array(w.as_array().iter().map(rat).collect())
}

pub fn list(values: &[Rational]) -> String {
    values.iter().map(format_rational).collect::<Vec<_>>().join(",")
}
