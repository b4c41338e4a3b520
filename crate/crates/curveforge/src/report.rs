//! Machine-readable run reports: one named check per verified quantity,
//! JSON by default, CSV on request. The process exit code is 0 exactly
//! when every check passes.

use std::collections::BTreeMap;
use std::time::Instant;

use serde::Serialize;
use serde_json::{json, Value};

#[derive(Serialize, Clone, Debug)]
pub struct Check {
    pub name: String,
    pub expected: Option<Value>,
    pub got: Value,
    pub pass: bool,
}

#[derive(Serialize, Clone, Debug)]
pub struct RunReport {
    pub command: String,
    pub parameters: BTreeMap<String, Value>,
    pub checks: Vec<Check>,
    pub pass: bool,
    pub wall_time_ms: f64,
}

impl RunReport {
    pub fn new(command: &str) -> RunReport {
        RunReport {
            command: command.to_string(),
            parameters: BTreeMap::new(),
            checks: Vec::new(),
            pass: true,
            wall_time_ms: 0.0,
        }
    }

    pub fn param(&mut self, key: &str, value: impl Into<Value>) -> &mut Self {
        self.parameters.insert(key.to_string(), value.into());
        self
    }

    /// A check with an expected value; pass iff got == expected.
    pub fn check(&mut self, name: &str, expected: impl Into<Value>, got: impl Into<Value>) {
        let expected = expected.into();
        let got = got.into();
        let pass = expected == got;
        self.pass &= pass;
        self.checks.push(Check {
            name: name.to_string(),
            expected: Some(expected),
            got,
            pass,
        });
    }

    /// A boolean predicate check.
    pub fn assert_true(&mut self, name: &str, got: bool) {
        self.check(name, json!(true), json!(got));
    }

    /// An informational entry: no expectation, always passes.
    pub fn info(&mut self, name: &str, got: impl Into<Value>) {
        self.checks.push(Check {
            name: name.to_string(),
            expected: None,
            got: got.into(),
            pass: true,
        });
    }

    pub fn merge(&mut self, other: RunReport) {
        self.pass &= other.pass;
        self.checks.extend(other.checks);
    }

    pub fn set_wall_time(&mut self, start: Instant) {
        self.wall_time_ms = start.elapsed().as_secs_f64() * 1e3;
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from("command,check,expected,got,pass\n");
        for c in &self.checks {
            let expected = c
                .expected
                .as_ref()
                .map(|v| csv_cell(v))
                .unwrap_or_default();
            out.push_str(&format!(
                "{},{},{},{},{}\n",
                csv_str(&self.command),
                csv_str(&c.name),
                expected,
                csv_cell(&c.got),
                c.pass
            ));
        }
        out
    }
}

fn csv_cell(v: &Value) -> String {
    match v {
        Value::String(s) => csv_str(s),
        other => csv_str(&other.to_string()),
    }
}

fn csv_str(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}
