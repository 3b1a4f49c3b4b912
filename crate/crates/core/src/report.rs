//! Machine-readable verification reports.
//!
//! Serialization is deterministic: maps are ordered, floats print in
//! shortest round-trip form, and wall time is zero unless requested.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use serde_json::Value;

pub const ARTIFACT_VERSION: &str = env!("CARGO_PKG_VERSION");

/// Claim text for checks that certify the harness itself.
pub const PLUMBING: &str = "plumbing";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Pass,
    Fail,
    /// The computation ran correctly and contradicts the stated claim.
    ClaimMismatch,
    Skipped,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::ClaimMismatch => "claim-mismatch",
            Status::Skipped => "skipped",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    /// The mathematical statement certified, or [`PLUMBING`].
    pub claim: String,
    pub status: Status,
    pub numbers: BTreeMap<String, Value>,
    /// Present on every failing check.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<Value>,
}

impl Check {
    pub fn new(name: impl Into<String>, claim: impl Into<String>) -> Self {
        Self {
            name: name.into(),
            claim: claim.into(),
            status: Status::Pass,
            numbers: BTreeMap::new(),
            witness: None,
        }
    }

    pub fn number(mut self, key: &str, value: impl Serialize) -> Self {
        self.numbers
            .insert(key.to_string(), serde_json::to_value(value).unwrap_or(Value::Null));
        self
    }

    pub fn fail(mut self, witness: impl Serialize) -> Self {
        self.status = Status::Fail;
        self.witness = Some(serde_json::to_value(witness).unwrap_or(Value::Null));
        self
    }

    pub fn mismatch(mut self, witness: impl Serialize) -> Self {
        self.status = Status::ClaimMismatch;
        self.witness = Some(serde_json::to_value(witness).unwrap_or(Value::Null));
        self
    }

    pub fn skipped(mut self, reason: &str) -> Self {
        self.status = Status::Skipped;
        self.witness = Some(Value::String(reason.to_string()));
        self
    }

    /// Fails with `witness` unless `ok`.
    pub fn require(self, ok: bool, witness: impl Serialize) -> Self {
        if ok {
            self
        } else {
            self.fail(witness)
        }
    }

    pub fn errored(name: impl Into<String>, claim: impl Into<String>, err: &crate::Error) -> Self {
        Self::new(name, claim).fail(serde_json::json!({ "error": err.to_string() }))
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub command: String,
    pub params: BTreeMap<String, String>,
    pub seed: u64,
    pub checks: Vec<Check>,
    pub artifact_version: String,
    pub wall_time_ms: u64,
}

impl VerificationReport {
    pub fn new(command: &str, seed: u64) -> Self {
        Self {
            command: command.to_string(),
            params: BTreeMap::new(),
            seed,
            checks: Vec::new(),
            artifact_version: ARTIFACT_VERSION.to_string(),
            wall_time_ms: 0,
        }
    }

    pub fn param(mut self, key: &str, value: impl ToString) -> Self {
        self.params.insert(key.to_string(), value.to_string());
        self
    }

    pub fn push(&mut self, check: Check) {
        self.checks.push(check);
    }

    /// Orders checks by name so assembly order never leaks into output.
    pub fn sort_checks(&mut self) {
        self.checks.sort_by(|a, b| a.name.cmp(&b.name));
    }

    pub fn check(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }

    /// No check failed; claim mismatches and skips do not count.
    pub fn succeeded(&self) -> bool {
        self.checks.iter().all(|c| c.status != Status::Fail)
    }

    /// Every failing check carries a witness.
    pub fn is_well_formed(&self) -> bool {
        self.checks
            .iter()
            .all(|c| c.status != Status::Fail || c.witness.is_some())
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report values are finite JSON");
        s.push('\n');
        s
    }

    pub fn from_json(s: &str) -> serde_json::Result<Self> {
        serde_json::from_str(s)
    }

    /// Fixed-width status table for terminals.
    pub fn render_table(&self) -> String {
        let width = self.checks.iter().map(|c| c.name.len()).max().unwrap_or(4).max(5);
        let mut out = String::new();
        let _ = writeln!(out, "{} (seed {}, v{})", self.command, self.seed, self.artifact_version);
        for (k, v) in &self.params {
            let _ = writeln!(out, "  {k} = {v}");
        }
        let _ = writeln!(out, "{:<width$}  {:<14}  numbers", "check", "status");
        for c in &self.checks {
            let nums: Vec<String> = c.numbers.iter().map(|(k, v)| format!("{k}={}", compact(v))).collect();
            let _ = writeln!(out, "{:<width$}  {:<14}  {}", c.name, c.status.as_str(), nums.join(" "));
            if c.status != Status::Pass {
                if let Some(w) = &c.witness {
                    let _ = writeln!(out, "{:<width$}  {:<14}  witness: {}", "", "", compact(w));
                }
            }
        }
        let count = |s: Status| self.checks.iter().filter(|c| c.status == s).count();
        let _ = writeln!(
            out,
            "{} pass, {} fail, {} claim-mismatch, {} skipped",
            count(Status::Pass),
            count(Status::Fail),
            count(Status::ClaimMismatch),
            count(Status::Skipped)
        );
        out
    }
}

fn compact(v: &Value) -> String {
    let s = match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    };
    if s.chars().count() > 120 {
        let head: String = s.chars().take(117).collect();
        format!("{head}...")
    } else {
        s
    }
}
