//! Verification reports: a list of cases with outcomes, tallied and serialized
//! deterministically.

use std::fmt::Write as _;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use serde_json::Value;
use sha2::{Digest, Sha256};

pub const SCHEMA: &str = "1";
pub const TOOL: &str = "smoothmod";
pub const VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Copy, Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Outcome {
    Pass,
    Fail,
    Error,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Case {
    pub id: String,
    pub inputs_digest: String,
    pub outcome: Outcome,
    pub details: Value,
}

impl Case {
    pub fn new(id: impl Into<String>, inputs: &str, outcome: Outcome, details: Value) -> Self {
        Case { id: id.into(), inputs_digest: digest(inputs), outcome, details }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub total: usize,
    pub pass: usize,
    pub fail: usize,
    pub error: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub schema: String,
    pub tool: String,
    pub version: String,
    pub suite: String,
    pub seed: u64,
    pub cases: Vec<Case>,
    pub summary: Summary,
}

impl Report {
    /// Sorts cases by id and tallies them.
    pub fn new(suite: &str, seed: u64, mut cases: Vec<Case>) -> Self {
        cases.sort_by(|a, b| a.id.cmp(&b.id));
        let mut summary = Summary { total: cases.len(), ..Summary::default() };
        for c in &cases {
            match c.outcome {
                Outcome::Pass => summary.pass += 1,
                Outcome::Fail => summary.fail += 1,
                Outcome::Error => summary.error += 1,
            }
        }
        Report {
            schema: SCHEMA.into(),
            tool: TOOL.into(),
            version: VERSION.into(),
            suite: suite.into(),
            seed,
            cases,
            summary,
        }
    }

    pub fn all_passed(&self) -> bool {
        self.summary.pass == self.summary.total
    }

    /// Pretty JSON with a trailing newline.
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    /// One row per case, then the summary line.
    pub fn to_text(&self) -> String {
        let width = self.cases.iter().map(|c| c.id.len()).max().unwrap_or(2).max(2);
        let mut out = String::new();
        let _ = writeln!(out, "suite {} (seed {}, {} {})", self.suite, self.seed, self.tool, self.version);
        let _ = writeln!(out, "{:<width$}  {:<7}  details", "id", "outcome");
        for c in &self.cases {
            let outcome = match c.outcome {
                Outcome::Pass => "pass",
                Outcome::Fail => "FAIL",
                Outcome::Error => "ERROR",
            };
            let _ = writeln!(out, "{:<width$}  {:<7}  {}", c.id, outcome, compact(&c.details));
        }
        let s = &self.summary;
        let _ = writeln!(out, "total {}  pass {}  fail {}  error {}", s.total, s.pass, s.fail, s.error);
        out
    }
}

fn compact(v: &Value) -> String {
    match v {
        Value::Object(map) => map
            .iter()
            .map(|(k, v)| match v {
                Value::String(s) => format!("{k}={s}"),
                other => format!("{k}={other}"),
            })
            .collect::<Vec<_>>()
            .join(" "),
        other => other.to_string(),
    }
}

/// Hex SHA-256 of a case's canonical input description.
pub fn digest(inputs: &str) -> String {
    let h = Sha256::digest(inputs.as_bytes());
    h.iter().map(|b| format!("{b:02x}")).collect()
}

/// Per-case RNG derived from the run seed and the case id, so a case draws the
/// same samples regardless of which other cases run or in what order.
pub fn case_rng(seed: u64, id: &str) -> ChaCha8Rng {
    let mut h = Sha256::new();
    h.update(seed.to_le_bytes());
    h.update(id.as_bytes());
    let out = h.finalize();
    let mut key = [0u8; 32];
    key.copy_from_slice(&out);
    ChaCha8Rng::from_seed(key)
}
