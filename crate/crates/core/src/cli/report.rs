use std::path::Path;
use std::time::Duration;

use serde::Serialize;
use sha2::{Digest, Sha256};

use crate::solver::{Overrides, TraceStep};

#[derive(Debug, Clone, Serialize)]
pub struct StageTiming {
    pub stage: String,
    pub millis: f64,
}

/// Machine-readable record of one command run, written as JSON with
/// `--report`. Apart from `timings`, identical inputs and flags give
/// identical reports.
#[derive(Debug, Clone, Serialize)]
pub struct RunReport {
    pub command: String,
    /// SHA-256 over the input files, in argument order.
    pub input_digest: String,
    pub outcome: String,
    /// False when test overrides were in effect.
    pub certified: bool,
    pub overrides: Overrides,
    pub timings: Vec<StageTiming>,
    pub trace: Vec<TraceStep>,
    pub discrepancies: Vec<serde_json::Value>,
    pub details: serde_json::Value,
}

impl RunReport {
    pub fn new(command: &str, inputs: &[&[u8]]) -> Self {
        Self {
            command: command.to_string(),
            input_digest: digest(inputs),
            outcome: String::new(),
            certified: true,
            overrides: Overrides::default(),
            timings: Vec::new(),
            trace: Vec::new(),
            discrepancies: Vec::new(),
            details: serde_json::Value::Null,
        }
    }

    pub fn timings(mut self, stages: &[(&'static str, Duration)]) -> Self {
        self.timings = stages
            .iter()
            .map(|(s, d)| StageTiming {
                stage: s.to_string(),
                millis: d.as_secs_f64() * 1e3,
            })
            .collect();
        self
    }

    pub fn write(&self, path: &Path) -> std::io::Result<()> {
        let mut text = serde_json::to_string_pretty(self).expect("report serialises");
        text.push('\n');
        std::fs::write(path, text)
    }
}

/// Hex SHA-256 of the inputs, each followed by a length suffix so that
/// different splits of the same bytes differ.
pub fn digest(inputs: &[&[u8]]) -> String {
    let mut h = Sha256::new();
    for input in inputs {
        h.update(input);
        h.update((input.len() as u64).to_le_bytes());
    }
    hex::encode(h.finalize())
}
