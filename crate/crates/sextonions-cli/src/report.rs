//! Serializable mirrors of the verification reports and the shared usage
//! error type. Wall time is kept out of the JSON forms so identical runs
//! produce identical bytes.

use serde::Serialize;
use sextonions::verify::{Failure, VerifyReport};
use std::fmt;

/// Bad flags, unknown names, unusable combinations. Exit code 2 territory,
/// as opposed to a mathematical check failing (exit code 1).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Usage(pub String);

impl fmt::Display for Usage {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

#[derive(Serialize)]
pub struct FailureOut {
    pub context: String,
    pub indices: Vec<u32>,
    pub expected: String,
    pub got: String,
}

impl From<&Failure> for FailureOut {
    fn from(f: &Failure) -> Self {
        FailureOut {
            context: f.context.clone(),
            indices: f.indices.clone(),
            expected: f.expected.clone(),
            got: f.got.clone(),
        }
    }
}

#[derive(Serialize)]
pub struct ReportOut {
    pub name: String,
    pub passed: bool,
    pub checked: u64,
    pub failures: Vec<FailureOut>,
}

impl From<&VerifyReport> for ReportOut {
    fn from(r: &VerifyReport) -> Self {
        ReportOut {
            name: r.name.clone(),
            passed: r.passed,
            checked: r.checked,
            failures: r.failures.iter().map(FailureOut::from).collect(),
        }
    }
}

/// Everything one `check` invocation produced.
pub struct Outcome {
    pub suite: String,
    pub algebra: Option<String>,
    pub dim: Option<usize>,
    pub n: Option<u8>,
    /// Seed and sample count, present exactly when the suite drew samples.
    pub seed: Option<u64>,
    pub samples: Option<u64>,
    pub full: bool,
    pub reports: Vec<VerifyReport>,
}

impl Outcome {
    pub fn passed(&self) -> bool {
        self.reports.iter().all(|r| r.passed)
    }

    pub fn to_json(&self) -> String {
        #[derive(Serialize)]
        struct OutcomeOut<'a> {
            suite: &'a str,
            #[serde(skip_serializing_if = "Option::is_none")]
            algebra: Option<&'a str>,
            #[serde(skip_serializing_if = "Option::is_none")]
            dim: Option<usize>,
            #[serde(skip_serializing_if = "Option::is_none")]
            n: Option<u8>,
            #[serde(skip_serializing_if = "Option::is_none")]
            seed: Option<u64>,
            #[serde(skip_serializing_if = "Option::is_none")]
            samples: Option<u64>,
            full: bool,
            passed: bool,
            reports: Vec<ReportOut>,
        }
        let out = OutcomeOut {
            suite: &self.suite,
            algebra: self.algebra.as_deref(),
            dim: self.dim,
            n: self.n,
            seed: self.seed,
            samples: self.samples,
            full: self.full,
            passed: self.passed(),
            reports: self.reports.iter().map(ReportOut::from).collect(),
        };
        let mut s = serde_json::to_string_pretty(&out).expect("report serialization");
        s.push('\n');
        s
    }

    pub fn to_text(&self) -> String {
        let mut s = format!("suite: {}\n", self.suite);
        if let Some(a) = &self.algebra {
            match self.dim {
                Some(d) => s.push_str(&format!("algebra: {a} (dim {d})\n")),
                None => s.push_str(&format!("algebra: {a}\n")),
            }
        }
        if let Some(n) = self.n {
            s.push_str(&format!("n: {n}\n"));
        }
        if let Some(seed) = self.seed {
            s.push_str(&format!("seed: {seed}\n"));
        }
        if let Some(samples) = self.samples {
            s.push_str(&format!("samples: {samples}\n"));
        }
        if self.full {
            s.push_str("full: true\n");
        }
        for r in &self.reports {
            let status = if r.passed { "pass" } else { "FAIL" };
            s.push_str(&format!(
                "  {}: {} ({} checked, {} ms)\n",
                r.name, status, r.checked, r.wall_ms
            ));
            for f in r.failures.iter().take(8) {
                s.push_str(&format!(
                    "    at {:?} {}: expected {}, got {}\n",
                    f.indices, f.context, f.expected, f.got
                ));
            }
            if r.failures.len() > 8 {
                s.push_str(&format!("    ... {} failures total\n", r.failures.len()));
            }
        }
        s.push_str(&format!(
            "result: {}\n",
            if self.passed() { "PASS" } else { "FAIL" }
        ));
        s
    }
}
