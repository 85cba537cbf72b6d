use crate::suites::Suite;
use rmatrix::Check;
use serde_json::{json, Value};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Mode {
    Exact,
    Eval { samples: usize, seed: u64 },
}

#[derive(Debug, Clone)]
pub struct Report {
    pub suite: Suite,
    pub n: usize,
    pub mode: Mode,
    pub checks: Vec<Check>,
}

impl Report {
    pub fn new(suite: Suite, n: usize, mode: Mode, checks: Vec<Check>) -> Self {
        Report { suite, n, mode, checks }
    }

    pub fn passed(&self) -> usize {
        self.checks.iter().filter(|c| c.passed).count()
    }

    pub fn failed(&self) -> usize {
        self.checks.len() - self.passed()
    }

    pub fn all_passed(&self) -> bool {
        self.failed() == 0
    }

    pub fn to_json(&self) -> Value {
        let mode = match &self.mode {
            Mode::Exact => json!({"kind": "exact"}),
            Mode::Eval { samples, seed } => json!({"kind": "eval", "samples": samples, "seed": seed}),
        };
        let checks: Vec<Value> = self
            .checks
            .iter()
            .map(|c| {
                json!({
                    "id": c.id,
                    "status": if c.passed { "pass" } else { "fail" },
                    "witness": c.witness,
                    "millis": c.millis,
                })
            })
            .collect();
        json!({
            "suite": self.suite.as_str(),
            "N": self.n,
            "mode": mode,
            "checks": checks,
            "summary": {"total": self.checks.len(), "passed": self.passed(), "failed": self.failed()},
        })
    }

    /// One line per check, then a summary line.
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        for c in &self.checks {
            let status = if c.passed { "PASS" } else { "FAIL" };
            s.push_str(&format!("{status} {} ({} ms)", c.id, c.millis));
            if let Some(w) = &c.witness {
                s.push_str(&format!("\n     witness: {w}"));
            }
            s.push('\n');
        }
        s.push_str(&format!(
            "{} N={}: {} passed, {} failed\n",
            self.suite.as_str(),
            self.n,
            self.passed(),
            self.failed()
        ));
        s
    }
}
