use serde::Serialize;
use std::time::Instant;

/// Outcome of one identity check. A failure always carries a witness.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Check {
    pub id: String,
    pub passed: bool,
    pub witness: Option<String>,
    pub millis: u64,
}

impl Check {
    /// Times `f`, which returns `None` on success or a witness on failure.
    pub fn run(id: impl Into<String>, f: impl FnOnce() -> Option<String>) -> Check {
        let t = Instant::now();
        let witness = f();
        Check { id: id.into(), passed: witness.is_none(), witness, millis: t.elapsed().as_millis() as u64 }
    }

    /// Merges per-sample results of the same check; the first failing
    /// sample supplies the witness.
    pub fn merge(id: impl Into<String>, parts: Vec<Check>) -> Check {
        let millis = parts.iter().map(|c| c.millis).sum();
        let witness = parts.into_iter().find_map(|c| c.witness);
        Check { id: id.into(), passed: witness.is_none(), witness, millis }
    }
}
