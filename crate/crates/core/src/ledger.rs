use serde::Serialize;

use crate::error::Result;
use crate::exec;

/// One verified (or refuted) identity, with the first counterexample found.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LedgerEntry {
    pub name: String,
    pub degrees: Vec<usize>,
    pub pass: bool,
    /// Fatal entries make a run fail; informational ones only classify the input.
    pub fatal: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

impl LedgerEntry {
    pub fn new(name: impl Into<String>, degrees: Vec<usize>, fatal: bool, witness: Option<String>) -> Self {
        LedgerEntry {
            name: name.into(),
            degrees,
            pass: witness.is_none(),
            fatal,
            witness,
        }
    }

    pub fn passed(name: impl Into<String>, degrees: Vec<usize>, fatal: bool) -> Self {
        Self::new(name, degrees, fatal, None)
    }

    pub fn informational(mut self) -> Self {
        self.fatal = false;
        self
    }

    pub fn is_fatal_failure(&self) -> bool {
        self.fatal && !self.pass
    }
}

/// Evaluates `check` on every case and records the first failure in input
/// order. `check` returns `Ok(Some(witness))` on a counterexample.
pub fn check_cases<T, F>(
    name: impl Into<String>,
    degrees: Vec<usize>,
    fatal: bool,
    cases: &[T],
    check: F,
) -> Result<LedgerEntry>
where
    T: Sync,
    F: Fn(&T) -> Result<Option<String>> + Sync + Send,
{
    let results = exec::map(cases, check);
    let mut witness = None;
    for r in results {
        if let Some(w) = r? {
            witness = Some(w);
            break;
        }
    }
    Ok(LedgerEntry::new(name, degrees, fatal, witness))
}

/// Merges entries that share a name into one, concatenating degrees and
/// keeping the first witness.
pub fn merge(name: impl Into<String>, fatal: bool, parts: Vec<LedgerEntry>) -> LedgerEntry {
    let mut degrees: Vec<usize> = parts.iter().flat_map(|e| e.degrees.iter().copied()).collect();
    degrees.sort_unstable();
    degrees.dedup();
    let witness = parts.into_iter().find_map(|e| e.witness);
    LedgerEntry::new(name, degrees, fatal, witness)
}
