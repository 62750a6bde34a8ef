//! Check records and run reports.

use std::fmt;

use serde::Serialize;

/// Bumped whenever the JSON layout changes.
pub const REPORT_SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    /// The statement being checked.
    pub reference: String,
    pub pass: bool,
    /// Diagnostic checks are reported but never affect the overall status.
    pub diagnostic: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl Check {
    pub fn new(name: impl Into<String>, reference: impl Into<String>, pass: bool) -> Self {
        Self { name: name.into(), reference: reference.into(), pass, diagnostic: false, witness: None, note: None }
    }

    /// A check of `lhs - rhs == 0`; the difference is the witness on failure.
    pub fn zero<T: fmt::Display>(
        name: impl Into<String>,
        reference: impl Into<String>,
        is_zero: bool,
        diff: &T,
    ) -> Self {
        let mut c = Self::new(name, reference, is_zero);
        if !is_zero {
            c.witness = Some(diff.to_string());
        }
        c
    }

    pub fn diagnostic(mut self) -> Self {
        self.diagnostic = true;
        self
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }

    pub fn with_witness(mut self, w: impl Into<String>) -> Self {
        self.witness = Some(w.into());
        self
    }

    /// One-line summary, `PASS name` / `FAIL name` / `INFO name`.
    pub fn status_word(&self) -> &'static str {
        match (self.pass, self.diagnostic) {
            (true, _) => "PASS",
            (false, false) => "FAIL",
            (false, true) => "INFO",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RunReport {
    pub schema_version: u32,
    pub seed: u64,
    pub pass: bool,
    pub checks: Vec<Check>,
}

impl RunReport {
    /// Sorts nothing: checks keep the order in which they were produced,
    /// which is fixed by the suite definition.
    pub fn new(seed: u64, checks: Vec<Check>) -> Self {
        let pass = checks.iter().all(|c| c.pass || c.diagnostic);
        Self { schema_version: REPORT_SCHEMA_VERSION, seed, pass, checks }
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.pass && !c.diagnostic)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

impl fmt::Display for RunReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            writeln!(f, "{} {}", c.status_word(), c.name)?;
            if let Some(n) = &c.note {
                writeln!(f, "     {n}")?;
            }
            if !c.pass {
                if let Some(w) = &c.witness {
                    let short: String = w.chars().take(400).collect();
                    let ellipsis = if w.chars().count() > 400 { " ..." } else { "" };
                    writeln!(f, "     witness: {short}{ellipsis}")?;
                }
            }
        }
        let failed = self.failures().count();
        writeln!(
            f,
            "{}: {} checks, {} failed (seed {})",
            if self.pass { "OK" } else { "FAILED" },
            self.checks.len(),
            failed,
            self.seed
        )
    }
}
