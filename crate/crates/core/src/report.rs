//! Verification reports: per-check verdicts with a deterministic, sorted layout.

use std::fmt;

use serde::{Deserialize, Serialize};

pub const FORMAT_VERSION: &str = "1";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Pass,
    Fail,
    Skipped,
}

impl Verdict {
    pub fn from_bool(ok: bool) -> Self {
        if ok {
            Verdict::Pass
        } else {
            Verdict::Fail
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Pass => "PASS",
            Verdict::Fail => "FAIL",
            Verdict::Skipped => "SKIP",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Check {
    pub id: String,
    pub claim: String,
    pub verdict: Verdict,
    pub details: Vec<String>,
}

impl Check {
    pub fn new(id: impl Into<String>, claim: impl Into<String>) -> Self {
        Self { id: id.into(), claim: claim.into(), verdict: Verdict::Pass, details: Vec::new() }
    }

    pub fn detail(&mut self, s: impl Into<String>) {
        self.details.push(s.into());
    }

    /// Records a failure with an explanation.
    pub fn fail(&mut self, s: impl Into<String>) {
        self.verdict = Verdict::Fail;
        self.details.push(s.into());
    }

    pub fn require(&mut self, ok: bool, s: impl Into<String>) {
        if !ok {
            self.fail(s);
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub pass: usize,
    pub fail: usize,
    pub skipped: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub format_version: String,
    pub command: String,
    pub seed: u64,
    pub checks: Vec<Check>,
    pub summary: Summary,
}

impl Report {
    pub fn new(command: impl Into<String>, seed: u64, mut checks: Vec<Check>) -> Self {
        checks.sort_by(|a, b| a.id.cmp(&b.id));
        let mut summary = Summary::default();
        for c in &checks {
            match c.verdict {
                Verdict::Pass => summary.pass += 1,
                Verdict::Fail => summary.fail += 1,
                Verdict::Skipped => summary.skipped += 1,
            }
        }
        Self { format_version: FORMAT_VERSION.into(), command: command.into(), seed, checks, summary }
    }

    pub fn passed(&self) -> bool {
        self.summary.fail == 0
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn to_text(&self) -> String {
        self.to_string()
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{} (seed {})", self.command, self.seed)?;
        for c in &self.checks {
            writeln!(f, "[{}] {}: {}", c.verdict, c.id, c.claim)?;
            for d in &c.details {
                writeln!(f, "    {d}")?;
            }
        }
        write!(f, "{} passed, {} failed, {} skipped", self.summary.pass, self.summary.fail, self.summary.skipped)
    }
}
