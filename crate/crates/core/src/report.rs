use std::fmt::Write;

use serde::Serialize;
use serde_json::Value;

pub const REPORT_VERSION: &str = "1";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CheckStatus {
    Pass,
    Fail,
}

impl CheckStatus {
    pub fn from_bool(ok: bool) -> Self {
        if ok {
            CheckStatus::Pass
        } else {
            CheckStatus::Fail
        }
    }
}

/// One verified claim. The claim text is serialised under the schema key `paper_ref`.
#[derive(Debug, Clone, Serialize)]
pub struct Check {
    pub id: String,
    #[serde(rename = "paper_ref")]
    pub claim: String,
    pub status: CheckStatus,
    pub witnesses: Value,
    pub axioms_used: Vec<String>,
}

impl Check {
    pub fn new(id: &str, claim: &str, ok: bool, witnesses: Value) -> Check {
        Check {
            id: id.into(),
            claim: claim.into(),
            status: CheckStatus::from_bool(ok),
            witnesses,
            axioms_used: Vec::new(),
        }
    }

    pub fn with_axioms(mut self, axioms: Vec<String>) -> Check {
        self.axioms_used = axioms;
        self
    }

    pub fn passed(&self) -> bool {
        self.status == CheckStatus::Pass
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Section {
    pub title: String,
    pub body: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub version: String,
    pub checks: Vec<Check>,
    pub verdict: Option<String>,
    /// Human-readable extras for text output only.
    #[serde(skip)]
    pub sections: Vec<Section>,
}

impl Default for Report {
    fn default() -> Self {
        Report {
            version: REPORT_VERSION.into(),
            checks: Vec::new(),
            verdict: None,
            sections: Vec::new(),
        }
    }
}

impl Report {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(Check::passed)
    }

    pub fn check(&self, id: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.id == id)
    }

    pub fn merge(&mut self, other: Report) {
        self.checks.extend(other.checks);
        self.sections.extend(other.sections);
        if other.verdict.is_some() {
            self.verdict = other.verdict;
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialises") + "\n"
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for s in &self.sections {
            let _ = writeln!(out, "== {} ==\n{}", s.title, s.body.trim_end());
            out.push('\n');
        }
        for c in &self.checks {
            let mark = if c.passed() { "PASS" } else { "FAIL" };
            let _ = writeln!(out, "[{mark}] {}: {}", c.id, c.claim);
        }
        let passed = self.checks.iter().filter(|c| c.passed()).count();
        let _ = writeln!(out, "\n{passed}/{} checks passed", self.checks.len());
        if let Some(v) = &self.verdict {
            let _ = writeln!(out, "verdict: {v}");
        }
        out
    }
}
