//! Claim results and the report in text or JSON form.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::Result;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Verified,
    Refuted,
    Unsupported,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Expectation {
    Verify,
    RefuteWithDiscrepancy,
    Unsupported,
}

impl Expectation {
    pub fn matches(&self, s: Status) -> bool {
        matches!(
            (self, s),
            (Expectation::Verify, Status::Verified)
                | (Expectation::RefuteWithDiscrepancy, Status::Refuted)
                | (Expectation::Unsupported, Status::Unsupported)
        )
    }
}

impl std::fmt::Display for Status {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.pad(match self {
            Status::Verified => "verified",
            Status::Refuted => "refuted",
            Status::Unsupported => "unsupported",
        })
    }
}

impl std::fmt::Display for Expectation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.pad(match self {
            Expectation::Verify => "verify",
            Expectation::RefuteWithDiscrepancy => "refute-with-discrepancy",
            Expectation::Unsupported => "unsupported",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClaimResult {
    pub id: String,
    pub status: Status,
    pub expected: Expectation,
    pub evidence: BTreeMap<String, String>,
    pub notes: String,
}

impl ClaimResult {
    pub fn as_expected(&self) -> bool {
        self.expected.matches(self.status)
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub total: usize,
    pub verified: usize,
    pub refuted: usize,
    pub unsupported: usize,
    pub as_expected: usize,
    pub unexpected: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub tool: String,
    pub version: String,
    pub claims: Vec<ClaimResult>,
    pub summary: Summary,
}

impl Report {
    pub fn new(claims: Vec<ClaimResult>) -> Self {
        let mut s = Summary { total: claims.len(), ..Summary::default() };
        for c in &claims {
            match c.status {
                Status::Verified => s.verified += 1,
                Status::Refuted => s.refuted += 1,
                Status::Unsupported => s.unsupported += 1,
            }
            if c.as_expected() {
                s.as_expected += 1;
            } else {
                s.unexpected += 1;
            }
        }
        Report {
            tool: env!("CARGO_PKG_NAME").to_string(),
            version: env!("CARGO_PKG_VERSION").to_string(),
            claims,
            summary: s,
        }
    }

    pub fn all_as_expected(&self) -> bool {
        self.summary.unexpected == 0
    }

    pub fn to_json(&self) -> Result<String> {
        Ok(serde_json::to_string_pretty(self)? + "\n")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        Ok(serde_json::from_str(text)?)
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for c in &self.claims {
            let mark = if c.as_expected() { "ok" } else { "UNEXPECTED" };
            let _ = writeln!(out, "{:<4} {:<11} expected {:<23} {mark}", c.id, c.status, c.expected);
            if !c.notes.is_empty() {
                let _ = writeln!(out, "     {}", c.notes);
            }
            for (k, v) in &c.evidence {
                let _ = writeln!(out, "     {k}: {v}");
            }
        }
        let s = &self.summary;
        let _ = writeln!(
            out,
            "{} {}: {} claims, {} verified, {} refuted, {} unsupported; {} as expected, {} unexpected",
            self.tool, self.version, s.total, s.verified, s.refuted, s.unsupported, s.as_expected, s.unexpected
        );
        out
    }
}
