//! Structured pass/fail records shared by every check.

use std::collections::BTreeMap;
use std::fmt;
use std::time::Instant;

use serde::{Deserialize, Serialize};

/// Prefix of detail lines that record a failure.
pub const FAILED: &str = "failed: ";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Pass,
    Fail,
    NotCertified,
}

/// Outcome of one verification. A failing report always carries details.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub id: String,
    /// The mathematical claim being checked, stated in words.
    pub anchor: String,
    pub status: Status,
    pub params: BTreeMap<String, String>,
    pub details: Vec<String>,
    pub ms: u64,
}

impl VerificationReport {
    pub fn new(id: impl Into<String>, anchor: impl Into<String>) -> Self {
        Self {
            id: id.into(),
            anchor: anchor.into(),
            status: Status::Pass,
            params: BTreeMap::new(),
            details: Vec::new(),
            ms: 0,
        }
    }

    pub fn param(mut self, key: &str, value: impl ToString) -> Self {
        self.params.insert(key.to_string(), value.to_string());
        self
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    pub fn note(&mut self, line: impl Into<String>) {
        self.details.push(line.into());
    }

    /// Records a failure; the first failure wins over later `not_certified`.
    /// Failing lines carry the [`FAILED`] prefix.
    pub fn fail(&mut self, line: impl Into<String>) {
        self.status = Status::Fail;
        self.details.push(format!("{FAILED}{}", line.into()));
    }

    /// Detail lines recorded by [`VerificationReport::fail`].
    pub fn failures(&self) -> impl Iterator<Item = &str> {
        self.details.iter().filter(|d| d.starts_with(FAILED)).map(String::as_str)
    }

    pub fn not_certified(&mut self, line: impl Into<String>) {
        if self.status == Status::Pass {
            self.status = Status::NotCertified;
        }
        self.details.push(line.into());
    }

    /// Passes or fails on `ok`, attaching `line` either way.
    pub fn expect(&mut self, ok: bool, line: impl Into<String>) {
        if ok {
            self.note(line);
        } else {
            self.fail(line);
        }
    }

    /// Folds a sub-report in: its details are prefixed with its id.
    pub fn absorb(&mut self, other: &VerificationReport) {
        match other.status {
            Status::Pass => {}
            Status::Fail => self.status = Status::Fail,
            Status::NotCertified => {
                if self.status == Status::Pass {
                    self.status = Status::NotCertified
                }
            }
        }
        for d in &other.details {
            self.details.push(format!("{}: {d}", other.id));
        }
        if other.details.is_empty() && !other.passed() {
            self.details.push(format!("{}: failed", other.id));
        }
    }

    pub fn text_line(&self) -> String {
        let tag = if self.passed() { "PASS" } else { "FAIL" };
        format!("[{tag}] {} — {} ({} ms)", self.id, self.anchor, self.ms)
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.text_line())
    }
}

/// Runs `body` and stamps the elapsed wall time on the report it returns.
pub fn timed(body: impl FnOnce() -> VerificationReport) -> VerificationReport {
    let start = Instant::now();
    let mut r = body();
    r.ms = start.elapsed().as_millis() as u64;
    if !r.passed() && r.details.is_empty() {
        r.details.push("check failed without further detail".into());
    }
    r
}

pub fn to_json(reports: &[VerificationReport]) -> String {
    serde_json::to_string_pretty(reports).expect("reports always serialize")
}

pub fn from_json(text: &str) -> serde_json::Result<Vec<VerificationReport>> {
    serde_json::from_str(text)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_round_trip_is_byte_identical() {
        let mut r = VerificationReport::new("demo", "a claim").param("n", 3);
        r.fail("counterexample");
        let text = to_json(&[r.clone()]);
        let back = from_json(&text).unwrap();
        assert_eq!(back, vec![r]);
        assert_eq!(to_json(&back), text);
        assert!(text.find("\"id\"").unwrap() < text.find("\"anchor\"").unwrap());
    }

    #[test]
    fn failing_status_prints_fail() {
        let mut r = VerificationReport::new("x", "y");
        r.not_certified("budget");
        assert!(r.text_line().starts_with("[FAIL] x — y"));
    }
}
