//! Verification reports with deterministic field order.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    /// A printed table entry disagreed with the derived value, which replaced it.
    Corrected,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub status: Status,
    pub detail: String,
}

impl Check {
    pub fn new(name: impl Into<String>, ok: bool, detail: impl Into<String>) -> Self {
        Check { name: name.into(), status: if ok { Status::Pass } else { Status::Fail }, detail: detail.into() }
    }

    pub fn corrected(name: impl Into<String>, printed: impl fmt::Display, derived: impl fmt::Display) -> Self {
        Check { name: name.into(), status: Status::Corrected, detail: format!("printed: {printed}; corrected: {derived}") }
    }

    pub fn passed(&self) -> bool {
        self.status != Status::Fail
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub pass: usize,
    pub fail: usize,
    pub corrected: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub command: String,
    pub parameters: BTreeMap<String, String>,
    pub checks: Vec<Check>,
    pub summary: Summary,
}

impl Report {
    pub fn new(command: impl Into<String>) -> Self {
        Report { command: command.into(), parameters: BTreeMap::new(), checks: Vec::new(), summary: Summary::default() }
    }

    pub fn param(&mut self, k: impl Into<String>, v: impl fmt::Display) {
        self.parameters.insert(k.into(), v.to_string());
    }

    pub fn push(&mut self, c: Check) {
        match c.status {
            Status::Pass => self.summary.pass += 1,
            Status::Fail => self.summary.fail += 1,
            Status::Corrected => self.summary.corrected += 1,
        }
        self.checks.push(c);
    }

    pub fn extend(&mut self, cs: impl IntoIterator<Item = Check>) {
        for c in cs {
            self.push(c);
        }
    }

    pub fn ok(&self) -> bool {
        self.summary.fail == 0
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| c.status == Status::Fail)
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}", self.command)?;
        for (k, v) in &self.parameters {
            writeln!(f, "  {k} = {v}")?;
        }
        for c in &self.checks {
            let tag = match c.status {
                Status::Pass => "pass",
                Status::Fail => "FAIL",
                Status::Corrected => "corrected",
            };
            writeln!(f, "[{tag}] {}: {}", c.name, c.detail)?;
        }
        write!(f, "pass {} / fail {} / corrected {}", self.summary.pass, self.summary.fail, self.summary.corrected)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_round_trip() {
        let mut r = Report::new("demo");
        r.param("k", 2);
        r.push(Check::new("a", true, "ok"));
        r.push(Check::corrected("b", "x", "y"));
        let s = serde_json::to_string(&r).unwrap();
        let back: Report = serde_json::from_str(&s).unwrap();
        assert_eq!(back, r);
        assert!(s.contains("\"corrected\""));
        assert!(r.ok());
    }
}
