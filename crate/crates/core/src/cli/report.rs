use serde::Serialize;

use crate::catalog::{Check, Status};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, clap::ValueEnum)]
pub enum Format {
    #[default]
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
pub struct Summary {
    pub passed: usize,
    pub failed: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Report {
    pub command: String,
    pub algebra: Option<String>,
    pub field: Option<String>,
    pub checks: Vec<Check>,
    pub summary: Summary,
}

impl Report {
    pub fn new(command: impl Into<String>) -> Self {
        Report { command: command.into(), algebra: None, field: None, checks: Vec::new(), summary: Summary::default() }
    }

    pub fn push(&mut self, check: Check) {
        match check.status {
            Status::Pass => self.summary.passed += 1,
            Status::Fail => self.summary.failed += 1,
        }
        self.checks.push(check);
    }

    pub fn record(&mut self, name: impl Into<String>, value: impl Into<String>) {
        let value = value.into();
        self.push(Check { name: name.into(), status: Status::Pass, expected: String::new(), actual: value });
    }

    pub fn all_passed(&self) -> bool {
        self.summary.failed == 0
    }
}

pub fn emit_report(r: &Report, format: Format) -> String {
    match format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(r).expect("report serializes");
            s.push('\n');
            s
        }
        Format::Text => {
            let mut s = String::new();
            for c in &r.checks {
                let tag = match c.status {
                    Status::Pass => "PASS",
                    Status::Fail => "FAIL",
                };
                if c.actual.contains('\n') {
                    s.push_str(&format!("{tag} {}\n{}", c.name, c.actual));
                    if !c.actual.ends_with('\n') {
                        s.push('\n');
                    }
                } else if c.status == Status::Fail && !c.expected.is_empty() {
                    s.push_str(&format!("{tag} {}: expected {}, got {}\n", c.name, c.expected, c.actual));
                } else {
                    s.push_str(&format!("{tag} {}: {}\n", c.name, c.actual));
                }
            }
            s.push_str(&format!("passed {}, failed {}\n", r.summary.passed, r.summary.failed));
            s
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_report() {
        let r = Report::new("list");
        assert_eq!(r.summary, Summary { passed: 0, failed: 0 });
        let json: serde_json::Value = serde_json::from_str(&emit_report(&r, Format::Json)).unwrap();
        assert_eq!(json["summary"]["passed"], 0);
        assert_eq!(json["summary"]["failed"], 0);
        assert!(json["checks"].as_array().unwrap().is_empty());
    }

    #[test]
    fn one_passing_check() {
        let mut r = Report::new("normalize");
        r.record("normal_form", "t*x + 1");
        assert!(r.all_passed());
        assert_eq!(r.summary, Summary { passed: 1, failed: 0 });
        assert_eq!(emit_report(&r, Format::Text), "PASS normal_form: t*x + 1\npassed 1, failed 0\n");
    }
}
