//! Run reports: deterministic per-assertion results with plain-text and JSON
//! renderings.

use crate::groth::CheckReport;
use serde::Serialize;

#[derive(Debug, Clone, Serialize)]
pub struct AssertionResult {
    pub id: String,
    pub status: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct RunReport {
    pub id: String,
    pub passed: usize,
    pub failed: usize,
    pub assertions: Vec<AssertionResult>,
}

impl RunReport {
    pub fn from_checks(id: &str, checks: CheckReport) -> RunReport {
        let assertions: Vec<AssertionResult> = checks
            .checks
            .into_iter()
            .map(|(name, ok)| AssertionResult {
                id: name,
                status: if ok { "pass" } else { "fail" }.to_string(),
                detail: None,
            })
            .collect();
        let failed = assertions.iter().filter(|a| a.status == "fail").count();
        RunReport {
            id: id.to_string(),
            passed: assertions.len() - failed,
            failed,
            assertions,
        }
    }

    pub fn all_ok(&self) -> bool {
        self.failed == 0
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for a in &self.assertions {
            out.push_str(&format!("{}: {}\n", a.status, a.id));
        }
        out.push_str(&format!(
            "{}: {} passed, {} failed\n",
            self.id, self.passed, self.failed
        ));
        out
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports always serialize")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn deterministic_rendering() {
        let mut checks = CheckReport::default();
        checks.push("first", true);
        checks.push("second", false);
        let r = RunReport::from_checks("demo", checks);
        assert_eq!(r.passed, 1);
        assert_eq!(r.failed, 1);
        assert!(!r.all_ok());
        assert_eq!(r.to_text(), "pass: first\nfail: second\ndemo: 1 passed, 1 failed\n");
        let json: serde_json::Value = serde_json::from_str(&r.to_json()).unwrap();
        assert_eq!(json["assertions"][1]["status"], "fail");
    }
}
