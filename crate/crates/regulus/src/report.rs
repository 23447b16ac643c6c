//! Machine-readable reports. Reports are deterministic given (input, seed,
//! budget): no wall-clock fields, stable key order.

use serde::Serialize;

use regulus_core::algebra::{OracleOutcome, OracleVerdict, StructureConstAlgebra};
use regulus_core::decision::{RegularityDecision, Verdict};

pub const SCHEMA: &str = "regulus/1";

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub schema: &'static str,
    pub tool: ToolInfo,
    pub subject: Subject,
    pub params: Params,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub theorem: Option<TheoremReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub oracle: Option<OracleReport>,
    /// true/false when both sides are definitive, null otherwise.
    pub consistent: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub analysis: Option<serde_json::Value>,
}

#[derive(Clone, Debug, Serialize)]
pub struct ToolInfo {
    pub name: &'static str,
    pub version: &'static str,
}

impl ToolInfo {
    pub fn current() -> Self {
        ToolInfo {
            name: "regulus",
            version: env!("CARGO_PKG_VERSION"),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Subject {
    pub kind: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub ring: Option<String>,
    pub summary: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct Params {
    pub seed: u64,
    pub budget: u64,
    pub cap: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct TheoremReport {
    pub verdict: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
    pub evidence: Vec<EvidenceRow>,
}

#[derive(Clone, Debug, Serialize)]
pub struct EvidenceRow {
    pub condition: String,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct OracleReport {
    pub verdict: String,
    pub method: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

impl TheoremReport {
    pub fn from_decision(d: &RegularityDecision) -> Self {
        let reason = match &d.verdict {
            Verdict::Regular => None,
            Verdict::NotRegular(r) | Verdict::Unknown(r) => Some(r.clone()),
        };
        TheoremReport {
            verdict: d.verdict.name().to_string(),
            reason,
            evidence: d
                .evidence
                .iter()
                .map(|c| EvidenceRow {
                    condition: c.name.clone(),
                    pass: c.pass,
                    witness: c.witness.clone(),
                })
                .collect(),
        }
    }
}

impl OracleReport {
    pub fn from_verdict(v: &OracleVerdict, algebra: &StructureConstAlgebra) -> Self {
        let (verdict, witness) = match &v.outcome {
            OracleOutcome::Regular => ("Regular".to_string(), None),
            OracleOutcome::NotRegular(w) => (
                "NotRegular".to_string(),
                Some(algebra.format_element(w)),
            ),
            OracleOutcome::Unknown => ("Unknown".to_string(), None),
        };
        OracleReport {
            verdict,
            method: v.method.name(),
            witness,
        }
    }
}

/// Consistency of theorem and oracle verdicts: Some(false) exactly when both
/// are definitive and disagree. An oracle Unknown never contradicts.
pub fn consistency(theorem: Option<&TheoremReport>, oracle: Option<&OracleReport>) -> Option<bool> {
    let t = theorem?;
    let o = oracle?;
    if t.verdict == "Unknown" || o.verdict == "Unknown" {
        return None;
    }
    Some(t.verdict == o.verdict)
}

/// Exit codes: 0 decided and consistent, 2 Unknown, 3 input error (mapped by
/// the caller), 4 theorem/oracle disagreement.
pub fn exit_code(report: &Report) -> i32 {
    if report.consistent == Some(false) {
        return 4;
    }
    let undecided = |v: &str| v == "Unknown";
    let theorem_unknown = report.theorem.as_ref().is_some_and(|t| undecided(&t.verdict));
    let oracle_unknown_only = report.theorem.is_none()
        && report.oracle.as_ref().is_some_and(|o| undecided(&o.verdict));
    if theorem_unknown || oracle_unknown_only {
        return 2;
    }
    0
}

pub fn render(report: &Report) -> String {
    let mut out = serde_json::to_string_pretty(report).expect("report serializes");
    out.push('\n');
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mk(theorem: Option<&str>, oracle: Option<&str>) -> Report {
        Report {
            schema: SCHEMA,
            tool: ToolInfo::current(),
            subject: Subject {
                kind: "test".into(),
                ring: None,
                summary: "t".into(),
            },
            params: Params {
                seed: 1,
                budget: 2,
                cap: 3,
            },
            theorem: theorem.map(|v| TheoremReport {
                verdict: v.into(),
                reason: None,
                evidence: vec![],
            }),
            oracle: oracle.map(|v| OracleReport {
                verdict: v.into(),
                method: "Exhaustive".into(),
                witness: None,
            }),
            consistent: None,
            analysis: None,
        }
        .with_consistency()
    }

    impl Report {
        fn with_consistency(mut self) -> Self {
            self.consistent = consistency(self.theorem.as_ref(), self.oracle.as_ref());
            self
        }
    }

    #[test]
    fn exit_codes() {
        // a disagreement is the most valuable output: dedicated exit code
        assert_eq!(exit_code(&mk(Some("Regular"), Some("NotRegular"))), 4);
        assert_eq!(exit_code(&mk(Some("Regular"), Some("Regular"))), 0);
        assert_eq!(exit_code(&mk(Some("NotRegular"), None)), 0);
        assert_eq!(exit_code(&mk(Some("Unknown"), None)), 2);
        assert_eq!(exit_code(&mk(Some("Regular"), Some("Unknown"))), 0);
    }

    #[test]
    fn rendering_is_stable() {
        let r = mk(Some("Regular"), None);
        assert_eq!(render(&r), render(&r));
    }
}
