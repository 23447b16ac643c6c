//! Shared verdict types for the theorem-side decision procedures.

use alloc::{format, string::String, vec::Vec};
use core::fmt;

/// Outcome of a theorem-based regularity decision.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    Regular,
    NotRegular(String),
    /// A budget or cap was exhausted before the question could be settled.
    Unknown(String),
}

impl Verdict {
    pub fn is_regular(&self) -> bool {
        matches!(self, Verdict::Regular)
    }

    pub fn name(&self) -> &'static str {
        match self {
            Verdict::Regular => "Regular",
            Verdict::NotRegular(_) => "NotRegular",
            Verdict::Unknown(_) => "Unknown",
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::Regular => write!(f, "Regular"),
            Verdict::NotRegular(r) => write!(f, "NotRegular({r})"),
            Verdict::Unknown(r) => write!(f, "Unknown({r})"),
        }
    }
}

/// One checked condition with an optional witness string.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Condition {
    pub name: String,
    pub pass: bool,
    pub witness: Option<String>,
}

impl Condition {
    pub fn new(name: impl Into<String>, pass: bool, witness: Option<String>) -> Self {
        Condition {
            name: name.into(),
            pass,
            witness,
        }
    }
}

/// A decision together with the per-condition evidence that produced it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RegularityDecision {
    pub verdict: Verdict,
    pub evidence: Vec<Condition>,
}

impl RegularityDecision {
    /// Regular exactly when every condition passed; otherwise the first
    /// failing condition names the reason.
    pub fn from_conditions(evidence: Vec<Condition>) -> Self {
        let verdict = match evidence.iter().find(|c| !c.pass) {
            None => Verdict::Regular,
            Some(c) => Verdict::NotRegular(match &c.witness {
                Some(w) => format!("condition failed: {} ({w})", c.name),
                None => format!("condition failed: {}", c.name),
            }),
        };
        RegularityDecision { verdict, evidence }
    }

    pub fn unknown(reason: impl Into<String>, evidence: Vec<Condition>) -> Self {
        RegularityDecision {
            verdict: Verdict::Unknown(reason.into()),
            evidence,
        }
    }
}
