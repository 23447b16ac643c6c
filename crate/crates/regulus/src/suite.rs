//! Manifest-driven suite runner: each row is decided with the oracle
//! cross-check forced on, compared against its expectation, and summarized.

use serde::Serialize;
use serde_json::Value;

use crate::json::{
    CocycleInput, GraphInput, GroupoidInput, Manifest, ManifestRow, SelfSimInput, SemigroupInput,
};
use crate::ops::{self, GlobalOpts, VerifyMode};
use crate::report::{Report, ToolInfo, SCHEMA};
use crate::CliError;

#[derive(Clone, Debug, Serialize)]
pub struct SuiteReport {
    pub schema: &'static str,
    pub tool: ToolInfo,
    pub rows: Vec<SuiteRow>,
    pub pass: bool,
    /// Any theorem/oracle disagreement anywhere in the suite.
    pub disagreement: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct SuiteRow {
    pub name: String,
    pub kind: String,
    pub expect: String,
    pub got: String,
    pub pass: bool,
    pub consistent: Option<bool>,
    pub report: Report,
}

fn run_row(row: &ManifestRow, opts: &GlobalOpts) -> Result<Report, CliError> {
    let parse = |v: &Value| -> Result<SemigroupInput, CliError> {
        serde_json::from_value(v.clone()).map_err(|e| CliError::Parse(format!("{e}")))
    };
    let ring = || -> Result<_, CliError> {
        let lit = row
            .ring
            .as_ref()
            .ok_or_else(|| CliError::Input(format!("row {} needs a ring", row.name)))?;
        crate::json::parse_ring(lit)
    };
    match row.kind.as_str() {
        "invsgp" => ops::invsgp_decide(&parse(&row.input)?, &ring()?, opts),
        "groupoid" => {
            let input: GroupoidInput = serde_json::from_value(row.input.clone())
                .map_err(|e| CliError::Parse(format!("{e}")))?;
            ops::groupoid_decide(&input, &ring()?, opts)
        }
        "graded" => {
            let input: GroupoidInput = serde_json::from_value(row.input.clone())
                .map_err(|e| CliError::Parse(format!("{e}")))?;
            let cocycle: &CocycleInput = row
                .cocycle
                .as_ref()
                .ok_or_else(|| CliError::Input(format!("row {} needs a cocycle", row.name)))?;
            ops::graded_decide(&input, cocycle, &ring()?, opts)
        }
        "graph" => {
            let input: GraphInput = serde_json::from_value(row.input.clone())
                .map_err(|e| CliError::Parse(format!("{e}")))?;
            ops::graph_decide(&input, &ring()?, opts)
        }
        "graph-graded" => {
            let input: GraphInput = serde_json::from_value(row.input.clone())
                .map_err(|e| CliError::Parse(format!("{e}")))?;
            ops::graph_graded(&input, &ring()?, opts)
        }
        "selfsim" => {
            let input: SelfSimInput = serde_json::from_value(row.input.clone())
                .map_err(|e| CliError::Parse(format!("{e}")))?;
            ops::selfsim_decide(&input, &ring()?, opts)
        }
        other => Err(CliError::Input(format!("unknown row kind {other}"))),
    }
}

pub fn run_suite(manifest: &Manifest, opts: &GlobalOpts) -> Result<SuiteReport, CliError> {
    let mut rows = Vec::new();
    let mut pass = true;
    let mut disagreement = false;
    for row in &manifest.rows {
        let row_opts = GlobalOpts {
            verify: VerifyMode::Auto,
            budget: row.budget.unwrap_or(opts.budget),
            cap: row.cap.unwrap_or(opts.cap),
            ..opts.clone()
        };
        let report = run_row(row, &row_opts)?;
        let got = report
            .theorem
            .as_ref()
            .map(|t| t.verdict.clone())
            .or_else(|| report.oracle.as_ref().map(|o| o.verdict.clone()))
            .unwrap_or_else(|| "NoVerdict".to_string());
        let row_pass = got == row.expect && report.consistent != Some(false);
        pass &= row_pass;
        disagreement |= report.consistent == Some(false);
        rows.push(SuiteRow {
            name: row.name.clone(),
            kind: row.kind.clone(),
            expect: row.expect.clone(),
            got,
            pass: row_pass,
            consistent: report.consistent,
            report,
        });
    }
    Ok(SuiteReport {
        schema: SCHEMA,
        tool: ToolInfo::current(),
        rows,
        pass,
        disagreement,
    })
}

/// Exit code for a suite run: 4 on any internal disagreement, 1 on
/// expectation mismatches, 0 otherwise.
pub fn suite_exit_code(report: &SuiteReport) -> i32 {
    if report.disagreement {
        4
    } else if !report.pass {
        1
    } else {
        0
    }
}

pub fn render_suite(report: &SuiteReport) -> String {
    let mut out = serde_json::to_string_pretty(report).expect("suite report serializes");
    out.push('\n');
    out
}
