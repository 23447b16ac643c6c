//! One runner per CLI subcommand, returning a deterministic report.

use serde_json::json;

use regulus_core::algebra::{
    algebra_is_regular_oracle, groupoid_algebra, semigroup_algebra, StructureConstAlgebra,
};
use regulus_core::graded::{decide_graded_regular, graded_regular_oracle, GradedAlgebra};
use regulus_core::graph::{
    bisection_semigroup_growth, boundary_groupoid, decide_leavitt_graded_regular,
    decide_leavitt_regular, GrowthResult,
};
use regulus_core::groupoid::{
    decide_regular_groupoid_algebra, matrix_units_decomposition, FiniteGroupoid,
};
use regulus_core::invsgp::decide_regular_semigroup_algebra;
use regulus_core::ring::CoeffRing;
use regulus_core::selfsim::{
    decide_ep_graded_regular, group_closure, validate_action, ClosureResult, SelfSimilarAction,
};

use crate::json::{CocycleInput, GraphInput, GroupoidInput, SelfSimInput, SemigroupInput};
use crate::report::{
    consistency, OracleReport, Params, Report, Subject, TheoremReport, ToolInfo, SCHEMA,
};
use crate::CliError;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum VerifyMode {
    /// Run the oracle when a definitive tier is affordable at this budget.
    Auto,
    On,
    Off,
}

#[derive(Clone, Debug)]
pub struct GlobalOpts {
    pub seed: u64,
    pub budget: u64,
    pub cap: usize,
    pub verify: VerifyMode,
}

impl Default for GlobalOpts {
    fn default() -> Self {
        GlobalOpts {
            seed: regulus_core::DEFAULT_SEED,
            budget: regulus_core::DEFAULT_BUDGET,
            cap: regulus_core::DEFAULT_CAP,
            verify: VerifyMode::Auto,
        }
    }
}

impl GlobalOpts {
    fn params(&self) -> Params {
        Params {
            seed: self.seed,
            budget: self.budget,
            cap: self.cap,
        }
    }
}

/// Whether the oracle has a definitive tier for this algebra at this budget.
fn oracle_is_definitive_tier(alg: &StructureConstAlgebra, budget: u64) -> bool {
    match &alg.ring {
        CoeffRing::Rationals => true,
        ring => match ring.size() {
            None => false,
            Some(size) => {
                let sweep = size.checked_pow(alg.dim() as u32);
                let cost = if ring.is_field() {
                    sweep
                } else {
                    sweep.and_then(|s| s.checked_mul(s))
                };
                cost.is_some_and(|c| c <= budget)
            }
        },
    }
}

fn should_verify(opts: &GlobalOpts, alg: &StructureConstAlgebra) -> bool {
    match opts.verify {
        VerifyMode::On => true,
        VerifyMode::Off => false,
        VerifyMode::Auto => oracle_is_definitive_tier(alg, opts.budget),
    }
}

fn base_report(kind: &str, ring: Option<&CoeffRing>, summary: String, opts: &GlobalOpts) -> Report {
    Report {
        schema: SCHEMA,
        tool: ToolInfo::current(),
        subject: Subject {
            kind: kind.to_string(),
            ring: ring.map(|r| r.name().to_string()),
            summary,
        },
        params: opts.params(),
        theorem: None,
        oracle: None,
        consistent: None,
        analysis: None,
    }
}

fn finish(mut report: Report) -> Report {
    report.consistent = consistency(report.theorem.as_ref(), report.oracle.as_ref());
    report
}

pub fn invsgp_decide(
    input: &SemigroupInput,
    ring: &CoeffRing,
    opts: &GlobalOpts,
) -> Result<Report, CliError> {
    let s = match input.try_build(opts.cap)? {
        crate::json::SemigroupBuild::Built(s) => s,
        crate::json::SemigroupBuild::CapExceeded(cap) => {
            // possible non-finiteness at this budget: an Unknown verdict
            let mut report = base_report(
                "invsgp.decide",
                Some(ring),
                format!("semigroup closure exceeded cap {cap}"),
                opts,
            );
            report.theorem = Some(TheoremReport {
                verdict: "Unknown".into(),
                reason: Some(format!(
                    "closure exceeded cap {cap}; local finiteness not certified"
                )),
                evidence: vec![],
            });
            return Ok(finish(report));
        }
    };
    let decision = decide_regular_semigroup_algebra(&s, ring);
    let mut report = base_report(
        "invsgp.decide",
        Some(ring),
        format!("inverse semigroup of order {} on {} points", s.len(), s.degree()),
        opts,
    );
    report.theorem = Some(TheoremReport::from_decision(&decision));
    let alg = semigroup_algebra(&s, ring);
    if should_verify(opts, &alg) {
        let verdict = algebra_is_regular_oracle(&alg, opts.budget, opts.seed);
        report.oracle = Some(OracleReport::from_verdict(&verdict, &alg));
    }
    Ok(finish(report))
}

pub fn algebra_oracle_from_semigroup(
    input: &SemigroupInput,
    ring: &CoeffRing,
    opts: &GlobalOpts,
) -> Result<Report, CliError> {
    let s = input.build(opts.cap)?;
    let alg = semigroup_algebra(&s, ring);
    let verdict = algebra_is_regular_oracle(&alg, opts.budget, opts.seed);
    let mut report = base_report(
        "algebra.oracle",
        Some(ring),
        format!("semigroup algebra of dimension {}", alg.dim()),
        opts,
    );
    report.oracle = Some(OracleReport::from_verdict(&verdict, &alg));
    Ok(finish(report))
}

pub fn algebra_oracle_from_groupoid(
    input: &GroupoidInput,
    ring: &CoeffRing,
    opts: &GlobalOpts,
) -> Result<Report, CliError> {
    let g = input.build()?;
    let alg = groupoid_algebra(&g, ring);
    let verdict = algebra_is_regular_oracle(&alg, opts.budget, opts.seed);
    let mut report = base_report(
        "algebra.oracle",
        Some(ring),
        format!("groupoid algebra of dimension {}", alg.dim()),
        opts,
    );
    report.oracle = Some(OracleReport::from_verdict(&verdict, &alg));
    Ok(finish(report))
}

pub fn groupoid_analyze(input: &GroupoidInput, opts: &GlobalOpts) -> Result<Report, CliError> {
    let g = input.build()?;
    let orbits = g.orbits();
    let mut orbit_info = Vec::new();
    for orbit in &orbits {
        let (iso, _) = g
            .isotropy_group(orbit[0])
            .map_err(|e| CliError::Input(format!("{e}")))?;
        orbit_info.push(json!({
            "units": orbit,
            "isotropy_order": iso.order(),
        }));
    }
    let matrix_units = matrix_units_decomposition(&g)
        .map(|d| {
            d.components
                .iter()
                .map(|c| {
                    json!({
                        "orbit_size": c.orbit.len(),
                        "isotropy_order": c.isotropy.order(),
                        "relations_hold": c.matrix_units_relations_hold(&g),
                    })
                })
                .collect::<Vec<_>>()
        })
        .ok();
    let mut report = base_report(
        "groupoid.analyze",
        None,
        format!("groupoid with {} units and {} arrows", g.unit_count(), g.arrow_count()),
        opts,
    );
    report.analysis = Some(json!({
        "units": g.unit_count(),
        "arrows": g.arrow_count(),
        "principal": g.is_principal(),
        "counting_identity": g.counting_identity_holds(),
        "orbits": orbit_info,
        "matrix_units": matrix_units,
    }));
    Ok(report)
}

pub fn groupoid_decide(
    input: &GroupoidInput,
    ring: &CoeffRing,
    opts: &GlobalOpts,
) -> Result<Report, CliError> {
    let g = input.build()?;
    let decision = decide_regular_groupoid_algebra(&g, ring);
    let mut report = base_report(
        "groupoid.decide",
        Some(ring),
        format!("groupoid with {} units and {} arrows", g.unit_count(), g.arrow_count()),
        opts,
    );
    report.theorem = Some(TheoremReport::from_decision(&decision));
    let alg = groupoid_algebra(&g, ring);
    if should_verify(opts, &alg) {
        let verdict = algebra_is_regular_oracle(&alg, opts.budget, opts.seed);
        report.oracle = Some(OracleReport::from_verdict(&verdict, &alg));
    }
    Ok(finish(report))
}

pub fn graded_decide(
    input: &GroupoidInput,
    cocycle: &CocycleInput,
    ring: &CoeffRing,
    opts: &GlobalOpts,
) -> Result<Report, CliError> {
    let g = input.build()?;
    let c = cocycle.build(&g)?;
    let decision = decide_graded_regular(&g, &c, ring);
    let mut report = base_report(
        "graded.decide",
        Some(ring),
        format!(
            "groupoid with {} arrows graded by {}",
            g.arrow_count(),
            cocycle.group
        ),
        opts,
    );
    report.theorem = Some(TheoremReport::from_decision(&decision));
    let graded = GradedAlgebra::new(g, c, ring);
    if ring.is_field() && should_verify(opts, &graded.algebra) {
        if let Ok(verdict) = graded_regular_oracle(&graded, opts.budget, opts.seed) {
            report.oracle = Some(OracleReport::from_verdict(&verdict, &graded.algebra));
        }
    }
    Ok(finish(report))
}

pub fn graded_oracle(
    input: &GroupoidInput,
    cocycle: &CocycleInput,
    ring: &CoeffRing,
    opts: &GlobalOpts,
) -> Result<Report, CliError> {
    let g = input.build()?;
    let c = cocycle.build(&g)?;
    let graded = GradedAlgebra::new(g, c, ring);
    let verdict = graded_regular_oracle(&graded, opts.budget, opts.seed)
        .map_err(|e| CliError::Input(format!("{e}")))?;
    let mut report = base_report(
        "graded.oracle",
        Some(ring),
        format!("graded groupoid algebra of dimension {}", graded.algebra.dim()),
        opts,
    );
    report.oracle = Some(OracleReport::from_verdict(&verdict, &graded.algebra));
    Ok(finish(report))
}

pub fn graph_decide(
    input: &GraphInput,
    ring: &CoeffRing,
    opts: &GlobalOpts,
) -> Result<Report, CliError> {
    let (graph, _) = input.build()?;
    let decision = decide_leavitt_regular(&graph, ring);
    let mut report = base_report(
        "graph.decide",
        Some(ring),
        format!(
            "graph with {} vertices and {} edges",
            graph.vertex_count(),
            graph.edge_count()
        ),
        opts,
    );
    report.theorem = Some(TheoremReport::from_decision(&decision));
    if graph.is_acyclic() {
        let bg = boundary_groupoid(&graph).expect("acyclic");
        let alg = groupoid_algebra(&bg.groupoid, ring);
        if should_verify(opts, &alg) {
            let verdict = algebra_is_regular_oracle(&alg, opts.budget, opts.seed);
            report.oracle = Some(OracleReport::from_verdict(&verdict, &alg));
        }
    } else {
        // no finite algebra exists; the growth certificate is the evidence
        let growth = bisection_semigroup_growth(&graph, opts.cap);
        if let GrowthResult::Exceeded(cert) = growth {
            report.analysis = Some(json!({
                "growth": "Exceeded",
                "certificate_cycle_edges": cert.cycle_edges,
                "certificate_distinct_powers": cert.distinct_powers,
                "certificate_valid": cert.verify(&graph),
            }));
        }
    }
    Ok(finish(report))
}

pub fn graph_graded(
    input: &GraphInput,
    ring: &CoeffRing,
    opts: &GlobalOpts,
) -> Result<Report, CliError> {
    let (graph, _) = input.build()?;
    let decision = decide_leavitt_graded_regular(&graph, ring);
    let mut report = base_report(
        "graph.graded",
        Some(ring),
        format!(
            "graph with {} vertices and {} edges",
            graph.vertex_count(),
            graph.edge_count()
        ),
        opts,
    );
    report.theorem = Some(TheoremReport::from_decision(&decision));
    if graph.is_acyclic() && ring.is_field() {
        let bg = boundary_groupoid(&graph).expect("acyclic");
        let graded = GradedAlgebra::new(bg.groupoid, bg.cocycle, ring);
        if should_verify(opts, &graded.algebra) {
            if let Ok(verdict) = graded_regular_oracle(&graded, opts.budget, opts.seed) {
                report.oracle = Some(OracleReport::from_verdict(&verdict, &graded.algebra));
            }
        }
    }
    Ok(finish(report))
}

pub fn graph_growth(input: &GraphInput, opts: &GlobalOpts) -> Result<Report, CliError> {
    let (graph, _) = input.build()?;
    let growth = bisection_semigroup_growth(&graph, opts.cap);
    let mut report = base_report(
        "graph.growth",
        None,
        format!(
            "graph with {} vertices and {} edges",
            graph.vertex_count(),
            graph.edge_count()
        ),
        opts,
    );
    report.analysis = Some(match growth {
        GrowthResult::Finite(size) => json!({"growth": "Finite", "symbols": size}),
        GrowthResult::Exceeded(cert) => json!({
            "growth": "Exceeded",
            "certificate_cycle_edges": cert.cycle_edges,
            "certificate_distinct_powers": cert.distinct_powers,
            "certificate_valid": cert.verify(&graph),
        }),
    });
    Ok(report)
}

pub fn selfsim_validate(input: &SelfSimInput, opts: &GlobalOpts) -> Result<Report, CliError> {
    let action = input.build()?;
    let violations = validate_action(&action);
    let mut report = base_report(
        "selfsim.validate",
        None,
        format!("self-similar action with {} generators", action.generator_count()),
        opts,
    );
    report.analysis = Some(json!({
        "valid": violations.is_empty(),
        "violations": violations
            .iter()
            .map(|v| json!({
                "generator": v.generator,
                "edge": v.edge,
                "description": v.description,
            }))
            .collect::<Vec<_>>(),
    }));
    if !violations.is_empty() {
        return Err(CliError::InvalidInputReport(Box::new(report)));
    }
    Ok(report)
}

pub fn selfsim_closure(input: &SelfSimInput, opts: &GlobalOpts) -> Result<Report, CliError> {
    let action = input.build()?;
    let mut report = base_report(
        "selfsim.closure",
        None,
        format!("self-similar action with {} generators", action.generator_count()),
        opts,
    );
    report.analysis = Some(match group_closure(&action, opts.budget as usize) {
        ClosureResult::Finite(g) => json!({
            "closure": "Finite",
            "order": g.table.order(),
        }),
        ClosureResult::Exceeded { reached } => {
            report.theorem = Some(TheoremReport {
                verdict: "Unknown".into(),
                reason: Some(format!("closure exceeded budget at {reached} elements")),
                evidence: vec![],
            });
            json!({"closure": "Exceeded", "reached": reached})
        }
    });
    Ok(finish(report))
}

pub fn selfsim_decide(
    input: &SelfSimInput,
    ring: &CoeffRing,
    opts: &GlobalOpts,
) -> Result<Report, CliError> {
    let action = input.build()?;
    let decision = decide_ep_graded_regular(&action, ring, opts.budget as usize);
    let mut report = base_report(
        "selfsim.decide",
        Some(ring),
        format!("self-similar action with {} generators", action.generator_count()),
        opts,
    );
    report.theorem = Some(TheoremReport::from_decision(&decision));
    Ok(finish(report))
}

/// Builds a `FiniteGroupoid` for callers outside this crate (tests).
pub fn build_groupoid(input: &GroupoidInput) -> Result<FiniteGroupoid, CliError> {
    input.build()
}

/// Builds a `SelfSimilarAction` for callers outside this crate (tests).
pub fn build_action(input: &SelfSimInput) -> Result<SelfSimilarAction, CliError> {
    input.build()
}
