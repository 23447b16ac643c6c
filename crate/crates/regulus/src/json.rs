//! JSON input schemas and their conversion to core types.

use std::collections::BTreeMap;

use serde::Deserialize;

use regulus_core::graded::{Cocycle, GradingGroup};
use regulus_core::graph::DirectedGraph;
use regulus_core::groupoid::FiniteGroupoid;
use regulus_core::invsgp::FiniteInverseSemigroup;
use regulus_core::pbij::PartialBijection;
use regulus_core::ring::CoeffRing;
use regulus_core::selfsim::{Letter, SelfSimilarAction, Word};

use crate::CliError;

/// `{"degree": n, "generators": [[images with null for undefined], ...],
/// "cap": k}`
#[derive(Clone, Debug, Deserialize)]
pub struct SemigroupInput {
    pub degree: usize,
    pub generators: Vec<Vec<Option<usize>>>,
    #[serde(default)]
    pub cap: Option<usize>,
}

/// Outcome of closing a semigroup input: the closure may exceed its cap,
/// which is a verdict (possible non-finiteness), not an input error.
pub enum SemigroupBuild {
    Built(FiniteInverseSemigroup),
    CapExceeded(usize),
}

impl SemigroupInput {
    pub fn try_build(&self, default_cap: usize) -> Result<SemigroupBuild, CliError> {
        use regulus_core::invsgp::SemigroupError;
        let mut gens = Vec::new();
        for (i, images) in self.generators.iter().enumerate() {
            if images.len() != self.degree {
                return Err(CliError::Input(format!(
                    "generator {i} has {} images, expected degree {}",
                    images.len(),
                    self.degree
                )));
            }
            gens.push(
                PartialBijection::new(images.clone())
                    .map_err(|e| CliError::Input(format!("generator {i}: {e}")))?,
            );
        }
        match FiniteInverseSemigroup::generate(&gens, self.cap.unwrap_or(default_cap)) {
            Ok(s) => Ok(SemigroupBuild::Built(s)),
            Err(SemigroupError::CapExceeded(cap)) => Ok(SemigroupBuild::CapExceeded(cap)),
            Err(e) => Err(CliError::Input(format!("{e}"))),
        }
    }

    pub fn build(&self, default_cap: usize) -> Result<FiniteInverseSemigroup, CliError> {
        match self.try_build(default_cap)? {
            SemigroupBuild::Built(s) => Ok(s),
            SemigroupBuild::CapExceeded(cap) => Err(CliError::Input(format!(
                "closure exceeded cap {cap}"
            ))),
        }
    }
}

/// `{"vertices": [...], "edges": [{"id":, "src":, "tgt":}]}`
#[derive(Clone, Debug, Deserialize)]
pub struct GraphInput {
    pub vertices: Vec<String>,
    pub edges: Vec<GraphEdgeInput>,
}

#[derive(Clone, Debug, Deserialize)]
pub struct GraphEdgeInput {
    pub id: String,
    pub src: String,
    pub tgt: String,
}

impl GraphInput {
    pub fn build(&self) -> Result<(DirectedGraph, Vec<String>), CliError> {
        let vertex_index: BTreeMap<&str, usize> = self
            .vertices
            .iter()
            .enumerate()
            .map(|(i, v)| (v.as_str(), i))
            .collect();
        if vertex_index.len() != self.vertices.len() {
            return Err(CliError::Input("duplicate vertex names".into()));
        }
        let mut edges = Vec::new();
        let mut edge_ids = Vec::new();
        for e in &self.edges {
            let s = *vertex_index
                .get(e.src.as_str())
                .ok_or_else(|| CliError::Input(format!("unknown vertex {} in edge {}", e.src, e.id)))?;
            let t = *vertex_index
                .get(e.tgt.as_str())
                .ok_or_else(|| CliError::Input(format!("unknown vertex {} in edge {}", e.tgt, e.id)))?;
            edges.push((s, t));
            edge_ids.push(e.id.clone());
        }
        Ok((DirectedGraph::new(self.vertices.len(), &edges), edge_ids))
    }
}

/// `{"units": [...], "arrows": [{"src":, "tgt":}], "compose": [[i,j,k],...]}`
#[derive(Clone, Debug, Deserialize)]
pub struct GroupoidInput {
    pub units: Vec<String>,
    pub arrows: Vec<GroupoidArrowInput>,
    pub compose: Vec<[usize; 3]>,
}

#[derive(Clone, Debug, Deserialize)]
pub struct GroupoidArrowInput {
    pub src: usize,
    pub tgt: usize,
}

impl GroupoidInput {
    pub fn build(&self) -> Result<FiniteGroupoid, CliError> {
        let arrows: Vec<(usize, usize)> = self.arrows.iter().map(|a| (a.src, a.tgt)).collect();
        let compose: Vec<(usize, usize, usize)> =
            self.compose.iter().map(|c| (c[0], c[1], c[2])).collect();
        FiniteGroupoid::from_parts(self.units.len(), &arrows, &compose, None)
            .map_err(|e| CliError::Input(format!("{e}")))
    }
}

/// `{"group": "Z" | "Z/k", "degrees": [per-arrow value]}`
#[derive(Clone, Debug, Deserialize)]
pub struct CocycleInput {
    pub group: String,
    pub degrees: Vec<i64>,
}

impl CocycleInput {
    pub fn build(&self, groupoid: &FiniteGroupoid) -> Result<Cocycle, CliError> {
        let group = if self.group == "Z" {
            GradingGroup::Integers
        } else if let Some(k) = self.group.strip_prefix("Z/") {
            let k: u32 = k
                .parse()
                .map_err(|_| CliError::Input(format!("bad grading group {}", self.group)))?;
            if k == 0 {
                return Err(CliError::Input("grading modulus must be positive".into()));
            }
            GradingGroup::CyclicMod(k)
        } else {
            return Err(CliError::Input(format!(
                "unknown grading group {} (use Z or Z/k)",
                self.group
            )));
        };
        Cocycle::new(groupoid, group, self.degrees.clone())
            .map_err(|e| CliError::Input(format!("{e}")))
    }
}

/// `{"graph": ..., "generators": [{"name":, "vertex_perm":, "edge_perm":,
/// "sections": {edge-id: [word]}}]}`
#[derive(Clone, Debug, Deserialize)]
pub struct SelfSimInput {
    pub graph: GraphInput,
    pub generators: Vec<SelfSimGeneratorInput>,
}

#[derive(Clone, Debug, Deserialize)]
pub struct SelfSimGeneratorInput {
    pub name: String,
    pub vertex_perm: Vec<usize>,
    pub edge_perm: Vec<usize>,
    pub sections: BTreeMap<String, Vec<String>>,
}

impl SelfSimInput {
    pub fn build(&self) -> Result<SelfSimilarAction, CliError> {
        let (graph, edge_ids) = self.graph.build()?;
        let gen_index: BTreeMap<&str, usize> = self
            .generators
            .iter()
            .enumerate()
            .map(|(i, g)| (g.name.as_str(), i))
            .collect();
        let parse_word = |letters: &[String]| -> Result<Word, CliError> {
            let mut w = Word::new();
            for l in letters {
                let (name, inv) = match l.strip_suffix("^-1") {
                    Some(base) => (base, true),
                    None => (l.as_str(), false),
                };
                let idx = *gen_index
                    .get(name)
                    .ok_or_else(|| CliError::Input(format!("unknown generator {name} in word")))?;
                w.push((idx as u16, inv) as Letter);
            }
            Ok(w)
        };
        let mut names = Vec::new();
        let mut vperms = Vec::new();
        let mut eperms = Vec::new();
        let mut sections = Vec::new();
        for g in &self.generators {
            names.push(g.name.clone());
            vperms.push(g.vertex_perm.clone());
            eperms.push(g.edge_perm.clone());
            let mut per_edge = Vec::with_capacity(edge_ids.len());
            for id in &edge_ids {
                let word = g.sections.get(id).ok_or_else(|| {
                    CliError::Input(format!("generator {} missing section for edge {id}", g.name))
                })?;
                per_edge.push(parse_word(word)?);
            }
            sections.push(per_edge);
        }
        SelfSimilarAction::new(graph, names, vperms, eperms, sections)
            .map_err(|e| CliError::Input(format!("{e}")))
    }
}

/// Parses a ring literal: Q, F2, F3, F5, Z6, Z12, product:[...].
pub fn parse_ring(s: &str) -> Result<CoeffRing, CliError> {
    let s = s.trim();
    if s == "Q" {
        return Ok(CoeffRing::Rationals);
    }
    if let Some(p) = s.strip_prefix('F') {
        let p: u64 = p
            .parse()
            .map_err(|_| CliError::Input(format!("bad ring literal {s}")))?;
        return CoeffRing::prime_field(p).map_err(|e| CliError::Input(format!("{e}")));
    }
    if let Some(n) = s.strip_prefix('Z') {
        let n: u64 = n
            .parse()
            .map_err(|_| CliError::Input(format!("bad ring literal {s}")))?;
        return CoeffRing::integers_mod(n).map_err(|e| CliError::Input(format!("{e}")));
    }
    if let Some(body) = s.strip_prefix("product:[") {
        let body = body
            .strip_suffix(']')
            .ok_or_else(|| CliError::Input(format!("unterminated product ring {s}")))?;
        // split on top-level commas only
        let mut parts = Vec::new();
        let mut depth = 0usize;
        let mut cur = String::new();
        for ch in body.chars() {
            match ch {
                '[' => {
                    depth += 1;
                    cur.push(ch);
                }
                ']' => {
                    depth -= 1;
                    cur.push(ch);
                }
                ',' if depth == 0 => {
                    parts.push(cur.clone());
                    cur.clear();
                }
                _ => cur.push(ch),
            }
        }
        if !cur.trim().is_empty() {
            parts.push(cur);
        }
        let factors = parts
            .iter()
            .map(|p| parse_ring(p))
            .collect::<Result<Vec<_>, _>>()?;
        return CoeffRing::product(factors).map_err(|e| CliError::Input(format!("{e}")));
    }
    Err(CliError::Input(format!("unknown ring literal {s}")))
}

/// Suite manifest: rows of (kind, ring, input, expectation).
#[derive(Clone, Debug, Deserialize)]
pub struct Manifest {
    pub rows: Vec<ManifestRow>,
}

#[derive(Clone, Debug, Deserialize)]
pub struct ManifestRow {
    pub name: String,
    /// invsgp | groupoid | graded | graph | graph-graded | selfsim
    pub kind: String,
    #[serde(default)]
    pub ring: Option<String>,
    pub input: serde_json::Value,
    #[serde(default)]
    pub cocycle: Option<CocycleInput>,
    /// Regular | NotRegular | Unknown
    pub expect: String,
    #[serde(default)]
    pub budget: Option<u64>,
    #[serde(default)]
    pub cap: Option<usize>,
}
