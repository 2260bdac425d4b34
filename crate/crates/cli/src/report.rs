//! Serializable reports and their plain-text rendering.

use std::fmt::Write;

use serde::Serialize;

#[derive(Debug, Clone, Serialize)]
pub struct InputInfo {
    pub source: String,
    pub dims: Vec<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    pub sha256: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct CutRow {
    pub cut: String,
    pub c2: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub c2_minor: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub c2_vector: Option<f64>,
}

#[derive(Debug, Clone, Serialize)]
pub struct EntropyRow {
    pub parties: String,
    pub tsallis2: f64,
}

#[derive(Debug, Clone, Serialize)]
pub struct RelationRow {
    pub relation: String,
    pub subsystems: String,
    pub lhs: f64,
    pub rhs: f64,
    pub slack: f64,
    pub verdict: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct VectorRow {
    pub vector: String,
    pub norm_sq: f64,
}

#[derive(Debug, Clone, Serialize)]
pub struct GenuineReport {
    pub verdict: String,
    pub vectors: Vec<VectorRow>,
    pub vector_ops: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub oracle: Option<OracleReport>,
}

#[derive(Debug, Clone, Serialize)]
pub struct OracleReport {
    pub genuine: bool,
    pub cuts: usize,
    pub separable_cuts: Vec<String>,
    pub agreement: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct AnalyzeReport {
    pub tool: String,
    pub version: String,
    pub input: InputInfo,
    pub concurrences: Vec<CutRow>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub max_route_disagreement: Option<f64>,
    pub entropies: Vec<EntropyRow>,
    pub relations: Vec<RelationRow>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub genuine: Option<GenuineReport>,
}

#[derive(Debug, Clone, Serialize)]
pub struct GenuineCommandReport {
    pub tool: String,
    pub version: String,
    pub input: InputInfo,
    pub genuine: GenuineReport,
}

#[derive(Debug, Clone, Serialize)]
pub struct TallyRow {
    pub relation: String,
    pub holds: usize,
    pub saturated: usize,
    pub violated: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct AuditReport {
    pub tool: String,
    pub version: String,
    pub samples: usize,
    pub dims: Vec<usize>,
    pub seed: u64,
    pub relations: Vec<TallyRow>,
    pub fixture_ssa_violation: Option<f64>,
    pub unexpected_violations: usize,
    pub passed: bool,
}

fn header(out: &mut String, input: &InputInfo) {
    let _ = writeln!(out, "input    {}", input.source);
    let _ = writeln!(out, "dims     {:?}", input.dims);
    if let Some(seed) = input.seed {
        let _ = writeln!(out, "seed     {seed}");
    }
    let _ = writeln!(out, "sha256   {}", input.sha256);
}

fn genuine_block(out: &mut String, g: &GenuineReport) {
    let _ = writeln!(out, "\ngenuine entanglement: {}", g.verdict);
    for v in &g.vectors {
        let _ = writeln!(out, "  |{}|^2 = {:.6e}", v.vector, v.norm_sq);
    }
    let _ = writeln!(out, "  vector operations: {}", g.vector_ops);
    if let Some(o) = &g.oracle {
        let verdict = if o.genuine { "genuine" } else { "not genuine" };
        let _ = writeln!(out, "oracle: {verdict} ({} cuts)", o.cuts);
        for c in &o.separable_cuts {
            let _ = writeln!(out, "  separable cut {c}");
        }
        let _ = writeln!(out, "agreement: {}", o.agreement);
    }
}

impl AnalyzeReport {
    pub fn render(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "{} {}", self.tool, self.version);
        header(&mut out, &self.input);
        let _ = writeln!(out, "\n{:<24} {:>14}", "cut", "C^2");
        for row in &self.concurrences {
            let _ = write!(out, "{:<24} {:>14.10}", row.cut, row.c2);
            if let (Some(m), Some(v)) = (row.c2_minor, row.c2_vector) {
                let _ = write!(out, "   minor {m:.10}  vector {v:.10}");
            }
            out.push('\n');
        }
        if let Some(d) = self.max_route_disagreement {
            let _ = writeln!(out, "max route disagreement {d:.3e}");
        }
        let _ = writeln!(out, "\n{:<24} {:>14}", "parties", "S2");
        for row in &self.entropies {
            let _ = writeln!(out, "{:<24} {:>14.10}", row.parties, row.tsallis2);
        }
        if !self.relations.is_empty() {
            let _ = writeln!(out, "\n{:<24} {:<16} {:>14} {:>10}", "relation", "subsystems", "slack", "verdict");
            for r in &self.relations {
                let _ = writeln!(out, "{:<24} {:<16} {:>14.6e} {:>10}", r.relation, r.subsystems, r.slack, r.verdict);
            }
        }
        if let Some(g) = &self.genuine {
            genuine_block(&mut out, g);
        }
        out
    }
}

impl GenuineCommandReport {
    pub fn render(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "{} {}", self.tool, self.version);
        header(&mut out, &self.input);
        genuine_block(&mut out, &self.genuine);
        out
    }
}

impl AuditReport {
    pub fn render(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "{} {}", self.tool, self.version);
        let _ = writeln!(out, "samples {}  dims {:?}  seed {}", self.samples, self.dims, self.seed);
        let _ = writeln!(out, "\n{:<28} {:>8} {:>10} {:>9}", "relation", "holds", "saturated", "violated");
        for r in &self.relations {
            let _ = writeln!(out, "{:<28} {:>8} {:>10} {:>9}", r.relation, r.holds, r.saturated, r.violated);
        }
        if let Some(v) = self.fixture_ssa_violation {
            let _ = writeln!(out, "\nbell_x_bell strong subadditivity: lhs - rhs = {v:.12}");
        }
        let status = if self.passed { "PASS" } else { "FAIL" };
        let _ = writeln!(out, "{status}: {} unexpected violation(s)", self.unexpected_violations);
        out
    }
}
