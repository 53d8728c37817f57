//! Serializable views of library results and their JSON, CSV and text renderings.

use serde::Serialize;
use sigtree_core::search::{ChainLink, SearchReport, StructuralAudit, TreeClass, VerifyMode};
use sigtree_core::{BalanceWitness, ClimbOutcome, ClimbStep, Spectrum};

use crate::io::format_prufer;

#[derive(Debug, Clone, Serialize, PartialEq)]
pub struct SpectrumRecord {
    pub n: usize,
    pub values: Vec<f64>,
    pub lambda1: f64,
    pub lambdan: f64,
    pub radius: f64,
}

impl From<&Spectrum> for SpectrumRecord {
    fn from(s: &Spectrum) -> Self {
        SpectrumRecord {
            n: s.n(),
            values: s.values.clone(),
            lambda1: s.lambda1(),
            lambdan: s.lambda_n(),
            radius: s.radius(),
        }
    }
}

#[derive(Debug, Clone, Serialize, PartialEq)]
pub struct BalanceRecord {
    pub n: usize,
    pub balanced: bool,
    /// Part containing vertex 0, when balanced.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub side: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub negative_triangle: Option<[usize; 3]>,
}

impl BalanceRecord {
    pub fn new(n: usize, w: &BalanceWitness) -> Self {
        match w {
            BalanceWitness::Balanced { side } => BalanceRecord {
                n,
                balanced: true,
                side: Some((0..n).filter(|&v| side[v]).collect()),
                negative_triangle: None,
            },
            BalanceWitness::Unbalanced { triangle } => BalanceRecord {
                n,
                balanced: false,
                side: None,
                negative_triangle: Some(*triangle),
            },
        }
    }
}

#[derive(Debug, Clone, Serialize, PartialEq)]
pub struct ClassRecord {
    pub canonical_code: String,
    pub prufer: String,
    pub leaf_count: usize,
    pub lambda1: f64,
    pub is_argmax: bool,
}

#[derive(Debug, Clone, Serialize, PartialEq)]
pub struct AuditRecord {
    pub applicable: bool,
    pub hub: Option<usize>,
    pub max_degree_is_k: &'static str,
    pub unique_hub: &'static str,
    pub hub_pendant_neighbors: &'static str,
    pub others_degree_at_most_two: &'static str,
    pub passes: bool,
}

impl From<&StructuralAudit> for AuditRecord {
    fn from(a: &StructuralAudit) -> Self {
        AuditRecord {
            applicable: a.applicable,
            hub: a.hub,
            max_degree_is_k: a.max_degree_is_k.as_str(),
            unique_hub: a.unique_hub.as_str(),
            hub_pendant_neighbors: a.hub_pendant_neighbors.as_str(),
            others_degree_at_most_two: a.others_degree_at_most_two.as_str(),
            passes: a.passes(),
        }
    }
}

#[derive(Debug, Clone, Serialize, PartialEq)]
pub struct SearchRecord {
    pub n: usize,
    pub k: usize,
    pub mode: &'static str,
    pub classes: Vec<ClassRecord>,
    pub argmax_code: String,
    pub argmax_lambda1: f64,
    pub tied_codes: Vec<String>,
    pub runner_up_gap: Option<f64>,
    pub broom_code: String,
    pub matches_broom: bool,
    pub argmax_balanced: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub double_star_endpoint: Option<bool>,
    pub audit: AuditRecord,
}

pub fn mode_str(mode: VerifyMode) -> &'static str {
    match mode {
        VerifyMode::Theorem => "theorem",
        VerifyMode::EdgeCase => "edge_case",
    }
}

impl SearchRecord {
    pub fn new(r: &SearchReport, audit: &StructuralAudit) -> Self {
        SearchRecord {
            n: r.n,
            k: r.k,
            mode: mode_str(r.mode),
            classes: r
                .classes
                .iter()
                .map(|c| ClassRecord {
                    canonical_code: c.code.to_string(),
                    prufer: format_prufer(&c.prufer),
                    leaf_count: c.leaf_count,
                    lambda1: c.lambda1,
                    is_argmax: c.code == r.argmax_code,
                })
                .collect(),
            argmax_code: r.argmax_code.to_string(),
            argmax_lambda1: r.argmax_lambda1,
            tied_codes: r.tied_codes.iter().map(ToString::to_string).collect(),
            runner_up_gap: r.runner_up_gap,
            broom_code: r.broom_code.to_string(),
            matches_broom: r.matches_broom,
            argmax_balanced: r.argmax_balanced,
            double_star_endpoint: r.double_star_endpoint,
            audit: audit.into(),
        }
    }
}

/// Flat CSV row of a class inside a search report.
#[derive(Debug, Clone, Serialize)]
struct ClassCsvRow<'a> {
    n: usize,
    k: usize,
    canonical_code: &'a str,
    prufer: &'a str,
    leaf_count: usize,
    lambda1: f64,
    is_argmax: bool,
}

pub fn search_csv(records: &[SearchRecord]) -> csv::Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    for r in records {
        for c in &r.classes {
            w.serialize(ClassCsvRow {
                n: r.n,
                k: r.k,
                canonical_code: &c.canonical_code,
                prufer: &c.prufer,
                leaf_count: c.leaf_count,
                lambda1: c.lambda1,
                is_argmax: c.is_argmax,
            })?;
        }
    }
    finish(w)
}

fn finish(w: csv::Writer<Vec<u8>>) -> csv::Result<String> {
    let bytes = w.into_inner().map_err(|e| e.into_error())?;
    Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
}

pub fn search_text(r: &SearchRecord) -> String {
    let mut out = format!(
        "n={} k={} mode={} classes={}\n",
        r.n,
        r.k,
        r.mode,
        r.classes.len()
    );
    for c in &r.classes {
        out.push_str(&format!(
            "{} {:<24} {:.12}  {}\n",
            if c.is_argmax { '*' } else { ' ' },
            c.prufer,
            c.lambda1,
            c.canonical_code
        ));
    }
    out.push_str(&format!(
        "argmax lambda1={:.12} gap={} matches_broom={} tie={} audit={}\n",
        r.argmax_lambda1,
        r.runner_up_gap.map_or("n/a".to_string(), |g| format!("{g:.3e}")),
        r.matches_broom,
        r.tied_codes.len() > 1,
        if r.audit.applicable {
            if r.audit.passes { "pass" } else { "fail" }
        } else {
            "n/a"
        }
    ));
    if let Some(ds) = r.double_star_endpoint {
        out.push_str(&format!("argmax is T_(1,n-3): {ds}\n"));
    }
    if r.argmax_balanced {
        out.push_str("argmax gives the balanced star\n");
    }
    out
}

/// One row of the sweep summary table.
#[derive(Debug, Clone, Serialize, PartialEq)]
pub struct SweepRow {
    pub n: usize,
    pub k: usize,
    pub mode: &'static str,
    pub classes: usize,
    pub argmax_code: String,
    pub argmax_lambda1: f64,
    pub runner_up_gap: Option<f64>,
    pub matches_broom: bool,
    pub tie: bool,
    pub audit_passes: bool,
}

impl From<&SearchRecord> for SweepRow {
    fn from(r: &SearchRecord) -> Self {
        SweepRow {
            n: r.n,
            k: r.k,
            mode: r.mode,
            classes: r.classes.len(),
            argmax_code: r.argmax_code.clone(),
            argmax_lambda1: r.argmax_lambda1,
            runner_up_gap: r.runner_up_gap,
            matches_broom: r.matches_broom,
            tie: r.tied_codes.len() > 1,
            audit_passes: r.audit.passes,
        }
    }
}

pub fn sweep_csv(rows: &[SweepRow]) -> csv::Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    for r in rows {
        w.serialize(r)?;
    }
    finish(w)
}

pub fn sweep_text(rows: &[SweepRow]) -> String {
    let mut out = format!(
        "{:>3} {:>3} {:<9} {:>7} {:>16} {:>11} {:>6} {:>5}\n",
        "n", "k", "mode", "classes", "lambda1", "gap", "broom", "audit"
    );
    for r in rows {
        out.push_str(&format!(
            "{:>3} {:>3} {:<9} {:>7} {:>16.12} {:>11} {:>6} {:>5}\n",
            r.n,
            r.k,
            r.mode,
            r.classes,
            r.argmax_lambda1,
            r.runner_up_gap.map_or("-".to_string(), |g| format!("{g:.4e}")),
            r.matches_broom,
            r.audit_passes
        ));
    }
    out
}

#[derive(Debug, Clone, Serialize, PartialEq)]
pub struct ChainRecord {
    pub s: usize,
    pub t: usize,
    pub lambda1: f64,
}

impl From<&ChainLink> for ChainRecord {
    fn from(l: &ChainLink) -> Self {
        ChainRecord {
            s: l.s,
            t: l.t,
            lambda1: l.lambda1,
        }
    }
}

pub fn chain_csv(rows: &[ChainRecord]) -> csv::Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    for r in rows {
        w.serialize(r)?;
    }
    finish(w)
}

/// One accepted climb move, serialized as a JSON line.
#[derive(Debug, Clone, Serialize, PartialEq)]
pub struct TraceLine {
    pub step: usize,
    pub kind: &'static str,
    pub vertices: Vec<usize>,
    pub lambda1: f64,
}

impl From<&ClimbStep> for TraceLine {
    fn from(s: &ClimbStep) -> Self {
        TraceLine {
            step: s.step,
            kind: s.mv.kind().as_str(),
            vertices: s.mv.vertices(),
            lambda1: s.lambda1,
        }
    }
}

pub fn trace_json_lines(outcome: &ClimbOutcome) -> serde_json::Result<String> {
    let mut out = String::new();
    for step in &outcome.trace {
        out.push_str(&serde_json::to_string(&TraceLine::from(step))?);
        out.push('\n');
    }
    Ok(out)
}

#[derive(Debug, Clone, Serialize)]
struct TraceCsvRow {
    step: usize,
    kind: &'static str,
    vertices: String,
    lambda1: f64,
}

pub fn trace_csv(outcome: &ClimbOutcome) -> csv::Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    for step in &outcome.trace {
        let line = TraceLine::from(step);
        w.serialize(TraceCsvRow {
            step: line.step,
            kind: line.kind,
            vertices: line
                .vertices
                .iter()
                .map(usize::to_string)
                .collect::<Vec<_>>()
                .join(" "),
            lambda1: line.lambda1,
        })?;
    }
    finish(w)
}

#[derive(Debug, Clone, Serialize, PartialEq)]
pub struct EnumerateRecord {
    pub canonical_code: String,
    pub prufer: String,
    pub leaf_count: usize,
}

impl From<&TreeClass> for EnumerateRecord {
    fn from(c: &TreeClass) -> Self {
        EnumerateRecord {
            canonical_code: c.code.to_string(),
            prufer: format_prufer(&c.prufer),
            leaf_count: c.leaf_count,
        }
    }
}

pub fn enumerate_csv(rows: &[EnumerateRecord]) -> csv::Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    for r in rows {
        w.serialize(r)?;
    }
    finish(w)
}

#[cfg(test)]
mod tests {
    use super::*;
    use sigtree_core::{spectrum, SignedCompleteGraph, Tree};

    #[test]
    fn spectrum_json_shape() {
        let g = SignedCompleteGraph::from_tree(&Tree::star(4).unwrap());
        let rec = SpectrumRecord::from(&spectrum(&g).unwrap());
        let v: serde_json::Value = serde_json::to_value(&rec).unwrap();
        let keys: Vec<_> = v.as_object().unwrap().keys().cloned().collect();
        assert_eq!(keys, ["lambda1", "lambdan", "n", "radius", "values"]);
        assert_eq!(v["n"], 4);
        assert_eq!(v["values"].as_array().unwrap().len(), 4);
    }

    #[test]
    fn full_precision_floats() {
        let rec = ChainRecord {
            s: 1,
            t: 3,
            lambda1: 4.064_177_772_475_912,
        };
        let text = serde_json::to_string(&rec).unwrap();
        let back: serde_json::Value = serde_json::from_str(&text).unwrap();
        assert_eq!(back["lambda1"].as_f64().unwrap(), rec.lambda1);
    }
}
