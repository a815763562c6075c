//! Versioned JSON schemas for everything the command-line tool emits, and
//! the machine verifier that replays certificates against a graph.
//!
//! Unknown fields are rejected on read so schema drift fails loudly
//! instead of silently verifying the wrong thing.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::extraction::{
    CertificateError, CertificateParity, CycleFamilyCertificate, StageRecord,
};
use crate::graph::{CycleWitness, Graph};
use crate::spectrum::{
    longest_run, odd_length_count, reciprocal_sum, CycleSpectrum, RunParity,
};

pub const SCHEMA_VERSION: u32 = 1;

pub fn tool_version() -> &'static str {
    env!("CARGO_PKG_VERSION")
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
#[serde(deny_unknown_fields)]
pub struct BudgetInfo {
    pub spectrum_nodes: u64,
    pub rotation_budget: Option<u64>,
    pub chromatic_nodes: u64,
}

impl Default for BudgetInfo {
    fn default() -> Self {
        BudgetInfo {
            spectrum_nodes: crate::spectrum::DEFAULT_NODE_BUDGET,
            rotation_budget: None,
            chromatic_nodes: crate::chromatic::DEFAULT_CHROMATIC_BUDGET,
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct StageFile {
    pub stage: String,
    pub detail: String,
}

/// On-disk form of a cycle-family certificate.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CertificateFile {
    pub schema: u32,
    pub tool_version: String,
    pub seed: u64,
    pub budgets: BudgetInfo,
    pub parity: String,
    pub run_start: usize,
    pub run_count: usize,
    pub shortest_cycle: usize,
    pub radius_bound: Option<usize>,
    pub target_run_length: Option<u128>,
    pub cycles: Vec<Vec<usize>>,
    pub stages: Vec<StageFile>,
}

impl CertificateFile {
    pub fn from_certificate(
        cert: &CycleFamilyCertificate,
        seed: u64,
        budgets: BudgetInfo,
    ) -> Self {
        CertificateFile {
            schema: SCHEMA_VERSION,
            tool_version: tool_version().to_string(),
            seed,
            budgets,
            parity: cert.parity.as_str().to_string(),
            run_start: cert.run_start,
            run_count: cert.run_count,
            shortest_cycle: cert.shortest_cycle,
            radius_bound: cert.radius_bound,
            target_run_length: cert.target_run_length,
            cycles: cert.cycles.iter().map(|c| c.vertices.clone()).collect(),
            stages: cert
                .stages
                .iter()
                .map(|s| StageFile {
                    stage: s.stage.clone(),
                    detail: s.detail.clone(),
                })
                .collect(),
        }
    }
}

#[derive(Debug, Error)]
pub enum VerifyError {
    #[error("unsupported schema version {0}")]
    Schema(u32),
    #[error("unknown parity `{0}`")]
    UnknownParity(String),
    #[error("certificate does not replay: {0}")]
    Certificate(#[from] CertificateError),
    #[error("malformed certificate file: {0}")]
    Malformed(String),
}

/// Replays a certificate file against a graph: every cycle must validate
/// and the run metadata must match the cycle list exactly.
pub fn verify_certificate(g: &Graph, file: &CertificateFile) -> Result<(), VerifyError> {
    if file.schema != SCHEMA_VERSION {
        return Err(VerifyError::Schema(file.schema));
    }
    let parity = match file.parity.as_str() {
        "even" => CertificateParity::Even,
        "any" => CertificateParity::Any,
        other => return Err(VerifyError::UnknownParity(other.to_string())),
    };
    let cert = CycleFamilyCertificate {
        cycles: file
            .cycles
            .iter()
            .map(|c| CycleWitness::new(c.clone()))
            .collect(),
        parity,
        run_start: file.run_start,
        run_count: file.run_count,
        shortest_cycle: file.shortest_cycle,
        radius_bound: file.radius_bound,
        target_run_length: file.target_run_length,
        stages: file
            .stages
            .iter()
            .map(|s| StageRecord {
                stage: s.stage.clone(),
                detail: s.detail.clone(),
            })
            .collect(),
    };
    cert.validate(g)?;
    Ok(())
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct RunFile {
    pub start: usize,
    pub count: usize,
}

/// On-disk form of a spectrum report.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SpectrumReportFile {
    pub schema: u32,
    pub tool_version: String,
    pub seed: u64,
    pub budgets: BudgetInfo,
    pub order: usize,
    pub edges: usize,
    pub lengths: Vec<usize>,
    pub exhaustive: bool,
    pub exhaustive_up_to: usize,
    pub girth: Option<usize>,
    pub reciprocal_sum: f64,
    pub odd_length_count: usize,
    pub even_run: RunFile,
    pub odd_run: RunFile,
    pub any_run: RunFile,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub witnesses: Option<BTreeMap<usize, Vec<usize>>>,
}

pub fn spectrum_report(
    g: &Graph,
    spec: &CycleSpectrum,
    seed: u64,
    budgets: BudgetInfo,
    with_witnesses: bool,
) -> SpectrumReportFile {
    let run = |parity| {
        let (start, count) = longest_run(spec, parity);
        RunFile { start, count }
    };
    SpectrumReportFile {
        schema: SCHEMA_VERSION,
        tool_version: tool_version().to_string(),
        seed,
        budgets,
        order: g.vertex_count(),
        edges: g.edge_count(),
        lengths: spec.lengths().iter().copied().collect(),
        exhaustive: spec.is_exhaustive(),
        exhaustive_up_to: spec.exhaustive_up_to(),
        girth: if spec.is_exhaustive() || spec.min_length().is_some() {
            spec.min_length()
        } else {
            None
        },
        reciprocal_sum: reciprocal_sum(spec),
        odd_length_count: odd_length_count(spec),
        even_run: run(RunParity::Even),
        odd_run: run(RunParity::Odd),
        any_run: run(RunParity::Any),
        witnesses: with_witnesses.then(|| {
            spec.witnesses()
                .iter()
                .map(|(&len, w)| (len, w.vertices.clone()))
                .collect()
        }),
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CandidateFile {
    pub edge_list: String,
    pub spectrum: Vec<usize>,
}

/// On-disk form of a conjecture-scan report.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ScanReportFile {
    pub schema: u32,
    pub tool_version: String,
    pub seed: Option<u64>,
    pub target: String,
    pub parameters: String,
    pub instances_checked: u64,
    pub filtered_out: u64,
    pub parse_errors: u64,
    pub unknown_instances: Vec<u64>,
    pub candidates: Vec<CandidateFile>,
}

pub fn scan_report(report: &crate::conjectures::ScanReport) -> ScanReportFile {
    ScanReportFile {
        schema: SCHEMA_VERSION,
        tool_version: tool_version().to_string(),
        seed: report.seed,
        target: report.target.as_str().to_string(),
        parameters: report.parameters.clone(),
        instances_checked: report.instances_checked,
        filtered_out: report.filtered_out,
        parse_errors: report.parse_errors,
        unknown_instances: report.unknown_instances.clone(),
        candidates: report
            .candidates
            .iter()
            .map(|c| CandidateFile {
                edge_list: c.graph.to_edge_list(),
                spectrum: c.spectrum.clone(),
            })
            .collect(),
    }
}
