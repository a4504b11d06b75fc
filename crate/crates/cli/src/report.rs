//! JSON shapes emitted by the CLI. Field order is part of the format.

use rainbow_core::graph::{ColoredGraph, DegreeProfile};
use rainbow_core::rainbow::rainbow_counts;
use rainbow_core::verifier::VerificationReport;
use serde::{Deserialize, Serialize};

use crate::driver::SearchResult;
use crate::ecg::write_ecg;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportJson {
    pub theorem: String,
    pub n: usize,
    pub k: Option<usize>,
    pub mode: String,
    pub examined: u64,
    pub hypothesis_count: u64,
    pub counterexample_count: u64,
    /// Stored counterexamples as `.ecg` documents.
    pub counterexamples: Vec<String>,
    pub seed: u64,
    pub workers: usize,
    pub wall_ms: u64,
}

impl From<&VerificationReport> for ReportJson {
    fn from(r: &VerificationReport) -> Self {
        ReportJson {
            theorem: r.theorem.to_string(),
            n: r.n,
            k: r.k,
            mode: r.mode.to_string(),
            examined: r.examined,
            hypothesis_count: r.hypothesis_count,
            counterexample_count: r.counterexample_count,
            counterexamples: r.counterexamples.iter().map(write_ecg).collect(),
            seed: r.seed,
            workers: r.workers,
            wall_ms: r.wall_ms,
        }
    }
}

impl ReportJson {
    /// The same report with run-environment fields cleared, for comparing
    /// runs that differ only in worker count or timing.
    pub fn normalized(&self) -> ReportJson {
        ReportJson {
            workers: 0,
            wall_ms: 0,
            ..self.clone()
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VertexJson {
    pub v: usize,
    pub degree: usize,
    pub color_degree: usize,
    pub mono_degree: usize,
    pub rainbow_triangles: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AnalysisJson {
    pub n: usize,
    pub m: usize,
    pub complete: bool,
    pub colors: usize,
    pub min_color_degree: usize,
    pub max_mono_degree: usize,
    pub per_vertex: Vec<VertexJson>,
    pub rainbow_triangle_total: usize,
}

impl AnalysisJson {
    pub fn of(g: &ColoredGraph) -> Self {
        let profile = DegreeProfile::compute(g);
        let counts = rainbow_counts(g);
        let per_vertex = profile
            .vertices
            .iter()
            .zip(&counts)
            .enumerate()
            .map(|(v, (d, &rainbow_triangles))| VertexJson {
                v,
                degree: d.degree,
                color_degree: d.color_degree,
                mono_degree: d.mono_degree,
                rainbow_triangles,
            })
            .collect();
        AnalysisJson {
            n: g.n(),
            m: g.edge_count(),
            complete: g.is_complete(),
            colors: g.color_count(),
            min_color_degree: profile.min_color_degree,
            max_mono_degree: profile.max_mono_degree,
            per_vertex,
            rainbow_triangle_total: counts.iter().sum::<usize>() / 3,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RestartJson {
    pub restart: u32,
    pub found: bool,
    pub best_objective: u64,
    pub moves: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchJson {
    pub n: usize,
    pub scope: String,
    pub min_color_degree: usize,
    pub forbid: String,
    pub budget: u64,
    pub restarts: u32,
    pub seed: u64,
    pub found: Option<String>,
    pub winning_restart: Option<u32>,
    pub best_objective: u64,
    pub log: Vec<RestartJson>,
    pub workers: usize,
    pub wall_ms: u64,
}

impl From<&SearchResult> for SearchJson {
    fn from(r: &SearchResult) -> Self {
        let cfg = &r.config;
        SearchJson {
            n: cfg.n,
            scope: crate::driver::scope_name(cfg.scope).to_string(),
            min_color_degree: cfg.min_color_degree,
            forbid: crate::driver::forbidden_name(cfg.forbidden).to_string(),
            budget: cfg.budget,
            restarts: cfg.restarts,
            seed: cfg.seed,
            found: r.found.as_ref().map(write_ecg),
            winning_restart: r.winning_restart,
            best_objective: r.best_objective,
            log: r
                .log
                .iter()
                .map(|o| RestartJson {
                    restart: o.restart,
                    found: o.found.is_some(),
                    best_objective: o.best_objective,
                    moves: o.moves,
                })
                .collect(),
            workers: r.workers,
            wall_ms: r.wall_ms,
        }
    }
}
