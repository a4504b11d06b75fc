//! Command-line surface. Exit codes: 0 success, 1 counterexample found by
//! `verify` or nothing found by `search`, 2 usage, input or file errors.

use std::ffi::OsString;
use std::fmt::Display;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use rainbow_core::constructions::{
    gen_construction2, gen_extremal_thm10, gen_pc_bipartite, gen_rainbow_complete, gen_random,
    recognize_thm10, Completeness,
};
use rainbow_core::graph::ColoredGraph;
use rainbow_core::rainbow::{
    edge_disjoint_at_vertex, enumerate_triangles, max_disjoint_packing, rainbow_triangles_at,
    Packing, PackingMode, Triangle,
};
use rainbow_core::verifier::{
    Forbidden, Mode, Scope, SearchConfig, TheoremId, DEFAULT_BUDGET, DEFAULT_RESTARTS,
};
use serde::Serialize;
use serde_json::json;

use crate::driver::{default_workers, search_counterexample, verify_theorem, VerifyOptions};
use crate::ecg::{parse_ecg, write_ecg};
use crate::report::{AnalysisJson, ReportJson, SearchJson};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FOUND: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "rainbow", version, about = "Rainbow triangles in edge-colored graphs")]
pub struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Write a generated graph as `.ecg`.
    Gen {
        #[command(subcommand)]
        kind: GenKind,
        /// Output file (stdout if absent).
        #[arg(short, long, global = true)]
        output: Option<PathBuf>,
    },
    /// Degree profile and rainbow-triangle counts.
    Analyze { file: PathBuf },
    /// List triangles.
    Triangles {
        file: PathBuf,
        #[arg(long)]
        rainbow_only: bool,
        /// Only rainbow triangles through this vertex.
        #[arg(long)]
        at: Option<usize>,
    },
    /// Vertex-disjoint rainbow-triangle packing, or edge-disjoint at a vertex.
    Pack {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = PackArg::Exact)]
        mode: PackArg,
        /// Edge-disjoint rainbow triangles sharing this vertex instead.
        #[arg(long)]
        at: Option<usize>,
    },
    /// Recognize an extremal structure.
    Recognize {
        #[arg(value_enum)]
        structure: Structure,
        file: PathBuf,
    },
    /// Check a theorem exhaustively or by sampling.
    Verify(VerifyArgs),
    /// Anneal for a graph meeting a color-degree bound that avoids a
    /// rainbow configuration.
    Search(SearchArgs),
}

#[derive(Debug, Subcommand)]
enum GenKind {
    Construction2 {
        #[arg(long)]
        p: usize,
    },
    Extremal10 {
        #[arg(long)]
        n: usize,
    },
    Bipartite {
        #[arg(long)]
        n: usize,
    },
    Rainbow {
        #[arg(long)]
        n: usize,
    },
    Random {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        colors: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Keep each pair with this probability instead of all pairs.
        #[arg(long)]
        edge_prob: Option<f64>,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum PackArg {
    Exact,
    Greedy,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Structure {
    Thm10,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum ModeArg {
    Exhaustive,
    Random,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum ForbidArg {
    RainbowTriangle,
    TwoDisjointRainbow,
}

#[derive(Debug, Args)]
struct VerifyArgs {
    #[arg(long, value_parser = parse_theorem)]
    theorem: TheoremId,
    #[arg(long)]
    n: usize,
    #[arg(long, default_value_t = 1)]
    k: usize,
    #[arg(long, value_enum)]
    mode: ModeArg,
    #[arg(long, default_value_t = 10_000)]
    samples: u64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long)]
    workers: Option<usize>,
    /// Permit exhaustive runs on 7 vertices.
    #[arg(long)]
    allow_n7: bool,
    /// Where counterexample files go.
    #[arg(long, default_value = ".")]
    cex_dir: PathBuf,
}

#[derive(Debug, Args)]
struct SearchArgs {
    #[arg(long)]
    n: usize,
    /// Allow missing edges.
    #[arg(long)]
    general: bool,
    #[arg(long)]
    min_color_degree: usize,
    #[arg(long, value_enum)]
    forbid: ForbidArg,
    /// Total moves over all restarts.
    #[arg(long, default_value_t = DEFAULT_BUDGET)]
    budget: u64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = DEFAULT_RESTARTS)]
    restarts: u32,
    #[arg(long)]
    workers: Option<usize>,
    /// Colors available per edge (default n(n-1)/2).
    #[arg(long)]
    palette: Option<usize>,
    #[arg(short, long)]
    output: Option<PathBuf>,
}

fn parse_theorem(s: &str) -> Result<TheoremId, String> {
    s.parse().map_err(|_| {
        let ids: Vec<String> = rainbow_core::verifier::ALL_THEOREMS.iter().map(|t| t.to_string()).collect();
        format!("unknown theorem `{s}` (expected one of {})", ids.join(", "))
    })
}

struct Failure(String);

impl<E: Display> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure(e.to_string())
    }
}

type Outcome = Result<i32, Failure>;

/// Parses `argv` (including the program name) and runs the command.
pub fn cli_main<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                err.write_all(text.as_bytes())
            } else {
                out.write_all(text.as_bytes())
            };
            return code;
        }
    };
    match run(&cli, out, err) {
        Ok(code) => code,
        Err(Failure(msg)) => {
            let _ = writeln!(err, "error: {msg}\n\nFor more information, try '--help'.");
            EXIT_USAGE
        }
    }
}

fn run(cli: &Cli, out: &mut dyn Write, err: &mut dyn Write) -> Outcome {
    let json = cli.json;
    match &cli.command {
        Command::Gen { kind, output } => gen(kind, output.as_deref(), out),
        Command::Analyze { file } => analyze(&load(file)?, json, out),
        Command::Triangles {
            file,
            rainbow_only,
            at,
        } => triangles(&load(file)?, *rainbow_only, *at, json, out),
        Command::Pack { file, mode, at } => pack(&load(file)?, *mode, *at, json, out),
        Command::Recognize { structure, file } => recognize(*structure, &load(file)?, json, out),
        Command::Verify(args) => verify(args, json, out, err),
        Command::Search(args) => search(args, json, out),
    }
}

fn load(path: &Path) -> Result<ColoredGraph, Failure> {
    let text = std::fs::read_to_string(path).map_err(|e| Failure(format!("{}: {e}", path.display())))?;
    parse_ecg(&text)
        .map(|d| d.graph)
        .map_err(|e| Failure(format!("{}: {e}", path.display())))
}

fn save(path: &Path, text: &str) -> Result<(), Failure> {
    std::fs::write(path, text).map_err(|e| Failure(format!("{}: {e}", path.display())))
}

fn emit_json<T: Serialize>(value: &T, out: &mut dyn Write) -> Result<(), Failure> {
    serde_json::to_writer_pretty(&mut *out, value)?;
    writeln!(out)?;
    Ok(())
}

fn gen(kind: &GenKind, output: Option<&Path>, out: &mut dyn Write) -> Outcome {
    let g = match *kind {
        GenKind::Construction2 { p } => gen_construction2(p)?,
        GenKind::Extremal10 { n } => gen_extremal_thm10(n)?,
        GenKind::Bipartite { n } => gen_pc_bipartite(n)?,
        GenKind::Rainbow { n } => gen_rainbow_complete(n)?,
        GenKind::Random {
            n,
            colors,
            seed,
            edge_prob,
        } => {
            let completeness = match edge_prob {
                None => Completeness::Complete,
                Some(p) if (0.0..=1.0).contains(&p) => Completeness::EdgeProbability(p),
                Some(p) => return Err(Failure(format!("edge probability {p} is outside [0, 1]"))),
            };
            gen_random(n, colors, seed, completeness)?
        }
    };
    let text = write_ecg(&g);
    match output {
        Some(path) => save(path, &text)?,
        None => out.write_all(text.as_bytes())?,
    }
    Ok(EXIT_OK)
}

fn analyze(g: &ColoredGraph, json: bool, out: &mut dyn Write) -> Outcome {
    let a = AnalysisJson::of(g);
    if json {
        emit_json(&a, out)?;
        return Ok(EXIT_OK);
    }
    writeln!(
        out,
        "n {}  m {}  complete {}  colors {}",
        a.n, a.m, a.complete, a.colors
    )?;
    writeln!(
        out,
        "min color-degree {}  max monochromatic degree {}  rainbow triangles {}",
        a.min_color_degree, a.max_mono_degree, a.rainbow_triangle_total
    )?;
    writeln!(out, "v\tdeg\tcolor\tmono\trainbow")?;
    for v in &a.per_vertex {
        writeln!(
            out,
            "{}\t{}\t{}\t{}\t{}",
            v.v, v.degree, v.color_degree, v.mono_degree, v.rainbow_triangles
        )?;
    }
    Ok(EXIT_OK)
}

fn check_vertex(g: &ColoredGraph, v: usize) -> Result<(), Failure> {
    if v >= g.n() {
        return Err(Failure(format!("vertex {v} out of range for n = {}", g.n())));
    }
    Ok(())
}

fn triangle_json(t: &Triangle) -> serde_json::Value {
    json!({ "vertices": t.vertices, "colors": t.colors, "rainbow": t.rainbow })
}

fn write_triangle(t: &Triangle, out: &mut dyn Write) -> std::io::Result<()> {
    let [a, b, c] = t.vertices;
    let [x, y, z] = t.colors;
    writeln!(
        out,
        "{a} {b} {c}\tcolors {x} {y} {z}{}",
        if t.rainbow { "\trainbow" } else { "" }
    )
}

fn triangles(g: &ColoredGraph, rainbow_only: bool, at: Option<usize>, json: bool, out: &mut dyn Write) -> Outcome {
    let list = match at {
        Some(v) => {
            check_vertex(g, v)?;
            rainbow_triangles_at(g, v)
        }
        None => enumerate_triangles(g, rainbow_only),
    };
    if json {
        let items: Vec<_> = list.iter().map(triangle_json).collect();
        emit_json(&json!({ "count": list.len(), "triangles": items }), out)?;
    } else {
        for t in &list {
            write_triangle(t, out)?;
        }
        writeln!(out, "{} triangles", list.len())?;
    }
    Ok(EXIT_OK)
}

fn pack(g: &ColoredGraph, mode: PackArg, at: Option<usize>, json: bool, out: &mut dyn Write) -> Outcome {
    let (p, label): (Packing, String) = match at {
        Some(v) => {
            check_vertex(g, v)?;
            (edge_disjoint_at_vertex(g, v), format!("edge-disjoint at {v}"))
        }
        None => {
            let m = match mode {
                PackArg::Exact => PackingMode::Exact,
                PackArg::Greedy => PackingMode::Greedy,
            };
            (max_disjoint_packing(g, m)?, "vertex-disjoint".to_string())
        }
    };
    if json {
        let items: Vec<_> = p.triangles.iter().map(triangle_json).collect();
        emit_json(&json!({ "kind": label, "size": p.len(), "triangles": items }), out)?;
    } else {
        writeln!(out, "{label} packing of size {}", p.len())?;
        for t in &p.triangles {
            write_triangle(t, out)?;
        }
    }
    Ok(EXIT_OK)
}

fn recognize(structure: Structure, g: &ColoredGraph, json: bool, out: &mut dyn Write) -> Outcome {
    let Structure::Thm10 = structure;
    let cert = recognize_thm10(g)?;
    if json {
        let value = match &cert {
            Some(c) => json!({ "recognized": true, "hub": c.hub, "pairs": c.pairs, "part_colors": c.part_colors }),
            None => json!({ "recognized": false }),
        };
        emit_json(&value, out)?;
    } else {
        match &cert {
            Some(c) => {
                writeln!(out, "recognized: hub {}", c.hub)?;
                for (pair, color) in c.pairs.iter().zip(&c.part_colors) {
                    writeln!(out, "part {} {}\tcolor {color}", pair[0], pair[1])?;
                }
            }
            None => writeln!(out, "not recognized")?,
        }
    }
    Ok(EXIT_OK)
}

fn verify(args: &VerifyArgs, json: bool, out: &mut dyn Write, err: &mut dyn Write) -> Outcome {
    let opts = VerifyOptions {
        theorem: args.theorem,
        n: args.n,
        k: args.k,
        mode: match args.mode {
            ModeArg::Exhaustive => Mode::Exhaustive,
            ModeArg::Random => Mode::Random,
        },
        samples: args.samples,
        seed: args.seed,
        workers: args.workers.unwrap_or_else(default_workers).max(1),
        allow_n7: args.allow_n7,
    };
    let report = verify_theorem(&opts)?;
    let mut paths = Vec::new();
    if !report.counterexamples.is_empty() {
        std::fs::create_dir_all(&args.cex_dir).map_err(|e| Failure(format!("{}: {e}", args.cex_dir.display())))?;
        for (i, g) in report.counterexamples.iter().enumerate() {
            let path = args.cex_dir.join(format!("cex-{}-n{}-{i}.ecg", report.theorem, report.n));
            save(&path, &write_ecg(g))?;
            paths.push(path);
        }
    }
    if json {
        emit_json(&ReportJson::from(&report), out)?;
    } else {
        writeln!(
            out,
            "{} n={} {}: examined {}, counterexamples {} (hypothesis satisfied {})",
            report.theorem, report.n, report.mode, report.examined, report.counterexample_count, report.hypothesis_count
        )?;
        writeln!(out, "workers {}  wall {} ms", report.workers, report.wall_ms)?;
    }
    if paths.is_empty() {
        return Ok(EXIT_OK);
    }
    for p in &paths {
        writeln!(err, "counterexample written to {}", p.display())?;
    }
    Ok(EXIT_FOUND)
}

fn search(args: &SearchArgs, json: bool, out: &mut dyn Write) -> Outcome {
    let scope = if args.general {
        Scope::General
    } else {
        Scope::Complete
    };
    let forbidden = match args.forbid {
        ForbidArg::RainbowTriangle => Forbidden::RainbowTriangle,
        ForbidArg::TwoDisjointRainbow => Forbidden::TwoDisjointRainbow,
    };
    let mut cfg = SearchConfig::new(args.n, scope, args.min_color_degree, forbidden);
    cfg.budget = args.budget;
    cfg.restarts = args.restarts;
    cfg.seed = args.seed;
    if let Some(p) = args.palette {
        cfg.palette = p;
    }
    let workers = args.workers.unwrap_or_else(default_workers).max(1);
    let result = search_counterexample(&cfg, workers)?;
    if let (Some(g), Some(path)) = (&result.found, &args.output) {
        save(path, &write_ecg(g))?;
    }
    if json {
        emit_json(&SearchJson::from(&result), out)?;
    } else {
        match (&result.found, result.winning_restart) {
            (Some(g), Some(r)) => {
                writeln!(out, "found at restart {r}")?;
                if args.output.is_none() {
                    out.write_all(write_ecg(g).as_bytes())?;
                }
            }
            _ => writeln!(
                out,
                "not found after {} moves over {} restarts (best objective {})",
                cfg.budget, cfg.restarts, result.best_objective
            )?,
        }
    }
    Ok(if result.found.is_some() { EXIT_OK } else { EXIT_FOUND })
}
