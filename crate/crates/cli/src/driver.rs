//! Thread-parallel drivers over the core kernels.
//!
//! Workers claim unit indices from a shared counter and hand back
//! `(index, result)` pairs; results are merged in index order, so every
//! report is independent of the worker count.

use std::sync::atomic::{AtomicU32, AtomicUsize, Ordering};
use std::sync::Mutex;
use std::thread;
use std::time::Instant;

use rainbow_core::graph::ColoredGraph;
use rainbow_core::verifier::{
    search_restart, ExhaustiveCheck, Forbidden, Mode, PartialReport, RandomCheck, RestartOutcome,
    Scope, SearchConfig, TheoremId, VerificationReport, VerifyError, DEFAULT_EXHAUSTIVE_MAX,
    MAX_ENUM_ORDER,
};

/// Samples per unit of work in random mode.
pub const SAMPLE_CHUNK: u64 = 256;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifyOptions {
    pub theorem: TheoremId,
    pub n: usize,
    pub k: usize,
    pub mode: Mode,
    pub samples: u64,
    pub seed: u64,
    pub workers: usize,
    /// Lifts the exhaustive order limit from 6 to 7.
    pub allow_n7: bool,
}

impl VerifyOptions {
    pub fn new(theorem: TheoremId, n: usize, mode: Mode) -> Self {
        VerifyOptions {
            theorem,
            n,
            k: 1,
            mode,
            samples: 10_000,
            seed: 0,
            workers: 1,
            allow_n7: false,
        }
    }
}

pub fn default_workers() -> usize {
    thread::available_parallelism().map_or(1, |n| n.get())
}

/// Runs `units` jobs on `workers` threads and returns the results in unit
/// order. `job` must be deterministic per index.
fn run_units<T, F>(units: usize, workers: usize, job: F) -> Vec<T>
where
    T: Send,
    F: Fn(usize) -> T + Sync,
{
    let next = AtomicUsize::new(0);
    let done = Mutex::new(Vec::with_capacity(units));
    thread::scope(|s| {
        for _ in 0..workers.clamp(1, units.max(1)) {
            s.spawn(|| {
                let mut local = Vec::new();
                loop {
                    let i = next.fetch_add(1, Ordering::Relaxed);
                    if i >= units {
                        break;
                    }
                    local.push((i, job(i)));
                }
                done.lock().unwrap().extend(local);
            });
        }
    });
    let mut done = done.into_inner().unwrap();
    done.sort_unstable_by_key(|&(i, _)| i);
    done.into_iter().map(|(_, r)| r).collect()
}

pub fn verify_theorem(opts: &VerifyOptions) -> Result<VerificationReport, VerifyError> {
    let start = Instant::now();
    let workers = opts.workers.max(1);
    let partial = match opts.mode {
        Mode::Exhaustive => {
            let max = if opts.allow_n7 {
                MAX_ENUM_ORDER
            } else {
                DEFAULT_EXHAUSTIVE_MAX
            };
            let check = ExhaustiveCheck::new(opts.theorem, opts.n, opts.k, max)?;
            let enumerator = check.enumerator();
            let (shards, pre) = enumerator.shards(check.shard_depth());
            let mut total = PartialReport {
                examined: pre.examined(),
                ..Default::default()
            };
            for p in run_units(shards.len(), workers, |i| check.run_shard(&enumerator, &shards[i])) {
                total.merge(p);
            }
            total
        }
        Mode::Random => {
            let check = RandomCheck::new(opts.theorem, opts.n, opts.k, opts.seed)?;
            let chunks = opts.samples.div_ceil(SAMPLE_CHUNK) as usize;
            let mut total = PartialReport::default();
            let parts = run_units(chunks, workers, |i| {
                let lo = i as u64 * SAMPLE_CHUNK;
                check.run_range(lo..(lo + SAMPLE_CHUNK).min(opts.samples))
            });
            for p in parts {
                total.merge(p);
            }
            total
        }
    };
    let mut report =
        VerificationReport::from_partial(opts.theorem, opts.n, opts.k, opts.mode, opts.seed, workers, partial);
    report.wall_ms = start.elapsed().as_millis() as u64;
    Ok(report)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchResult {
    pub config: SearchConfig,
    pub found: Option<ColoredGraph>,
    pub winning_restart: Option<u32>,
    /// Lowest objective over the logged restarts.
    pub best_objective: u64,
    /// Restarts `0..=winner` on success, all restarts otherwise.
    pub log: Vec<RestartOutcome>,
    pub workers: usize,
    pub wall_ms: u64,
}

/// Runs annealing restarts in parallel. The lowest-indexed successful
/// restart wins; a success only cancels restarts with higher indices, so
/// the result equals the sequential one.
pub fn search_counterexample(cfg: &SearchConfig, workers: usize) -> Result<SearchResult, VerifyError> {
    cfg.validate()?;
    let start = Instant::now();
    let winner = AtomicU32::new(u32::MAX);
    let outcomes = run_units(cfg.restarts as usize, workers, |i| {
        let r = i as u32;
        if winner.load(Ordering::Relaxed) < r {
            return None;
        }
        let stop = || winner.load(Ordering::Relaxed) < r;
        let out = search_restart(cfg, r, &stop).expect("configuration validated");
        if out.found.is_some() {
            winner.fetch_min(r, Ordering::Relaxed);
        }
        Some(out)
    });

    let mut log = Vec::new();
    let mut found = None;
    for out in outcomes.into_iter().flatten() {
        let success = out.found.is_some();
        log.push(out);
        if success {
            break;
        }
    }
    if let Some(last) = log.last_mut() {
        found = last.found.clone();
    }
    let winning_restart = found.as_ref().map(|_| log.last().unwrap().restart);
    Ok(SearchResult {
        config: cfg.clone(),
        best_objective: log.iter().map(|o| o.best_objective).min().unwrap_or(u64::MAX),
        found,
        winning_restart,
        log,
        workers: workers.max(1),
        wall_ms: start.elapsed().as_millis() as u64,
    })
}

pub fn scope_name(scope: Scope) -> &'static str {
    match scope {
        Scope::Complete => "complete",
        Scope::General => "general",
    }
}

pub fn forbidden_name(f: Forbidden) -> &'static str {
    match f {
        Forbidden::RainbowTriangle => "rainbow-triangle",
        Forbidden::TwoDisjointRainbow => "two-disjoint-rainbow",
    }
}
