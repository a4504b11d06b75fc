//! Theorem checks: exhaustive sweeps over canonical colorings,
//! hypothesis-conditioned random sampling and counterexample search.
//!
//! Everything here is single-threaded and deterministic. Work is cut into
//! independent units (RGS prefixes, sample indices, restart indices) so a
//! driver can fan them out and merge the partial results in unit order.

mod enumerate;
mod search;
mod theorems;

pub use enumerate::{
    bell, completions, enumerate_canonical_colorings, ColoringState, EnumStats, Enumerator, Shard,
    MAX_ENUM_ORDER,
};
pub use search::{
    search_restart, verify_found, Forbidden, RestartOutcome, SearchConfig, DEFAULT_BUDGET,
    DEFAULT_RESTARTS,
};
pub use theorems::{
    check_conclusion, check_hypothesis, Conclusion, Scope, TheoremId, Witness, ALL_THEOREMS,
};

use alloc::vec::Vec;
use core::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::constructions::{gen_biased_high_color_degree, Completeness};
use crate::graph::ColoredGraph;
use crate::rainbow::EngineError;

/// Largest order for exhaustive runs unless explicitly overridden.
pub const DEFAULT_EXHAUSTIVE_MAX: usize = 6;

/// Counterexamples kept per report; the total is always counted.
pub const STORED_COUNTEREXAMPLES: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum VerifyError {
    #[error("unknown theorem id")]
    UnknownTheorem,
    #[error("{0} is stated for complete graphs only")]
    ScopeMismatch(TheoremId),
    #[error("exhaustive enumeration of K_{n} is out of reach (limit {max}; {colorings} colorings)")]
    OrderTooLarge { n: usize, max: usize, colorings: u128 },
    #[error("exhaustive mode covers complete graphs only; {0} ranges over general graphs")]
    ExhaustiveNeedsComplete(TheoremId),
    #[error("hypothesis of {0} cannot hold on {1} vertices")]
    VacuousHypothesis(TheoremId, usize),
    #[error("invalid search configuration: {0}")]
    InvalidSearch(&'static str),
    #[error(transparent)]
    Engine(#[from] EngineError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    Exhaustive,
    Random,
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Mode::Exhaustive => "exhaustive",
            Mode::Random => "random",
        })
    }
}

/// Counts and counterexamples from part of a run, merged in unit order.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct PartialReport {
    pub examined: u64,
    pub hypothesis_count: u64,
    pub counterexample_count: u64,
    pub counterexamples: Vec<ColoredGraph>,
}

impl PartialReport {
    pub fn merge(&mut self, other: PartialReport) {
        self.examined += other.examined;
        self.hypothesis_count += other.hypothesis_count;
        self.counterexample_count += other.counterexample_count;
        let room = STORED_COUNTEREXAMPLES.saturating_sub(self.counterexamples.len());
        self.counterexamples.extend(other.counterexamples.into_iter().take(room));
    }

    fn record(&mut self, g: ColoredGraph) {
        self.counterexample_count += 1;
        if self.counterexamples.len() < STORED_COUNTEREXAMPLES {
            self.counterexamples.push(g);
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationReport {
    pub theorem: TheoremId,
    pub n: usize,
    pub k: Option<usize>,
    pub mode: Mode,
    pub examined: u64,
    pub hypothesis_count: u64,
    pub counterexample_count: u64,
    pub counterexamples: Vec<ColoredGraph>,
    pub seed: u64,
    pub workers: usize,
    pub wall_ms: u64,
}

impl VerificationReport {
    pub fn from_partial(
        theorem: TheoremId,
        n: usize,
        k: usize,
        mode: Mode,
        seed: u64,
        workers: usize,
        partial: PartialReport,
    ) -> Self {
        VerificationReport {
            theorem,
            n,
            k: theorem.uses_k().then_some(k),
            mode,
            examined: partial.examined,
            hypothesis_count: partial.hypothesis_count,
            counterexample_count: partial.counterexample_count,
            counterexamples: partial.counterexamples,
            seed,
            workers,
            wall_ms: 0,
        }
    }

    pub fn verified(&self) -> bool {
        self.counterexample_count == 0
    }
}

/// Per-leaf theorem check for exhaustive runs over `K_n`.
///
/// Statements whose hypothesis is a color-degree threshold and whose
/// conclusion only needs rainbow-triangle counts are decided from the
/// enumerator's incremental state. Everything else, and every suspected
/// counterexample, goes through [`check_hypothesis`] and
/// [`check_conclusion`] on a materialized graph.
#[derive(Debug, Clone, Copy)]
pub struct ExhaustiveCheck {
    theorem: TheoremId,
    n: usize,
    k: usize,
    bound: Option<usize>,
}

impl ExhaustiveCheck {
    pub fn new(theorem: TheoremId, n: usize, k: usize, max_order: usize) -> Result<Self, VerifyError> {
        if theorem.scope() == Scope::General && !matches!(theorem, TheoremId::T15 | TheoremId::T16) {
            return Err(VerifyError::ExhaustiveNeedsComplete(theorem));
        }
        if n > max_order.min(MAX_ENUM_ORDER) {
            return Err(VerifyError::OrderTooLarge {
                n,
                max: max_order.min(MAX_ENUM_ORDER),
                colorings: bell(n * n.saturating_sub(1) / 2),
            });
        }
        Ok(ExhaustiveCheck {
            theorem,
            n,
            k,
            bound: theorem.min_color_degree_required(n, k),
        })
    }

    pub fn enumerator(&self) -> Enumerator {
        Enumerator::new(self.n, self.bound).expect("order checked on construction")
    }

    /// Shard prefix length used by drivers.
    pub fn shard_depth(&self) -> usize {
        7
    }

    /// Runs one shard and returns its partial report; `examined` includes
    /// pruned leaves.
    pub fn run_shard(&self, enumerator: &Enumerator, shard: &Shard) -> PartialReport {
        let mut partial = PartialReport::default();
        let stats = enumerator.run_shard(shard, |s| self.leaf(s, &mut partial));
        partial.examined = stats.examined();
        partial
    }

    /// Whole space on the calling thread.
    pub fn run(&self) -> PartialReport {
        let e = self.enumerator();
        let (shards, pre) = e.shards(0);
        let mut total = PartialReport {
            examined: pre.examined(),
            ..Default::default()
        };
        for sh in &shards {
            total.merge(self.run_shard(&e, sh));
        }
        total
    }

    fn leaf(&self, s: &ColoringState, out: &mut PartialReport) {
        let n = self.n as i64;
        let dc2 = 2 * s.min_color_degree() as i64;
        let fast = match self.theorem {
            TheoremId::T8 => Some((dc2 >= n, s.rainbow_total() > 0)),
            TheoremId::T15 => Some((dc2 > n, s.rainbow_total() > 0)),
            TheoremId::T1 => Some((dc2 > n, (0..self.n).all(|v| s.rainbow_at(v) >= 1))),
            TheoremId::T3 => Some((
                dc2 >= n + self.k as i64,
                (0..self.n).all(|v| s.rainbow_at(v) >= self.k),
            )),
            _ => None,
        };
        match fast {
            Some((false, _)) => {}
            Some((true, true)) => out.hypothesis_count += 1,
            Some((true, false)) => {
                out.hypothesis_count += 1;
                let g = s.to_graph();
                if self.confirm(&g) {
                    out.record(g);
                }
            }
            None => {
                if self.bound.is_some_and(|b| s.min_color_degree() < b) {
                    return;
                }
                let g = s.to_graph();
                if check_hypothesis(&g, self.theorem, self.k).unwrap_or(false) {
                    out.hypothesis_count += 1;
                    if !check_conclusion(&g, self.theorem, self.k).map(|c| c.holds).unwrap_or(true) {
                        out.record(g);
                    }
                }
            }
        }
    }

    fn confirm(&self, g: &ColoredGraph) -> bool {
        let hyp = check_hypothesis(g, self.theorem, self.k).unwrap_or(false);
        let concl = check_conclusion(g, self.theorem, self.k).map(|c| c.holds).unwrap_or(true);
        debug_assert!(hyp && !concl, "incremental leaf state disagrees with the graph");
        hyp && !concl
    }
}

/// Attempts per sample before the sample is given up.
pub const MAX_ATTEMPTS_PER_SAMPLE: u64 = 1000;

/// Outcome of drawing one hypothesis-conditioned sample.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SampleOutcome {
    pub attempts: u64,
    pub hypothesis_met: bool,
    pub counterexample: Option<ColoredGraph>,
}

/// Hypothesis-conditioned random checking, one sample at a time.
#[derive(Debug, Clone, Copy)]
pub struct RandomCheck {
    theorem: TheoremId,
    n: usize,
    k: usize,
    seed: u64,
    target: usize,
}

impl RandomCheck {
    pub fn new(theorem: TheoremId, n: usize, k: usize, seed: u64) -> Result<Self, VerifyError> {
        let vacuous = match theorem {
            TheoremId::T11 => n < 8,
            TheoremId::T14 => n < 7,
            _ => false,
        };
        let target = theorem.min_color_degree_required(n, k).unwrap_or(1).max(1);
        if vacuous || n < 2 || target + 1 > n {
            return Err(VerifyError::VacuousHypothesis(theorem, n));
        }
        Ok(RandomCheck {
            theorem,
            n,
            k,
            seed,
            target,
        })
    }

    /// Draws sample `index`; independent of every other index.
    pub fn sample(&self, index: u64) -> SampleOutcome {
        let mut rng = ChaCha8Rng::seed_from_u64(mix(self.seed, index));
        let mut attempts = 0;
        while attempts < MAX_ATTEMPTS_PER_SAMPLE {
            attempts += 1;
            let completeness = match self.theorem.scope() {
                Scope::Complete => Completeness::Complete,
                Scope::General => Completeness::EdgeProbability(rng.gen_range(0.7..=1.0)),
            };
            let Ok(g) = gen_biased_high_color_degree(self.n, self.target, rng.gen(), completeness) else {
                continue;
            };
            if !check_hypothesis(&g, self.theorem, self.k).unwrap_or(false) {
                continue;
            }
            let holds = check_conclusion(&g, self.theorem, self.k).map(|c| c.holds).unwrap_or(true);
            return SampleOutcome {
                attempts,
                hypothesis_met: true,
                counterexample: (!holds).then_some(g),
            };
        }
        SampleOutcome {
            attempts,
            hypothesis_met: false,
            counterexample: None,
        }
    }

    /// Samples `range` in order and folds them into a partial report.
    pub fn run_range(&self, range: core::ops::Range<u64>) -> PartialReport {
        let mut out = PartialReport::default();
        for i in range {
            let s = self.sample(i);
            out.examined += s.attempts;
            out.hypothesis_count += s.hypothesis_met as u64;
            if let Some(g) = s.counterexample {
                out.record(g);
            }
        }
        out
    }
}

/// SplitMix64 finalizer over `(seed, index)`; derives independent
/// per-unit seeds.
pub fn mix(seed: u64, index: u64) -> u64 {
    let mut z = seed ^ index.wrapping_mul(0x9E37_79B9_7F4A_7C15).wrapping_add(0x6A09_E667_F3BC_C909);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}
