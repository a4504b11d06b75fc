//! Simulated annealing over colorings for sharpness examples: graphs that
//! meet a color-degree bound yet avoid a rainbow configuration.

use alloc::vec;
use alloc::vec::Vec;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{mix, Scope, VerifyError};
use crate::graph::{ColoredGraph, DegreeProfile, GraphBuilder};
use crate::rainbow::{exists_rainbow_triangle, has_disjoint_packing};

pub const DEFAULT_BUDGET: u64 = 100_000_000;
pub const DEFAULT_RESTARTS: u32 = 32;

/// Largest order the search supports.
pub const MAX_SEARCH_ORDER: usize = 16;

const NONE: u16 = u16::MAX;

/// The configuration the found graph must avoid.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Forbidden {
    RainbowTriangle,
    TwoDisjointRainbow,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchConfig {
    pub n: usize,
    pub scope: Scope,
    pub min_color_degree: usize,
    pub forbidden: Forbidden,
    /// Total moves over all restarts.
    pub budget: u64,
    pub restarts: u32,
    pub seed: u64,
    /// Number of colors available to each edge; capped at `n(n-1)/2`.
    pub palette: usize,
}

impl SearchConfig {
    pub fn new(n: usize, scope: Scope, min_color_degree: usize, forbidden: Forbidden) -> Self {
        SearchConfig {
            n,
            scope,
            min_color_degree,
            forbidden,
            budget: DEFAULT_BUDGET,
            restarts: DEFAULT_RESTARTS,
            seed: 0,
            palette: n * n.saturating_sub(1) / 2,
        }
    }

    pub fn validate(&self) -> Result<(), VerifyError> {
        if self.n < 3 || self.n > MAX_SEARCH_ORDER {
            return Err(VerifyError::InvalidSearch("order must be between 3 and 16"));
        }
        if self.budget == 0 {
            return Err(VerifyError::InvalidSearch("budget must be at least 1"));
        }
        if self.restarts == 0 {
            return Err(VerifyError::InvalidSearch("at least one restart is required"));
        }
        if self.min_color_degree + 1 > self.n {
            return Err(VerifyError::InvalidSearch("color-degree bound exceeds n - 1"));
        }
        if self.palette == 0 {
            return Err(VerifyError::InvalidSearch("palette must be non-empty"));
        }
        Ok(())
    }

    fn palette(&self) -> usize {
        self.palette.min(self.n * (self.n - 1) / 2)
    }

    /// Moves granted to each restart.
    pub fn moves_per_restart(&self) -> u64 {
        (self.budget / self.restarts as u64).max(1)
    }
}

/// Result of one annealing restart.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RestartOutcome {
    pub restart: u32,
    pub found: Option<ColoredGraph>,
    pub best_objective: u64,
    pub moves: u64,
}

/// Independent re-check of a candidate: the bound holds on a freshly
/// computed profile and the exact engine finds no forbidden configuration.
pub fn verify_found(cfg: &SearchConfig, g: &ColoredGraph) -> bool {
    if g.n() != cfg.n || (cfg.scope == Scope::Complete && !g.is_complete()) {
        return false;
    }
    if DegreeProfile::compute(g).min_color_degree < cfg.min_color_degree {
        return false;
    }
    match cfg.forbidden {
        Forbidden::RainbowTriangle => exists_rainbow_triangle(g).is_none(),
        Forbidden::TwoDisjointRainbow => matches!(has_disjoint_packing(g, 2), Ok(None)),
    }
}

struct Anneal<'a> {
    cfg: &'a SearchConfig,
    n: usize,
    palette: usize,
    penalty: u64,
    ends: Vec<(usize, usize)>,
    // triangles through each edge, and the other two edges of each
    tris_of_edge: Vec<Vec<usize>>,
    tri_edges: Vec<[usize; 3]>,
    disjoint: Vec<Vec<usize>>,
    colors: Vec<u16>,
    counts: Vec<u16>,
    color_degree: Vec<usize>,
    rainbow: Vec<bool>,
    deficit: u64,
    violations: u64,
}

impl<'a> Anneal<'a> {
    fn new(cfg: &'a SearchConfig) -> Self {
        let n = cfg.n;
        let mut ends = Vec::new();
        let mut edge_index = vec![usize::MAX; n * n];
        for u in 0..n {
            for v in u + 1..n {
                edge_index[u * n + v] = ends.len();
                edge_index[v * n + u] = ends.len();
                ends.push((u, v));
            }
        }
        let mut tri_edges = Vec::new();
        let mut tri_sets = Vec::new();
        let mut tris_of_edge = vec![Vec::new(); ends.len()];
        for a in 0..n {
            for b in a + 1..n {
                for c in b + 1..n {
                    let t = tri_edges.len();
                    let es = [edge_index[a * n + b], edge_index[a * n + c], edge_index[b * n + c]];
                    for &e in &es {
                        tris_of_edge[e].push(t);
                    }
                    tri_edges.push(es);
                    tri_sets.push(1u64 << a | 1u64 << b | 1u64 << c);
                }
            }
        }
        let disjoint = match cfg.forbidden {
            Forbidden::TwoDisjointRainbow => tri_sets
                .iter()
                .map(|&s| (0..tri_sets.len()).filter(|&o| tri_sets[o] & s == 0).collect())
                .collect(),
            Forbidden::RainbowTriangle => Vec::new(),
        };
        let palette = cfg.palette();
        Anneal {
            cfg,
            n,
            palette,
            penalty: (n * cfg.min_color_degree) as u64 + 1,
            colors: vec![NONE; ends.len()],
            counts: vec![0; n * palette],
            color_degree: vec![0; n],
            rainbow: vec![false; tri_edges.len()],
            ends,
            tris_of_edge,
            tri_edges,
            disjoint,
            deficit: 0,
            violations: 0,
        }
    }

    fn objective(&self) -> u64 {
        self.deficit + self.penalty * self.violations
    }

    fn randomize(&mut self, rng: &mut ChaCha8Rng) {
        for e in 0..self.ends.len() {
            let present = self.cfg.scope == Scope::Complete || rng.gen_bool(0.85);
            self.colors[e] = if present {
                rng.gen_range(0..self.palette) as u16
            } else {
                NONE
            };
        }
        self.recount();
    }

    fn recount(&mut self) {
        let (n, p) = (self.n, self.palette);
        self.counts.fill(0);
        for (e, &(u, v)) in self.ends.iter().enumerate() {
            let c = self.colors[e];
            if c != NONE {
                self.counts[u * p + c as usize] += 1;
                self.counts[v * p + c as usize] += 1;
            }
        }
        let bound = self.cfg.min_color_degree;
        self.deficit = 0;
        for v in 0..n {
            self.color_degree[v] = self.counts[v * p..(v + 1) * p].iter().filter(|&&k| k > 0).count();
            self.deficit += bound.saturating_sub(self.color_degree[v]) as u64;
        }
        for t in 0..self.tri_edges.len() {
            self.rainbow[t] = self.tri_rainbow(t, usize::MAX, NONE);
        }
        self.violations = match self.cfg.forbidden {
            Forbidden::RainbowTriangle => self.rainbow.iter().filter(|&&r| r).count() as u64,
            Forbidden::TwoDisjointRainbow => {
                let mut pairs = 0;
                for t in 0..self.rainbow.len() {
                    if self.rainbow[t] {
                        pairs += self.disjoint[t].iter().filter(|&&o| o > t && self.rainbow[o]).count() as u64;
                    }
                }
                pairs
            }
        };
    }

    /// Rainbow flag of triangle `t`, reading edge `e` as colored `c`.
    #[inline]
    fn tri_rainbow(&self, t: usize, e: usize, c: u16) -> bool {
        let [x, y, z] = self.tri_edges[t].map(|f| if f == e { c } else { self.colors[f] });
        x != NONE && y != NONE && z != NONE && x != y && x != z && y != z
    }

    #[inline]
    fn vertex_deficit_delta(&self, v: usize, old: u16, new: u16) -> i64 {
        let p = self.palette;
        let mut cd = self.color_degree[v] as i64;
        if old != NONE && self.counts[v * p + old as usize] == 1 {
            cd -= 1;
        }
        if new != NONE && self.counts[v * p + new as usize] == 0 {
            cd += 1;
        }
        let bound = self.cfg.min_color_degree as i64;
        (bound - cd).max(0) - (bound - self.color_degree[v] as i64).max(0)
    }

    /// Objective change if edge `e` took color `c` (`NONE` removes it).
    fn delta(&self, e: usize, c: u16) -> i64 {
        let old = self.colors[e];
        let (u, v) = self.ends[e];
        let mut d = self.vertex_deficit_delta(u, old, c) + self.vertex_deficit_delta(v, old, c);
        let mut viol = 0i64;
        for &t in &self.tris_of_edge[e] {
            let now = self.tri_rainbow(t, e, c);
            if now != self.rainbow[t] {
                let weight = match self.cfg.forbidden {
                    Forbidden::RainbowTriangle => 1,
                    Forbidden::TwoDisjointRainbow => self.disjoint[t].iter().filter(|&&o| self.rainbow[o]).count() as i64,
                };
                viol += if now { weight } else { -weight };
            }
        }
        d += viol * self.penalty as i64;
        d
    }

    fn apply(&mut self, e: usize, c: u16) {
        let old = self.colors[e];
        let (u, v) = self.ends[e];
        let p = self.palette;
        let bound = self.cfg.min_color_degree;
        for w in [u, v] {
            let before = bound.saturating_sub(self.color_degree[w]) as u64;
            if old != NONE {
                self.counts[w * p + old as usize] -= 1;
                if self.counts[w * p + old as usize] == 0 {
                    self.color_degree[w] -= 1;
                }
            }
            if c != NONE {
                if self.counts[w * p + c as usize] == 0 {
                    self.color_degree[w] += 1;
                }
                self.counts[w * p + c as usize] += 1;
            }
            self.deficit = self.deficit - before + bound.saturating_sub(self.color_degree[w]) as u64;
        }
        for i in 0..self.tris_of_edge[e].len() {
            let t = self.tris_of_edge[e][i];
            let now = self.tri_rainbow(t, e, c);
            if now != self.rainbow[t] {
                let weight = match self.cfg.forbidden {
                    Forbidden::RainbowTriangle => 1,
                    Forbidden::TwoDisjointRainbow => self.disjoint[t].iter().filter(|&&o| self.rainbow[o]).count() as u64,
                };
                if now {
                    self.violations += weight;
                } else {
                    self.violations -= weight;
                }
                self.rainbow[t] = now;
            }
        }
        self.colors[e] = c;
    }

    fn graph(&self) -> ColoredGraph {
        let mut b = GraphBuilder::new(self.n);
        for (e, &(u, v)) in self.ends.iter().enumerate() {
            if self.colors[e] != NONE {
                b.set(u, v, self.colors[e] as u64);
            }
        }
        b.build().expect("search state is a simple graph")
    }
}

/// Runs restart `restart` of the search: geometric cooling over the
/// restart's share of the budget, re-randomizing on long plateaus.
/// `stop` is polled periodically; a stopped restart reports no graph.
pub fn search_restart(cfg: &SearchConfig, restart: u32, stop: &dyn Fn() -> bool) -> Result<RestartOutcome, VerifyError> {
    cfg.validate()?;
    let mut rng = ChaCha8Rng::seed_from_u64(mix(cfg.seed, restart as u64));
    let mut st = Anneal::new(cfg);
    st.randomize(&mut rng);

    let budget = cfg.moves_per_restart();
    let t_start = st.penalty as f64 * 1.5;
    let t_end = 0.05f64;
    let plateau = (budget / 8).clamp(20_000, 2_000_000);
    let mut best = st.objective();
    let mut since_best = 0u64;
    let mut temp = t_start;
    let mut phase_len = budget;
    let mut phase_pos = 0u64;
    let edges = st.ends.len();
    let general = cfg.scope == Scope::General;

    for moves in 0..budget {
        if st.objective() == 0 {
            let g = st.graph();
            if verify_found(cfg, &g) {
                return Ok(RestartOutcome {
                    restart,
                    found: Some(g),
                    best_objective: 0,
                    moves,
                });
            }
        }
        if moves & 0xFFF == 0 {
            if stop() {
                break;
            }
            temp = t_start * libm::pow(t_end / t_start, phase_pos as f64 / phase_len as f64);
        }
        if since_best > plateau {
            st.randomize(&mut rng);
            since_best = 0;
            phase_len = budget - moves;
            phase_pos = 0;
        }
        phase_pos += 1;
        since_best += 1;

        let e = rng.gen_range(0..edges);
        let old = st.colors[e];
        let c = if general && (old == NONE || rng.gen_bool(0.15)) {
            if old == NONE {
                rng.gen_range(0..st.palette) as u16
            } else {
                NONE
            }
        } else {
            if st.palette < 2 {
                continue;
            }
            let r = rng.gen_range(0..st.palette - 1) as u16;
            if r >= old {
                r + 1
            } else {
                r
            }
        };
        let d = st.delta(e, c);
        if d <= 0 || rng.gen::<f64>() < libm::exp(-(d as f64) / temp) {
            st.apply(e, c);
            let obj = st.objective();
            if obj < best {
                best = obj;
                since_best = 0;
            }
        }
    }
    if st.objective() == 0 {
        let g = st.graph();
        if verify_found(cfg, &g) {
            return Ok(RestartOutcome {
                restart,
                found: Some(g),
                best_objective: 0,
                moves: budget,
            });
        }
    }
    Ok(RestartOutcome {
        restart,
        found: None,
        best_objective: best,
        moves: budget,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn never() -> bool {
        false
    }

    #[test]
    fn incremental_objective_matches_recount() {
        for (forbidden, scope) in [
            (Forbidden::TwoDisjointRainbow, Scope::General),
            (Forbidden::RainbowTriangle, Scope::Complete),
        ] {
            let mut cfg = SearchConfig::new(8, scope, 4, forbidden);
            cfg.palette = 6;
            let mut st = Anneal::new(&cfg);
            let mut rng = ChaCha8Rng::seed_from_u64(3);
            st.randomize(&mut rng);
            for _ in 0..2000 {
                let e = rng.gen_range(0..st.ends.len());
                let c = if rng.gen_bool(0.2) && scope == Scope::General {
                    NONE
                } else {
                    rng.gen_range(0..6) as u16
                };
                if c == st.colors[e] {
                    continue;
                }
                let before = st.objective() as i64;
                let d = st.delta(e, c);
                st.apply(e, c);
                assert_eq!(st.objective() as i64, before + d);
                let (deficit, violations) = (st.deficit, st.violations);
                st.recount();
                assert_eq!((deficit, violations), (st.deficit, st.violations));
            }
        }
    }

    #[test]
    fn triangle_tables_cover_every_edge() {
        let cfg = SearchConfig::new(6, Scope::Complete, 2, Forbidden::TwoDisjointRainbow);
        let st = Anneal::new(&cfg);
        assert_eq!(st.ends.len(), 15);
        assert_eq!(st.tri_edges.len(), 20);
        assert!(st.tris_of_edge.iter().all(|ts| ts.len() == 4));
        // each triangle of K_6 is disjoint from exactly its complement
        assert!(st.disjoint.iter().all(|d| d.len() == 1));
    }

    #[test]
    fn finds_an_easy_instance() {
        // Rainbow-free K_5 with color-degree 2 exists (e.g. two 5-cycles).
        let mut cfg = SearchConfig::new(5, Scope::Complete, 2, Forbidden::RainbowTriangle);
        cfg.budget = 200_000;
        cfg.restarts = 2;
        cfg.seed = 1;
        let out = search_restart(&cfg, 0, &never).unwrap();
        let g = out.found.clone().expect("instance");
        assert!(verify_found(&cfg, &g));
        assert_eq!(out, search_restart(&cfg, 0, &never).unwrap());
    }

    #[test]
    fn rejects_bad_configs() {
        let mut cfg = SearchConfig::new(6, Scope::Complete, 6, Forbidden::RainbowTriangle);
        assert!(search_restart(&cfg, 0, &never).is_err());
        cfg.min_color_degree = 3;
        cfg.budget = 0;
        assert!(search_restart(&cfg, 0, &never).is_err());
    }
}
