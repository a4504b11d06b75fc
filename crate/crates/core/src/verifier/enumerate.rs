//! Edge-colorings of `K_n` up to color renaming, as restricted growth
//! strings over the lexicographic edge order.
//!
//! The state kept along the descent (color set and color multiplicities
//! per vertex, rainbow triangles per vertex) is updated incrementally, so a
//! visitor sees a ready degree profile at every leaf.

use alloc::vec::Vec;

use super::VerifyError;
use crate::graph::{ColoredGraph, Vertex};
use crate::rainbow::is_rainbow;

/// Largest order the enumerator accepts at all.
pub const MAX_ENUM_ORDER: usize = 7;
const MAX_EDGES: usize = MAX_ENUM_ORDER * (MAX_ENUM_ORDER - 1) / 2;

/// Number of restricted growth strings of length `rest` that extend a
/// prefix already using `blocks` labels: `T(r, b) = b·T(r-1, b) + T(r-1, b+1)`.
pub fn completions(rest: usize, blocks: usize) -> u128 {
    // Column `b` of the table only needs rows b..b+rest.
    let mut row: Vec<u128> = alloc::vec![1; rest + 1];
    for r in 1..=rest {
        for i in 0..=rest - r {
            let b = (blocks + i) as u128;
            row[i] = b.saturating_mul(row[i]).saturating_add(row[i + 1]);
        }
    }
    row[0]
}

/// `Bell(m)`, the number of partitions of an `m`-set.
pub fn bell(m: usize) -> u128 {
    completions(m, 0)
}

/// Incremental coloring of the edges of `K_n`, decided in lexicographic
/// edge order.
#[derive(Clone)]
pub struct ColoringState {
    n: usize,
    m: usize,
    ends: [(u8, u8); MAX_EDGES],
    // index of edge uv, both orientations
    index: [[u8; MAX_ENUM_ORDER]; MAX_ENUM_ORDER],
    // remaining[e][v]: edges at v with index ≥ e
    remaining: [[u8; MAX_ENUM_ORDER]; MAX_EDGES + 1],
    colors: [u8; MAX_EDGES],
    depth: usize,
    blocks: usize,
    block_at: [u8; MAX_EDGES + 1],
    masks: [u32; MAX_ENUM_ORDER],
    counts: [[u8; MAX_EDGES]; MAX_ENUM_ORDER],
    rainbow_at: [u16; MAX_ENUM_ORDER],
    rainbow_total: u32,
}

impl ColoringState {
    pub fn new(n: usize) -> Result<Self, VerifyError> {
        if n > MAX_ENUM_ORDER || n == 0 {
            return Err(VerifyError::OrderTooLarge {
                n,
                max: MAX_ENUM_ORDER,
                colorings: bell(n * n.saturating_sub(1) / 2),
            });
        }
        let m = n * (n - 1) / 2;
        let mut ends = [(0, 0); MAX_EDGES];
        let mut index = [[u8::MAX; MAX_ENUM_ORDER]; MAX_ENUM_ORDER];
        let mut e = 0;
        for u in 0..n {
            for v in u + 1..n {
                ends[e] = (u as u8, v as u8);
                index[u][v] = e as u8;
                index[v][u] = e as u8;
                e += 1;
            }
        }
        let mut remaining = [[0u8; MAX_ENUM_ORDER]; MAX_EDGES + 1];
        for e in (0..m).rev() {
            remaining[e] = remaining[e + 1];
            let (u, v) = ends[e];
            remaining[e][u as usize] += 1;
            remaining[e][v as usize] += 1;
        }
        Ok(ColoringState {
            n,
            m,
            ends,
            index,
            remaining,
            colors: [0; MAX_EDGES],
            depth: 0,
            blocks: 0,
            block_at: [0; MAX_EDGES + 1],
            masks: [0; MAX_ENUM_ORDER],
            counts: [[0; MAX_EDGES]; MAX_ENUM_ORDER],
            rainbow_at: [0; MAX_ENUM_ORDER],
            rainbow_total: 0,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.m
    }

    /// Number of decided edges.
    pub fn depth(&self) -> usize {
        self.depth
    }

    /// Colors of the decided edges, in lexicographic edge order.
    pub fn colors(&self) -> &[u8] {
        &self.colors[..self.depth]
    }

    /// Number of distinct colors used so far.
    pub fn color_count(&self) -> usize {
        self.blocks
    }

    #[inline]
    pub fn color(&self, u: Vertex, v: Vertex) -> u8 {
        self.colors[self.index[u][v] as usize]
    }

    #[inline]
    pub fn color_degree(&self, v: Vertex) -> usize {
        self.masks[v].count_ones() as usize
    }

    #[inline]
    pub fn min_color_degree(&self) -> usize {
        self.masks[..self.n].iter().map(|m| m.count_ones()).min().unwrap_or(0) as usize
    }

    pub fn mono_degree(&self, v: Vertex) -> usize {
        self.counts[v][..self.blocks].iter().copied().max().unwrap_or(0) as usize
    }

    pub fn max_mono_degree(&self) -> usize {
        (0..self.n).map(|v| self.mono_degree(v)).max().unwrap_or(0)
    }

    /// Rainbow triangles through `v` among decided edges.
    #[inline]
    pub fn rainbow_at(&self, v: Vertex) -> usize {
        self.rainbow_at[v] as usize
    }

    #[inline]
    pub fn rainbow_total(&self) -> usize {
        self.rainbow_total as usize
    }

    /// The (complete, once every edge is decided) graph described so far.
    pub fn to_graph(&self) -> ColoredGraph {
        let edges: Vec<_> = (0..self.depth)
            .map(|e| {
                let (u, v) = self.ends[e];
                (u as usize, v as usize, self.colors[e] as u64)
            })
            .collect();
        ColoredGraph::validate(self.n, &edges).expect("enumerated coloring is a simple graph")
    }

    /// Decides the next edge. `color` must be at most `color_count()`.
    #[inline]
    pub fn push(&mut self, color: u8) {
        let e = self.depth;
        let (u, v) = self.ends[e];
        let (u, v) = (u as usize, v as usize);
        self.colors[e] = color;
        self.block_at[e] = self.blocks as u8;
        if color as usize == self.blocks {
            self.blocks += 1;
        }
        let bit = 1u32 << color;
        self.masks[u] |= bit;
        self.masks[v] |= bit;
        self.counts[u][color as usize] += 1;
        self.counts[v][color as usize] += 1;
        // Edge uv (u < v) is the last decided edge of every triangle {a, u, v}, a < u.
        for a in 0..u {
            let cau = self.colors[self.index[a][u] as usize];
            let cav = self.colors[self.index[a][v] as usize];
            if is_rainbow([cau as u32, cav as u32, color as u32]) {
                self.rainbow_at[a] += 1;
                self.rainbow_at[u] += 1;
                self.rainbow_at[v] += 1;
                self.rainbow_total += 1;
            }
        }
        self.depth += 1;
    }

    #[inline]
    pub fn pop(&mut self) {
        self.depth -= 1;
        let e = self.depth;
        let (u, v) = self.ends[e];
        let (u, v) = (u as usize, v as usize);
        let color = self.colors[e];
        for a in 0..u {
            let cau = self.colors[self.index[a][u] as usize];
            let cav = self.colors[self.index[a][v] as usize];
            if is_rainbow([cau as u32, cav as u32, color as u32]) {
                self.rainbow_at[a] -= 1;
                self.rainbow_at[u] -= 1;
                self.rainbow_at[v] -= 1;
                self.rainbow_total -= 1;
            }
        }
        let c = color as usize;
        self.counts[u][c] -= 1;
        self.counts[v][c] -= 1;
        if self.counts[u][c] == 0 {
            self.masks[u] &= !(1 << c);
        }
        if self.counts[v][c] == 0 {
            self.masks[v] &= !(1 << c);
        }
        self.blocks = self.block_at[e] as usize;
    }

    /// Whether every vertex can still reach color-degree `bound`, counting
    /// each undecided incident edge as a potential new color.
    #[inline]
    fn can_reach(&self, bound: u32) -> bool {
        let rest = &self.remaining[self.depth];
        (0..self.n).all(|x| self.masks[x].count_ones() + rest[x] as u32 >= bound)
    }

    #[inline]
    fn last_edge_can_reach(&self, bound: u32) -> bool {
        let (u, v) = self.ends[self.depth - 1];
        let rest = &self.remaining[self.depth];
        self.masks[u as usize].count_ones() + rest[u as usize] as u32 >= bound
            && self.masks[v as usize].count_ones() + rest[v as usize] as u32 >= bound
    }
}

/// Leaves visited and leaves skipped by pruning.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct EnumStats {
    pub visited: u64,
    pub pruned: u64,
}

impl EnumStats {
    pub fn examined(&self) -> u64 {
        self.visited + self.pruned
    }

    pub fn merge(&mut self, other: EnumStats) {
        self.visited += other.visited;
        self.pruned += other.pruned;
    }
}

/// A prefix of the restricted growth string; the unit of parallel work.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Shard {
    pub prefix: Vec<u8>,
}

/// Canonical coloring enumeration with optional color-degree pruning:
/// subtrees in which some vertex can no longer reach `min_color_degree`
/// colors are skipped and only counted.
#[derive(Debug, Clone, Copy)]
pub struct Enumerator {
    n: usize,
    bound: Option<u32>,
}

impl Enumerator {
    pub fn new(n: usize, min_color_degree: Option<usize>) -> Result<Self, VerifyError> {
        ColoringState::new(n)?;
        Ok(Enumerator {
            n,
            bound: min_color_degree.map(|b| b as u32),
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Visits every leaf of the whole space.
    pub fn run<F: FnMut(&ColoringState)>(&self, visit: F) -> EnumStats {
        self.run_shard(&Shard { prefix: Vec::new() }, visit)
    }

    /// Prefixes of length `min(depth, m)` in lexicographic order, with the
    /// leaves already pruned at prefix level.
    pub fn shards(&self, depth: usize) -> (Vec<Shard>, EnumStats) {
        let mut state = ColoringState::new(self.n).unwrap();
        let depth = depth.min(state.m);
        let mut out = Vec::new();
        let mut stats = EnumStats::default();
        let mut prefix = Vec::with_capacity(depth);
        if !self.root_ok(&state, &mut stats) {
            return (out, stats);
        }
        self.collect_prefixes(&mut state, depth, &mut prefix, &mut out, &mut stats);
        (out, stats)
    }

    fn root_ok(&self, state: &ColoringState, stats: &mut EnumStats) -> bool {
        match self.bound {
            Some(b) if !state.can_reach(b) => {
                stats.pruned += bell(state.m) as u64;
                false
            }
            _ => true,
        }
    }

    fn collect_prefixes(
        &self,
        state: &mut ColoringState,
        depth: usize,
        prefix: &mut Vec<u8>,
        out: &mut Vec<Shard>,
        stats: &mut EnumStats,
    ) {
        if state.depth == depth {
            out.push(Shard { prefix: prefix.clone() });
            return;
        }
        for c in 0..=state.blocks as u8 {
            state.push(c);
            if self.bound.is_some_and(|b| !state.last_edge_can_reach(b)) {
                stats.pruned += completions(state.m - state.depth, state.blocks) as u64;
            } else {
                prefix.push(c);
                self.collect_prefixes(state, depth, prefix, out, stats);
                prefix.pop();
            }
            state.pop();
        }
    }

    /// Visits every leaf extending `shard.prefix`. The prefix itself must
    /// have come from [`shards`](Self::shards) (or be empty).
    pub fn run_shard<F: FnMut(&ColoringState)>(&self, shard: &Shard, mut visit: F) -> EnumStats {
        let mut state = ColoringState::new(self.n).unwrap();
        let mut stats = EnumStats::default();
        if !self.root_ok(&state, &mut stats) {
            return stats;
        }
        for &c in &shard.prefix {
            state.push(c);
        }
        match self.bound {
            Some(b) => descend::<true, F>(&mut state, b, &mut visit, &mut stats),
            None => descend::<false, F>(&mut state, 0, &mut visit, &mut stats),
        }
        stats
    }
}

fn descend<const PRUNE: bool, F: FnMut(&ColoringState)>(
    state: &mut ColoringState,
    bound: u32,
    visit: &mut F,
    stats: &mut EnumStats,
) {
    if state.depth == state.m {
        stats.visited += 1;
        visit(state);
        return;
    }
    for c in 0..=state.blocks as u8 {
        state.push(c);
        if PRUNE && !state.last_edge_can_reach(bound) {
            stats.pruned += completions(state.m - state.depth, state.blocks) as u64;
        } else {
            descend::<PRUNE, F>(state, bound, visit, stats);
        }
        state.pop();
    }
}

/// Visits every edge-coloring of `K_n` exactly once up to color renaming
/// and returns how many were visited.
pub fn enumerate_canonical_colorings<F: FnMut(&ColoringState)>(n: usize, visit: F) -> Result<u64, VerifyError> {
    Ok(Enumerator::new(n, None)?.run(visit).visited)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rainbow::{enumerate_triangles, rainbow_counts};
    use alloc::collections::BTreeSet;

    #[test]
    fn completion_counts() {
        assert_eq!(bell(0), 1);
        assert_eq!(bell(3), 5);
        assert_eq!(bell(10), 115_975);
        assert_eq!(completions(2, 1), bell(3));
    }

    #[test]
    fn small_counts() {
        assert_eq!(enumerate_canonical_colorings(3, |_| {}).unwrap(), 5);
        assert_eq!(enumerate_canonical_colorings(4, |_| {}).unwrap(), 203);
        assert_eq!(enumerate_canonical_colorings(1, |_| {}).unwrap(), 1);
        assert!(matches!(
            enumerate_canonical_colorings(8, |_| {}),
            Err(VerifyError::OrderTooLarge { n: 8, .. })
        ));
    }

    #[test]
    fn leaves_are_canonical_and_distinct() {
        let mut seen = BTreeSet::new();
        enumerate_canonical_colorings(4, |s| {
            let mut next = 0;
            for &c in s.colors() {
                assert!(c <= next);
                if c == next {
                    next += 1;
                }
            }
            assert!(seen.insert(s.colors().to_vec()));
        })
        .unwrap();
        assert_eq!(seen.len(), 203);
    }

    #[test]
    fn incremental_state_matches_graph() {
        enumerate_canonical_colorings(5, |s| {
            if s.colors().iter().map(|&c| c as usize).sum::<usize>() % 97 != 0 {
                return;
            }
            let g = s.to_graph();
            assert_eq!(s.min_color_degree(), g.min_color_degree());
            assert_eq!(s.max_mono_degree(), g.max_mono_degree());
            assert_eq!(s.rainbow_total(), enumerate_triangles(&g, true).len());
            let counts = rainbow_counts(&g);
            assert!((0..5).all(|v| s.rainbow_at(v) == counts[v] && s.color_degree(v) == g.color_degree(v)));
        })
        .unwrap();
    }

    #[test]
    fn pruning_accounts_for_every_leaf() {
        for bound in 0..=4 {
            let e = Enumerator::new(5, Some(bound)).unwrap();
            let mut leaves_meeting = 0u64;
            let stats = e.run(|s| {
                assert!(s.min_color_degree() >= bound);
                leaves_meeting += 1;
            });
            assert_eq!(stats.examined(), 115_975);
            let mut expected = 0u64;
            enumerate_canonical_colorings(5, |s| {
                if s.min_color_degree() >= bound {
                    expected += 1;
                }
            })
            .unwrap();
            assert_eq!(leaves_meeting, expected, "bound {bound}");
        }
    }

    #[test]
    fn shards_partition_the_space() {
        let e = Enumerator::new(5, Some(2)).unwrap();
        let whole = e.run(|_| {});
        let (shards, mut stats) = e.shards(4);
        let mut order = Vec::new();
        for sh in &shards {
            stats.merge(e.run_shard(sh, |s| order.push(s.colors().to_vec())));
        }
        assert_eq!(stats, whole);
        let mut sorted = order.clone();
        sorted.sort();
        assert_eq!(order, sorted);
    }
}
