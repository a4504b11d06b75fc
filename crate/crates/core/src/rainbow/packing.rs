use alloc::vec::Vec;

use super::{enumerate_triangles, is_rainbow, maximum_matching, EngineError, Triangle};
use crate::graph::{ColoredGraph, Vertex, VertexSet};

/// Largest order accepted by [`PackingMode::Exact`].
pub const MAX_EXACT_ORDER: usize = 30;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PackingKind {
    /// No vertex lies in two triangles.
    VertexDisjoint,
    /// Every triangle contains the vertex and no edge is shared.
    EdgeDisjointAt(Vertex),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PackingMode {
    /// Maximum cardinality by branch and bound.
    Exact,
    /// Lexicographic greedy followed by one-for-two swaps.
    Greedy,
}

/// A family of rainbow triangles, sorted lexicographically.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Packing {
    pub triangles: Vec<Triangle>,
    pub kind: PackingKind,
}

impl Packing {
    pub fn len(&self) -> usize {
        self.triangles.len()
    }

    pub fn is_empty(&self) -> bool {
        self.triangles.is_empty()
    }

    /// Checks the disjointness condition of `kind` and that every member is
    /// a rainbow triangle of `g`.
    pub fn is_valid_in(&self, g: &ColoredGraph) -> bool {
        let members_ok = self
            .triangles
            .iter()
            .all(|t| Triangle::from_graph(g, t.vertices[0], t.vertices[1], t.vertices[2]) == Some(*t) && t.rainbow);
        if !members_ok {
            return false;
        }
        match self.kind {
            PackingKind::VertexDisjoint => {
                let mut seen = VertexSet::EMPTY;
                self.triangles.iter().all(|t| {
                    let s = t.vertex_set();
                    let ok = seen.is_disjoint(s);
                    seen = seen.union(s);
                    ok
                })
            }
            PackingKind::EdgeDisjointAt(v) => {
                let mut seen = VertexSet::singleton(v);
                self.triangles.iter().all(|t| {
                    if !t.contains(v) {
                        return false;
                    }
                    let others = t.vertex_set().difference(VertexSet::singleton(v));
                    let ok = seen.is_disjoint(others);
                    seen = seen.union(others);
                    ok
                })
            }
        }
    }
}

/// A vertex-disjoint packing of rainbow triangles: maximum in exact mode,
/// maximal in greedy mode.
pub fn max_disjoint_packing(g: &ColoredGraph, mode: PackingMode) -> Result<Packing, EngineError> {
    let tris = enumerate_triangles(g, true);
    let chosen = match mode {
        PackingMode::Exact => {
            if g.n() > MAX_EXACT_ORDER {
                return Err(EngineError::ExactTooLarge(g.n()));
            }
            exact(&tris, g.n() / 3)
        }
        PackingMode::Greedy => greedy(&tris),
    };
    Ok(to_packing(&tris, chosen, PackingKind::VertexDisjoint))
}

/// Whether `g` has `k` pairwise vertex-disjoint rainbow triangles. Stops
/// as soon as `k` are found.
pub fn has_disjoint_packing(g: &ColoredGraph, k: usize) -> Result<Option<Packing>, EngineError> {
    if g.n() > MAX_EXACT_ORDER {
        return Err(EngineError::ExactTooLarge(g.n()));
    }
    let tris = enumerate_triangles(g, true);
    let mut chosen = exact(&tris, k);
    chosen.truncate(k);
    Ok((chosen.len() >= k).then(|| to_packing(&tris, chosen, PackingKind::VertexDisjoint)))
}

fn to_packing(tris: &[Triangle], mut chosen: Vec<usize>, kind: PackingKind) -> Packing {
    chosen.sort_unstable();
    Packing {
        triangles: chosen.into_iter().map(|i| tris[i]).collect(),
        kind,
    }
}

fn greedy_from(masks: &[u64], blocked: u64) -> Vec<usize> {
    let mut used = blocked;
    let mut out = Vec::new();
    for (i, &m) in masks.iter().enumerate() {
        if m & used == 0 {
            used |= m;
            out.push(i);
        }
    }
    out
}

fn greedy(tris: &[Triangle]) -> Vec<usize> {
    let masks: Vec<u64> = tris.iter().map(|t| t.vertex_set().0).collect();
    let mut chosen = greedy_from(&masks, 0);
    'improve: loop {
        for pos in 0..chosen.len() {
            let others: u64 = chosen
                .iter()
                .enumerate()
                .filter(|&(p, _)| p != pos)
                .fold(0, |acc, (_, &i)| acc | masks[i]);
            for (a, &ma) in masks.iter().enumerate() {
                if ma & others != 0 {
                    continue;
                }
                if let Some(b) = (a + 1..masks.len()).find(|&b| masks[b] & (others | ma) == 0) {
                    chosen.remove(pos);
                    chosen.push(a);
                    chosen.push(b);
                    // Refill anything the swap left uncovered.
                    let used = chosen.iter().fold(0, |acc, &i| acc | masks[i]);
                    chosen.extend(greedy_from(&masks, used));
                    continue 'improve;
                }
            }
        }
        break;
    }
    chosen
}

/// Branch and bound for a maximum set of pairwise disjoint triangles,
/// stopping early once `target` are found.
fn exact(tris: &[Triangle], target: usize) -> Vec<usize> {
    let masks: Vec<u64> = tris.iter().map(|t| t.vertex_set().0).collect();
    let mut search = ExactSearch {
        masks: &masks,
        best: greedy(tris),
        target,
        current: Vec::new(),
    };
    if search.best.len() < target {
        let free = masks.iter().fold(0, |acc, m| acc | m);
        search.descend(free);
    }
    search.best
}

struct ExactSearch<'a> {
    masks: &'a [u64],
    best: Vec<usize>,
    target: usize,
    current: Vec<usize>,
}

impl ExactSearch<'_> {
    /// Returns true once the target has been reached.
    fn descend(&mut self, free: u64) -> bool {
        let mut active = 0u64;
        for &m in self.masks {
            if m & !free == 0 {
                active |= m;
            }
        }
        if self.current.len() > self.best.len() {
            self.best.clone_from(&self.current);
            if self.best.len() >= self.target {
                return true;
            }
        }
        if active == 0 || self.current.len() + active.count_ones() as usize / 3 <= self.best.len() {
            return false;
        }
        let x = active.trailing_zeros();
        let bit = 1u64 << x;
        for i in 0..self.masks.len() {
            let m = self.masks[i];
            if m & bit != 0 && m & !free == 0 {
                self.current.push(i);
                let done = self.descend(free & !m);
                self.current.pop();
                if done {
                    return true;
                }
            }
        }
        // Leave x uncovered.
        self.descend(free & active & !bit)
    }
}

/// A maximum set of rainbow triangles through `v` that pairwise share only
/// `v`, from a maximum matching of the rainbow link graph of `v`.
pub fn edge_disjoint_at_vertex(g: &ColoredGraph, v: Vertex) -> Packing {
    let n = g.n();
    let nbrs = g.neighbors(v);
    let mut link = alloc::vec![0u64; n];
    for x in nbrs {
        let cvx = g.color(v, x).unwrap();
        for y in VertexSet(nbrs.0 & g.neighbors(x).0 & !((2u64 << x) - 1)) {
            if is_rainbow([cvx, g.color(v, y).unwrap(), g.color(x, y).unwrap()]) {
                link[x] |= 1 << y;
                link[y] |= 1 << x;
            }
        }
    }
    let mate = maximum_matching(&link);
    let mut triangles: Vec<Triangle> = mate
        .iter()
        .enumerate()
        .filter_map(|(x, m)| match m {
            Some(y) if x < *y => Triangle::from_graph(g, v, x, *y),
            _ => None,
        })
        .collect();
    triangles.sort_unstable();
    Packing {
        triangles,
        kind: PackingKind::EdgeDisjointAt(v),
    }
}
