//! Edge-colored simple graphs and their color-degree queries.
//!
//! A [`ColoredGraph`] is immutable once validated. Colors are dense ids
//! `0..color_count()`, renumbered by first occurrence along the
//! lexicographic edge order, so two colorings that differ only by a
//! renaming of colors compare equal.

use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use thiserror::Error;

/// Largest supported order. Adjacency rows are single `u64` words.
pub const MAX_VERTICES: usize = 64;

pub type Vertex = usize;

/// Dense color id.
pub type Color = u32;

const NO_EDGE: Color = Color::MAX;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("graph must have at least one vertex")]
    NoVertices,
    #[error("order {0} exceeds the supported maximum of {MAX_VERTICES}")]
    TooManyVertices(usize),
    #[error("edge {line}: self-loop at vertex {vertex}")]
    SelfLoop { line: usize, vertex: Vertex },
    #[error("edge {line}: duplicate pair ({u}, {v})")]
    DuplicatePair { line: usize, u: Vertex, v: Vertex },
    #[error("edge {line}: vertex {vertex} out of range for order {n}")]
    VertexOutOfRange { line: usize, vertex: Vertex, n: usize },
    #[error("vertex sets overlap")]
    OverlappingSets,
}

/// A set of vertices of a graph with at most [`MAX_VERTICES`] vertices.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSet(pub u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    pub fn singleton(v: Vertex) -> Self {
        VertexSet(1 << v)
    }

    /// `{0, 1, …, n-1}`.
    pub fn full(n: usize) -> Self {
        if n >= 64 {
            VertexSet(u64::MAX)
        } else {
            VertexSet((1u64 << n) - 1)
        }
    }

    pub fn contains(self, v: Vertex) -> bool {
        v < 64 && self.0 >> v & 1 == 1
    }

    pub fn insert(&mut self, v: Vertex) {
        self.0 |= 1 << v;
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn union(self, other: VertexSet) -> Self {
        VertexSet(self.0 | other.0)
    }

    pub fn intersection(self, other: VertexSet) -> Self {
        VertexSet(self.0 & other.0)
    }

    pub fn difference(self, other: VertexSet) -> Self {
        VertexSet(self.0 & !other.0)
    }

    pub fn is_disjoint(self, other: VertexSet) -> bool {
        self.0 & other.0 == 0
    }

    pub fn iter(self) -> VertexSetIter {
        VertexSetIter(self.0)
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl FromIterator<Vertex> for VertexSet {
    fn from_iter<I: IntoIterator<Item = Vertex>>(iter: I) -> Self {
        let mut set = VertexSet::EMPTY;
        for v in iter {
            set.insert(v);
        }
        set
    }
}

impl IntoIterator for VertexSet {
    type Item = Vertex;
    type IntoIter = VertexSetIter;

    fn into_iter(self) -> VertexSetIter {
        self.iter()
    }
}

/// Ascending iterator over the members of a [`VertexSet`].
#[derive(Clone)]
pub struct VertexSetIter(u64);

impl Iterator for VertexSetIter {
    type Item = Vertex;

    fn next(&mut self) -> Option<Vertex> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as Vertex;
        self.0 &= self.0 - 1;
        Some(v)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let k = self.0.count_ones() as usize;
        (k, Some(k))
    }
}

impl ExactSizeIterator for VertexSetIter {}

/// Degree statistics of a single vertex.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct VertexDegrees {
    /// Number of incident edges.
    pub degree: usize,
    /// Number of distinct colors on incident edges, `d^c(v)`.
    pub color_degree: usize,
    /// Largest number of incident edges sharing one color, `Δ^mon(v)`.
    pub mono_degree: usize,
}

/// Per-vertex degree statistics plus the graph-level extremes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeProfile {
    pub vertices: Vec<VertexDegrees>,
    /// `δ^c(G)`.
    pub min_color_degree: usize,
    /// `Δ^mon(G)`.
    pub max_mono_degree: usize,
}

impl DegreeProfile {
    /// Recomputes the profile from the color matrix, independently of the
    /// copy cached at validation time.
    pub fn compute(g: &ColoredGraph) -> Self {
        let vertices = (0..g.n)
            .map(|v| {
                let mut counts: Vec<usize> = vec![0; g.color_count];
                let mut degree = 0;
                for w in 0..g.n {
                    if let Some(c) = g.color(v, w) {
                        counts[c as usize] += 1;
                        degree += 1;
                    }
                }
                VertexDegrees {
                    degree,
                    color_degree: counts.iter().filter(|&&k| k > 0).count(),
                    mono_degree: counts.iter().copied().max().unwrap_or(0),
                }
            })
            .collect();
        Self::from_vertices(vertices)
    }

    fn from_vertices(vertices: Vec<VertexDegrees>) -> Self {
        let min_color_degree = vertices.iter().map(|d| d.color_degree).min().unwrap_or(0);
        let max_mono_degree = vertices.iter().map(|d| d.mono_degree).max().unwrap_or(0);
        DegreeProfile {
            vertices,
            min_color_degree,
            max_mono_degree,
        }
    }
}

/// One class `N_i(v)`: the neighbors joined to `v` by edges of `color`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColorClass {
    pub color: Color,
    pub members: VertexSet,
}

/// A validated edge-colored simple graph on vertices `0..n`.
#[derive(Clone, PartialEq, Eq)]
pub struct ColoredGraph {
    n: usize,
    // n*n symmetric matrix, NO_EDGE on the diagonal and for non-edges.
    colors: Vec<Color>,
    adjacency: Vec<u64>,
    color_count: usize,
    edge_count: usize,
    profile: DegreeProfile,
}

impl fmt::Debug for ColoredGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("ColoredGraph")
            .field("n", &self.n)
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

impl ColoredGraph {
    /// Builds a graph from `(u, v, color)` triples with arbitrary color
    /// labels. Errors name the offending position in `edges`.
    pub fn validate(n: usize, edges: &[(Vertex, Vertex, u64)]) -> Result<Self, GraphError> {
        Self::validate_with_map(n, edges).map(|(g, _)| g)
    }

    /// Like [`validate`](Self::validate) but also returns the
    /// `(original label, dense id)` pairs in dense-id order.
    pub fn validate_with_map(
        n: usize,
        edges: &[(Vertex, Vertex, u64)],
    ) -> Result<(Self, Vec<(u64, Color)>), GraphError> {
        if n == 0 {
            return Err(GraphError::NoVertices);
        }
        if n > MAX_VERTICES {
            return Err(GraphError::TooManyVertices(n));
        }
        let mut raw: Vec<Option<u64>> = vec![None; n * n];
        for (line, &(u, v, c)) in edges.iter().enumerate() {
            for w in [u, v] {
                if w >= n {
                    return Err(GraphError::VertexOutOfRange { line, vertex: w, n });
                }
            }
            if u == v {
                return Err(GraphError::SelfLoop { line, vertex: u });
            }
            if raw[u * n + v].is_some() {
                return Err(GraphError::DuplicatePair {
                    line,
                    u: u.min(v),
                    v: u.max(v),
                });
            }
            raw[u * n + v] = Some(c);
            raw[v * n + u] = Some(c);
        }

        let mut map: Vec<(u64, Color)> = Vec::new();
        let mut colors = vec![NO_EDGE; n * n];
        let mut adjacency = vec![0u64; n];
        let mut edge_count = 0;
        for u in 0..n {
            for v in u + 1..n {
                let Some(label) = raw[u * n + v] else {
                    continue;
                };
                let dense = match map.iter().find(|(l, _)| *l == label) {
                    Some(&(_, d)) => d,
                    None => {
                        let d = map.len() as Color;
                        map.push((label, d));
                        d
                    }
                };
                colors[u * n + v] = dense;
                colors[v * n + u] = dense;
                adjacency[u] |= 1 << v;
                adjacency[v] |= 1 << u;
                edge_count += 1;
            }
        }

        let color_count = map.len();
        // Incremental profile: one pass over each row with a color tally.
        let mut tally = vec![0usize; color_count];
        let vertices = (0..n)
            .map(|v| {
                let mut d = VertexDegrees::default();
                let row = &colors[v * n..(v + 1) * n];
                for &c in row.iter().filter(|&&c| c != NO_EDGE) {
                    let t = &mut tally[c as usize];
                    if *t == 0 {
                        d.color_degree += 1;
                    }
                    *t += 1;
                    d.degree += 1;
                    d.mono_degree = d.mono_degree.max(*t);
                }
                for &c in row.iter().filter(|&&c| c != NO_EDGE) {
                    tally[c as usize] = 0;
                }
                d
            })
            .collect();

        let g = ColoredGraph {
            n,
            colors,
            adjacency,
            color_count,
            edge_count,
            profile: DegreeProfile::from_vertices(vertices),
        };
        Ok((g, map))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    /// `|C(G)|`.
    pub fn color_count(&self) -> usize {
        self.color_count
    }

    pub fn is_complete(&self) -> bool {
        self.edge_count == self.n * (self.n - 1) / 2
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    /// Color of edge `uv`, or `None` when `uv` is not an edge.
    #[inline]
    pub fn color(&self, u: Vertex, v: Vertex) -> Option<Color> {
        let c = self.colors[u * self.n + v];
        (c != NO_EDGE).then_some(c)
    }

    #[inline]
    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        self.adjacency[u] >> v & 1 == 1
    }

    #[inline]
    pub fn neighbors(&self, v: Vertex) -> VertexSet {
        VertexSet(self.adjacency[v])
    }

    /// Edges `(u, v, color)` with `u < v` in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex, Color)> + '_ {
        (0..self.n).flat_map(move |u| {
            VertexSet(self.adjacency[u] & !((2u64 << u) - 1))
                .iter()
                .map(move |v| (u, v, self.colors[u * self.n + v]))
        })
    }

    /// Edge list suitable for feeding back into [`validate`](Self::validate).
    pub fn edge_list(&self) -> Vec<(Vertex, Vertex, u64)> {
        self.edges().map(|(u, v, c)| (u, v, c as u64)).collect()
    }

    /// Profile computed while the graph was validated.
    pub fn profile(&self) -> &DegreeProfile {
        &self.profile
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.profile.vertices[v].degree
    }

    /// `d^c(v)`.
    pub fn color_degree(&self, v: Vertex) -> usize {
        self.profile.vertices[v].color_degree
    }

    /// `Δ^mon(v)`.
    pub fn mono_degree(&self, v: Vertex) -> usize {
        self.profile.vertices[v].mono_degree
    }

    /// `δ^c(G)`.
    pub fn min_color_degree(&self) -> usize {
        self.profile.min_color_degree
    }

    /// `Δ^mon(G)`.
    pub fn max_mono_degree(&self) -> usize {
        self.profile.max_mono_degree
    }

    /// The partition of `N(v)` into color classes, ordered by ascending
    /// size and then by color id.
    pub fn neighbor_color_classes(&self, v: Vertex) -> Vec<ColorClass> {
        let mut classes: Vec<ColorClass> = Vec::new();
        for w in self.neighbors(v) {
            let c = self.colors[v * self.n + w];
            match classes.iter_mut().find(|cl| cl.color == c) {
                Some(cl) => cl.members.insert(w),
                None => classes.push(ColorClass {
                    color: c,
                    members: VertexSet::singleton(w),
                }),
            }
        }
        classes.sort_by_key(|cl| (cl.members.len(), cl.color));
        classes
    }

    /// `C(S, T)`: colors of edges with one end in `s` and the other in `t`.
    pub fn colors_between(&self, s: VertexSet, t: VertexSet) -> Result<BTreeSet<Color>, GraphError> {
        if !s.is_disjoint(t) {
            return Err(GraphError::OverlappingSets);
        }
        let mut out = BTreeSet::new();
        for u in s {
            for v in t.intersection(self.neighbors(u)) {
                out.insert(self.colors[u * self.n + v]);
            }
        }
        Ok(out)
    }

    /// Starts an edited copy of this graph.
    pub fn edit(&self) -> GraphBuilder {
        let mut b = GraphBuilder::new(self.n);
        for (u, v, c) in self.edges() {
            b.set(u, v, c as u64);
        }
        b
    }
}

/// Mutable edge/color matrix that produces validated graphs.
#[derive(Debug, Clone)]
pub struct GraphBuilder {
    n: usize,
    cells: Vec<Option<u64>>,
}

impl GraphBuilder {
    pub fn new(n: usize) -> Self {
        GraphBuilder {
            n,
            cells: vec![None; n * n],
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Sets (or recolors) edge `uv`.
    pub fn set(&mut self, u: Vertex, v: Vertex, color: u64) -> &mut Self {
        assert!(u != v && u < self.n && v < self.n, "invalid pair ({u}, {v})");
        self.cells[u * self.n + v] = Some(color);
        self.cells[v * self.n + u] = Some(color);
        self
    }

    pub fn remove(&mut self, u: Vertex, v: Vertex) -> &mut Self {
        self.cells[u * self.n + v] = None;
        self.cells[v * self.n + u] = None;
        self
    }

    pub fn get(&self, u: Vertex, v: Vertex) -> Option<u64> {
        self.cells[u * self.n + v]
    }

    pub fn build(&self) -> Result<ColoredGraph, GraphError> {
        let mut edges = Vec::new();
        for u in 0..self.n {
            for v in u + 1..self.n {
                if let Some(c) = self.cells[u * self.n + v] {
                    edges.push((u, v, c));
                }
            }
        }
        ColoredGraph::validate(self.n, &edges)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn complete(n: usize, color: impl Fn(usize, usize) -> u64) -> ColoredGraph {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                edges.push((u, v, color(u, v)));
            }
        }
        ColoredGraph::validate(n, &edges).unwrap()
    }

    fn rainbow(n: usize) -> ColoredGraph {
        complete(n, |u, v| (u * 100 + v) as u64)
    }

    #[test]
    fn densifies_by_first_occurrence() {
        let g = ColoredGraph::validate(3, &[(1, 2, 9), (0, 1, 7), (0, 2, 7)]).unwrap();
        let colors: Vec<_> = g.edges().map(|(_, _, c)| c).collect();
        assert_eq!(colors, [0, 0, 1]);
        assert!(g.is_complete());
        assert_eq!(g.color_count(), 2);
    }

    #[test]
    fn rejects_self_loop_and_duplicates() {
        assert_eq!(
            ColoredGraph::validate(1, &[(0, 0, 1)]),
            Err(GraphError::SelfLoop { line: 0, vertex: 0 })
        );
        assert_eq!(
            ColoredGraph::validate(2, &[(0, 1, 1), (1, 0, 2)]),
            Err(GraphError::DuplicatePair { line: 1, u: 0, v: 1 })
        );
        assert_eq!(
            ColoredGraph::validate(2, &[(0, 2, 1)]),
            Err(GraphError::VertexOutOfRange { line: 0, vertex: 2, n: 2 })
        );
        assert_eq!(ColoredGraph::validate(0, &[]), Err(GraphError::NoVertices));
        assert_eq!(ColoredGraph::validate(65, &[]), Err(GraphError::TooManyVertices(65)));
    }

    #[test]
    fn degree_queries() {
        let g = rainbow(5);
        assert!((0..5).all(|v| g.color_degree(v) == 4 && g.mono_degree(v) == 1));
        let mono = complete(5, |_, _| 3);
        assert!((0..5).all(|v| mono.color_degree(v) == 1 && mono.mono_degree(v) == 4));
        assert_eq!(complete(4, |_, _| 0).min_color_degree(), 1);
    }

    #[test]
    fn isolated_vertices_have_zero_color_degree() {
        let g = ColoredGraph::validate(3, &[(0, 1, 4)]).unwrap();
        assert_eq!(g.color_degree(2), 0);
        assert_eq!(g.min_color_degree(), 0);
        assert!(!g.is_complete());
        assert!(g.neighbor_color_classes(2).is_empty());
    }

    #[test]
    fn neighbor_classes_are_sorted() {
        let mono = complete(4, |_, _| 0);
        let classes = mono.neighbor_color_classes(0);
        assert_eq!(classes.len(), 1);
        assert_eq!(classes[0].members.len(), 3);

        let sizes: Vec<_> = rainbow(4)
            .neighbor_color_classes(2)
            .iter()
            .map(|c| c.members.len())
            .collect();
        assert_eq!(sizes, [1, 1, 1]);
    }

    #[test]
    fn colors_between_sets() {
        let g = rainbow(4);
        let s = VertexSet::singleton(0);
        let t: VertexSet = [1, 2].into_iter().collect();
        assert_eq!(g.colors_between(s, t).unwrap().len(), 2);
        assert_eq!(g.colors_between(t, t), Err(GraphError::OverlappingSets));
        let mono = complete(5, |_, _| 1);
        let a: VertexSet = [0, 3].into_iter().collect();
        let b: VertexSet = [1, 2, 4].into_iter().collect();
        assert_eq!(mono.colors_between(a, b).unwrap().len(), 1);
        let sparse = ColoredGraph::validate(3, &[(0, 1, 0)]).unwrap();
        assert!(sparse
            .colors_between(VertexSet::singleton(2), VertexSet::singleton(0))
            .unwrap()
            .is_empty());
    }

    #[test]
    fn builder_recolors_a_copy() {
        let g = rainbow(4);
        let mut b = g.edit();
        b.set(0, 1, g.color(2, 3).unwrap() as u64).remove(1, 2);
        let h = b.build().unwrap();
        assert_eq!(h.edge_count(), 5);
        assert_eq!(h.color(0, 1), h.color(2, 3));
        assert_eq!(g.edge_count(), 6);
    }

    #[test]
    fn vertex_set_ops() {
        let s: VertexSet = [1, 5, 63].into_iter().collect();
        assert_eq!(s.iter().collect::<Vec<_>>(), [1, 5, 63]);
        assert_eq!(s.len(), 3);
        assert!(s.contains(63) && !s.contains(2) && !s.contains(70));
        assert_eq!(VertexSet::full(64).len(), 64);
        assert!(VertexSet::full(3).is_disjoint(VertexSet::singleton(3)));
    }
}
