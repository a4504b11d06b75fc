//! Rainbow-triangle enumeration, packing and short properly colored cycles.

mod cycles;
mod matching;
mod packing;

pub use cycles::{find_pc_cycle_le4, pc_cycles_le4, two_disjoint_pc_cycles, PcCycle};
pub use matching::maximum_matching;
pub use packing::{
    edge_disjoint_at_vertex, has_disjoint_packing, max_disjoint_packing, Packing, PackingKind,
    PackingMode, MAX_EXACT_ORDER,
};

use alloc::vec;
use alloc::vec::Vec;

use thiserror::Error;

use crate::graph::{Color, ColoredGraph, Vertex, VertexSet};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EngineError {
    #[error("exact packing supports at most {MAX_EXACT_ORDER} vertices (got {0}); use greedy mode")]
    ExactTooLarge(usize),
}

/// A triangle `u < v < w` of the host graph together with its edge colors.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Triangle {
    pub vertices: [Vertex; 3],
    /// Colors of `uv`, `uw` and `vw`.
    pub colors: [Color; 3],
    pub rainbow: bool,
}

impl Triangle {
    /// Reads the triangle on three distinct vertices from `g`, or `None`
    /// if one of its edges is missing.
    pub fn from_graph(g: &ColoredGraph, a: Vertex, b: Vertex, c: Vertex) -> Option<Triangle> {
        let mut vs = [a, b, c];
        vs.sort_unstable();
        let [u, v, w] = vs;
        let colors = [g.color(u, v)?, g.color(u, w)?, g.color(v, w)?];
        Some(Triangle {
            vertices: vs,
            colors,
            rainbow: is_rainbow(colors),
        })
    }

    pub fn vertex_set(&self) -> VertexSet {
        self.vertices.iter().copied().collect()
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.vertices.contains(&v)
    }
}

#[inline]
pub(crate) fn is_rainbow([a, b, c]: [Color; 3]) -> bool {
    a != b && a != c && b != c
}

/// All triangles of `g` in lexicographic vertex order, optionally only the
/// rainbow ones.
pub fn enumerate_triangles(g: &ColoredGraph, rainbow_only: bool) -> Vec<Triangle> {
    let mut out = Vec::new();
    for_each_triangle(g, |t| {
        if t.rainbow || !rainbow_only {
            out.push(t);
        }
        true
    });
    out
}

/// Calls `f` on every triangle in lexicographic order until it returns
/// `false`.
fn for_each_triangle(g: &ColoredGraph, mut f: impl FnMut(Triangle) -> bool) {
    let n = g.n();
    for u in 0..n {
        let higher_u = g.neighbors(u).0 & !((2u64 << u) - 1);
        for v in VertexSet(higher_u) {
            let cuv = g.color(u, v).unwrap();
            let common = higher_u & g.neighbors(v).0 & !((2u64 << v) - 1);
            for w in VertexSet(common) {
                let colors = [cuv, g.color(u, w).unwrap(), g.color(v, w).unwrap()];
                let t = Triangle {
                    vertices: [u, v, w],
                    colors,
                    rainbow: is_rainbow(colors),
                };
                if !f(t) {
                    return;
                }
            }
        }
    }
}

/// The rainbow triangles through `v`, in lexicographic order. The length of
/// the result is `|R(v)|`.
pub fn rainbow_triangles_at(g: &ColoredGraph, v: Vertex) -> Vec<Triangle> {
    let nbrs = g.neighbors(v);
    let mut out = Vec::new();
    for x in nbrs {
        let cvx = g.color(v, x).unwrap();
        for y in VertexSet(nbrs.0 & g.neighbors(x).0 & !((2u64 << x) - 1)) {
            let cvy = g.color(v, y).unwrap();
            let cxy = g.color(x, y).unwrap();
            if is_rainbow([cvx, cvy, cxy]) {
                out.push(Triangle::from_graph(g, v, x, y).unwrap());
            }
        }
    }
    out.sort_unstable();
    out
}

/// Number of rainbow triangles through each vertex.
pub fn rainbow_counts(g: &ColoredGraph) -> Vec<usize> {
    let mut counts = vec![0; g.n()];
    for_each_triangle(g, |t| {
        if t.rainbow {
            for v in t.vertices {
                counts[v] += 1;
            }
        }
        true
    });
    counts
}

/// The lexicographically first rainbow triangle, if any.
pub fn exists_rainbow_triangle(g: &ColoredGraph) -> Option<Triangle> {
    let mut found = None;
    for_each_triangle(g, |t| {
        if t.rainbow {
            found = Some(t);
        }
        found.is_none()
    });
    found
}
