use alloc::vec::Vec;

use crate::graph::{ColoredGraph, Vertex, VertexSet};

/// A properly colored cycle of length 3 or 4, listed in traversal order
/// starting from its smallest vertex.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PcCycle {
    pub vertices: Vec<Vertex>,
}

impl PcCycle {
    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn vertex_set(&self) -> VertexSet {
        self.vertices.iter().copied().collect()
    }

    /// Whether consecutive edges of the cycle exist in `g` and differ in
    /// color.
    pub fn is_properly_colored_in(&self, g: &ColoredGraph) -> bool {
        let k = self.vertices.len();
        if !(3..=4).contains(&k) || self.vertex_set().len() != k {
            return false;
        }
        let colors: Option<Vec<_>> = (0..k)
            .map(|i| g.color(self.vertices[i], self.vertices[(i + 1) % k]))
            .collect();
        let Some(colors) = colors else {
            return false;
        };
        (0..k).all(|i| colors[i] != colors[(i + 1) % k])
    }
}

/// Visits properly colored 3-cycles, then 4-cycles, each in lexicographic
/// order of their canonical vertex sequence.
fn for_each_pc_cycle(g: &ColoredGraph, mut f: impl FnMut(PcCycle) -> bool) {
    let n = g.n();
    let above = |v: Vertex| !((2u64 << v) - 1);
    for a in 0..n {
        let na = g.neighbors(a).0 & above(a);
        for b in VertexSet(na) {
            let cab = g.color(a, b).unwrap();
            for c in VertexSet(na & g.neighbors(b).0 & above(b)) {
                let cbc = g.color(b, c).unwrap();
                let cca = g.color(c, a).unwrap();
                if cab != cbc && cbc != cca && cca != cab && !f(PcCycle { vertices: alloc::vec![a, b, c] }) {
                    return;
                }
            }
        }
    }
    for a in 0..n {
        let na = g.neighbors(a).0 & above(a);
        for b in VertexSet(na) {
            let cab = g.color(a, b).unwrap();
            for c in VertexSet(g.neighbors(b).0 & above(a) & !(1 << b)) {
                let cbc = g.color(b, c).unwrap();
                if cbc == cab {
                    continue;
                }
                // d > b keeps one orientation per cycle.
                for d in VertexSet(na & g.neighbors(c).0 & above(b) & !(1 << c)) {
                    let ccd = g.color(c, d).unwrap();
                    let cda = g.color(d, a).unwrap();
                    if ccd != cbc && cda != ccd && cda != cab && !f(PcCycle { vertices: alloc::vec![a, b, c, d] }) {
                        return;
                    }
                }
            }
        }
    }
}

/// The first properly colored cycle of length at most 4: shorter cycles
/// first, then lexicographic.
pub fn find_pc_cycle_le4(g: &ColoredGraph) -> Option<PcCycle> {
    let mut found = None;
    for_each_pc_cycle(g, |c| {
        found = Some(c);
        false
    });
    found
}

/// All properly colored cycles of length 3 or 4.
pub fn pc_cycles_le4(g: &ColoredGraph) -> Vec<PcCycle> {
    let mut out = Vec::new();
    for_each_pc_cycle(g, |c| {
        out.push(c);
        true
    });
    out
}

/// The first pair (in enumeration order) of vertex-disjoint properly
/// colored cycles of length at most 4.
pub fn two_disjoint_pc_cycles(g: &ColoredGraph) -> Option<(PcCycle, PcCycle)> {
    let cycles = pc_cycles_le4(g);
    let masks: Vec<VertexSet> = cycles.iter().map(PcCycle::vertex_set).collect();
    for i in 0..cycles.len() {
        for j in i + 1..cycles.len() {
            if masks[i].is_disjoint(masks[j]) {
                return Some((cycles[i].clone(), cycles[j].clone()));
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{gen_pc_bipartite, gen_random, gen_rainbow_complete, Completeness};

    #[test]
    fn rainbow_k4_gives_a_triangle() {
        let g = gen_rainbow_complete(4).unwrap();
        let c = find_pc_cycle_le4(&g).unwrap();
        assert_eq!(c.vertices, [0, 1, 2]);
        assert!(c.is_properly_colored_in(&g));
    }

    #[test]
    fn monochromatic_has_none() {
        let g = gen_random(5, 1, 3, Completeness::Complete).unwrap();
        assert_eq!(find_pc_cycle_le4(&g), None);
        assert!(pc_cycles_le4(&g).is_empty());
    }

    #[test]
    fn bipartite_yields_four_cycles_only() {
        let g = gen_pc_bipartite(6).unwrap();
        let all = pc_cycles_le4(&g);
        assert!(!all.is_empty());
        assert!(all.iter().all(|c| c.len() == 4 && c.is_properly_colored_in(&g)));
        // Each 4-cycle listed once: K_{3,3} has 9 four-cycles.
        assert_eq!(all.len(), 9);
        assert!(two_disjoint_pc_cycles(&g).is_none());
    }

    #[test]
    fn four_cycle_when_triangles_are_not_proper() {
        // Two colors on K_4 as perfect matching classes: {01,23} red, rest blue.
        let g = ColoredGraph::validate(
            4,
            &[(0, 1, 0), (2, 3, 0), (0, 2, 1), (0, 3, 1), (1, 2, 1), (1, 3, 1)],
        )
        .unwrap();
        let c = find_pc_cycle_le4(&g).unwrap();
        assert_eq!(c.len(), 4);
        assert!(c.is_properly_colored_in(&g));
    }
}
