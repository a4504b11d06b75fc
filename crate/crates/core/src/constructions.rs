//! Explicit colorings, random samplers and the recognizer for the
//! rainbow-free extremal structure on an odd number of vertices.

use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::graph::{Color, ColoredGraph, GraphError, Vertex, VertexSet, MAX_VERTICES};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConstructionError {
    #[error("construction parameter p must be at least 2 (got {0})")]
    ParameterTooSmall(usize),
    #[error("extremal structure needs an odd order of at least 5 (got {0})")]
    BadExtremalOrder(usize),
    #[error("balanced bipartite coloring needs an even order of at least 4 (got {0})")]
    BadBipartiteOrder(usize),
    #[error("color count must be at least 1")]
    NoColors,
    #[error("target color-degree {target} is infeasible on {n} vertices")]
    InfeasibleTarget { n: usize, target: usize },
    #[error("sampled edge set leaves a vertex with degree below {0}")]
    DegreeTooLow(usize),
    #[error("recognizer needs a complete graph")]
    NotComplete,
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Whether random graphs include every pair or each pair independently.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Completeness {
    Complete,
    EdgeProbability(f64),
}

fn complete_graph(n: usize, color: impl Fn(Vertex, Vertex) -> u64) -> Result<ColoredGraph, GraphError> {
    let mut edges = Vec::with_capacity(n * n.saturating_sub(1) / 2);
    for u in 0..n {
        for v in u + 1..n {
            edges.push((u, v, color(u, v)));
        }
    }
    ColoredGraph::validate(n, &edges)
}

/// Complete graph of order `2p` whose hub (vertex 0) has color-degree `p`
/// but lies in no rainbow triangle, while every vertex has color-degree
/// exactly `p`.
///
/// Layout: `N_1 = {1}` and `N_i = {2i-2, 2i-1}` for `2 ≤ i ≤ p`. The hub
/// and `N_1` both reach `N_i` in color `i`. Between `N_i` and `N_j`
/// (`i < j`) the parallel matching gets color `i` and the crossed one gets
/// color `j`. The internal edge of each `N_i` gets its own fresh color, so
/// the graph uses `2p - 1` colors.
pub fn gen_construction2(p: usize) -> Result<ColoredGraph, ConstructionError> {
    if p < 2 {
        return Err(ConstructionError::ParameterTooSmall(p));
    }
    // (class, position within class); the hub is class 0.
    let place = |x: Vertex| -> (usize, usize) {
        match x {
            0 => (0, 0),
            1 => (1, 0),
            _ => (x / 2 + 1, x % 2),
        }
    };
    let fresh = |i: usize| (p + i - 1) as u64;
    Ok(complete_graph(2 * p, |u, v| {
        let ((i, a), (j, b)) = (place(u), place(v));
        match (i, j) {
            (0, j) => j as u64,
            (1, j) => j as u64,
            (i, j) if i == j => fresh(i),
            (i, j) => {
                if a == b {
                    i.min(j) as u64
                } else {
                    i.max(j) as u64
                }
            }
        }
    })?)
}

/// Complete graph of odd order `n ≥ 5` with hub 0 and pairs
/// `A_i = {2i-1, 2i}`: the hub reaches `A_i` in color `i`, the internal edge
/// of `A_i` has color `i`, and between `A_i` and `A_j` (`i < j`) the
/// parallel matching has color `i` and the crossed matching color `j`.
///
/// For `n = 5` the result is rainbow-free. For larger `n` the cross-block
/// convention produces rainbow triangles such as `{1, 4, 5}`.
pub fn gen_extremal_thm10(n: usize) -> Result<ColoredGraph, ConstructionError> {
    if n < 5 || n % 2 == 0 {
        return Err(ConstructionError::BadExtremalOrder(n));
    }
    let place = |x: Vertex| -> (usize, usize) { ((x + 1) / 2, (x + 1) % 2) };
    Ok(complete_graph(n, |u, v| {
        let ((i, a), (j, b)) = (place(u), place(v));
        if i == 0 || j == 0 || i == j {
            i.max(j) as u64
        } else if a == b {
            i.min(j) as u64
        } else {
            i.max(j) as u64
        }
    })?)
}

/// Properly colored `K_{n/2,n/2}` on parts `{0..h}` and `{h..n}` with the
/// Latin-square coloring `(u + w) mod h`.
pub fn gen_pc_bipartite(n: usize) -> Result<ColoredGraph, ConstructionError> {
    if n < 4 || n % 2 == 1 {
        return Err(ConstructionError::BadBipartiteOrder(n));
    }
    let h = n / 2;
    let mut edges = Vec::with_capacity(h * h);
    for u in 0..h {
        for w in h..n {
            edges.push((u, w, ((u + w - h) % h) as u64));
        }
    }
    Ok(ColoredGraph::validate(n, &edges)?)
}

/// `K_n` with every edge in its own color.
pub fn gen_rainbow_complete(n: usize) -> Result<ColoredGraph, ConstructionError> {
    let mut next = 0u64;
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            edges.push((u, v, next));
            next += 1;
        }
    }
    Ok(ColoredGraph::validate(n, &edges)?)
}

fn sample_edges(n: usize, completeness: Completeness, rng: &mut ChaCha8Rng) -> Vec<(Vertex, Vertex)> {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            let keep = match completeness {
                Completeness::Complete => true,
                Completeness::EdgeProbability(p) => rng.gen_bool(p.clamp(0.0, 1.0)),
            };
            if keep {
                edges.push((u, v));
            }
        }
    }
    edges
}

/// Uniform independent colors from `0..color_count` on a complete or
/// Erdős–Rényi edge set. Deterministic in all arguments.
pub fn gen_random(
    n: usize,
    color_count: usize,
    seed: u64,
    completeness: Completeness,
) -> Result<ColoredGraph, ConstructionError> {
    if color_count == 0 {
        return Err(ConstructionError::NoColors);
    }
    if n > MAX_VERTICES {
        return Err(GraphError::TooManyVertices(n).into());
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let edges: Vec<_> = sample_edges(n, completeness, &mut rng)
        .into_iter()
        .map(|(u, v)| (u, v, rng.gen_range(0..color_count as u64)))
        .collect();
    Ok(ColoredGraph::validate(n, &edges)?)
}

/// Random coloring with `δ^c ≥ target_delta`.
///
/// Starts from a rainbow coloring of a complete or sampled edge set and
/// merges random pairs of color classes as long as every vertex keeps at
/// least `target_delta` colors. Half of the draws merge until no further
/// merge is allowed; the rest stop after a uniformly drawn number of
/// merges. Fails if the sampled edge set already violates the bound.
pub fn gen_biased_high_color_degree(
    n: usize,
    target_delta: usize,
    seed: u64,
    completeness: Completeness,
) -> Result<ColoredGraph, ConstructionError> {
    if n > MAX_VERTICES {
        return Err(GraphError::TooManyVertices(n).into());
    }
    if target_delta == 0 || target_delta + 1 > n {
        return Err(ConstructionError::InfeasibleTarget { n, target: target_delta });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let edges = sample_edges(n, completeness, &mut rng);
    let mut color_degree = vec![0usize; n];
    for &(u, v) in &edges {
        color_degree[u] += 1;
        color_degree[v] += 1;
    }
    if color_degree.iter().any(|&d| d < target_delta) {
        return Err(ConstructionError::DegreeTooLow(target_delta));
    }

    // Class id per edge; `members[c]` is the vertex set touched by class c.
    let mut class: Vec<usize> = (0..edges.len()).collect();
    let mut members: Vec<u64> = edges.iter().map(|&(u, v)| 1u64 << u | 1u64 << v).collect();
    let mut alive: Vec<usize> = (0..edges.len()).collect();

    let merge_cap = if rng.gen_bool(0.5) {
        usize::MAX
    } else {
        rng.gen_range(0..=edges.len())
    };
    let mut merges = 0;
    'passes: loop {
        let mut pairs: Vec<(usize, usize)> = Vec::new();
        for (x, &a) in alive.iter().enumerate() {
            for &b in &alive[x + 1..] {
                pairs.push((a, b));
            }
        }
        pairs.shuffle(&mut rng);
        let mut dead = vec![false; edges.len()];
        let mut merged_any = false;
        for (a, b) in pairs {
            if dead[a] || dead[b] {
                continue;
            }
            let shared = VertexSet(members[a] & members[b]);
            if shared.iter().any(|v| color_degree[v] <= target_delta) {
                continue;
            }
            for v in shared {
                color_degree[v] -= 1;
            }
            members[a] |= members[b];
            for c in class.iter_mut() {
                if *c == b {
                    *c = a;
                }
            }
            dead[b] = true;
            merged_any = true;
            merges += 1;
            if merges >= merge_cap {
                break 'passes;
            }
        }
        alive.retain(|&c| !dead[c]);
        if !merged_any {
            break;
        }
    }

    let colored: Vec<_> = edges.iter().zip(&class).map(|(&(u, v), &c)| (u, v, c as u64)).collect();
    Ok(ColoredGraph::validate(n, &colored)?)
}

/// Witness of the extremal rainbow-free structure: a hub `A_0` and pairs
/// `A_1, …, A_t` with `t = (n-1)/2`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Thm10Certificate {
    pub hub: Vertex,
    /// `A_1 … A_t`, each sorted, ordered by the color joining them to the hub.
    pub pairs: Vec<[Vertex; 2]>,
    /// Color of the hub edges into each pair (the pair's own color).
    pub part_colors: Vec<Color>,
}

/// Looks for a hub realizing the extremal structure:
///
/// 1. `n` is odd and every vertex has color-degree `t = (n-1)/2`;
/// 2. the hub's color classes are `t` pairs `A_i`, the hub reaching `A_i`
///    in color `i`;
/// 3. for `u ∈ A_i` and `j ≠ i`, `C(u, A_j) ⊆ {i, j}` and contains `j`;
/// 4. the edge inside `A_i` has color `i` when `t ≥ 3`, and one of the
///    two hub colors when `t ≤ 2`.
///
/// Hubs are tried in ascending order; rainbow-freeness is not checked.
pub fn recognize_thm10(g: &ColoredGraph) -> Result<Option<Thm10Certificate>, ConstructionError> {
    if !g.is_complete() {
        return Err(ConstructionError::NotComplete);
    }
    let n = g.n();
    if n % 2 == 0 {
        return Ok(None);
    }
    let t = (n - 1) / 2;
    if (0..n).any(|v| g.color_degree(v) != t) {
        return Ok(None);
    }
    Ok((0..n).find_map(|hub| certificate_at(g, hub, t)))
}

fn certificate_at(g: &ColoredGraph, hub: Vertex, t: usize) -> Option<Thm10Certificate> {
    let mut classes = g.neighbor_color_classes(hub);
    if classes.len() != t || classes.iter().any(|c| c.members.len() != 2) {
        return None;
    }
    classes.sort_by_key(|c| c.color);
    let hub_colors: BTreeSet<Color> = classes.iter().map(|c| c.color).collect();
    for (x, ci) in classes.iter().enumerate() {
        for (y, cj) in classes.iter().enumerate() {
            if x == y {
                continue;
            }
            for u in ci.members {
                let seen = g.colors_between(VertexSet::singleton(u), cj.members).ok()?;
                if !seen.contains(&cj.color) || seen.iter().any(|&c| c != ci.color && c != cj.color) {
                    return None;
                }
            }
        }
        let mut pair = ci.members.iter();
        let (a, b) = (pair.next()?, pair.next()?);
        let inner = g.color(a, b)?;
        let inner_ok = if t >= 3 {
            inner == ci.color
        } else {
            hub_colors.contains(&inner)
        };
        if !inner_ok {
            return None;
        }
    }
    Some(Thm10Certificate {
        hub,
        pairs: classes
            .iter()
            .map(|c| {
                let mut it = c.members.iter();
                [it.next().unwrap(), it.next().unwrap()]
            })
            .collect(),
        part_colors: classes.iter().map(|c| c.color).collect(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rainbow::{enumerate_triangles, rainbow_triangles_at};

    #[test]
    fn construction2_shape() {
        for p in 2..=10 {
            let g = gen_construction2(p).unwrap();
            assert_eq!(g.n(), 2 * p);
            assert!(g.is_complete());
            assert_eq!(g.min_color_degree(), p);
            assert!((0..2 * p).all(|v| g.color_degree(v) == p));
            assert!(g.mono_degree(0) <= 2);
            assert!(rainbow_triangles_at(&g, 0).is_empty());
        }
        assert_eq!(gen_construction2(4).unwrap().color_count(), 7);
        let sizes: Vec<_> = gen_construction2(3)
            .unwrap()
            .neighbor_color_classes(0)
            .iter()
            .map(|c| c.members.len())
            .collect();
        assert_eq!(sizes, [1, 2, 2]);
        assert_eq!(gen_construction2(1), Err(ConstructionError::ParameterTooSmall(1)));
    }

    #[test]
    fn extremal_shape() {
        let g5 = gen_extremal_thm10(5).unwrap();
        assert_eq!(g5.min_color_degree(), 2);
        assert!(enumerate_triangles(&g5, true).is_empty());
        let g9 = gen_extremal_thm10(9).unwrap();
        assert!((0..9).all(|v| g9.color_degree(v) == 4));
        let g7 = gen_extremal_thm10(7).unwrap();
        let cert = recognize_thm10(&g7).unwrap().unwrap();
        assert_eq!(cert.hub, 0);
        assert_eq!(cert.pairs, [[1, 2], [3, 4], [5, 6]]);
        for bad in [3, 4, 6] {
            assert_eq!(gen_extremal_thm10(bad), Err(ConstructionError::BadExtremalOrder(bad)));
        }
    }

    #[test]
    fn extremal_cross_blocks_use_two_colors() {
        let g = gen_extremal_thm10(7).unwrap();
        let a1: VertexSet = [1, 2].into_iter().collect();
        let a2: VertexSet = [3, 4].into_iter().collect();
        let hub_colors = [g.color(0, 1).unwrap(), g.color(0, 3).unwrap()];
        let between = g.colors_between(a1, a2).unwrap();
        assert!(between.iter().all(|c| hub_colors.contains(c)));
    }

    #[test]
    fn recognizer_rejects() {
        assert_eq!(recognize_thm10(&gen_rainbow_complete(5).unwrap()).unwrap(), None);
        let mut b = gen_extremal_thm10(9).unwrap().edit();
        b.set(1, 3, 1000);
        assert_eq!(recognize_thm10(&b.build().unwrap()).unwrap(), None);
        let sparse = ColoredGraph::validate(3, &[(0, 1, 0)]).unwrap();
        assert_eq!(recognize_thm10(&sparse), Err(ConstructionError::NotComplete));
    }

    #[test]
    fn bipartite_shape() {
        let g = gen_pc_bipartite(6).unwrap();
        assert_eq!(g.min_color_degree(), 3);
        assert!(enumerate_triangles(&g, false).is_empty());
        let g4 = gen_pc_bipartite(4).unwrap();
        assert_eq!(g4.color_count(), 2);
        assert_eq!(g4.max_mono_degree(), 1);
        assert_eq!(gen_pc_bipartite(10).unwrap().max_mono_degree(), 1);
        assert_eq!(gen_pc_bipartite(5), Err(ConstructionError::BadBipartiteOrder(5)));
    }

    #[test]
    fn random_is_deterministic() {
        let a = gen_random(8, 6, 42, Completeness::Complete).unwrap();
        let b = gen_random(8, 6, 42, Completeness::Complete).unwrap();
        assert_eq!(a, b);
        let mono = gen_random(5, 1, 99, Completeness::Complete).unwrap();
        assert_eq!(mono.color_count(), 1);
        assert_eq!(gen_random(5, 0, 1, Completeness::Complete), Err(ConstructionError::NoColors));
    }

    #[test]
    fn biased_sampler_meets_target() {
        for seed in 0..50 {
            let g = gen_biased_high_color_degree(9, 5, seed, Completeness::Complete).unwrap();
            assert!(g.min_color_degree() >= 5);
            assert!(g.is_complete());
        }
        assert!(gen_biased_high_color_degree(8, 1, 9, Completeness::Complete).is_ok());
        assert_eq!(
            gen_biased_high_color_degree(8, 8, 0, Completeness::Complete),
            Err(ConstructionError::InfeasibleTarget { n: 8, target: 8 })
        );
    }

    #[test]
    fn biased_sampler_reaches_the_bound() {
        // Fully merged draws sit exactly at the bound.
        let tight = (0..40)
            .filter_map(|s| gen_biased_high_color_degree(8, 4, s, Completeness::Complete).ok())
            .filter(|g| g.min_color_degree() == 4)
            .count();
        assert!(tight > 10);
    }
}
