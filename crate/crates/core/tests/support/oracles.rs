//! Brute-force reference implementations. They read nothing but
//! `ColoredGraph::n` and `ColoredGraph::color`, and share no code with the
//! engine.

#![allow(dead_code)]

use rainbow_core::graph::ColoredGraph;
use rainbow_core::Vertex;

fn rainbow(g: &ColoredGraph, a: Vertex, b: Vertex, c: Vertex) -> bool {
    match (g.color(a, b), g.color(a, c), g.color(b, c)) {
        (Some(x), Some(y), Some(z)) => x != y && x != z && y != z,
        _ => false,
    }
}

/// All rainbow triangles as sorted vertex triples, lexicographic.
pub fn rainbow_triples(g: &ColoredGraph) -> Vec<[Vertex; 3]> {
    let n = g.n();
    let mut out = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                if rainbow(g, a, b, c) {
                    out.push([a, b, c]);
                }
            }
        }
    }
    out
}

pub fn rainbow_counts(g: &ColoredGraph) -> Vec<usize> {
    let mut counts = vec![0; g.n()];
    for t in rainbow_triples(g) {
        for v in t {
            counts[v] += 1;
        }
    }
    counts
}

pub fn color_degree(g: &ColoredGraph, v: Vertex) -> usize {
    let mut seen = Vec::new();
    for w in 0..g.n() {
        if let Some(c) = g.color(v, w) {
            if !seen.contains(&c) {
                seen.push(c);
            }
        }
    }
    seen.len()
}

pub fn min_color_degree(g: &ColoredGraph) -> usize {
    (0..g.n()).map(|v| color_degree(g, v)).min().unwrap_or(0)
}

/// Largest number of pairwise vertex-disjoint rainbow triangles, by trying
/// every subset of triangles that avoids collisions.
pub fn max_vertex_disjoint(g: &ColoredGraph) -> usize {
    fn go(ts: &[[Vertex; 3]], i: usize, used: &mut Vec<bool>) -> usize {
        if i == ts.len() {
            return 0;
        }
        let skip = go(ts, i + 1, used);
        let t = ts[i];
        if t.iter().any(|&v| used[v]) {
            return skip;
        }
        for &v in &t {
            used[v] = true;
        }
        let take = 1 + go(ts, i + 1, used);
        for &v in &t {
            used[v] = false;
        }
        skip.max(take)
    }
    go(&rainbow_triples(g), 0, &mut vec![false; g.n()])
}

/// Largest set of rainbow triangles through `v` that pairwise share no
/// edge: a maximum matching of the link, found by trying every matching.
pub fn max_edge_disjoint_at(g: &ColoredGraph, v: Vertex) -> usize {
    let n = g.n();
    let link: Vec<(Vertex, Vertex)> = (0..n)
        .flat_map(|a| (a + 1..n).map(move |b| (a, b)))
        .filter(|&(a, b)| a != v && b != v && rainbow(g, v, a, b))
        .collect();
    fn go(link: &[(Vertex, Vertex)], i: usize, used: &mut Vec<bool>) -> usize {
        if i == link.len() {
            return 0;
        }
        let skip = go(link, i + 1, used);
        let (a, b) = link[i];
        if used[a] || used[b] {
            return skip;
        }
        used[a] = true;
        used[b] = true;
        let take = 1 + go(link, i + 1, used);
        used[a] = false;
        used[b] = false;
        skip.max(take)
    }
    go(&link, 0, &mut vec![false; n])
}

/// Bell numbers from the Bell triangle.
pub fn bell_triangle(m: usize) -> u128 {
    let mut row = vec![1u128];
    for _ in 0..m {
        let mut next = vec![*row.last().unwrap()];
        for &x in &row {
            let last = *next.last().unwrap();
            next.push(last + x);
        }
        row = next;
    }
    row[0]
}

/// Direct check of the extremal structure for a proposed hub and parts:
/// every color-degree is `t`; the hub reaches part `i` in `colors[i]` and
/// nothing else; edges from part `i` to part `j` use only
/// `colors[i], colors[j]`, and each vertex of part `i` sees `colors[j]`
/// on part `j`; internal edges use a hub color, namely its own when `t ≥ 3`.
pub fn thm10_holds(g: &ColoredGraph, hub: Vertex, parts: &[[Vertex; 2]], colors: &[u32]) -> bool {
    let n = g.n();
    let t = (n.wrapping_sub(1)) / 2;
    if n % 2 == 0 || parts.len() != t || colors.len() != t {
        return false;
    }
    let mut covered = vec![false; n];
    covered[hub] = true;
    for p in parts {
        for &v in p {
            if covered[v] {
                return false;
            }
            covered[v] = true;
        }
    }
    if covered.contains(&false) {
        return false;
    }
    if (0..n).any(|v| color_degree(g, v) != t) {
        return false;
    }
    for i in 0..t {
        if colors[..i].contains(&colors[i]) {
            return false;
        }
        for &v in &parts[i] {
            if g.color(hub, v) != Some(colors[i]) {
                return false;
            }
        }
        let inner = g.color(parts[i][0], parts[i][1]);
        let inner_ok = match inner {
            Some(c) if t >= 3 => c == colors[i],
            Some(c) => colors.contains(&c),
            None => false,
        };
        if !inner_ok {
            return false;
        }
        for j in 0..t {
            if i == j {
                continue;
            }
            for &u in &parts[i] {
                let seen: Vec<u32> = parts[j].iter().filter_map(|&w| g.color(u, w)).collect();
                if seen.len() != 2
                    || seen.iter().any(|&c| c != colors[i] && c != colors[j])
                    || !seen.contains(&colors[j])
                {
                    return false;
                }
            }
        }
    }
    true
}
