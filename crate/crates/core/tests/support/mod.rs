#![allow(dead_code)]

pub mod oracles;

use proptest::prelude::*;
use rainbow_core::graph::ColoredGraph;

/// Graphs on 1..=max_n vertices; each pair is absent with probability
/// `1 / (palette + 1)` unless `complete`.
pub fn arb_graph(max_n: usize, palette: u64, complete: bool) -> impl Strategy<Value = ColoredGraph> {
    (1..=max_n).prop_flat_map(move |n| {
        let pairs = n * (n - 1) / 2;
        let hi = if complete { palette } else { palette + 1 };
        prop::collection::vec(0..hi, pairs).prop_map(move |cells| {
            let mut edges = Vec::new();
            let mut i = 0;
            for u in 0..n {
                for v in u + 1..n {
                    if cells[i] < palette {
                        edges.push((u, v, cells[i] * 7 + 3));
                    }
                    i += 1;
                }
            }
            ColoredGraph::validate(n, &edges).unwrap()
        })
    })
}
