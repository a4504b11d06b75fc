//! Maximum cardinality matching in general graphs (Edmonds' blossom
//! algorithm, augmenting from each exposed vertex in turn).

use alloc::collections::VecDeque;
use alloc::vec;
use alloc::vec::Vec;

use crate::graph::{Vertex, VertexSet};

const NONE: usize = usize::MAX;

/// Returns `mate[v]` for a maximum matching of the graph whose adjacency
/// rows are `adj` (bit `w` of `adj[v]` set iff `vw` is an edge).
pub fn maximum_matching(adj: &[u64]) -> Vec<Option<Vertex>> {
    let n = adj.len();
    let mut m = Matcher {
        adj,
        mate: vec![NONE; n],
        parent: vec![NONE; n],
        base: (0..n).collect(),
        used: vec![false; n],
        blossom: vec![false; n],
        queue: VecDeque::with_capacity(n),
    };
    // Greedy start; augmenting paths then only fix the remainder.
    for v in 0..n {
        if m.mate[v] == NONE {
            if let Some(w) = VertexSet(adj[v]).iter().find(|&w| m.mate[w] == NONE) {
                m.mate[v] = w;
                m.mate[w] = v;
            }
        }
    }
    for root in 0..n {
        if m.mate[root] == NONE {
            if let Some(end) = m.find_augmenting_path(root) {
                m.augment(end);
            }
        }
    }
    m.mate.iter().map(|&w| (w != NONE).then_some(w)).collect()
}

struct Matcher<'a> {
    adj: &'a [u64],
    mate: Vec<usize>,
    parent: Vec<usize>,
    base: Vec<usize>,
    used: Vec<bool>,
    blossom: Vec<bool>,
    queue: VecDeque<usize>,
}

impl Matcher<'_> {
    fn find_augmenting_path(&mut self, root: usize) -> Option<usize> {
        let n = self.adj.len();
        self.used.fill(false);
        self.parent.fill(NONE);
        for (i, b) in self.base.iter_mut().enumerate() {
            *b = i;
        }
        self.used[root] = true;
        self.queue.clear();
        self.queue.push_back(root);

        while let Some(v) = self.queue.pop_front() {
            for to in VertexSet(self.adj[v]) {
                if self.base[v] == self.base[to] || self.mate[v] == to {
                    continue;
                }
                if to == root || (self.mate[to] != NONE && self.parent[self.mate[to]] != NONE) {
                    // Odd cycle: contract the blossom onto its base.
                    let cur = self.lca(v, to);
                    self.blossom.fill(false);
                    self.mark_path(v, cur, to);
                    self.mark_path(to, cur, v);
                    for i in 0..n {
                        if self.blossom[self.base[i]] {
                            self.base[i] = cur;
                            if !self.used[i] {
                                self.used[i] = true;
                                self.queue.push_back(i);
                            }
                        }
                    }
                } else if self.parent[to] == NONE {
                    self.parent[to] = v;
                    if self.mate[to] == NONE {
                        return Some(to);
                    }
                    let next = self.mate[to];
                    self.used[next] = true;
                    self.queue.push_back(next);
                }
            }
        }
        None
    }

    fn lca(&self, mut a: usize, mut b: usize) -> usize {
        let mut seen = vec![false; self.adj.len()];
        loop {
            a = self.base[a];
            seen[a] = true;
            if self.mate[a] == NONE {
                break;
            }
            a = self.parent[self.mate[a]];
        }
        loop {
            b = self.base[b];
            if seen[b] {
                return b;
            }
            b = self.parent[self.mate[b]];
        }
    }

    fn mark_path(&mut self, mut v: usize, b: usize, mut child: usize) {
        while self.base[v] != b {
            self.blossom[self.base[v]] = true;
            self.blossom[self.base[self.mate[v]]] = true;
            self.parent[v] = child;
            child = self.mate[v];
            v = self.parent[self.mate[v]];
        }
    }

    fn augment(&mut self, mut v: usize) {
        while v != NONE {
            let pv = self.parent[v];
            let next = self.mate[pv];
            self.mate[v] = pv;
            self.mate[pv] = v;
            v = next;
        }
    }
}
