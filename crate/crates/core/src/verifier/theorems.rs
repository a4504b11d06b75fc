//! Registry of the checked statements. Every threshold is compared in
//! exact integer form, e.g. `2·δ^c ≥ n + k`.

use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use super::VerifyError;
use crate::constructions::{recognize_thm10, Thm10Certificate};
use crate::graph::ColoredGraph;
use crate::rainbow::{
    edge_disjoint_at_vertex, exists_rainbow_triangle, find_pc_cycle_le4, has_disjoint_packing,
    rainbow_counts, two_disjoint_pc_cycles, Packing, PcCycle, Triangle,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TheoremId {
    /// `2δ^c ≥ n+1` in `K_n`: every vertex lies in a rainbow triangle.
    T1,
    /// `2δ^c ≥ n+k` in `K_n`: every vertex lies in `k` rainbow triangles.
    T3,
    /// `2δ^c ≥ n-1+2k` in `K_n`: every vertex has `k` edge-disjoint ones.
    F4,
    /// `2δ^c ≥ n` in `K_n`: some rainbow triangle.
    T8,
    /// `2δ^c ≥ n-1`, rainbow-free `K_n`: the extremal pair structure.
    T10,
    /// `n ≥ 8`, `2δ^c ≥ n+1` in `K_n`: two vertex-disjoint rainbow triangles.
    T11,
    /// `2δ^c ≥ n-3+3k` in `K_n`: `k` vertex-disjoint rainbow triangles.
    F13,
    /// `n ≥ 7`, `2δ^c ≥ n+2`, any graph: two vertex-disjoint rainbow triangles.
    T14,
    /// `2δ^c ≥ n+1`, any graph: some rainbow triangle.
    T15,
    /// `2δ^c ≥ n`, rainbow-free graph: balanced complete bipartite (or the
    /// order-4 exceptions).
    T16,
    /// `Δ^mon ≤ n-2` in `K_n`: a properly colored cycle of length ≤ 4.
    T5,
    /// `Δ^mon ≤ n-5` in `K_n`: two disjoint such cycles.
    T6,
}

pub const ALL_THEOREMS: [TheoremId; 12] = [
    TheoremId::T1,
    TheoremId::T3,
    TheoremId::F4,
    TheoremId::T8,
    TheoremId::T10,
    TheoremId::T11,
    TheoremId::F13,
    TheoremId::T14,
    TheoremId::T15,
    TheoremId::T16,
    TheoremId::T5,
    TheoremId::T6,
];

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Scope {
    Complete,
    General,
}

impl TheoremId {
    pub fn scope(self) -> Scope {
        match self {
            TheoremId::T14 | TheoremId::T15 | TheoremId::T16 => Scope::General,
            _ => Scope::Complete,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            TheoremId::T1 => "T1",
            TheoremId::T3 => "T3",
            TheoremId::F4 => "F4",
            TheoremId::T8 => "T8",
            TheoremId::T10 => "T10",
            TheoremId::T11 => "T11",
            TheoremId::F13 => "F13",
            TheoremId::T14 => "T14",
            TheoremId::T15 => "T15",
            TheoremId::T16 => "T16",
            TheoremId::T5 => "T5",
            TheoremId::T6 => "T6",
        }
    }

    /// Whether the statement is parameterized by `k`.
    pub fn uses_k(self) -> bool {
        matches!(self, TheoremId::T3 | TheoremId::F4 | TheoremId::F13)
    }

    /// Smallest `δ^c` the hypothesis allows on `n` vertices, when the
    /// hypothesis contains a color-degree threshold. Graphs below it fail
    /// the hypothesis regardless of anything else.
    pub fn min_color_degree_required(self, n: usize, k: usize) -> Option<usize> {
        // Smallest d with 2d ≥ rhs.
        let need = |rhs: i64| (rhs.max(0) as usize).div_ceil(2);
        let (n, k) = (n as i64, k as i64);
        match self {
            TheoremId::T1 | TheoremId::T11 | TheoremId::T15 => Some(need(n + 1)),
            TheoremId::T3 => Some(need(n + k)),
            TheoremId::F4 => Some(need(n - 1 + 2 * k)),
            TheoremId::T8 | TheoremId::T16 => Some(need(n)),
            TheoremId::T10 => Some(need(n - 1)),
            TheoremId::F13 => Some(need(n - 3 + 3 * k)),
            TheoremId::T14 => Some(need(n + 2)),
            TheoremId::T5 | TheoremId::T6 => None,
        }
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for TheoremId {
    type Err = VerifyError;

    fn from_str(s: &str) -> Result<Self, VerifyError> {
        ALL_THEOREMS
            .iter()
            .copied()
            .find(|t| t.name().eq_ignore_ascii_case(s))
            .ok_or(VerifyError::UnknownTheorem)
    }
}

/// Evidence attached to a conclusion check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Witness {
    /// Rainbow triangles through each vertex (or edge-disjoint ones at each
    /// vertex for F4).
    VertexCounts(Vec<usize>),
    Triangle(Option<Triangle>),
    Certificate(Option<Thm10Certificate>),
    Packing(Option<Packing>),
    /// Bipartition found (for T16), if any.
    Bipartition(Option<(u64, u64)>),
    Cycle(Option<PcCycle>),
    CyclePair(Option<(PcCycle, PcCycle)>),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Conclusion {
    pub holds: bool,
    pub witness: Witness,
}

fn check_scope(g: &ColoredGraph, id: TheoremId) -> Result<(), VerifyError> {
    if id.scope() == Scope::Complete && !g.is_complete() {
        return Err(VerifyError::ScopeMismatch(id));
    }
    Ok(())
}

/// Evaluates the hypothesis of `id` on `g`. `k` is ignored by statements
/// that have no parameter.
pub fn check_hypothesis(g: &ColoredGraph, id: TheoremId, k: usize) -> Result<bool, VerifyError> {
    check_scope(g, id)?;
    let n = g.n() as i64;
    let k = k as i64;
    let dc2 = 2 * g.min_color_degree() as i64;
    let mon = g.max_mono_degree() as i64;
    let rainbow_free = || exists_rainbow_triangle(g).is_none();
    Ok(match id {
        TheoremId::T1 | TheoremId::T15 => dc2 >= n + 1,
        TheoremId::T3 => dc2 >= n + k,
        TheoremId::F4 => dc2 >= n - 1 + 2 * k,
        TheoremId::T8 => dc2 >= n,
        TheoremId::T10 => dc2 >= n - 1 && rainbow_free(),
        TheoremId::T11 => n >= 8 && dc2 >= n + 1,
        TheoremId::F13 => dc2 >= n - 3 + 3 * k,
        TheoremId::T14 => n >= 7 && dc2 >= n + 2,
        TheoremId::T16 => dc2 >= n && rainbow_free(),
        TheoremId::T5 => mon <= n - 2,
        TheoremId::T6 => mon <= n - 5,
    })
}

/// Evaluates the conclusion of `id` on `g`, returning a witness either way.
pub fn check_conclusion(g: &ColoredGraph, id: TheoremId, k: usize) -> Result<Conclusion, VerifyError> {
    check_scope(g, id)?;
    let n = g.n();
    let packing_of = |k: usize| has_disjoint_packing(g, k).map_err(VerifyError::from);
    Ok(match id {
        TheoremId::T1 | TheoremId::T3 => {
            let need = if id == TheoremId::T1 { 1 } else { k };
            let counts = rainbow_counts(g);
            Conclusion {
                holds: counts.iter().all(|&c| c >= need),
                witness: Witness::VertexCounts(counts),
            }
        }
        TheoremId::F4 => {
            let counts: Vec<usize> = (0..n).map(|v| edge_disjoint_at_vertex(g, v).len()).collect();
            Conclusion {
                holds: counts.iter().all(|&c| c >= k),
                witness: Witness::VertexCounts(counts),
            }
        }
        TheoremId::T8 | TheoremId::T15 => {
            let t = exists_rainbow_triangle(g);
            Conclusion {
                holds: t.is_some(),
                witness: Witness::Triangle(t),
            }
        }
        TheoremId::T10 => {
            let cert = recognize_thm10(g).map_err(|_| VerifyError::ScopeMismatch(id))?;
            Conclusion {
                holds: cert.is_some(),
                witness: Witness::Certificate(cert),
            }
        }
        TheoremId::T11 | TheoremId::T14 | TheoremId::F13 => {
            let want = if id == TheoremId::F13 { k } else { 2 };
            let p = packing_of(want)?;
            Conclusion {
                holds: p.is_some(),
                witness: Witness::Packing(p),
            }
        }
        TheoremId::T16 => {
            let parts = balanced_complete_bipartition(g).filter(|_| g.max_mono_degree() <= 1);
            let exception = n == 4 && g.edge_count() >= 5;
            Conclusion {
                holds: parts.is_some() || exception,
                witness: Witness::Bipartition(parts),
            }
        }
        TheoremId::T5 => {
            let c = find_pc_cycle_le4(g);
            Conclusion {
                holds: c.is_some(),
                witness: Witness::Cycle(c),
            }
        }
        TheoremId::T6 => {
            let pair = two_disjoint_pc_cycles(g);
            Conclusion {
                holds: pair.is_some(),
                witness: Witness::CyclePair(pair),
            }
        }
    })
}

/// Sides `(A, B)` if `g` is exactly `K_{n/2,n/2}` (as a graph).
fn balanced_complete_bipartition(g: &ColoredGraph) -> Option<(u64, u64)> {
    let n = g.n();
    if n % 2 == 1 || n < 2 {
        return None;
    }
    let b = g.neighbors(0).0;
    let a = g.vertices().0 & !b;
    let h = n as u32 / 2;
    if a.count_ones() != h || b.count_ones() != h {
        return None;
    }
    let ok = (0..n).all(|v| {
        let expected = if a >> v & 1 == 1 { b } else { a };
        g.neighbors(v).0 == expected
    });
    ok.then_some((a, b))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{gen_construction2, gen_extremal_thm10, gen_pc_bipartite, gen_rainbow_complete};

    #[test]
    fn parses_ids() {
        for t in ALL_THEOREMS {
            let name = alloc::format!("{t}");
            assert_eq!(name.parse::<TheoremId>().unwrap(), t);
            assert_eq!(name.to_lowercase().parse::<TheoremId>().unwrap(), t);
        }
        assert_eq!("T2".parse::<TheoremId>(), Err(VerifyError::UnknownTheorem));
        assert_eq!("".parse::<TheoremId>(), Err(VerifyError::UnknownTheorem));
    }

    #[test]
    fn hypotheses() {
        let bip = gen_pc_bipartite(10).unwrap();
        assert!(!check_hypothesis(&bip, TheoremId::T15, 1).unwrap());
        assert!(check_hypothesis(&bip, TheoremId::T16, 1).unwrap());
        assert!(check_hypothesis(&gen_rainbow_complete(8).unwrap(), TheoremId::T11, 1).unwrap());
        assert!(!check_hypothesis(&gen_rainbow_complete(7).unwrap(), TheoremId::T11, 1).unwrap());
        assert!(check_hypothesis(&gen_extremal_thm10(5).unwrap(), TheoremId::T10, 1).unwrap());
        assert_eq!(
            check_hypothesis(&bip, TheoremId::T8, 1),
            Err(VerifyError::ScopeMismatch(TheoremId::T8))
        );
    }

    #[test]
    fn conclusions() {
        let c = check_conclusion(&gen_rainbow_complete(6).unwrap(), TheoremId::T11, 1).unwrap();
        assert!(c.holds);
        let Witness::Packing(Some(p)) = c.witness else {
            panic!("expected a packing")
        };
        assert_eq!(p.len(), 2);

        let c = check_conclusion(&gen_construction2(4).unwrap(), TheoremId::T1, 1).unwrap();
        assert!(!c.holds);
        assert!(matches!(c.witness, Witness::VertexCounts(ref v) if v[0] == 0));

        let c = check_conclusion(&gen_extremal_thm10(5).unwrap(), TheoremId::T10, 1).unwrap();
        assert!(c.holds && matches!(c.witness, Witness::Certificate(Some(_))));

        let c = check_conclusion(&gen_pc_bipartite(6).unwrap(), TheoremId::T16, 1).unwrap();
        assert!(c.holds);
        let k4 = gen_rainbow_complete(4).unwrap();
        assert!(check_conclusion(&k4, TheoremId::T16, 1).unwrap().holds);
        assert!(!check_conclusion(&gen_rainbow_complete(5).unwrap(), TheoremId::T16, 1).unwrap().holds);
    }

    #[test]
    fn thresholds_are_exact() {
        assert_eq!(TheoremId::T8.min_color_degree_required(5, 1), Some(3));
        assert_eq!(TheoremId::T8.min_color_degree_required(6, 1), Some(3));
        assert_eq!(TheoremId::T3.min_color_degree_required(10, 3), Some(7));
        assert_eq!(TheoremId::T10.min_color_degree_required(5, 1), Some(2));
        assert_eq!(TheoremId::F13.min_color_degree_required(3, 1), Some(2));
        assert_eq!(TheoremId::T5.min_color_degree_required(5, 1), None);
    }
}
