use std::fmt;
use std::time::Instant;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::exact::{Method, SolveReport};
use crate::graph::{Graph, VertexSet};
use crate::verify::Variant;

/// Vertex count up to which a failed split recognition searches for an
/// induced `2K2`, `C4` or `C5` to report.
const OBSTRUCTION_SEARCH_LIMIT: usize = 24;

/// Partition of the vertices into a clique and an independent set.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SplitPartition {
    pub clique: VertexSet,
    pub independent: VertexSet,
}

impl SplitPartition {
    /// Checks cover, disjointness, the clique and the independent set.
    pub fn is_valid_for(&self, g: &Graph) -> bool {
        self.validate(g).is_ok()
    }

    pub fn validate(&self, g: &Graph) -> Result<()> {
        let n = g.n();
        self.clique.check_within(n)?;
        self.independent.check_within(n)?;
        if self.clique.len() + self.independent.len() != n
            || self.clique.iter().any(|&v| self.independent.contains(v))
        {
            return Err(Error::domain(
                "partition does not cover every vertex exactly once",
            ));
        }
        let in_clique = self.clique.to_mask(n);
        for &v in &self.clique {
            let inside = g.adj(v).iter().filter(|&&w| in_clique[w]).count();
            if inside + 1 != self.clique.len() {
                return Err(Error::domain(format!(
                    "clique side is not a clique (vertex {v})"
                )));
            }
        }
        for &v in &self.independent {
            if let Some(&w) = g.adj(v).iter().find(|&&w| !in_clique[w]) {
                return Err(Error::domain(format!(
                    "independent side contains edge {}-{}",
                    v.min(w),
                    v.max(w)
                )));
            }
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ObstructionKind {
    TwoK2,
    C4,
    C5,
}

impl fmt::Display for ObstructionKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ObstructionKind::TwoK2 => "2K2",
            ObstructionKind::C4 => "C4",
            ObstructionKind::C5 => "C5",
        })
    }
}

/// An induced subgraph that no split graph contains.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Obstruction {
    pub kind: ObstructionKind,
    pub vertices: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SplitRejection {
    /// Present when the graph is small enough to search for one.
    pub obstruction: Option<Obstruction>,
}

impl fmt::Display for SplitRejection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.obstruction {
            Some(o) => write!(
                f,
                "not a split graph: induced {} on {:?}",
                o.kind, o.vertices
            ),
            None => f.write_str("not a split graph"),
        }
    }
}

/// Split recognition from the degree sequence: with degrees sorted
/// descending `d_1 >= ... >= d_n` and `m = max { i : d_i >= i - 1 }`, the
/// graph is split iff `Σ_{i<=m} d_i = m(m-1) + Σ_{i>m} d_i`, and then the
/// `m` highest-degree vertices form a clique.
pub fn recognize_split(g: &Graph) -> Result<SplitPartition, SplitRejection> {
    let n = g.n();
    let mut order: Vec<usize> = g.vertices().collect();
    order.sort_by(|&a, &b| g.degree(b).cmp(&g.degree(a)).then(a.cmp(&b)));
    let m = order
        .iter()
        .enumerate()
        .rev()
        .find(|&(i, &v)| g.degree(v) >= i)
        .map_or(0, |(i, _)| i + 1);
    let head: usize = order[..m].iter().map(|&v| g.degree(v)).sum();
    let tail: usize = order[m..].iter().map(|&v| g.degree(v)).sum();
    if head == m * m.saturating_sub(1) + tail {
        let partition = SplitPartition {
            clique: order[..m].iter().copied().collect(),
            independent: order[m..].iter().copied().collect(),
        };
        debug_assert!(partition.is_valid_for(g));
        return Ok(partition);
    }
    let obstruction = (n <= OBSTRUCTION_SEARCH_LIMIT)
        .then(|| find_obstruction(g))
        .flatten();
    Err(SplitRejection { obstruction })
}

fn find_obstruction(g: &Graph) -> Option<Obstruction> {
    let n = g.n();
    let classify = |vs: &[usize]| -> (usize, Vec<usize>) {
        let degrees: Vec<usize> = vs
            .iter()
            .map(|&u| vs.iter().filter(|&&w| g.has_edge(u, w)).count())
            .collect();
        (degrees.iter().sum::<usize>() / 2, degrees)
    };
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                for d in c + 1..n {
                    let vs = [a, b, c, d];
                    let (edges, degrees) = classify(&vs);
                    let kind = match edges {
                        2 if degrees.iter().all(|&x| x == 1) => ObstructionKind::TwoK2,
                        4 if degrees.iter().all(|&x| x == 2) => ObstructionKind::C4,
                        _ => continue,
                    };
                    return Some(Obstruction {
                        kind,
                        vertices: vs.to_vec(),
                    });
                }
            }
        }
    }
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                for d in c + 1..n {
                    for e in d + 1..n {
                        let vs = [a, b, c, d, e];
                        let (edges, degrees) = classify(&vs);
                        if edges == 5 && degrees.iter().all(|&x| x == 2) {
                            return Some(Obstruction {
                                kind: ObstructionKind::C5,
                                vertices: vs.to_vec(),
                            });
                        }
                    }
                }
            }
        }
    }
    None
}

/// Split partition with nested neighborhoods:
/// `N[x_1] ⊆ ... ⊆ N[x_p]` over the clique and `N(y_1) ⊇ ... ⊇ N(y_q)` over
/// the independent set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ThresholdOrdering {
    pub partition: SplitPartition,
    pub clique_order: Vec<usize>,
    pub independent_order: Vec<usize>,
}

impl ThresholdOrdering {
    /// Re-checks both chains by direct subset tests on consecutive entries.
    pub fn nesting_holds(&self, g: &Graph) -> bool {
        let mut mark = vec![false; g.n()];
        let closed_subset = |mark: &mut Vec<bool>, small: usize, big: usize| {
            mark[big] = true;
            for &w in g.adj(big) {
                mark[w] = true;
            }
            let ok = mark[small] && g.adj(small).iter().all(|&w| mark[w]);
            mark[big] = false;
            for &w in g.adj(big) {
                mark[w] = false;
            }
            ok
        };
        let open_subset = |mark: &mut Vec<bool>, small: usize, big: usize| {
            for &w in g.adj(big) {
                mark[w] = true;
            }
            let ok = g.adj(small).iter().all(|&w| mark[w]);
            for &w in g.adj(big) {
                mark[w] = false;
            }
            ok
        };
        self.clique_order
            .windows(2)
            .all(|w| closed_subset(&mut mark, w[0], w[1]))
            && self
                .independent_order
                .windows(2)
                .all(|w| open_subset(&mut mark, w[1], w[0]))
    }

    /// `x_p`, the clique vertex with the largest closed neighborhood.
    pub fn top(&self) -> Option<usize> {
        self.clique_order.last().copied()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ThresholdRejection {
    /// Vertices peeled before no isolated or dominating vertex remained.
    pub peeled: usize,
    pub remaining: usize,
}

impl fmt::Display for ThresholdRejection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "not a threshold graph: after peeling {} vertices, none of the remaining {} is isolated or dominating",
            self.peeled, self.remaining
        )
    }
}

/// Threshold recognition by peeling: repeatedly remove a vertex that is
/// isolated or dominating in what remains.
///
/// Removing a dominating vertex lowers every remaining degree by one and
/// removing an isolated vertex changes none, so the remaining degree order
/// never changes. Candidates therefore sit at the two ends of a single
/// degree-sorted list, giving `O(n + m)` overall.
pub fn recognize_threshold(g: &Graph) -> Result<ThresholdOrdering, ThresholdRejection> {
    let n = g.n();
    // counting sort by degree, ties by id
    let mut buckets = vec![Vec::new(); n.max(1)];
    for v in g.vertices() {
        buckets[g.degree(v)].push(v);
    }
    let sorted: Vec<usize> = buckets.into_iter().flatten().collect();

    let (mut lo, mut hi) = (0usize, n);
    let mut dominating_removed = 0usize;
    let mut peel_dominating = Vec::new();
    let mut peel_isolated = Vec::new();
    while hi - lo > 1 {
        let remaining = hi - lo;
        let low_vertex = sorted[lo];
        let high_vertex = sorted[hi - 1];
        if g.degree(low_vertex) == dominating_removed {
            peel_isolated.push(low_vertex);
            lo += 1;
        } else if g.degree(high_vertex) - dominating_removed == remaining - 1 {
            peel_dominating.push(high_vertex);
            dominating_removed += 1;
            hi -= 1;
        } else {
            return Err(ThresholdRejection {
                peeled: n - remaining,
                remaining,
            });
        }
    }
    // the last vertex joins the clique side with the smallest neighborhood
    let mut clique_order: Vec<usize> = Vec::with_capacity(peel_dominating.len() + 1);
    if lo < hi {
        clique_order.push(sorted[lo]);
    }
    clique_order.extend(peel_dominating.iter().rev());
    let independent_order: Vec<usize> = peel_isolated.iter().rev().copied().collect();

    let ordering = ThresholdOrdering {
        partition: SplitPartition {
            clique: clique_order.iter().copied().collect(),
            independent: independent_order.iter().copied().collect(),
        },
        clique_order,
        independent_order,
    };
    assert!(
        ordering.nesting_holds(g),
        "peeling produced an ordering that is not nested"
    );
    Ok(ordering)
}

/// Center of a star `K_{1,k}` with `k >= 2`.
pub fn star_center(g: &Graph) -> Option<usize> {
    let n = g.n();
    if n < 3 || g.m() != n - 1 {
        return None;
    }
    let center = g.vertices().find(|&v| g.degree(v) == n - 1)?;
    g.vertices()
        .all(|v| v == center || g.degree(v) == 1)
        .then_some(center)
}

/// `γ_sc` of a connected threshold graph.
///
/// Complete graphs give 1. Stars `K_{1,k}` (`k >= 2`) give `k + 1` with the
/// whole vertex set as witness; the `2 + l` count does not apply to them,
/// since the leaf set plus the center already contains every vertex.
/// Otherwise the value is `2 + l` for `l` pendant vertices, witnessed by
/// `{x_p, x_{p-1}} ∪ { v ∈ I : v ∈ N(x_p) ∖ N(x_{p-1}) }`.
pub fn gamma_sc_threshold(g: &Graph) -> Result<SolveReport> {
    let start = Instant::now();
    let ordering =
        recognize_threshold(g).map_err(|rejection| Error::domain(rejection.to_string()))?;
    if !g.is_connected() {
        return Err(Error::domain(
            "threshold formula requires a connected graph",
        ));
    }
    let report = |value, witness, method| SolveReport {
        variant: Variant::Scds,
        value,
        witness,
        method,
        elapsed: start.elapsed(),
        nodes_explored: 0,
    };
    if g.is_complete() {
        return Ok(report(1, VertexSet::from([0]), Method::TrivialComplete));
    }
    if star_center(g).is_some() {
        return Ok(report(
            g.n(),
            g.vertices().collect(),
            Method::ThresholdFormula,
        ));
    }

    let p = ordering.clique_order.len();
    assert!(
        p >= 2,
        "connected non-complete non-star threshold graph with a clique side of size {p}"
    );
    let top = ordering.clique_order[p - 1];
    let second = ordering.clique_order[p - 2];
    let mut mark = vec![false; g.n()];
    for &w in g.adj(second) {
        mark[w] = true;
    }
    let independent = &ordering.partition.independent;
    let mut witness: Vec<usize> = vec![top, second];
    witness.extend(
        g.adj(top)
            .iter()
            .copied()
            .filter(|&v| !mark[v] && independent.contains(v)),
    );
    let witness = VertexSet::from(witness);
    let pendants = g.vertices().filter(|&v| g.degree(v) == 1).count();
    let value = 2 + pendants;
    assert_eq!(
        value,
        witness.len(),
        "pendant count and witness construction disagree"
    );
    Ok(report(value, witness, Method::ThresholdFormula))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::{complete, cycle, path, star};

    fn bowtie() -> Graph {
        Graph::from_edges(5, [(0, 1), (0, 2), (1, 2), (2, 3), (2, 4), (3, 4)]).unwrap()
    }

    /// C = {v=0, u=1}, I = {w1=2 adjacent to u and v, w2=3 adjacent to v}.
    fn four_vertex_threshold() -> Graph {
        Graph::from_edges(4, [(0, 1), (0, 2), (1, 2), (0, 3)]).unwrap()
    }

    /// Triangle u=0, v=1, z=2 with w=3 adjacent to u and v.
    fn paw_like() -> Graph {
        Graph::from_edges(4, [(0, 1), (0, 2), (1, 2), (0, 3), (1, 3)]).unwrap()
    }

    #[test]
    fn split_recognition() {
        let k4 = recognize_split(&complete(4)).unwrap();
        assert_eq!(k4.clique, VertexSet::from([0, 1, 2, 3]));
        assert!(k4.independent.is_empty());

        let c4 = recognize_split(&cycle(4)).unwrap_err();
        assert_eq!(c4.obstruction.unwrap().kind, ObstructionKind::C4);
        let c5 = recognize_split(&cycle(5)).unwrap_err();
        assert_eq!(c5.obstruction.unwrap().kind, ObstructionKind::C5);
        let two_k2 = Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap();
        assert_eq!(
            recognize_split(&two_k2)
                .unwrap_err()
                .obstruction
                .unwrap()
                .kind,
            ObstructionKind::TwoK2
        );

        // {0,1,3,4} induces 2K2
        let b = recognize_split(&bowtie()).unwrap_err();
        assert_eq!(b.obstruction.unwrap().vertices, vec![0, 1, 3, 4]);
        let paw = Graph::from_edges(4, [(0, 1), (0, 2), (1, 2), (2, 3)]).unwrap();
        let p = recognize_split(&paw).unwrap();
        assert!(p.is_valid_for(&paw));
        assert_eq!(p.clique.len(), 3);

        assert!(recognize_split(&Graph::empty(0)).is_ok());
        assert!(recognize_split(&Graph::empty(3)).is_ok());
    }

    #[test]
    fn partition_validation_errors() {
        let p3 = path(3);
        let bad = SplitPartition {
            clique: VertexSet::from([0, 2]),
            independent: VertexSet::from([1]),
        };
        assert!(bad.validate(&p3).is_err());
        let overlap = SplitPartition {
            clique: VertexSet::from([0, 1]),
            independent: VertexSet::from([1, 2]),
        };
        assert!(overlap.validate(&p3).is_err());
        let good = SplitPartition {
            clique: VertexSet::from([0, 1]),
            independent: VertexSet::from([2]),
        };
        assert!(good.validate(&p3).is_ok());
    }

    #[test]
    fn threshold_recognition() {
        let s = recognize_threshold(&star(3)).unwrap();
        assert_eq!(s.top(), Some(0));
        assert!(recognize_threshold(&path(4)).is_err());
        assert!(recognize_threshold(&cycle(4)).is_err());

        let g = four_vertex_threshold();
        let ordering = recognize_threshold(&g).unwrap();
        assert_eq!(ordering.top(), Some(0));
        assert!(ordering.nesting_holds(&g));
        assert!(ordering.partition.is_valid_for(&g));
    }

    #[test]
    fn threshold_formula_values() {
        let g = four_vertex_threshold();
        let r = gamma_sc_threshold(&g).unwrap();
        assert_eq!(r.value, 3);
        assert_eq!(r.method, Method::ThresholdFormula);
        assert!(r.witness.contains(0) && r.witness.contains(3));

        assert_eq!(gamma_sc_threshold(&paw_like()).unwrap().value, 2);
        assert_eq!(gamma_sc_threshold(&star(3)).unwrap().value, 4);
        assert_eq!(gamma_sc_threshold(&path(3)).unwrap().value, 3);
        assert_eq!(gamma_sc_threshold(&complete(5)).unwrap().value, 1);
        assert_eq!(gamma_sc_threshold(&Graph::empty(1)).unwrap().value, 1);

        assert!(matches!(
            gamma_sc_threshold(&path(4)),
            Err(Error::Domain(_))
        ));
        assert!(matches!(
            gamma_sc_threshold(&Graph::empty(3)),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn stars() {
        assert_eq!(star_center(&star(2)), Some(0));
        assert_eq!(star_center(&star(5)), Some(0));
        assert_eq!(star_center(&path(2)), None);
        assert_eq!(star_center(&path(4)), None);
        assert_eq!(star_center(&complete(3)), None);
    }
}
