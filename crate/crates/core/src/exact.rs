//! Exact minimum solver for all six variants.
//!
//! Candidate sizes are tried in increasing order; within a size, candidate
//! sets are enumerated in lexicographic order and the first certificate is
//! returned, so the witness is the lexicographically least minimum set.
//! Sets are bitmasks, which caps the solver at 64 vertices.
//!
//! For the secure connected variant the search is pruned with three facts
//! about minimum certificates on connected graphs: a single vertex suffices
//! exactly for complete graphs, the value is at least one more than the
//! domination number on non-complete graphs, and for `n >= 3` every
//! certificate contains all pendant and support vertices.

use std::time::{Duration, Instant};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::verify::{self, Variant};

/// Default vertex cap for exact solving.
pub const DEFAULT_MAX_N: usize = 20;
/// Bitmask width; no override can exceed it.
pub const HARD_MAX_N: usize = 64;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    ExactSearch,
    BlockFormula,
    ThresholdFormula,
    TrivialComplete,
}

impl Method {
    pub fn name(self) -> &'static str {
        match self {
            Method::ExactSearch => "exact_search",
            Method::BlockFormula => "block_formula",
            Method::ThresholdFormula => "threshold_formula",
            Method::TrivialComplete => "trivial_complete",
        }
    }
}

impl std::fmt::Display for Method {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

/// Optimum value of a variant together with a witness and bookkeeping.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SolveReport {
    pub variant: Variant,
    pub value: usize,
    pub witness: VertexSet,
    pub method: Method,
    pub elapsed: Duration,
    pub nodes_explored: u64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SolveOptions {
    /// Refuse graphs with more vertices than this.
    pub max_n: usize,
    /// Disable to run plain enumeration from size one with no forced
    /// vertices and no shortcuts. Used to audit the pruning.
    pub prune: bool,
}

impl Default for SolveOptions {
    fn default() -> Self {
        SolveOptions {
            max_n: DEFAULT_MAX_N,
            prune: true,
        }
    }
}

impl SolveOptions {
    pub fn unpruned() -> Self {
        SolveOptions {
            prune: false,
            ..Self::default()
        }
    }

    pub fn with_max_n(max_n: usize) -> Self {
        SolveOptions {
            max_n,
            ..Self::default()
        }
    }
}

/// Exact solve with default options.
pub fn solve(g: &Graph, variant: Variant) -> Result<SolveReport> {
    solve_with(g, variant, &SolveOptions::default())
}

pub fn solve_with(g: &Graph, variant: Variant, options: &SolveOptions) -> Result<SolveReport> {
    check_preconditions(g, variant, options)?;
    let start = Instant::now();
    let bits = BitGraph::new(g);
    let mut nodes = 0u64;

    let (mask, method) = if options.prune {
        pruned_search(&bits, g, variant, &mut nodes)
    } else {
        (
            bits.search(0, 1, &mut nodes, |s| bits.accepts(s, variant)),
            Method::ExactSearch,
        )
    };
    let mask = mask.ok_or_else(|| Error::domain(format!("no {variant} exists for this graph")))?;
    let witness = bits.to_set(mask);
    debug_assert!(verify::verify(g, &witness, variant));
    Ok(SolveReport {
        variant,
        value: witness.len(),
        witness,
        method,
        elapsed: start.elapsed(),
        nodes_explored: nodes,
    })
}

fn check_preconditions(g: &Graph, variant: Variant, options: &SolveOptions) -> Result<()> {
    let n = g.n();
    if n == 0 {
        return Err(Error::domain("graph has no vertices"));
    }
    if n > HARD_MAX_N {
        return Err(Error::Refused(format!(
            "exact search supports at most {HARD_MAX_N} vertices, graph has {n}"
        )));
    }
    if n > options.max_n {
        return Err(Error::Refused(format!(
            "graph has {n} vertices, exact search cap is {} (raise with --max-n)",
            options.max_n
        )));
    }
    if variant.requires_connected() && !g.is_connected() {
        return Err(Error::domain(format!(
            "{variant} requires a connected graph"
        )));
    }
    if variant.requires_no_isolated() && g.has_isolated_vertex() {
        return Err(Error::domain(format!(
            "{variant} requires a graph without isolated vertices"
        )));
    }
    Ok(())
}

fn pruned_search(
    bits: &BitGraph,
    g: &Graph,
    variant: Variant,
    nodes: &mut u64,
) -> (Option<u64>, Method) {
    let domination = |nodes: &mut u64| {
        bits.search(0, 1, nodes, |s| bits.dominates(s))
            .map(|s| s.count_ones() as usize)
            .unwrap_or(1)
    };
    let found = match variant {
        Variant::Ds => bits.search(0, 1, nodes, |s| bits.dominates(s)),
        Variant::Tds => bits.search(0, 2, nodes, |s| bits.totally_dominates(s)),
        Variant::Cds | Variant::Sds => {
            let lower = domination(nodes);
            bits.search(0, lower, nodes, |s| bits.accepts(s, variant))
        }
        Variant::Scds => {
            if g.is_complete() {
                // {0}
                return (Some(1), Method::TrivialComplete);
            }
            let lower = 1 + domination(nodes);
            let forced = if g.n() >= 3 {
                bits.mask_of(&g.leaves().union(&g.supports()))
            } else {
                0
            };
            bits.search(forced, lower, nodes, |s| bits.accepts(s, variant))
        }
        Variant::Stds => {
            let lower = bits
                .search(0, 2, nodes, |s| bits.totally_dominates(s))
                .map(|s| s.count_ones() as usize)
                .unwrap_or(2);
            bits.search(0, lower, nodes, |s| bits.accepts(s, variant))
        }
    };
    (found, Method::ExactSearch)
}

/// Bitmask view of a graph with at most 64 vertices.
struct BitGraph {
    n: usize,
    open: Vec<u64>,
    closed: Vec<u64>,
    full: u64,
}

impl BitGraph {
    fn new(g: &Graph) -> Self {
        let n = g.n();
        let open: Vec<u64> = g
            .vertices()
            .map(|v| g.adj(v).iter().fold(0u64, |acc, &w| acc | (1u64 << w)))
            .collect();
        let closed = open
            .iter()
            .enumerate()
            .map(|(v, &o)| o | (1u64 << v))
            .collect();
        let full = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
        BitGraph {
            n,
            open,
            closed,
            full,
        }
    }

    fn mask_of(&self, s: &VertexSet) -> u64 {
        s.iter().fold(0, |acc, &v| acc | (1u64 << v))
    }

    fn to_set(&self, mask: u64) -> VertexSet {
        bits(mask).collect()
    }

    fn dominates(&self, s: u64) -> bool {
        bits(s).fold(0, |acc, v| acc | self.closed[v]) == self.full
    }

    fn totally_dominates(&self, s: u64) -> bool {
        bits(s).fold(0, |acc, v| acc | self.open[v]) == self.full
    }

    fn connected(&self, s: u64) -> bool {
        if s == 0 {
            return false;
        }
        let mut reached = s & s.wrapping_neg();
        let mut frontier = reached;
        while frontier != 0 {
            let next = bits(frontier).fold(0, |acc, v| acc | self.open[v]) & s & !reached;
            reached |= next;
            frontier = next;
        }
        reached == s
    }

    fn base(&self, s: u64, base: Variant) -> bool {
        match base {
            Variant::Ds => self.dominates(s),
            Variant::Cds => self.dominates(s) && self.connected(s),
            Variant::Tds => self.totally_dominates(s),
            _ => unreachable!(),
        }
    }

    fn accepts(&self, s: u64, variant: Variant) -> bool {
        let base = variant.base();
        if !self.base(s, base) {
            return false;
        }
        if !variant.is_secure() {
            return true;
        }
        bits(self.full & !s).all(|u| {
            bits(self.open[u] & s).any(|v| self.base((s & !(1u64 << v)) | (1u64 << u), base))
        })
    }

    /// First accepted set of the smallest size `>= lower` that contains
    /// `forced`, scanning each size in lexicographic order.
    fn search(
        &self,
        forced: u64,
        lower: usize,
        nodes: &mut u64,
        accept: impl Fn(u64) -> bool,
    ) -> Option<u64> {
        let free: Vec<usize> = (0..self.n).filter(|&v| forced & (1u64 << v) == 0).collect();
        let fixed = forced.count_ones() as usize;
        for size in lower.max(fixed).max(1)..=self.n {
            let k = size - fixed;
            let mut idx: Vec<usize> = (0..k).collect();
            loop {
                let mask = idx.iter().fold(forced, |acc, &i| acc | (1u64 << free[i]));
                *nodes += 1;
                if accept(mask) {
                    return Some(mask);
                }
                // advance to the next k-combination of `free`
                let Some(i) = (0..k).rev().find(|&i| idx[i] < free.len() - k + i) else {
                    break;
                };
                idx[i] += 1;
                for j in i + 1..k {
                    idx[j] = idx[j - 1] + 1;
                }
            }
        }
        None
    }
}

fn bits(mut mask: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let v = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            Some(v)
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(n: usize) -> Graph {
        Graph::from_edges(n, (1..n).map(|v| (v - 1, v))).unwrap()
    }
    fn complete(n: usize) -> Graph {
        Graph::from_edges(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)))).unwrap()
    }

    #[test]
    fn complete_graph_is_trivial() {
        let r = solve(&complete(4), Variant::Scds).unwrap();
        assert_eq!(r.value, 1);
        assert_eq!(r.witness, VertexSet::from([0]));
        assert_eq!(r.method, Method::TrivialComplete);

        let plain = solve_with(&complete(4), Variant::Scds, &SolveOptions::unpruned()).unwrap();
        assert_eq!(plain.value, 1);
        assert_eq!(plain.method, Method::ExactSearch);
    }

    #[test]
    fn paths() {
        assert_eq!(solve(&path(4), Variant::Scds).unwrap().value, 4);
        assert_eq!(solve(&path(4), Variant::Ds).unwrap().value, 2);
        assert_eq!(
            solve(&path(4), Variant::Ds).unwrap().witness,
            VertexSet::from([0, 2])
        );
        assert_eq!(solve(&path(2), Variant::Scds).unwrap().value, 1);
        assert_eq!(solve(&path(4), Variant::Tds).unwrap().value, 2);
        assert_eq!(solve(&path(1), Variant::Ds).unwrap().value, 1);
    }

    #[test]
    fn preconditions() {
        let two = Graph::empty(2);
        assert!(matches!(solve(&two, Variant::Scds), Err(Error::Domain(_))));
        assert!(matches!(solve(&two, Variant::Tds), Err(Error::Domain(_))));
        assert_eq!(solve(&two, Variant::Ds).unwrap().value, 2);
        assert!(matches!(
            solve(&Graph::empty(0), Variant::Ds),
            Err(Error::Domain(_))
        ));
        assert!(matches!(
            solve(&path(1), Variant::Stds),
            Err(Error::Domain(_))
        ));
        assert!(matches!(
            solve(&path(21), Variant::Scds),
            Err(Error::Refused(_))
        ));
        assert_eq!(
            solve_with(&path(21), Variant::Scds, &SolveOptions::with_max_n(21))
                .unwrap()
                .value,
            21
        );
        assert!(matches!(
            solve_with(&path(65), Variant::Ds, &SolveOptions::with_max_n(100)),
            Err(Error::Refused(_))
        ));
    }

    #[test]
    fn combinations_cover_every_size() {
        let g = path(5);
        let bits = BitGraph::new(&g);
        let mut nodes = 0;
        // accept nothing: visits every subset of size >= 1 exactly once
        assert_eq!(bits.search(0, 1, &mut nodes, |_| false), None);
        assert_eq!(nodes, 31);
        let mut nodes = 0;
        assert_eq!(bits.search(0b10001, 1, &mut nodes, |_| false), None);
        assert_eq!(nodes, 8);
    }
}
