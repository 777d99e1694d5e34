//! Simple undirected graphs over dense vertex ids, vertex sets, and the
//! edge-list text format used for interchange.
//!
//! The edge-list format is line oriented:
//!
//! ```text
//! # comment
//! p <n> <m>
//! <u> <v>
//! ```
//!
//! The `p` header is optional. Without it the vertex count is one more than
//! the largest id seen. Serialization is canonical: header first, then each
//! edge once as `u v` with `u < v`, sorted lexicographically.

use std::collections::VecDeque;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest vertex count accepted from external input.
pub const MAX_VERTICES: usize = 1 << 24;

/// An immutable simple undirected graph on vertices `0..n`.
///
/// Adjacency lists are sorted ascending, symmetric, and free of self-loops
/// and duplicates.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
    m: usize,
}

impl Graph {
    /// Graph with `n` vertices and no edges.
    pub fn empty(n: usize) -> Self {
        Graph {
            adj: vec![Vec::new(); n],
            m: 0,
        }
    }

    /// Builds a graph from an edge iterator. Duplicate edges (in either
    /// orientation) are collapsed.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        Self::from_edges_counting(n, edges).map(|(g, _)| g)
    }

    /// Like [`Graph::from_edges`], also returning how many duplicate edges
    /// were dropped.
    pub(crate) fn from_edges_counting<I>(n: usize, edges: I) -> Result<(Self, usize)>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut adj = vec![Vec::new(); n];
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::domain(format!(
                    "edge ({u}, {v}) references a vertex outside 0..{n}"
                )));
            }
            if u == v {
                return Err(Error::domain(format!("self-loop at vertex {u}")));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        let mut doubled = 0usize;
        let mut duplicates = 0usize;
        for list in &mut adj {
            list.sort_unstable();
            let before = list.len();
            list.dedup();
            duplicates += before - list.len();
            doubled += list.len();
        }
        // each duplicate edge was removed from both endpoint lists
        Ok((
            Graph {
                adj,
                m: doubled / 2,
            },
            duplicates / 2,
        ))
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn vertices(&self) -> std::ops::Range<usize> {
        0..self.adj.len()
    }

    /// Sorted open neighborhood. Panics if `v` is out of range.
    pub fn adj(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    /// Checked open neighborhood `N(v)`.
    pub fn neighbors(&self, v: usize) -> Result<VertexSet> {
        self.check_vertex(v)?;
        Ok(VertexSet(self.adj[v].clone()))
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n() && self.adj[u].binary_search(&v).is_ok()
    }

    pub fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.n() {
            Ok(())
        } else {
            Err(Error::domain(format!(
                "vertex {v} is not in the graph (n = {})",
                self.n()
            )))
        }
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    pub fn is_complete(&self) -> bool {
        let n = self.n();
        n > 0 && self.adj.iter().all(|list| list.len() + 1 == n)
    }

    pub fn is_connected(&self) -> bool {
        self.n() > 0 && self.components(None).count == 1
    }

    pub fn has_isolated_vertex(&self) -> bool {
        self.adj.iter().any(Vec::is_empty)
    }

    /// Pendant vertices (degree exactly one).
    pub fn leaves(&self) -> VertexSet {
        self.vertices().filter(|&v| self.degree(v) == 1).collect()
    }

    /// Support vertices: neighbors of pendant vertices.
    pub fn supports(&self) -> VertexSet {
        self.vertices()
            .filter(|&v| self.degree(v) == 1)
            .map(|v| self.adj[v][0])
            .collect()
    }

    /// `N[S] = S ∪ N(S)`.
    pub fn closed_neighborhood_of_set(&self, s: &VertexSet) -> Result<VertexSet> {
        s.check_within(self.n())?;
        let mut mark = vec![false; self.n()];
        for &v in s.iter() {
            mark[v] = true;
            for &w in &self.adj[v] {
                mark[w] = true;
            }
        }
        Ok(VertexSet::from_mask(&mark))
    }

    /// Connected components of the subgraph induced by `restrict` (or the
    /// whole graph). Component ids are assigned in order of first discovery
    /// when scanning vertices in ascending order.
    pub fn components(&self, restrict: Option<&VertexSet>) -> ComponentLabeling {
        let n = self.n();
        let allowed = match restrict {
            Some(s) => {
                let mut mask = vec![false; n];
                for &v in s.iter().filter(|&&v| v < n) {
                    mask[v] = true;
                }
                mask
            }
            None => vec![true; n],
        };
        self.components_masked(&allowed)
    }

    pub(crate) fn components_masked(&self, allowed: &[bool]) -> ComponentLabeling {
        let n = self.n();
        let mut component = vec![None; n];
        let mut count = 0;
        let mut queue = VecDeque::new();
        for start in 0..n {
            if !allowed[start] || component[start].is_some() {
                continue;
            }
            component[start] = Some(count);
            queue.push_back(start);
            while let Some(u) = queue.pop_front() {
                for &w in &self.adj[u] {
                    if allowed[w] && component[w].is_none() {
                        component[w] = Some(count);
                        queue.push_back(w);
                    }
                }
            }
            count += 1;
        }
        ComponentLabeling { component, count }
    }

    /// Two-coloring check by breadth-first search.
    pub fn is_bipartite(&self) -> bool {
        self.bipartition().is_some()
    }

    /// Side assignment (`false`/`true`) for a bipartite graph; the first
    /// vertex of every component gets `false`.
    pub fn bipartition(&self) -> Option<Vec<bool>> {
        let n = self.n();
        let mut side: Vec<Option<bool>> = vec![None; n];
        let mut queue = VecDeque::new();
        for start in 0..n {
            if side[start].is_some() {
                continue;
            }
            side[start] = Some(false);
            queue.push_back(start);
            while let Some(u) = queue.pop_front() {
                let su = side[u].unwrap_or(false);
                for &w in &self.adj[u] {
                    match side[w] {
                        None => {
                            side[w] = Some(!su);
                            queue.push_back(w);
                        }
                        Some(sw) if sw == su => return None,
                        Some(_) => {}
                    }
                }
            }
        }
        Some(side.into_iter().map(|s| s.unwrap_or(false)).collect())
    }

    /// Relabels vertex `v` as `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Graph> {
        if perm.len() != self.n() {
            return Err(Error::domain(
                "permutation length differs from vertex count",
            ));
        }
        Graph::from_edges(self.n(), self.edges().map(|(u, v)| (perm[u], perm[v])))
    }

    /// Canonical edge-list serialization.
    pub fn to_edge_list(&self) -> String {
        let mut out = String::with_capacity(16 + self.m * 8);
        out.push_str(&format!("p {} {}\n", self.n(), self.m));
        for (u, v) in self.edges() {
            out.push_str(&format!("{u} {v}\n"));
        }
        out
    }
}

impl FromStr for Graph {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        parse_edge_list(text).map(|parsed| parsed.graph)
    }
}

/// Result of [`parse_edge_list`]: the graph plus any ingestion warnings.
#[derive(Clone, Debug)]
pub struct ParsedGraph {
    pub graph: Graph,
    pub duplicate_edges: usize,
    pub warnings: Vec<String>,
}

/// Parses the edge-list text format.
pub fn parse_edge_list(text: &str) -> Result<ParsedGraph> {
    let mut header: Option<(usize, usize, usize)> = None;
    let mut edges: Vec<(usize, usize, usize)> = Vec::new();

    for (index, raw) in text.lines().enumerate() {
        let line_no = index + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let tokens: Vec<&str> = line.split_whitespace().collect();
        if tokens[0] == "p" {
            if header.is_some() {
                return Err(Error::parse(line_no, "duplicate header line"));
            }
            if tokens.len() != 3 {
                return Err(Error::parse(line_no, "header must be `p <n> <m>`"));
            }
            let n = parse_count(tokens[1], line_no)?;
            let m = parse_count(tokens[2], line_no)?;
            if n > MAX_VERTICES {
                return Err(Error::parse(
                    line_no,
                    format!("vertex count {n} exceeds limit {MAX_VERTICES}"),
                ));
            }
            header = Some((n, m, line_no));
            continue;
        }
        if tokens.len() != 2 {
            return Err(Error::parse(
                line_no,
                format!("expected `u v`, found {:?}", line),
            ));
        }
        let u = parse_id(tokens[0], line_no)?;
        let v = parse_id(tokens[1], line_no)?;
        if u == v {
            return Err(Error::parse(line_no, format!("self-loop at vertex {u}")));
        }
        edges.push((u, v, line_no));
    }

    let n = match header {
        Some((n, _, _)) => {
            if let Some(&(u, v, line)) = edges.iter().find(|&&(u, v, _)| u >= n || v >= n) {
                return Err(Error::parse(
                    line,
                    format!("edge ({u}, {v}) exceeds header vertex count {n}"),
                ));
            }
            n
        }
        None => edges
            .iter()
            .map(|&(u, v, _)| u.max(v) + 1)
            .max()
            .unwrap_or(0),
    };

    let (graph, duplicate_edges) =
        Graph::from_edges_counting(n, edges.iter().map(|&(u, v, _)| (u, v)))?;
    let mut warnings = Vec::new();
    if duplicate_edges > 0 {
        warnings.push(format!("collapsed {duplicate_edges} duplicate edge(s)"));
    }
    if let Some((_, m, line)) = header {
        if m != graph.m() {
            warnings.push(format!(
                "header on line {line} declares {m} edges, found {}",
                graph.m()
            ));
        }
    }
    Ok(ParsedGraph {
        graph,
        duplicate_edges,
        warnings,
    })
}

fn parse_count(token: &str, line: usize) -> Result<usize> {
    token
        .parse::<usize>()
        .map_err(|_| Error::parse(line, format!("invalid count {token:?}")))
}

fn parse_id(token: &str, line: usize) -> Result<usize> {
    if token.starts_with('-') {
        return Err(Error::parse(line, format!("negative vertex id {token}")));
    }
    let id: u64 = token
        .parse()
        .map_err(|_| Error::parse(line, format!("invalid vertex id {token:?}")))?;
    if id >= MAX_VERTICES as u64 {
        return Err(Error::parse(
            line,
            format!("vertex id {id} exceeds limit {MAX_VERTICES}"),
        ));
    }
    Ok(id as usize)
}

/// A set of vertex ids kept sorted and duplicate free.
///
/// The derived ordering compares the sorted member lists lexicographically,
/// which is the order used to pick canonical witnesses.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct VertexSet(Vec<usize>);

impl VertexSet {
    pub fn new() -> Self {
        VertexSet(Vec::new())
    }

    pub fn from_mask(mask: &[bool]) -> Self {
        VertexSet(
            mask.iter()
                .enumerate()
                .filter_map(|(v, &inside)| inside.then_some(v))
                .collect(),
        )
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, usize> {
        self.0.iter()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn insert(&mut self, v: usize) -> bool {
        match self.0.binary_search(&v) {
            Ok(_) => false,
            Err(pos) => {
                self.0.insert(pos, v);
                true
            }
        }
    }

    pub fn remove(&mut self, v: usize) -> bool {
        match self.0.binary_search(&v) {
            Ok(pos) => {
                self.0.remove(pos);
                true
            }
            Err(_) => false,
        }
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        self.iter().chain(other.iter()).copied().collect()
    }

    pub fn difference(&self, other: &VertexSet) -> VertexSet {
        VertexSet(
            self.iter()
                .copied()
                .filter(|&v| !other.contains(v))
                .collect(),
        )
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        self.iter().all(|&v| other.contains(v))
    }

    pub fn max(&self) -> Option<usize> {
        self.0.last().copied()
    }

    /// Membership mask of length `n`; members `>= n` are ignored.
    pub fn to_mask(&self, n: usize) -> Vec<bool> {
        let mut mask = vec![false; n];
        for &v in self.iter().filter(|&&v| v < n) {
            mask[v] = true;
        }
        mask
    }

    pub fn check_within(&self, n: usize) -> Result<()> {
        match self.max() {
            Some(v) if v >= n => Err(Error::domain(format!(
                "vertex {v} is not in the graph (n = {n})"
            ))),
            _ => Ok(()),
        }
    }

    /// Parses a comma-separated id list such as `1,2,5`. Empty input yields
    /// the empty set.
    pub fn parse_list(text: &str) -> Result<VertexSet> {
        let text = text.trim();
        if text.is_empty() {
            return Ok(VertexSet::new());
        }
        text.split(',')
            .map(|token| {
                let token = token.trim();
                token
                    .parse::<usize>()
                    .map_err(|_| Error::domain(format!("invalid vertex id {token:?} in set")))
            })
            .collect()
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut members: Vec<usize> = iter.into_iter().collect();
        members.sort_unstable();
        members.dedup();
        VertexSet(members)
    }
}

impl From<Vec<usize>> for VertexSet {
    fn from(members: Vec<usize>) -> Self {
        members.into_iter().collect()
    }
}

impl<const N: usize> From<[usize; N]> for VertexSet {
    fn from(members: [usize; N]) -> Self {
        members.into_iter().collect()
    }
}

impl<'a> IntoIterator for &'a VertexSet {
    type Item = &'a usize;
    type IntoIter = std::slice::Iter<'a, usize>;

    fn into_iter(self) -> Self::IntoIter {
        self.0.iter()
    }
}

/// Comma-separated ascending ids, e.g. `0,2,3`.
impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

/// Component labels of an induced subgraph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComponentLabeling {
    /// `None` for vertices outside the restriction.
    pub component: Vec<Option<usize>>,
    pub count: usize,
}

impl ComponentLabeling {
    pub fn component_of(&self, v: usize) -> Option<usize> {
        self.component.get(v).copied().flatten()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(n: usize) -> Graph {
        Graph::from_edges(n, (1..n).map(|v| (v - 1, v))).unwrap()
    }

    fn bowtie() -> Graph {
        Graph::from_edges(5, [(0, 1), (0, 2), (1, 2), (2, 3), (2, 4), (3, 4)]).unwrap()
    }

    #[test]
    fn parses_path() {
        let parsed = parse_edge_list("0 1\n1 2").unwrap();
        assert_eq!(parsed.graph.n(), 3);
        assert_eq!(parsed.graph.m(), 2);
        assert_eq!(parsed.graph, path(3));
        assert_eq!(parsed.duplicate_edges, 0);
        assert!(parsed.warnings.is_empty());
    }

    #[test]
    fn duplicate_edges_collapse_with_warning() {
        let parsed = parse_edge_list("0 1\n0 1").unwrap();
        assert_eq!(parsed.graph.n(), 2);
        assert_eq!(parsed.graph.m(), 1);
        assert_eq!(parsed.duplicate_edges, 1);
        assert_eq!(parsed.warnings.len(), 1);

        let reversed = parse_edge_list("0 1\n1 0\n").unwrap();
        assert_eq!(reversed.graph.m(), 1);
        assert_eq!(reversed.duplicate_edges, 1);
    }

    #[test]
    fn rejects_bad_lines() {
        match parse_edge_list("0 0") {
            Err(Error::Parse { line: 1, message }) => assert!(message.contains("self-loop")),
            other => panic!("expected self-loop error, got {other:?}"),
        }
        match parse_edge_list("0 1\n-1 2") {
            Err(Error::Parse { line: 2, message }) => assert!(message.contains("negative")),
            other => panic!("expected negative id error, got {other:?}"),
        }
        match parse_edge_list("0 1\n1 2 3\n") {
            Err(Error::Parse { line: 2, .. }) => {}
            other => panic!("expected malformed line error, got {other:?}"),
        }
        assert!(matches!(
            parse_edge_list("0 99999999999999999999"),
            Err(Error::Parse { line: 1, .. })
        ));
        assert!(matches!(
            parse_edge_list("p 3 1\n0 5\n"),
            Err(Error::Parse { line: 2, .. })
        ));
        assert!(matches!(
            parse_edge_list("p 3 1\np 3 1\n"),
            Err(Error::Parse { line: 2, .. })
        ));
    }

    #[test]
    fn header_and_comments() {
        let parsed = parse_edge_list("# isolated vertices via header\np 5 1\n\n3 4\n").unwrap();
        assert_eq!(parsed.graph.n(), 5);
        assert_eq!(parsed.graph.m(), 1);
        assert!(parsed.warnings.is_empty());

        let mismatch = parse_edge_list("p 3 5\n0 1\n").unwrap();
        assert_eq!(mismatch.warnings.len(), 1);
    }

    #[test]
    fn canonical_serialization() {
        assert_eq!(path(3).to_edge_list(), "p 3 2\n0 1\n1 2\n");
        let k3 = Graph::from_edges(3, [(2, 1), (0, 2), (1, 0)]).unwrap();
        assert_eq!(k3.to_edge_list(), "p 3 3\n0 1\n0 2\n1 2\n");
        assert_eq!(Graph::empty(1).to_edge_list(), "p 1 0\n");
    }

    #[test]
    fn neighborhoods() {
        assert_eq!(path(3).neighbors(1).unwrap(), VertexSet::from([0, 2]));
        let k4 = Graph::from_edges(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        assert_eq!(k4.neighbors(0).unwrap(), VertexSet::from([1, 2, 3]));
        let star = Graph::from_edges(4, [(0, 1), (0, 2), (0, 3)]).unwrap();
        assert_eq!(star.neighbors(2).unwrap(), VertexSet::from([0]));
        assert!(matches!(star.neighbors(4), Err(Error::Domain(_))));
    }

    #[test]
    fn closed_neighborhood_of_sets() {
        let p4 = path(4);
        assert_eq!(
            p4.closed_neighborhood_of_set(&VertexSet::from([1]))
                .unwrap(),
            VertexSet::from([0, 1, 2])
        );
        let all: VertexSet = p4.vertices().collect();
        assert_eq!(p4.closed_neighborhood_of_set(&all).unwrap(), all);
        assert_eq!(
            bowtie()
                .closed_neighborhood_of_set(&VertexSet::from([2]))
                .unwrap(),
            VertexSet::from([0, 1, 2, 3, 4])
        );
    }

    #[test]
    fn component_counts() {
        let p4 = path(4);
        assert_eq!(p4.components(Some(&VertexSet::from([0, 1, 3]))).count, 2);
        assert_eq!(p4.components(None).count, 1);
        assert_eq!(
            bowtie()
                .components(Some(&VertexSet::from([0, 1, 3, 4])))
                .count,
            2
        );
        assert_eq!(p4.components(Some(&VertexSet::new())).count, 0);

        let labels = p4.components(Some(&VertexSet::from([3, 0, 1])));
        assert_eq!(labels.component_of(0), Some(0));
        assert_eq!(labels.component_of(3), Some(1));
        assert_eq!(labels.component_of(2), None);
    }

    #[test]
    fn leaves_supports_bipartite() {
        let p4 = path(4);
        assert_eq!(p4.leaves(), VertexSet::from([0, 3]));
        assert_eq!(p4.supports(), VertexSet::from([1, 2]));
        assert!(p4.is_bipartite());
        assert!(!bowtie().is_bipartite());
        assert!(!bowtie().is_complete());
        assert!(Graph::empty(1).is_complete());
        assert!(!Graph::empty(2).is_connected());
    }

    #[test]
    fn vertex_set_ops() {
        let mut s: VertexSet = vec![3, 1, 3, 2].into();
        assert_eq!(s.as_slice(), &[1, 2, 3]);
        assert!(s.insert(0));
        assert!(!s.insert(0));
        assert!(s.remove(2));
        assert_eq!(s.to_string(), "0,1,3");
        assert_eq!(
            VertexSet::parse_list("3, 1,2").unwrap(),
            VertexSet::from([1, 2, 3])
        );
        assert!(VertexSet::parse_list("1,x").is_err());
        assert!(VertexSet::from([1, 2]) < VertexSet::from([1, 3]));
        assert!(VertexSet::from([0, 5]) < VertexSet::from([1, 2]));
    }
}
