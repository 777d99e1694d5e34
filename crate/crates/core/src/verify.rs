//! Certificate checkers for the six domination variants.
//!
//! Secure variants are checked by the swap definition: every vertex `u`
//! outside `S` needs a neighbor `v ∈ S` such that `(S ∖ {v}) ∪ {u}` still
//! has the base property. The connected variant also has a second,
//! structural checker ([`is_scds_characterization`]) built on external
//! private neighbors and the components of `G[S ∖ {v}]`; the two are kept
//! independent so they can be cross-checked.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// Domination variant.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Variant {
    Ds,
    Cds,
    Tds,
    Sds,
    Scds,
    Stds,
}

impl Variant {
    pub const ALL: [Variant; 6] = [
        Variant::Ds,
        Variant::Cds,
        Variant::Tds,
        Variant::Sds,
        Variant::Scds,
        Variant::Stds,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Variant::Ds => "ds",
            Variant::Cds => "cds",
            Variant::Tds => "tds",
            Variant::Sds => "sds",
            Variant::Scds => "scds",
            Variant::Stds => "stds",
        }
    }

    pub fn is_secure(self) -> bool {
        matches!(self, Variant::Sds | Variant::Scds | Variant::Stds)
    }

    /// The property the swap must preserve (identity for non-secure variants).
    pub fn base(self) -> Variant {
        match self {
            Variant::Sds => Variant::Ds,
            Variant::Scds => Variant::Cds,
            Variant::Stds => Variant::Tds,
            other => other,
        }
    }

    pub fn requires_connected(self) -> bool {
        matches!(self, Variant::Cds | Variant::Scds | Variant::Stds)
    }

    pub fn requires_no_isolated(self) -> bool {
        matches!(self, Variant::Tds | Variant::Stds)
    }
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Variant {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Variant::ALL
            .into_iter()
            .find(|v| v.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::domain(format!("unknown variant {s:?}")))
    }
}

/// For each vertex outside `S`, every member of `S` that can defend it.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct DefenderMap {
    defenders: BTreeMap<usize, Vec<usize>>,
}

impl DefenderMap {
    pub fn defenders_of(&self, u: usize) -> &[usize] {
        self.defenders.get(&u).map(Vec::as_slice).unwrap_or(&[])
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, &[usize])> {
        self.defenders.iter().map(|(&u, d)| (u, d.as_slice()))
    }

    /// Outside vertices with no valid defender.
    pub fn undefended(&self) -> impl Iterator<Item = usize> + '_ {
        self.defenders
            .iter()
            .filter(|(_, d)| d.is_empty())
            .map(|(&u, _)| u)
    }

    pub fn all_defended(&self) -> bool {
        self.defenders.values().all(|d| !d.is_empty())
    }

    /// Every vertex that defends at least one outside vertex.
    pub fn all_defenders(&self) -> VertexSet {
        self.defenders.values().flatten().copied().collect()
    }
}

/// Outcome of a definitional secure-variant check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SwapCheck {
    pub valid: bool,
    /// Whether `S` itself has the base property.
    pub base_valid: bool,
    pub defenders: DefenderMap,
}

fn membership(g: &Graph, s: &VertexSet) -> Option<Vec<bool>> {
    s.check_within(g.n()).ok().map(|_| s.to_mask(g.n()))
}

fn dominating_mask(g: &Graph, inside: &[bool]) -> bool {
    g.vertices()
        .all(|w| inside[w] || g.adj(w).iter().any(|&x| inside[x]))
}

fn total_mask(g: &Graph, inside: &[bool]) -> bool {
    g.vertices().all(|w| g.adj(w).iter().any(|&x| inside[x]))
}

fn connected_mask(g: &Graph, inside: &[bool]) -> bool {
    let Some(start) = inside.iter().position(|&b| b) else {
        return false;
    };
    let members = inside.iter().filter(|&&b| b).count();
    let mut seen = vec![false; g.n()];
    seen[start] = true;
    let mut stack = vec![start];
    let mut reached = 1;
    while let Some(u) = stack.pop() {
        for &w in g.adj(u) {
            if inside[w] && !seen[w] {
                seen[w] = true;
                reached += 1;
                stack.push(w);
            }
        }
    }
    reached == members
}

fn base_mask(g: &Graph, inside: &[bool], base: Variant) -> bool {
    match base {
        Variant::Ds => dominating_mask(g, inside),
        Variant::Cds => connected_mask(g, inside) && dominating_mask(g, inside),
        Variant::Tds => total_mask(g, inside),
        other => unreachable!("{other} is not a base variant"),
    }
}

pub fn is_dominating(g: &Graph, s: &VertexSet) -> bool {
    membership(g, s).is_some_and(|m| dominating_mask(g, &m))
}

/// Dominating and inducing a connected subgraph. The empty set is never
/// connected dominating.
pub fn is_connected_dominating(g: &Graph, s: &VertexSet) -> bool {
    membership(g, s).is_some_and(|m| base_mask(g, &m, Variant::Cds))
}

/// Every vertex of the graph, members included, has a neighbor in `S`.
pub fn is_total_dominating(g: &Graph, s: &VertexSet) -> bool {
    membership(g, s).is_some_and(|m| total_mask(g, &m))
}

/// External private neighbors of `v` with respect to `S`:
/// `{ w ∉ S : N[w] ∩ S = {v} }`.
pub fn epn(g: &Graph, v: usize, s: &VertexSet) -> Result<VertexSet> {
    s.check_within(g.n())?;
    if !s.contains(v) {
        return Err(Error::domain(format!("vertex {v} is not in S")));
    }
    Ok(g.adj(v)
        .iter()
        .copied()
        .filter(|&w| !s.contains(w) && g.adj(w).iter().all(|&x| x == v || !s.contains(x)))
        .collect())
}

fn swap_check(g: &Graph, s: &VertexSet, base: Variant) -> SwapCheck {
    let Some(mut inside) = membership(g, s) else {
        return SwapCheck {
            valid: false,
            base_valid: false,
            defenders: DefenderMap::default(),
        };
    };
    let base_valid = base_mask(g, &inside, base);
    let mut defenders = BTreeMap::new();
    let outside: Vec<usize> = g.vertices().filter(|&u| !inside[u]).collect();
    for u in outside {
        let mut valid = Vec::new();
        for &v in g.adj(u).iter().filter(|&&v| s.contains(v)) {
            inside[v] = false;
            inside[u] = true;
            if base_mask(g, &inside, base) {
                valid.push(v);
            }
            inside[u] = false;
            inside[v] = true;
        }
        defenders.insert(u, valid);
    }
    let defenders = DefenderMap { defenders };
    SwapCheck {
        valid: base_valid && defenders.all_defended(),
        base_valid,
        defenders,
    }
}

pub fn is_secure_dominating(g: &Graph, s: &VertexSet) -> bool {
    swap_check(g, s, Variant::Ds).valid
}

/// Secure connected domination by the swap definition.
pub fn is_scds_definition(g: &Graph, s: &VertexSet) -> SwapCheck {
    swap_check(g, s, Variant::Cds)
}

/// Secure total domination by the swap definition.
pub fn is_stds(g: &Graph, s: &VertexSet) -> SwapCheck {
    swap_check(g, s, Variant::Tds)
}

/// Secure connected domination via private neighbors and components.
///
/// For `|S| >= 2`: `S` is a CDS, no member has an external private neighbor,
/// and every outside `u` has a neighbor `v ∈ S` such that each component of
/// `G[S ∖ {v}]` contains a neighbor of `u`.
///
/// For `S = {v}` the component condition is vacuous, and the private
/// neighbor condition weakens to `epn(v, S) ⊆ N[u]` for each outside `u`
/// (the swap keeps domination exactly then); this holds iff the graph is
/// complete.
pub fn is_scds_characterization(g: &Graph, s: &VertexSet) -> bool {
    if !is_connected_dominating(g, s) {
        return false;
    }
    let outside: Vec<usize> = g.vertices().filter(|&u| !s.contains(u)).collect();

    if s.len() == 1 {
        let v = s.as_slice()[0];
        let Ok(private) = epn(g, v, s) else {
            return false;
        };
        return outside
            .iter()
            .all(|&u| private.iter().all(|&w| w == u || g.has_edge(u, w)));
    }

    for &v in s {
        match epn(g, v, s) {
            Ok(private) if private.is_empty() => {}
            _ => return false,
        }
    }

    let mut without: Vec<Option<crate::graph::ComponentLabeling>> = vec![None; g.n()];
    let mut inside = s.to_mask(g.n());
    outside.iter().all(|&u| {
        g.adj(u).iter().filter(|&&v| s.contains(v)).any(|&v| {
            let labels = without[v].get_or_insert_with(|| {
                inside[v] = false;
                let labels = g.components_masked(&inside);
                inside[v] = true;
                labels
            });
            let mut touched = vec![false; labels.count];
            for &w in g.adj(u) {
                if w != v {
                    if let Some(c) = labels.component_of(w) {
                        touched[c] = true;
                    }
                }
            }
            touched.iter().all(|&t| t)
        })
    })
}

/// Dispatches to the checker for `variant` (definitional route for the
/// secure variants).
pub fn verify(g: &Graph, s: &VertexSet, variant: Variant) -> bool {
    match variant {
        Variant::Ds => is_dominating(g, s),
        Variant::Cds => is_connected_dominating(g, s),
        Variant::Tds => is_total_dominating(g, s),
        Variant::Sds => is_secure_dominating(g, s),
        Variant::Scds => is_scds_definition(g, s).valid,
        Variant::Stds => is_stds(g, s).valid,
    }
}

/// A short human-readable reason why `S` fails `variant`, or `None` if it
/// passes.
pub fn explain_failure(g: &Graph, s: &VertexSet, variant: Variant) -> Option<String> {
    if let Err(e) = s.check_within(g.n()) {
        return Some(e.to_string());
    }
    if verify(g, s, variant) {
        return None;
    }
    let inside = s.to_mask(g.n());
    let base = variant.base();
    match base {
        Variant::Ds | Variant::Cds => {
            if s.is_empty() {
                return Some("S is empty".into());
            }
            if let Some(w) = g
                .vertices()
                .find(|&w| !inside[w] && !g.adj(w).iter().any(|&x| inside[x]))
            {
                return Some(format!("vertex {w} is not dominated"));
            }
            if base == Variant::Cds && !connected_mask(g, &inside) {
                return Some("G[S] is disconnected".into());
            }
        }
        Variant::Tds => {
            if let Some(w) = g.vertices().find(|&w| !g.adj(w).iter().any(|&x| inside[x])) {
                return Some(format!("vertex {w} has no neighbor in S"));
            }
        }
        _ => unreachable!(),
    }
    if variant == Variant::Scds && g.n() >= 3 && g.is_connected() {
        if let Some(&leaf) = g.leaves().iter().find(|&&l| !inside[l]) {
            return Some(format!("leaf {leaf} not in S"));
        }
        if let Some(&sup) = g.supports().iter().find(|&&x| !inside[x]) {
            return Some(format!("support vertex {sup} not in S"));
        }
    }
    let check = swap_check(g, s, base);
    let undefended = check.defenders.undefended().next();
    undefended.map(|u| format!("vertex {u} has no valid defender"))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(n: usize, edges: &[(usize, usize)]) -> Graph {
        Graph::from_edges(n, edges.iter().copied()).unwrap()
    }
    fn path(n: usize) -> Graph {
        Graph::from_edges(n, (1..n).map(|v| (v - 1, v))).unwrap()
    }
    fn complete(n: usize) -> Graph {
        Graph::from_edges(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)))).unwrap()
    }
    fn cycle(n: usize) -> Graph {
        Graph::from_edges(n, (0..n).map(|v| (v, (v + 1) % n))).unwrap()
    }
    fn bowtie() -> Graph {
        g(5, &[(0, 1), (0, 2), (1, 2), (2, 3), (2, 4), (3, 4)])
    }
    fn fig1() -> Graph {
        // a..e -> 0..4: ab, ac, ad, bc, cd, ce, de
        g(5, &[(0, 1), (0, 2), (0, 3), (1, 2), (2, 3), (2, 4), (3, 4)])
    }
    fn ladder3() -> Graph {
        g(6, &[(0, 1), (1, 2), (3, 4), (4, 5), (0, 3), (1, 4), (2, 5)])
    }
    fn s<const N: usize>(m: [usize; N]) -> VertexSet {
        VertexSet::from(m)
    }

    #[test]
    fn domination() {
        assert!(is_dominating(&path(3), &s([1])));
        assert!(!is_dominating(&path(4), &s([0])));
        assert!(is_dominating(&fig1(), &s([2])));
        assert!(!is_dominating(&path(3), &s([7])));
    }

    #[test]
    fn connected_domination() {
        assert!(is_connected_dominating(&path(4), &s([1, 2])));
        assert!(!is_connected_dominating(&path(4), &s([0, 3])));
        assert!(is_connected_dominating(&bowtie(), &s([2])));
        assert!(!is_connected_dominating(&path(1), &VertexSet::new()));
    }

    #[test]
    fn total_domination() {
        assert!(is_total_dominating(&path(4), &s([1, 2])));
        assert!(!is_total_dominating(&path(3), &s([1])));
        assert!(is_total_dominating(&cycle(4), &s([0, 1])));
    }

    #[test]
    fn external_private_neighbors() {
        assert_eq!(epn(&path(3), 1, &s([1])).unwrap(), s([0, 2]));
        assert!(epn(&complete(4), 0, &s([0, 1])).unwrap().is_empty());
        assert_eq!(epn(&path(4), 1, &s([1, 2])).unwrap(), s([0]));
        assert!(matches!(
            epn(&path(4), 0, &s([1, 2])),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn scds_by_definition() {
        let k4 = is_scds_definition(&complete(4), &s([0]));
        assert!(k4.valid);
        for u in 1..4 {
            assert_eq!(k4.defenders.defenders_of(u), &[0]);
        }
        let p4 = is_scds_definition(&path(4), &s([1, 2]));
        assert!(p4.base_valid);
        assert!(!p4.valid);
        assert_eq!(p4.defenders.undefended().collect::<Vec<_>>(), vec![0, 3]);
        assert!(is_scds_definition(&ladder3(), &s([0, 1, 2, 4])).valid);
    }

    #[test]
    fn scds_by_characterization() {
        assert!(is_scds_characterization(&complete(4), &s([0])));
        assert!(!is_scds_characterization(&path(4), &s([1, 2])));
        assert!(is_scds_characterization(&ladder3(), &s([0, 1, 2, 4])));
        assert!(!is_scds_characterization(&path(3), &s([1])));
        assert!(is_scds_characterization(&path(3), &s([0, 1, 2])));
        assert!(!is_scds_characterization(&bowtie(), &s([2])));
        assert!(is_scds_characterization(&bowtie(), &s([0, 2, 3])));
    }

    #[test]
    fn secure_domination() {
        assert!(is_secure_dominating(&complete(3), &s([0])));
        assert!(!is_secure_dominating(&path(3), &s([1])));
        assert!(is_secure_dominating(&path(3), &s([0, 2])));
    }

    #[test]
    fn secure_total_domination() {
        assert!(is_stds(&cycle(4), &s([0, 1, 2])).valid);
        assert!(!is_stds(&path(4), &s([1, 2])).valid);
        assert!(is_stds(&complete(4), &s([0, 1])).valid);
        assert!(!is_stds(&complete(4), &s([0])).valid);
    }

    #[test]
    fn whole_vertex_set_is_always_scds() {
        for graph in [path(5), cycle(6), bowtie(), ladder3(), fig1()] {
            let all: VertexSet = graph.vertices().collect();
            assert!(is_scds_definition(&graph, &all).valid);
            assert!(is_scds_characterization(&graph, &all));
        }
    }

    #[test]
    fn disconnected_graphs_are_rejected_quietly() {
        let two = Graph::empty(2);
        assert!(!is_connected_dominating(&two, &s([0, 1])));
        assert!(!is_scds_definition(&two, &s([0])).valid);
        assert!(!is_scds_characterization(&two, &s([0, 1])));
    }

    #[test]
    fn failure_reasons() {
        assert_eq!(
            explain_failure(&path(4), &s([1, 2]), Variant::Scds).as_deref(),
            Some("leaf 0 not in S")
        );
        assert_eq!(
            explain_failure(&path(4), &s([0]), Variant::Cds).as_deref(),
            Some("vertex 2 is not dominated")
        );
        assert_eq!(
            explain_failure(&path(4), &s([0, 3]), Variant::Cds).as_deref(),
            Some("G[S] is disconnected")
        );
        assert_eq!(
            explain_failure(&path(3), &s([1]), Variant::Sds).as_deref(),
            Some("vertex 0 has no valid defender")
        );
        assert_eq!(
            explain_failure(&path(3), &s([0, 1, 2]), Variant::Scds),
            None
        );
    }

    #[test]
    fn variant_names_round_trip() {
        for v in Variant::ALL {
            assert_eq!(v.name().parse::<Variant>().unwrap(), v);
        }
        assert!("roman".parse::<Variant>().is_err());
    }
}
