//! Hardness gadgets and an empirical equivalence checker.
//!
//! Every construction appends new vertices at the top of the id range:
//!
//! * universal: `x = n`, joined to all of `V`; parameter `+1`.
//! * bipartite: copies `v' = v + n`, then `p = 2n`, `q = 2n + 1`,
//!   `x = 2n + 2`, `y = 2n + 3`; parameter `+2`.
//! * split: `x = n` joined to all of `V`, `y = n + 1` pendant on `x`;
//!   parameter `+2`.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::exact::{self, DEFAULT_MAX_N};
use crate::fast::{recognize_split, SplitPartition};
use crate::graph::{Graph, VertexSet};
use crate::verify::Variant;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ReductionKind {
    DmToScdm,
    DmToStdm,
    ScdmToScdb,
    StdmToStdb,
    DmSplitToScdmSplit,
    DmSplitToStdmSplit,
}

/// Which gadget a reduction kind uses.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Gadget {
    Universal,
    Bipartite,
    Split,
}

impl ReductionKind {
    pub const ALL: [ReductionKind; 6] = [
        ReductionKind::DmToScdm,
        ReductionKind::DmToStdm,
        ReductionKind::ScdmToScdb,
        ReductionKind::StdmToStdb,
        ReductionKind::DmSplitToScdmSplit,
        ReductionKind::DmSplitToStdmSplit,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ReductionKind::DmToScdm => "dm_to_scdm",
            ReductionKind::DmToStdm => "dm_to_stdm",
            ReductionKind::ScdmToScdb => "scdm_to_scdb",
            ReductionKind::StdmToStdb => "stdm_to_stdb",
            ReductionKind::DmSplitToScdmSplit => "dm_split_to_scdm_split",
            ReductionKind::DmSplitToStdmSplit => "dm_split_to_stdm_split",
        }
    }

    pub fn gadget(self) -> Gadget {
        match self {
            ReductionKind::DmToScdm | ReductionKind::DmToStdm => Gadget::Universal,
            ReductionKind::ScdmToScdb | ReductionKind::StdmToStdb => Gadget::Bipartite,
            ReductionKind::DmSplitToScdmSplit | ReductionKind::DmSplitToStdmSplit => Gadget::Split,
        }
    }

    /// Parameter shift from source to target instance.
    pub fn offset(self) -> usize {
        match self.gadget() {
            Gadget::Universal => 1,
            Gadget::Bipartite | Gadget::Split => 2,
        }
    }

    pub fn source_variant(self) -> Variant {
        match self {
            ReductionKind::ScdmToScdb => Variant::Scds,
            ReductionKind::StdmToStdb => Variant::Stds,
            _ => Variant::Ds,
        }
    }

    pub fn target_variant(self) -> Variant {
        match self {
            ReductionKind::DmToScdm
            | ReductionKind::ScdmToScdb
            | ReductionKind::DmSplitToScdmSplit => Variant::Scds,
            _ => Variant::Stds,
        }
    }
}

impl fmt::Display for ReductionKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ReductionKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let key = s.to_ascii_lowercase().replace('-', "_");
        ReductionKind::ALL
            .into_iter()
            .find(|k| k.name() == key)
            .ok_or_else(|| Error::domain(format!("unknown reduction kind {s:?}")))
    }
}

/// Where an output vertex came from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(tag = "role", content = "source", rename_all = "snake_case")]
pub enum VertexRole {
    Original(usize),
    Copy(usize),
    P,
    Q,
    X,
    Y,
}

impl fmt::Display for VertexRole {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            VertexRole::Original(v) => write!(f, "{v}"),
            VertexRole::Copy(v) => write!(f, "{v}'"),
            VertexRole::P => f.write_str("p"),
            VertexRole::Q => f.write_str("q"),
            VertexRole::X => f.write_str("x"),
            VertexRole::Y => f.write_str("y"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReductionArtifact {
    pub kind: ReductionKind,
    pub output_graph: Graph,
    pub input_parameter: usize,
    pub output_parameter: usize,
    /// Role of each output vertex, indexed by output id.
    pub provenance: Vec<VertexRole>,
    /// Split partition of the output, for split gadgets.
    pub output_partition: Option<SplitPartition>,
}

impl ReductionArtifact {
    /// Output id holding `role`, if any.
    pub fn vertex_of(&self, role: VertexRole) -> Option<usize> {
        self.provenance.iter().position(|&r| r == role)
    }

    /// Forward image of a source solution under the gadget: `S ∪ {x}` for
    /// the universal gadget and `S ∪ {x, y}` for the others.
    pub fn lift_witness(&self, s: &VertexSet) -> VertexSet {
        let mut lifted = s.clone();
        for role in [VertexRole::X, VertexRole::Y] {
            if let Some(v) = self.vertex_of(role) {
                lifted.insert(v);
            }
        }
        lifted
    }
}

fn check_parameter(k: usize) -> Result<()> {
    if k == 0 {
        return Err(Error::domain("parameter must be at least 1"));
    }
    Ok(())
}

/// Add a vertex adjacent to every vertex of `g`.
pub fn reduce_universal(g: &Graph, k: usize, kind: ReductionKind) -> Result<ReductionArtifact> {
    check_parameter(k)?;
    if kind.gadget() != Gadget::Universal {
        return Err(Error::domain(format!(
            "{kind} does not use the universal gadget"
        )));
    }
    let n = g.n();
    let x = n;
    let edges = g.edges().chain(g.vertices().map(|v| (v, x)));
    let output_graph = Graph::from_edges(n + 1, edges)?;
    let mut provenance: Vec<VertexRole> = g.vertices().map(VertexRole::Original).collect();
    provenance.push(VertexRole::X);
    Ok(ReductionArtifact {
        kind,
        output_graph,
        input_parameter: k,
        output_parameter: k + 1,
        provenance,
        output_partition: None,
    })
}

/// Bipartite double cover with matching, plus `p, q` and the hubs `x, y`.
pub fn reduce_bipartite(g: &Graph, r: usize, kind: ReductionKind) -> Result<ReductionArtifact> {
    check_parameter(r)?;
    if kind.gadget() != Gadget::Bipartite {
        return Err(Error::domain(format!(
            "{kind} does not use the bipartite gadget"
        )));
    }
    if !g.is_connected() {
        return Err(Error::domain(
            "bipartite reduction requires a connected graph",
        ));
    }
    let n = g.n();
    let (p, q, x, y) = (2 * n, 2 * n + 1, 2 * n + 2, 2 * n + 3);
    let mut edges: Vec<(usize, usize)> = g
        .edges()
        .flat_map(|(u, v)| [(u, v + n), (u + n, v)])
        .collect();
    edges.extend(g.vertices().map(|v| (v, v + n)));
    for w in g.vertices().chain([p, q]) {
        edges.push((w, x));
        edges.push((w, y));
    }
    let output_graph = Graph::from_edges(2 * n + 4, edges)?;
    let provenance = g
        .vertices()
        .map(VertexRole::Original)
        .chain(g.vertices().map(VertexRole::Copy))
        .chain([VertexRole::P, VertexRole::Q, VertexRole::X, VertexRole::Y])
        .collect();
    Ok(ReductionArtifact {
        kind,
        output_graph,
        input_parameter: r,
        output_parameter: r + 2,
        provenance,
        output_partition: None,
    })
}

/// Universal vertex `x` joined to the clique side, and a pendant `y` on `x`.
pub fn reduce_split(
    g: &Graph,
    partition: &SplitPartition,
    k: usize,
    kind: ReductionKind,
) -> Result<ReductionArtifact> {
    check_parameter(k)?;
    if kind.gadget() != Gadget::Split {
        return Err(Error::domain(format!(
            "{kind} does not use the split gadget"
        )));
    }
    partition.validate(g)?;
    let n = g.n();
    let (x, y) = (n, n + 1);
    let edges = g
        .edges()
        .chain(g.vertices().map(|v| (v, x)))
        .chain([(x, y)]);
    let output_graph = Graph::from_edges(n + 2, edges)?;
    let mut provenance: Vec<VertexRole> = g.vertices().map(VertexRole::Original).collect();
    provenance.extend([VertexRole::X, VertexRole::Y]);
    let mut clique = partition.clique.clone();
    clique.insert(x);
    let mut independent = partition.independent.clone();
    independent.insert(y);
    Ok(ReductionArtifact {
        kind,
        output_graph,
        input_parameter: k,
        output_parameter: k + 2,
        provenance,
        output_partition: Some(SplitPartition {
            clique,
            independent,
        }),
    })
}

/// Build the gadget for `kind`. Split kinds use `partition` when given and
/// recognize one otherwise.
pub fn reduce(
    kind: ReductionKind,
    g: &Graph,
    parameter: usize,
    partition: Option<&SplitPartition>,
) -> Result<ReductionArtifact> {
    match kind.gadget() {
        Gadget::Universal => reduce_universal(g, parameter, kind),
        Gadget::Bipartite => reduce_bipartite(g, parameter, kind),
        Gadget::Split => match partition {
            Some(p) => reduce_split(g, p, parameter, kind),
            None => {
                let p = recognize_split(g)
                    .map_err(|e| Error::domain(format!("input is not a split graph: {e}")))?;
                reduce_split(g, &p, parameter, kind)
            }
        },
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct EquivalenceRow {
    pub t: usize,
    /// `γ_source(G) <= t`.
    pub source: bool,
    /// `γ_target(G*) <= t + offset`.
    pub target: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum Verdict {
    AllMatch,
    Counterexample { t: usize },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EquivalenceReport {
    pub kind: ReductionKind,
    pub artifact: ReductionArtifact,
    /// `None` when the source graph has no set of the source variant.
    pub source_value: Option<usize>,
    pub source_witness: Option<VertexSet>,
    pub target_value: Option<usize>,
    pub target_witness: Option<VertexSet>,
    pub rows: Vec<EquivalenceRow>,
    pub verdict: Verdict,
}

impl EquivalenceReport {
    pub fn all_match(&self) -> bool {
        self.verdict == Verdict::AllMatch
    }
}

fn optimum(g: &Graph, variant: Variant) -> Result<Option<(usize, VertexSet)>> {
    match exact::solve(g, variant) {
        Ok(r) => Ok(Some((r.value, r.witness))),
        Err(Error::Domain(_)) => Ok(None),
        Err(e) => Err(e),
    }
}

/// Compare `γ_source(G) <= t` with `γ_target(G*) <= t + offset` for every
/// `t` in `1..=n`, solving both sides exactly. A source graph outside the
/// source variant's domain counts as having no solution of any size.
pub fn check_equivalence(
    kind: ReductionKind,
    g: &Graph,
    partition: Option<&SplitPartition>,
) -> Result<EquivalenceReport> {
    if g.n() == 0 {
        return Err(Error::domain("graph has no vertices"));
    }
    let artifact = reduce(kind, g, 1, partition)?;
    let target_n = artifact.output_graph.n();
    if target_n > DEFAULT_MAX_N {
        return Err(Error::Refused(format!(
            "output graph has {target_n} vertices, cap is {DEFAULT_MAX_N}"
        )));
    }
    let source = optimum(g, kind.source_variant())?;
    let target = optimum(&artifact.output_graph, kind.target_variant())?;
    let offset = kind.offset();
    let rows: Vec<EquivalenceRow> = (1..=g.n())
        .map(|t| EquivalenceRow {
            t,
            source: source.as_ref().is_some_and(|(v, _)| *v <= t),
            target: target.as_ref().is_some_and(|(v, _)| *v <= t + offset),
        })
        .collect();
    let verdict = rows
        .iter()
        .find(|r| r.source != r.target)
        .map_or(Verdict::AllMatch, |r| Verdict::Counterexample { t: r.t });
    let (source_value, source_witness) = source.unzip();
    let (target_value, target_witness) = target.unzip();
    Ok(EquivalenceReport {
        kind,
        artifact,
        source_value,
        source_witness,
        target_value,
        target_witness,
        rows,
        verdict,
    })
}
