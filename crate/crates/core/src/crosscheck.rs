//! Batch comparisons of closed forms, fast solvers, verifiers and
//! reductions against the exact solver.
//!
//! Instance `i` of a seeded grid uses seed `base + i`, so any single case
//! can be regenerated from its label.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::exact::{self, SolveOptions, SolveReport};
use crate::families::{FamilyKind, FamilySpec};
use crate::fast::{gamma_sc_block, gamma_sc_threshold, SplitPartition};
use crate::generate;
use crate::graph::{Graph, VertexSet};
use crate::reductions::{check_equivalence, ReductionKind, Verdict};
use crate::verify::{
    is_connected_dominating, is_dominating, is_scds_characterization, is_scds_definition, Variant,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Grid {
    Families,
    Trees,
    Block,
    Threshold,
    Verifiers,
    Reductions,
    Structural,
}

impl Grid {
    pub const ALL: [Grid; 7] = [
        Grid::Families,
        Grid::Trees,
        Grid::Block,
        Grid::Threshold,
        Grid::Verifiers,
        Grid::Reductions,
        Grid::Structural,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Grid::Families => "families",
            Grid::Trees => "trees",
            Grid::Block => "block",
            Grid::Threshold => "threshold",
            Grid::Verifiers => "verifiers",
            Grid::Reductions => "reductions",
            Grid::Structural => "structural",
        }
    }

    /// Run the grid with its default instance count.
    pub fn run(self, seed: u64) -> Result<GridReport> {
        match self {
            Grid::Families => families(),
            Grid::Trees => trees(seed, 50),
            Grid::Block => block_graphs(seed, 50),
            Grid::Threshold => threshold_graphs(seed, 50),
            Grid::Verifiers => verifier_equivalence(generate::MAX_ENUMERATION_N),
            Grid::Reductions => reductions(seed),
            Grid::Structural => structural(seed, 50),
        }
    }
}

impl fmt::Display for Grid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Grid {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Grid::ALL
            .into_iter()
            .find(|g| g.name() == s)
            .ok_or_else(|| Error::domain(format!("unknown grid {s:?}")))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CaseResult {
    pub index: usize,
    pub label: String,
    pub expected: Option<usize>,
    pub actual: Option<usize>,
    pub pass: bool,
    /// Failure description, including the instance edge list.
    #[serde(skip_serializing_if = "String::is_empty")]
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GridReport {
    pub grid: Grid,
    pub cases: Vec<CaseResult>,
}

impl GridReport {
    fn new(grid: Grid) -> Self {
        GridReport {
            grid,
            cases: Vec::new(),
        }
    }

    fn push(
        &mut self,
        label: String,
        expected: Option<usize>,
        actual: Option<usize>,
        failure: Option<String>,
    ) {
        self.cases.push(CaseResult {
            index: self.cases.len(),
            label,
            expected,
            actual,
            pass: failure.is_none(),
            detail: failure.unwrap_or_default(),
        });
    }

    pub fn passed(&self) -> usize {
        self.cases.iter().filter(|c| c.pass).count()
    }

    pub fn failures(&self) -> impl Iterator<Item = &CaseResult> {
        self.cases.iter().filter(|c| !c.pass)
    }

    pub fn all_pass(&self) -> bool {
        self.cases.iter().all(|c| c.pass)
    }
}

fn with_graph(message: String, g: &Graph) -> String {
    format!("{message}\n{}", g.to_edge_list())
}

fn exact_scds(g: &Graph) -> Result<SolveReport> {
    exact::solve(g, Variant::Scds)
}

/// Exact value against the closed form, and the explicit witness against
/// the definition, for wheels 3..=5, books 2..=4 and ladders 3..=6.
pub fn families() -> Result<GridReport> {
    let mut report = GridReport::new(Grid::Families);
    let grid = [
        (FamilyKind::SubdividedWheel, 3..=5),
        (FamilyKind::Book, 2..=4),
        (FamilyKind::Ladder, 3..=6),
    ];
    for (kind, range) in grid {
        for n in range {
            let spec = FamilySpec::new(kind, n)?;
            let g = spec.generate();
            let formula = spec.formula_value();
            let exact = exact_scds(&g)?;
            let witness = spec.witness();
            let failure = if exact.value != formula {
                Some(format!("exact {} != formula {formula}", exact.value))
            } else if witness.len() != formula {
                Some(format!("witness {witness} has size {}", witness.len()))
            } else if !is_scds_definition(&g, &witness).valid {
                Some(format!("witness {witness} is not an SCDS"))
            } else {
                None
            };
            report.push(
                spec.to_string(),
                Some(formula),
                Some(exact.value),
                failure.map(|m| with_graph(m, &g)),
            );
        }
    }
    Ok(report)
}

/// Random trees with `3 <= n <= 12`: exact value and block formula both
/// equal `n`.
pub fn trees(seed: u64, count: usize) -> Result<GridReport> {
    let mut report = GridReport::new(Grid::Trees);
    for i in 0..count {
        let n = 3 + i % 10;
        let s = seed.wrapping_add(i as u64);
        let g = generate::random_tree(n, s);
        let exact = exact_scds(&g)?;
        let block = gamma_sc_block(&g)?;
        let failure = (exact.value != n || block.value != n)
            .then(|| format!("exact {} block {} expected {n}", exact.value, block.value));
        report.push(
            format!("tree n={n} seed={s}"),
            Some(n),
            Some(exact.value),
            failure.map(|m| with_graph(m, &g)),
        );
    }
    Ok(report)
}

/// Fast-solver report against the exact solve: same value, and the fast
/// witness is a valid SCDS of that size.
fn compare_fast(g: &Graph, fast: &SolveReport, exact: &SolveReport) -> Option<String> {
    if fast.value != exact.value {
        return Some(format!("fast {} != exact {}", fast.value, exact.value));
    }
    if fast.witness.len() != fast.value {
        return Some(format!(
            "witness {} has size {}",
            fast.witness,
            fast.witness.len()
        ));
    }
    if !is_scds_definition(g, &fast.witness).valid {
        return Some(format!("witness {} is not an SCDS", fast.witness));
    }
    None
}

/// Random block graphs with `2 <= n <= 13`.
pub fn block_graphs(seed: u64, count: usize) -> Result<GridReport> {
    let mut report = GridReport::new(Grid::Block);
    for i in 0..count {
        let n = 2 + i % 12;
        let s = seed.wrapping_add(i as u64);
        let g = generate::random_block_graph(n, s);
        let fast = gamma_sc_block(&g)?;
        let exact = exact_scds(&g)?;
        let failure = compare_fast(&g, &fast, &exact);
        report.push(
            format!("block n={n} seed={s}"),
            Some(exact.value),
            Some(fast.value),
            failure.map(|m| with_graph(m, &g)),
        );
    }
    Ok(report)
}

/// Random connected threshold graphs with `2 <= n <= 13`, then the stars
/// `K_{1,2}..K_{1,6}`.
pub fn threshold_graphs(seed: u64, count: usize) -> Result<GridReport> {
    let mut report = GridReport::new(Grid::Threshold);
    let random = (0..count).map(|i| {
        let n = 2 + i % 12;
        let s = seed.wrapping_add(i as u64);
        (
            format!("threshold n={n} seed={s}"),
            generate::random_threshold_graph(n, s),
        )
    });
    let stars = (2..=6).map(|k| (format!("star K1,{k}"), generate::star(k)));
    for (label, g) in random.chain(stars) {
        let fast = gamma_sc_threshold(&g)?;
        let exact = exact_scds(&g)?;
        let failure = compare_fast(&g, &fast, &exact);
        report.push(
            label,
            Some(exact.value),
            Some(fast.value),
            failure.map(|m| with_graph(m, &g)),
        );
    }
    Ok(report)
}

/// Definition against characterization for every subset of every
/// connected graph on at most `max_n` vertices. One case per graph.
pub fn verifier_equivalence(max_n: usize) -> Result<GridReport> {
    let mut report = GridReport::new(Grid::Verifiers);
    for n in 1..=max_n {
        for (j, g) in generate::enumerate_connected_graphs(n)?.iter().enumerate() {
            let subsets = 1u64 << n;
            let disagreement = (0..subsets).find_map(|mask| {
                let s: VertexSet = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
                let definition = is_scds_definition(g, &s).valid;
                let characterization = is_scds_characterization(g, &s);
                (definition != characterization).then(|| {
                    format!(
                        "S = {{{s}}}: definition {definition}, characterization {characterization}"
                    )
                })
            });
            report.push(
                format!("connected n={n} #{j}"),
                Some(subsets as usize),
                Some(subsets as usize - usize::from(disagreement.is_some())),
                disagreement.map(|m| with_graph(m, g)),
            );
        }
    }
    Ok(report)
}

fn equivalence_case(
    report: &mut GridReport,
    kind: ReductionKind,
    label: String,
    g: &Graph,
    partition: Option<&SplitPartition>,
) -> Result<()> {
    let r = check_equivalence(kind, g, partition)?;
    let failure = match r.verdict {
        Verdict::AllMatch => None,
        Verdict::Counterexample { t } => {
            let fmt_opt = |v: Option<usize>| v.map_or("none".to_string(), |v| v.to_string());
            Some(with_graph(
                format!(
                    "counterexample at t={t}: {}(G) = {}, {}(G*) = {} with offset {}; G* = {}",
                    kind.source_variant(),
                    fmt_opt(r.source_value),
                    kind.target_variant(),
                    fmt_opt(r.target_value),
                    kind.offset(),
                    r.artifact
                        .output_graph
                        .to_edge_list()
                        .trim_end()
                        .replace('\n', "; "),
                ),
                g,
            ))
        }
    };
    report.push(label, r.source_value, r.target_value, failure);
    Ok(())
}

/// Reduction equivalence sweeps:
///
/// * universal kinds: every connected graph with `n <= 5`, then 30 random
///   connected graphs with `n` in `{6, 7}`;
/// * `scdm_to_scdb`: every connected graph with `n <= 4`, then 10 random
///   connected graphs with `n = 5`;
/// * split kinds: 30 random split graphs with `n <= 6`.
pub fn reductions(seed: u64) -> Result<GridReport> {
    let mut report = GridReport::new(Grid::Reductions);
    let enumerated = |max_n: usize| -> Result<Vec<(String, Graph)>> {
        let mut out = Vec::new();
        for n in 1..=max_n {
            for (j, g) in generate::enumerate_connected_graphs(n)?
                .into_iter()
                .enumerate()
            {
                out.push((format!("connected n={n} #{j}"), g));
            }
        }
        Ok(out)
    };
    let random = |count: usize, sizes: &[usize]| -> Result<Vec<(String, Graph)>> {
        (0..count)
            .map(|i| {
                let n = sizes[i % sizes.len()];
                let s = seed.wrapping_add(i as u64);
                Ok((
                    format!("random n={n} seed={s}"),
                    generate::random_graph(n, 0.5, s)?,
                ))
            })
            .collect()
    };

    let mut universal = enumerated(5)?;
    universal.extend(random(30, &[6, 7])?);
    for kind in [ReductionKind::DmToScdm, ReductionKind::DmToStdm] {
        for (label, g) in &universal {
            equivalence_case(&mut report, kind, format!("{kind} {label}"), g, None)?;
        }
    }

    let mut bipartite = enumerated(4)?;
    bipartite.extend(random(10, &[5])?);
    for (label, g) in &bipartite {
        let kind = ReductionKind::ScdmToScdb;
        equivalence_case(&mut report, kind, format!("{kind} {label}"), g, None)?;
    }

    for kind in [
        ReductionKind::DmSplitToScdmSplit,
        ReductionKind::DmSplitToStdmSplit,
    ] {
        for i in 0..30 {
            let n = 1 + i % 6;
            let s = seed.wrapping_add(i as u64);
            let (g, partition) = generate::random_split_graph(n, s);
            equivalence_case(
                &mut report,
                kind,
                format!("{kind} split n={n} seed={s}"),
                &g,
                Some(&partition),
            )?;
        }
    }
    Ok(report)
}

/// Properties every minimum SCDS `S` of a connected non-complete graph
/// must have: `|S| >= 1 + γ(G)`, `S` contains all leaves and supports when
/// `n >= 3`, and `S ∖ {v}` dominates for every `v ∈ S`.
pub fn structural_violations(g: &Graph, scds: &SolveReport) -> Result<Vec<String>> {
    let mut violations = Vec::new();
    let gamma = exact::solve(g, Variant::Ds)?.value;
    if scds.value < 1 + gamma {
        violations.push(format!("value {} < 1 + γ = {}", scds.value, 1 + gamma));
    }
    if g.n() >= 3 {
        let required = g.leaves().union(&g.supports());
        if !required.is_subset(&scds.witness) {
            violations.push(format!(
                "witness {} misses leaves/supports {}",
                scds.witness,
                required.difference(&scds.witness)
            ));
        }
    }
    for &v in &scds.witness {
        let mut rest = scds.witness.clone();
        rest.remove(v);
        if !is_dominating(g, &rest) {
            violations.push(format!("witness minus {v} does not dominate"));
        }
    }
    if !is_connected_dominating(g, &scds.witness) {
        violations.push("witness is not connected dominating".into());
    }
    Ok(violations)
}

/// Structural properties on unpruned exact solves (so the solver's own
/// lower bound and forced set play no part): every connected
/// non-complete graph with `n <= 6`, then `count` random connected graphs
/// with `7 <= n <= 10`.
pub fn structural(seed: u64, count: usize) -> Result<GridReport> {
    let mut report = GridReport::new(Grid::Structural);
    let mut graphs = Vec::new();
    for n in 1..=generate::MAX_ENUMERATION_N {
        for (j, g) in generate::enumerate_connected_graphs(n)?
            .into_iter()
            .enumerate()
        {
            graphs.push((format!("connected n={n} #{j}"), g));
        }
    }
    for i in 0..count {
        let n = 7 + i % 4;
        let s = seed.wrapping_add(i as u64);
        graphs.push((
            format!("random n={n} seed={s}"),
            generate::random_graph(n, 0.4, s)?,
        ));
    }
    for (label, g) in graphs.iter().filter(|(_, g)| !g.is_complete()) {
        let unpruned = exact::solve_with(g, Variant::Scds, &SolveOptions::unpruned())?;
        let pruned = exact_scds(g)?;
        let mut violations = structural_violations(g, &unpruned)?;
        if pruned.value != unpruned.value {
            violations.push(format!(
                "pruned {} != unpruned {}",
                pruned.value, unpruned.value
            ));
        }
        let failure = (!violations.is_empty()).then(|| with_graph(violations.join("; "), g));
        report.push(
            label.clone(),
            Some(unpruned.value),
            Some(pruned.value),
            failure,
        );
    }
    Ok(report)
}
