//! The `scdom` command line.
//!
//! Exit status: 0 on success, 1 on parse or I/O errors, 2 on domain errors
//! and refused sizes, 3 when a crosscheck or equivalence check finds a
//! mismatch, 70 if a computed witness fails re-verification.

use std::ffi::OsString;
use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::time::{Duration, Instant};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use crate::crosscheck::{Grid, GridReport};
use crate::error::Error;
use crate::exact::{self, SolveOptions, SolveReport, DEFAULT_MAX_N};
use crate::families::{FamilyKind, FamilySpec};
use crate::fast::{
    block_decompose, gamma_sc_block, gamma_sc_threshold, recognize_split, recognize_threshold,
    solve_auto,
};
use crate::generate;
use crate::graph::{parse_edge_list, Graph, VertexSet};
use crate::reductions::{self, ReductionKind, Verdict};
use crate::verify::{self, Variant};

pub const EXIT_OK: i32 = 0;
pub const EXIT_PARSE: i32 = 1;
pub const EXIT_DOMAIN: i32 = 2;
pub const EXIT_MISMATCH: i32 = 3;
pub const EXIT_INTERNAL: i32 = 70;

#[derive(Debug, Parser)]
#[command(
    name = "scdom",
    version,
    about = "Secure connected and secure total domination"
)]
pub struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum MethodArg {
    Auto,
    Exact,
    Block,
    Threshold,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum BenchClass {
    Block,
    Threshold,
}

#[derive(Debug, Args)]
pub struct Input {
    /// Edge-list file, or `-` for standard input.
    #[arg(long = "in", value_name = "FILE", conflicts_with = "family")]
    pub input: Option<PathBuf>,
    /// Generate a family member instead of reading a file.
    #[arg(long, value_name = "KIND", requires = "n")]
    pub family: Option<FamilyKind>,
    #[arg(long, value_name = "N")]
    pub n: Option<usize>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Optimum value and a minimum witness.
    Gamma {
        #[command(flatten)]
        input: Input,
        #[arg(long, default_value = "scds")]
        variant: Variant,
        #[arg(long, value_enum, default_value_t = MethodArg::Auto)]
        method: MethodArg,
        /// Vertex cap for exact search.
        #[arg(long, default_value_t = DEFAULT_MAX_N)]
        max_n: usize,
    },
    /// Check a vertex set against a variant.
    Verify {
        #[command(flatten)]
        input: Input,
        #[arg(long, default_value = "scds")]
        variant: Variant,
        /// Comma-separated vertex ids.
        #[arg(long, value_name = "LIST")]
        set: String,
    },
    /// Classify the graph: connected, tree, block, split, threshold, bipartite.
    Recognize {
        #[command(flatten)]
        input: Input,
    },
    /// Print a family member as an edge list.
    Family {
        #[arg(long)]
        kind: FamilyKind,
        #[arg(long)]
        n: usize,
        /// Also print the closed-form value and a minimum witness.
        #[arg(long)]
        emit_witness: bool,
    },
    /// Apply a hardness gadget.
    Reduce {
        #[arg(long)]
        kind: ReductionKind,
        #[arg(long = "in", value_name = "FILE")]
        input: PathBuf,
        #[arg(long, value_name = "T")]
        param: usize,
    },
    /// Solve both sides of a gadget exactly and compare every threshold.
    CheckEquivalence {
        #[arg(long)]
        kind: ReductionKind,
        #[command(flatten)]
        input: Input,
    },
    /// Compare fast paths, closed forms and verifiers with the exact solver.
    Crosscheck {
        /// Grid to run; all grids when omitted.
        #[arg(long)]
        grid: Option<Grid>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Time a fast solver at n and 2n.
    Bench {
        #[arg(long, value_enum)]
        class: BenchClass,
        #[arg(long, default_value_t = 100_000)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 5)]
        repeats: usize,
    },
}

impl clap::builder::ValueParserFactory for Variant {
    type Parser = clap::builder::ValueParser;
    fn value_parser() -> Self::Parser {
        clap::builder::ValueParser::new(|s: &str| s.parse::<Variant>())
    }
}

impl clap::builder::ValueParserFactory for FamilyKind {
    type Parser = clap::builder::ValueParser;
    fn value_parser() -> Self::Parser {
        clap::builder::ValueParser::new(|s: &str| s.parse::<FamilyKind>())
    }
}

impl clap::builder::ValueParserFactory for ReductionKind {
    type Parser = clap::builder::ValueParser;
    fn value_parser() -> Self::Parser {
        clap::builder::ValueParser::new(|s: &str| s.parse::<ReductionKind>())
    }
}

impl clap::builder::ValueParserFactory for Grid {
    type Parser = clap::builder::ValueParser;
    fn value_parser() -> Self::Parser {
        clap::builder::ValueParser::new(|s: &str| s.parse::<Grid>())
    }
}

#[derive(Debug, Serialize)]
struct GraphSummary {
    n: usize,
    m: usize,
}

#[derive(Debug, Default, Serialize)]
struct Report {
    command: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    variant: Option<Variant>,
    #[serde(skip_serializing_if = "Option::is_none")]
    graph: Option<GraphSummary>,
    #[serde(skip_serializing_if = "Option::is_none")]
    value: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    witness: Option<VertexSet>,
    #[serde(skip_serializing_if = "Option::is_none")]
    method: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    verdict: Option<serde_json::Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    reason: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    details: Option<serde_json::Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    elapsed_ms: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    seed: Option<u64>,
}

impl Report {
    fn new(command: &'static str) -> Self {
        Report {
            command,
            ..Report::default()
        }
    }

    fn graph(mut self, g: &Graph) -> Self {
        self.graph = Some(GraphSummary { n: g.n(), m: g.m() });
        self
    }
}

#[derive(Debug)]
enum Failure {
    Lib(Error),
    Mismatch(String),
    Internal(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

impl Failure {
    fn exit_code(&self) -> i32 {
        match self {
            Failure::Lib(Error::Parse { .. } | Error::Io(_)) => EXIT_PARSE,
            Failure::Lib(Error::Domain(_) | Error::Refused(_)) => EXIT_DOMAIN,
            Failure::Mismatch(_) => EXIT_MISMATCH,
            Failure::Internal(_) => EXIT_INTERNAL,
        }
    }

    fn message(&self) -> String {
        match self {
            Failure::Lib(e) => e.to_string(),
            Failure::Mismatch(m) => m.clone(),
            Failure::Internal(m) => format!("internal error: {m}"),
        }
    }
}

type Outcome = std::result::Result<(), Failure>;

struct Context<'a> {
    format: Format,
    out: &'a mut dyn Write,
    err: &'a mut dyn Write,
}

impl Context<'_> {
    fn emit(&mut self, report: &Report, text: &str) -> Outcome {
        let written = match self.format {
            Format::Json => serde_json::to_string(report)
                .map_err(io::Error::other)
                .and_then(|s| writeln!(self.out, "{s}")),
            Format::Text => write!(self.out, "{text}"),
        };
        written.map_err(|e| Failure::Lib(Error::Io(e)))
    }

    fn warn(&mut self, message: &str) {
        let _ = writeln!(self.err, "warning: {message}");
    }
}

fn millis(d: Duration) -> f64 {
    d.as_secs_f64() * 1e3
}

/// Parse `args` (program name first) and run the command, writing the
/// report to `out` and diagnostics to `err`. Returns the exit status.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let rendered = e.render().to_string();
            if e.use_stderr() {
                let _ = write!(err, "{rendered}");
            } else {
                let _ = write!(out, "{rendered}");
            }
            return e.exit_code();
        }
    };
    let mut ctx = Context {
        format: cli.format,
        out,
        err,
    };
    match dispatch(cli.command, &mut ctx) {
        Ok(()) => EXIT_OK,
        Err(failure) => {
            let _ = writeln!(ctx.err, "error: {}", failure.message());
            failure.exit_code()
        }
    }
}

fn dispatch(command: Command, ctx: &mut Context<'_>) -> Outcome {
    match command {
        Command::Gamma {
            input,
            variant,
            method,
            max_n,
        } => gamma(ctx, &input, variant, method, max_n),
        Command::Verify {
            input,
            variant,
            set,
        } => verify_set(ctx, &input, variant, &set),
        Command::Recognize { input } => recognize(ctx, &input),
        Command::Family {
            kind,
            n,
            emit_witness,
        } => family(ctx, kind, n, emit_witness),
        Command::Reduce { kind, input, param } => reduce(ctx, kind, &input, param),
        Command::CheckEquivalence { kind, input } => check_equivalence(ctx, kind, &input),
        Command::Crosscheck { grid, seed } => crosscheck(ctx, grid, seed),
        Command::Bench {
            class,
            n,
            seed,
            repeats,
        } => bench(ctx, class, n, seed, repeats),
    }
}

fn read_text(path: &PathBuf) -> Result<String, Error> {
    if path.as_os_str() == "-" {
        let mut text = String::new();
        io::stdin().read_to_string(&mut text)?;
        return Ok(text);
    }
    Ok(fs::read_to_string(path)?)
}

fn read_graph_file(ctx: &mut Context<'_>, path: &PathBuf) -> Result<Graph, Failure> {
    let parsed = parse_edge_list(&read_text(path)?)?;
    for w in &parsed.warnings {
        ctx.warn(w);
    }
    Ok(parsed.graph)
}

fn load(ctx: &mut Context<'_>, input: &Input) -> Result<Graph, Failure> {
    match (&input.input, input.family) {
        (Some(path), _) => read_graph_file(ctx, path),
        (None, Some(kind)) => {
            let n = input.n.ok_or_else(|| Error::domain("--family needs --n"))?;
            Ok(FamilySpec::new(kind, n)?.generate())
        }
        (None, None) => {
            Err(Error::domain("no input: pass --in FILE or --family KIND --n N").into())
        }
    }
}

/// Re-check a computed witness before it is printed.
fn certify(g: &Graph, report: &SolveReport) -> Outcome {
    if report.witness.len() != report.value || !verify::verify(g, &report.witness, report.variant) {
        return Err(Failure::Internal(format!(
            "witness {} failed {} verification",
            report.witness, report.variant
        )));
    }
    Ok(())
}

fn scds_only(variant: Variant, method: &str) -> Result<(), Error> {
    if variant != Variant::Scds {
        return Err(Error::domain(format!(
            "method {method} computes scds only, not {variant}"
        )));
    }
    Ok(())
}

fn gamma(
    ctx: &mut Context<'_>,
    input: &Input,
    variant: Variant,
    method: MethodArg,
    max_n: usize,
) -> Outcome {
    let g = load(ctx, input)?;
    let options = SolveOptions::with_max_n(max_n);
    let report = match method {
        MethodArg::Auto => solve_auto(&g, variant, &options)?,
        MethodArg::Exact => exact::solve_with(&g, variant, &options)?,
        MethodArg::Block => {
            scds_only(variant, "block")?;
            gamma_sc_block(&g)?
        }
        MethodArg::Threshold => {
            scds_only(variant, "threshold")?;
            gamma_sc_threshold(&g)?
        }
    };
    certify(&g, &report)?;
    let text = format!(
        "variant: {}\nvalue: {}\nwitness: {}\nmethod: {}\n",
        report.variant, report.value, report.witness, report.method
    );
    let json = Report {
        variant: Some(report.variant),
        value: Some(report.value),
        witness: Some(report.witness.clone()),
        method: Some(report.method.name().into()),
        details: Some(json!({ "nodes_explored": report.nodes_explored })),
        elapsed_ms: Some(millis(report.elapsed)),
        ..Report::new("gamma").graph(&g)
    };
    ctx.emit(&json, &text)
}

fn verify_set(ctx: &mut Context<'_>, input: &Input, variant: Variant, set: &str) -> Outcome {
    let g = load(ctx, input)?;
    let s = VertexSet::parse_list(set)?;
    s.check_within(g.n())?;
    let start = Instant::now();
    let reason = verify::explain_failure(&g, &s, variant);
    let valid = reason.is_none();
    let mut details = serde_json::Map::new();
    let check = match variant {
        Variant::Scds => Some(verify::is_scds_definition(&g, &s)),
        Variant::Stds => Some(verify::is_stds(&g, &s)),
        _ => None,
    };
    if let Some(check) = check {
        let defenders: serde_json::Map<String, serde_json::Value> = check
            .defenders
            .iter()
            .map(|(u, d)| (u.to_string(), json!(d)))
            .collect();
        details.insert("defenders".into(), defenders.into());
    }
    if variant == Variant::Scds {
        details.insert(
            "characterization".into(),
            verify::is_scds_characterization(&g, &s).into(),
        );
    }
    let elapsed = start.elapsed();
    let mut text = format!("variant: {variant}\nset: {s}\nverdict: {valid}\n");
    if let Some(r) = &reason {
        text.push_str(&format!("reason: {r}\n"));
    }
    let json = Report {
        variant: Some(variant),
        witness: Some(s),
        method: Some("definition".into()),
        verdict: Some(valid.into()),
        reason,
        details: (!details.is_empty()).then(|| details.into()),
        elapsed_ms: Some(millis(elapsed)),
        ..Report::new("verify").graph(&g)
    };
    ctx.emit(&json, &text)
}

fn recognize(ctx: &mut Context<'_>, input: &Input) -> Outcome {
    let g = load(ctx, input)?;
    let start = Instant::now();
    let connected = g.n() > 0 && g.is_connected();
    let tree = connected && g.m() + 1 == g.n();
    let block = connected && block_decompose(&g)?.all_blocks_cliques();
    let split = recognize_split(&g);
    let threshold = recognize_threshold(&g);
    let bipartite = g.is_bipartite();
    let elapsed = start.elapsed();

    let yes = |b: bool| if b { "yes" } else { "no" };
    let mut text = format!(
        "connected: {}\ncomplete: {}\ntree: {}\nblock: {}\n",
        yes(connected),
        yes(g.is_complete()),
        yes(tree),
        yes(block)
    );
    let mut details = serde_json::Map::new();
    details.insert("connected".into(), connected.into());
    details.insert("complete".into(), g.is_complete().into());
    details.insert("tree".into(), tree.into());
    details.insert("block".into(), block.into());
    match &split {
        Ok(p) => {
            text.push_str(&format!(
                "split: yes (clique {}; independent {})\n",
                p.clique, p.independent
            ));
            details.insert("split".into(), json!(p));
        }
        Err(e) => {
            text.push_str(&format!("split: no ({e})\n"));
            details.insert("split".into(), false.into());
            if let Some(o) = &e.obstruction {
                details.insert(
                    "split_obstruction".into(),
                    json!({ "kind": o.kind.to_string(), "vertices": o.vertices }),
                );
            }
        }
    }
    match &threshold {
        Ok(t) => {
            let order = |v: &[usize]| {
                v.iter()
                    .map(|x| x.to_string())
                    .collect::<Vec<_>>()
                    .join(",")
            };
            text.push_str(&format!(
                "threshold: yes (clique order {}; independent order {})\n",
                order(&t.clique_order),
                order(&t.independent_order)
            ));
            details.insert(
                "threshold".into(),
                json!({ "clique_order": t.clique_order, "independent_order": t.independent_order }),
            );
        }
        Err(e) => {
            text.push_str(&format!("threshold: no ({e})\n"));
            details.insert("threshold".into(), false.into());
        }
    }
    text.push_str(&format!("bipartite: {}\n", yes(bipartite)));
    details.insert("bipartite".into(), bipartite.into());

    let json = Report {
        method: Some("recognition".into()),
        details: Some(details.into()),
        elapsed_ms: Some(millis(elapsed)),
        ..Report::new("recognize").graph(&g)
    };
    ctx.emit(&json, &text)
}

fn family(ctx: &mut Context<'_>, kind: FamilyKind, n: usize, emit_witness: bool) -> Outcome {
    let spec = FamilySpec::new(kind, n)?;
    let g = spec.generate();
    let mut text = g.to_edge_list();
    let mut json = Report {
        method: Some("closed_form".into()),
        details: Some(json!({ "family": kind, "n": n, "edge_list": g.to_edge_list() })),
        ..Report::new("family").graph(&g)
    };
    if emit_witness {
        let witness = spec.witness();
        if !verify::is_scds_definition(&g, &witness).valid {
            return Err(Failure::Internal(format!(
                "{spec} witness {witness} is not an SCDS"
            )));
        }
        text.push_str(&format!(
            "# gamma_sc {}\n# witness {}\n",
            spec.formula_value(),
            witness
        ));
        json.variant = Some(Variant::Scds);
        json.value = Some(spec.formula_value());
        json.witness = Some(witness);
    }
    ctx.emit(&json, &text)
}

fn reduce(ctx: &mut Context<'_>, kind: ReductionKind, input: &PathBuf, param: usize) -> Outcome {
    let g = read_graph_file(ctx, input)?;
    let start = Instant::now();
    let artifact = reductions::reduce(kind, &g, param, None)?;
    let elapsed = start.elapsed();
    let out = &artifact.output_graph;
    let mut text = out.to_edge_list();
    text.push_str(&format!("# parameter {}\n", artifact.output_parameter));
    for (v, role) in artifact.provenance.iter().enumerate() {
        text.push_str(&format!("# vertex {v} from {role}\n"));
    }
    if let Some(p) = &artifact.output_partition {
        text.push_str(&format!(
            "# clique {}\n# independent {}\n",
            p.clique, p.independent
        ));
    }
    let json = Report {
        variant: Some(kind.target_variant()),
        method: Some(kind.name().into()),
        details: Some(json!({
            "kind": kind,
            "input": { "n": g.n(), "m": g.m() },
            "input_parameter": artifact.input_parameter,
            "output_parameter": artifact.output_parameter,
            "provenance": artifact.provenance,
            "output_partition": artifact.output_partition,
            "edge_list": out.to_edge_list(),
        })),
        elapsed_ms: Some(millis(elapsed)),
        ..Report::new("reduce").graph(out)
    };
    ctx.emit(&json, &text)
}

fn check_equivalence(ctx: &mut Context<'_>, kind: ReductionKind, input: &Input) -> Outcome {
    let g = load(ctx, input)?;
    let start = Instant::now();
    let r = reductions::check_equivalence(kind, &g, None)?;
    let elapsed = start.elapsed();
    let show = |v: Option<usize>| v.map_or("none".to_string(), |v| v.to_string());
    let verdict = match r.verdict {
        Verdict::AllMatch => "all-match".to_string(),
        Verdict::Counterexample { t } => format!("counterexample at t={t}"),
    };
    let mut text = format!(
        "kind: {kind}\nsource {}: {}\ntarget {}: {}\noffset: {}\n t  source  target\n",
        kind.source_variant(),
        show(r.source_value),
        kind.target_variant(),
        show(r.target_value),
        kind.offset()
    );
    for row in &r.rows {
        text.push_str(&format!(
            "{:>2}  {:<6}  {}\n",
            row.t, row.source, row.target
        ));
    }
    text.push_str(&format!("verdict: {verdict}\n"));
    let json = Report {
        variant: Some(kind.target_variant()),
        method: Some("exact_search".into()),
        verdict: Some(verdict.clone().into()),
        details: Some(json!({
            "kind": kind,
            "offset": kind.offset(),
            "source_variant": kind.source_variant(),
            "source_value": r.source_value,
            "source_witness": r.source_witness,
            "target_value": r.target_value,
            "target_witness": r.target_witness,
            "rows": r.rows,
            "output_graph": { "n": r.artifact.output_graph.n(), "m": r.artifact.output_graph.m() },
        })),
        elapsed_ms: Some(millis(elapsed)),
        ..Report::new("check-equivalence").graph(&g)
    };
    ctx.emit(&json, &text)?;
    match r.verdict {
        Verdict::AllMatch => Ok(()),
        Verdict::Counterexample { .. } => Err(Failure::Mismatch(format!("{kind}: {verdict}"))),
    }
}

fn crosscheck(ctx: &mut Context<'_>, grid: Option<Grid>, seed: u64) -> Outcome {
    let grids: Vec<Grid> = grid.map_or(Grid::ALL.to_vec(), |g| vec![g]);
    let start = Instant::now();
    let reports: Vec<GridReport> = grids
        .iter()
        .map(|g| g.run(seed))
        .collect::<crate::Result<_>>()?;
    let elapsed = start.elapsed();

    let mut text = String::new();
    for report in &reports {
        for case in &report.cases {
            let status = if case.pass { "PASS" } else { "FAIL" };
            text.push_str(&format!(
                "{status} {} #{} {}\n",
                report.grid, case.index, case.label
            ));
            if !case.pass {
                for line in case.detail.lines() {
                    text.push_str(&format!("    {line}\n"));
                }
            }
        }
        text.push_str(&format!(
            "summary {}: {}/{} passed\n",
            report.grid,
            report.passed(),
            report.cases.len()
        ));
    }
    let failed: usize = reports.iter().map(|r| r.cases.len() - r.passed()).sum();
    let json = Report {
        method: Some("exact_search".into()),
        verdict: Some((failed == 0).into()),
        details: Some(json!({ "grids": reports })),
        elapsed_ms: Some(millis(elapsed)),
        seed: Some(seed),
        ..Report::new("crosscheck")
    };
    ctx.emit(&json, &text)?;
    if failed > 0 {
        return Err(Failure::Mismatch(format!(
            "{failed} crosscheck case(s) failed"
        )));
    }
    Ok(())
}

fn bench_instance(class: BenchClass, n: usize, seed: u64) -> Graph {
    match class {
        BenchClass::Block => generate::random_block_graph(n, seed),
        BenchClass::Threshold => generate::sparse_threshold_graph(n, 3),
    }
}

/// Fastest of `repeats` runs of the class solver on `g`.
pub fn time_fast_solver(
    g: &Graph,
    threshold: bool,
    repeats: usize,
) -> crate::Result<(SolveReport, Duration)> {
    let mut best: Option<(SolveReport, Duration)> = None;
    for _ in 0..repeats.max(1) {
        let start = Instant::now();
        let r = if threshold {
            gamma_sc_threshold(g)?
        } else {
            gamma_sc_block(g)?
        };
        let t = start.elapsed();
        if best.as_ref().is_none_or(|(_, b)| t < *b) {
            best = Some((r, t));
        }
    }
    Ok(best.expect("at least one run"))
}

fn bench(ctx: &mut Context<'_>, class: BenchClass, n: usize, seed: u64, repeats: usize) -> Outcome {
    if n < 2 {
        return Err(Error::domain("bench needs n >= 2").into());
    }
    let threshold = class == BenchClass::Threshold;
    let small = bench_instance(class, n, seed);
    let large = bench_instance(class, 2 * n, seed);
    let (r1, t1) = time_fast_solver(&small, threshold, repeats)?;
    let (r2, t2) = time_fast_solver(&large, threshold, repeats)?;
    let ratio = t2.as_secs_f64() / t1.as_secs_f64().max(1e-9);
    let text = format!(
        "n={n}: value {} in {:.3} ms\nn={}: value {} in {:.3} ms\nratio: {ratio:.2}\n",
        r1.value,
        millis(t1),
        2 * n,
        r2.value,
        millis(t2)
    );
    let json = Report {
        variant: Some(Variant::Scds),
        value: Some(r1.value),
        method: Some(r1.method.name().into()),
        details: Some(json!({
            "runs": [
                { "n": small.n(), "m": small.m(), "value": r1.value, "ms": millis(t1) },
                { "n": large.n(), "m": large.m(), "value": r2.value, "ms": millis(t2) },
            ],
            "ratio": ratio,
            "repeats": repeats,
        })),
        elapsed_ms: Some(millis(t1 + t2)),
        seed: Some(seed),
        ..Report::new("bench").graph(&small)
    };
    ctx.emit(&json, &text)
}
