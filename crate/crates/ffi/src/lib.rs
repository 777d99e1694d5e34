//! C interface to `scdom`.
//!
//! Graphs, solve reports and strings are heap objects owned by the caller
//! and released with the matching `*_free` function. Every fallible call
//! returns a [`ScdomStatus`]; on failure, [`scdom_last_error_message`]
//! describes the error for the calling thread.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;
use std::slice;

use scdom::exact::{self, Method, SolveOptions, SolveReport};
use scdom::fast::{gamma_sc_block, gamma_sc_threshold, solve_auto};
use scdom::reductions::{self, ReductionKind};
use scdom::verify;
use scdom::{parse_edge_list, Error, FamilyKind, FamilySpec, Graph, Variant, VertexSet};

/// Status code returned by every fallible function.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ScdomStatus {
    Ok = 0,
    NullPointer = 1,
    ParseError = 2,
    DomainError = 3,
    Refused = 4,
    IoError = 5,
    InvalidArgument = 6,
    Panic = 7,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ScdomVariant {
    Ds = 0,
    Cds = 1,
    Tds = 2,
    Sds = 3,
    Scds = 4,
    Stds = 5,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ScdomMethod {
    Auto = 0,
    ExactSearch = 1,
    BlockFormula = 2,
    ThresholdFormula = 3,
    TrivialComplete = 4,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ScdomFamily {
    Complete = 0,
    SubdividedWheel = 1,
    Book = 2,
    Ladder = 3,
    Star = 4,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ScdomReduction {
    DmToScdm = 0,
    DmToStdm = 1,
    ScdmToScdb = 2,
    StdmToStdb = 3,
    DmSplitToScdmSplit = 4,
    DmSplitToStdmSplit = 5,
}

/// Opaque graph handle.
pub struct ScdomGraph {
    graph: Graph,
}

/// Opaque solve result.
pub struct ScdomReport {
    report: SolveReport,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(message: String) {
    let c = CString::new(message.replace('\0', " ")).expect("nul bytes removed");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn fail(status: ScdomStatus, message: impl Into<String>) -> ScdomStatus {
    set_error(message.into());
    status
}

fn from_error(e: Error) -> ScdomStatus {
    let status = match e {
        Error::Parse { .. } => ScdomStatus::ParseError,
        Error::Domain(_) => ScdomStatus::DomainError,
        Error::Refused(_) => ScdomStatus::Refused,
        Error::Io(_) => ScdomStatus::IoError,
    };
    fail(status, e.to_string())
}

/// Run `body`, mapping errors and panics to status codes.
fn guard(body: impl FnOnce() -> Result<(), ScdomStatus>) -> ScdomStatus {
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(Ok(())) => ScdomStatus::Ok,
        Ok(Err(status)) => status,
        Err(_) => fail(ScdomStatus::Panic, "internal panic"),
    }
}

trait OrStatus<T> {
    fn or_status(self) -> Result<T, ScdomStatus>;
}

impl<T> OrStatus<T> for scdom::Result<T> {
    fn or_status(self) -> Result<T, ScdomStatus> {
        self.map_err(from_error)
    }
}

fn non_null<T>(p: *const T, name: &str) -> Result<(), ScdomStatus> {
    if p.is_null() {
        return Err(fail(ScdomStatus::NullPointer, format!("{name} is null")));
    }
    Ok(())
}

unsafe fn graph_ref<'a>(g: *const ScdomGraph) -> Result<&'a Graph, ScdomStatus> {
    non_null(g, "graph")?;
    Ok(&(*g).graph)
}

unsafe fn report_ref<'a>(r: *const ScdomReport) -> Result<&'a SolveReport, ScdomStatus> {
    non_null(r, "report")?;
    Ok(&(*r).report)
}

unsafe fn store<T>(out: *mut *mut T, value: T) {
    *out = Box::into_raw(Box::new(value));
}

fn variant(v: ScdomVariant) -> Variant {
    match v {
        ScdomVariant::Ds => Variant::Ds,
        ScdomVariant::Cds => Variant::Cds,
        ScdomVariant::Tds => Variant::Tds,
        ScdomVariant::Sds => Variant::Sds,
        ScdomVariant::Scds => Variant::Scds,
        ScdomVariant::Stds => Variant::Stds,
    }
}

fn family(f: ScdomFamily) -> FamilyKind {
    match f {
        ScdomFamily::Complete => FamilyKind::Complete,
        ScdomFamily::SubdividedWheel => FamilyKind::SubdividedWheel,
        ScdomFamily::Book => FamilyKind::Book,
        ScdomFamily::Ladder => FamilyKind::Ladder,
        ScdomFamily::Star => FamilyKind::Star,
    }
}

fn reduction(r: ScdomReduction) -> ReductionKind {
    match r {
        ScdomReduction::DmToScdm => ReductionKind::DmToScdm,
        ScdomReduction::DmToStdm => ReductionKind::DmToStdm,
        ScdomReduction::ScdmToScdb => ReductionKind::ScdmToScdb,
        ScdomReduction::StdmToStdb => ReductionKind::StdmToStdb,
        ScdomReduction::DmSplitToScdmSplit => ReductionKind::DmSplitToScdmSplit,
        ScdomReduction::DmSplitToStdmSplit => ReductionKind::DmSplitToStdmSplit,
    }
}

fn method_code(m: Method) -> ScdomMethod {
    match m {
        Method::ExactSearch => ScdomMethod::ExactSearch,
        Method::BlockFormula => ScdomMethod::BlockFormula,
        Method::ThresholdFormula => ScdomMethod::ThresholdFormula,
        Method::TrivialComplete => ScdomMethod::TrivialComplete,
    }
}

/// Message for the most recent failure on this thread, or null if none.
/// The pointer stays valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn scdom_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Parse NUL-terminated edge-list text.
///
/// # Safety
/// `text` must be a valid C string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn scdom_graph_from_edge_list(
    text: *const c_char,
    out: *mut *mut ScdomGraph,
) -> ScdomStatus {
    guard(|| {
        non_null(text, "text")?;
        non_null(out, "out")?;
        let text = CStr::from_ptr(text)
            .to_str()
            .map_err(|_| fail(ScdomStatus::ParseError, "text is not valid UTF-8"))?;
        let graph = parse_edge_list(text).or_status()?.graph;
        store(out, ScdomGraph { graph });
        Ok(())
    })
}

/// Build a graph on `n` vertices from `edge_count` pairs stored flat in
/// `edges` (`2 * edge_count` entries).
///
/// # Safety
/// `edges` must point to `2 * edge_count` readable values (or may be null
/// when `edge_count` is 0); `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn scdom_graph_from_edges(
    n: usize,
    edges: *const usize,
    edge_count: usize,
    out: *mut *mut ScdomGraph,
) -> ScdomStatus {
    guard(|| {
        non_null(out, "out")?;
        let flat: &[usize] = if edge_count == 0 {
            &[]
        } else {
            non_null(edges, "edges")?;
            slice::from_raw_parts(edges, 2 * edge_count)
        };
        let pairs = flat.chunks_exact(2).map(|p| (p[0], p[1]));
        let graph = Graph::from_edges(n, pairs).or_status()?;
        store(out, ScdomGraph { graph });
        Ok(())
    })
}

/// Generate a family member in its canonical labeling.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn scdom_family_generate(
    kind: ScdomFamily,
    n: usize,
    out: *mut *mut ScdomGraph,
) -> ScdomStatus {
    guard(|| {
        non_null(out, "out")?;
        let spec = FamilySpec::new(family(kind), n).or_status()?;
        store(
            out,
            ScdomGraph {
                graph: spec.generate(),
            },
        );
        Ok(())
    })
}

/// Closed-form secure connected domination number of a family member.
///
/// # Safety
/// `out_value` must be writable.
#[no_mangle]
pub unsafe extern "C" fn scdom_family_value(
    kind: ScdomFamily,
    n: usize,
    out_value: *mut usize,
) -> ScdomStatus {
    guard(|| {
        non_null(out_value, "out_value")?;
        *out_value = FamilySpec::new(family(kind), n)
            .or_status()?
            .formula_value();
        Ok(())
    })
}

/// # Safety
/// `graph` must come from this library and not be used afterwards. Null is
/// ignored.
#[no_mangle]
pub unsafe extern "C" fn scdom_graph_free(graph: *mut ScdomGraph) {
    if !graph.is_null() {
        drop(Box::from_raw(graph));
    }
}

/// Vertex count, or 0 for a null handle.
///
/// # Safety
/// `graph` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn scdom_graph_vertex_count(graph: *const ScdomGraph) -> usize {
    graph.as_ref().map_or(0, |g| g.graph.n())
}

/// Edge count, or 0 for a null handle.
///
/// # Safety
/// `graph` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn scdom_graph_edge_count(graph: *const ScdomGraph) -> usize {
    graph.as_ref().map_or(0, |g| g.graph.m())
}

/// Canonical edge-list text. Release with [`scdom_string_free`].
///
/// # Safety
/// `graph` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn scdom_graph_to_edge_list(
    graph: *const ScdomGraph,
    out: *mut *mut c_char,
) -> ScdomStatus {
    guard(|| {
        let g = graph_ref(graph)?;
        non_null(out, "out")?;
        let text = CString::new(g.to_edge_list()).expect("edge list has no NUL");
        *out = text.into_raw();
        Ok(())
    })
}

/// # Safety
/// `s` must come from this library and not be used afterwards. Null is
/// ignored.
#[no_mangle]
pub unsafe extern "C" fn scdom_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Whether the `len` vertices at `set` form a set of the given variant.
/// Out-of-range ids are an invalid argument.
///
/// # Safety
/// `graph` must be a live handle; `set` must point to `len` values (or may
/// be null when `len` is 0); `out_valid` must be writable.
#[no_mangle]
pub unsafe extern "C" fn scdom_verify(
    graph: *const ScdomGraph,
    kind: ScdomVariant,
    set: *const usize,
    len: usize,
    out_valid: *mut bool,
) -> ScdomStatus {
    guard(|| {
        let g = graph_ref(graph)?;
        non_null(out_valid, "out_valid")?;
        let members: &[usize] = if len == 0 {
            &[]
        } else {
            non_null(set, "set")?;
            slice::from_raw_parts(set, len)
        };
        let s: VertexSet = members.iter().copied().collect();
        s.check_within(g.n())
            .map_err(|e| fail(ScdomStatus::InvalidArgument, e.to_string()))?;
        *out_valid = verify::verify(g, &s, variant(kind));
        Ok(())
    })
}

/// Optimum for `kind` with a minimum witness. `method` selects the
/// algorithm; block and threshold formulas compute `SCDS` only. `max_n`
/// caps exact search (0 means the default of 20).
///
/// # Safety
/// `graph` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn scdom_solve(
    graph: *const ScdomGraph,
    kind: ScdomVariant,
    method: ScdomMethod,
    max_n: usize,
    out: *mut *mut ScdomReport,
) -> ScdomStatus {
    guard(|| {
        let g = graph_ref(graph)?;
        non_null(out, "out")?;
        let v = variant(kind);
        let options = if max_n == 0 {
            SolveOptions::default()
        } else {
            SolveOptions::with_max_n(max_n)
        };
        let scds_only = |name: &str| {
            if v == Variant::Scds {
                Ok(())
            } else {
                Err(fail(
                    ScdomStatus::InvalidArgument,
                    format!("{name} computes scds only"),
                ))
            }
        };
        let report = match method {
            ScdomMethod::Auto => solve_auto(g, v, &options),
            ScdomMethod::ExactSearch => exact::solve_with(g, v, &options),
            ScdomMethod::BlockFormula => {
                scds_only("block formula")?;
                gamma_sc_block(g)
            }
            ScdomMethod::ThresholdFormula => {
                scds_only("threshold formula")?;
                gamma_sc_threshold(g)
            }
            ScdomMethod::TrivialComplete => {
                return Err(fail(
                    ScdomStatus::InvalidArgument,
                    "trivial_complete is reported, not requested; use auto",
                ))
            }
        }
        .or_status()?;
        store(out, ScdomReport { report });
        Ok(())
    })
}

/// # Safety
/// `report` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn scdom_report_value(report: *const ScdomReport) -> usize {
    report.as_ref().map_or(0, |r| r.report.value)
}

/// Method that produced the report.
///
/// # Safety
/// `report` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn scdom_report_method(report: *const ScdomReport) -> ScdomMethod {
    report
        .as_ref()
        .map_or(ScdomMethod::Auto, |r| method_code(r.report.method))
}

/// Copy the witness (ascending ids) into `buffer`. `*out_len` receives the
/// witness size; a buffer smaller than that is an invalid argument and
/// nothing is copied.
///
/// # Safety
/// `report` must be a live handle; `buffer` must have room for `capacity`
/// values (or may be null when `capacity` is 0); `out_len` must be writable.
#[no_mangle]
pub unsafe extern "C" fn scdom_report_witness(
    report: *const ScdomReport,
    buffer: *mut usize,
    capacity: usize,
    out_len: *mut usize,
) -> ScdomStatus {
    guard(|| {
        let r = report_ref(report)?;
        non_null(out_len, "out_len")?;
        let witness = r.witness.as_slice();
        *out_len = witness.len();
        if capacity < witness.len() {
            return Err(fail(
                ScdomStatus::InvalidArgument,
                format!("buffer holds {capacity}, witness has {}", witness.len()),
            ));
        }
        if !witness.is_empty() {
            non_null(buffer, "buffer")?;
            ptr::copy_nonoverlapping(witness.as_ptr(), buffer, witness.len());
        }
        Ok(())
    })
}

/// # Safety
/// `report` must come from this library and not be used afterwards. Null is
/// ignored.
#[no_mangle]
pub unsafe extern "C" fn scdom_report_free(report: *mut ScdomReport) {
    if !report.is_null() {
        drop(Box::from_raw(report));
    }
}

/// Apply a hardness gadget. Split kinds recognize a split partition of the
/// input. The shifted parameter goes to `out_parameter`.
///
/// # Safety
/// `graph` must be a live handle; `out` and `out_parameter` must be
/// writable.
#[no_mangle]
pub unsafe extern "C" fn scdom_reduce(
    graph: *const ScdomGraph,
    kind: ScdomReduction,
    parameter: usize,
    out: *mut *mut ScdomGraph,
    out_parameter: *mut usize,
) -> ScdomStatus {
    guard(|| {
        let g = graph_ref(graph)?;
        non_null(out, "out")?;
        non_null(out_parameter, "out_parameter")?;
        let artifact = reductions::reduce(reduction(kind), g, parameter, None).or_status()?;
        *out_parameter = artifact.output_parameter;
        store(
            out,
            ScdomGraph {
                graph: artifact.output_graph,
            },
        );
        Ok(())
    })
}
