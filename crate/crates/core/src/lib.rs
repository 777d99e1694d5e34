//! Secure connected and secure total domination in graphs.
//!
//! * [`graph`]: simple undirected graphs, edge-list parsing, vertex sets.
//! * [`verify`]: membership tests for the domination variants.
//! * [`exact`]: optimal values by cardinality-increasing subset search.
//! * [`families`]: wheels, books, ladders with closed-form values.
//! * [`fast`]: linear-time solvers for block and threshold graphs.
//! * [`reductions`]: hardness gadgets and an equivalence checker.
//! * [`crosscheck`]: batch comparisons of fast paths against the exact solver.

pub mod cli;
pub mod crosscheck;
pub mod error;
pub mod exact;
pub mod families;
pub mod fast;
pub mod generate;
pub mod graph;
pub mod reductions;
pub mod verify;

pub use error::{Error, Result};
pub use exact::{solve, solve_with, Method, SolveOptions, SolveReport};
pub use families::{FamilyKind, FamilySpec};
pub use graph::{parse_edge_list, Graph, VertexSet};

pub use reductions::{ReductionArtifact, ReductionKind};
pub use verify::Variant;
