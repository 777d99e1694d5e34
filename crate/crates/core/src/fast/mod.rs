//! Linear-time secure connected domination for block graphs and threshold
//! graphs, with the recognition and decomposition they rely on.

mod block;
mod threshold;

pub use block::{block_decompose, gamma_sc_block, is_block_graph, BlockDecomposition};
pub use threshold::{
    gamma_sc_threshold, recognize_split, recognize_threshold, star_center, Obstruction,
    ObstructionKind, SplitPartition, SplitRejection, ThresholdOrdering, ThresholdRejection,
};

use std::time::Instant;

use crate::error::Result;
use crate::exact::{self, Method, SolveOptions, SolveReport};
use crate::graph::{Graph, VertexSet};
use crate::verify::Variant;

/// Cheapest applicable method for `variant`: for SCDS on a connected graph,
/// the complete-graph case, then the block formula, then the threshold
/// formula; exact search otherwise.
pub fn solve_auto(g: &Graph, variant: Variant, options: &SolveOptions) -> Result<SolveReport> {
    if variant == Variant::Scds && g.n() > 0 && g.is_connected() {
        let start = Instant::now();
        if g.is_complete() {
            return Ok(SolveReport {
                variant,
                value: 1,
                witness: VertexSet::from([0]),
                method: Method::TrivialComplete,
                elapsed: start.elapsed(),
                nodes_explored: 0,
            });
        }
        if block_decompose(g)?.all_blocks_cliques() {
            return gamma_sc_block(g);
        }
        if recognize_threshold(g).is_ok() {
            return gamma_sc_threshold(g);
        }
    }
    exact::solve_with(g, variant, options)
}
