use std::time::Instant;

use crate::error::{Error, Result};
use crate::exact::{Method, SolveReport};
use crate::graph::{Graph, VertexSet};
use crate::verify::Variant;

/// Blocks and cut vertices of a connected graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockDecomposition {
    /// Vertex sets of the blocks, ordered lexicographically (so by smallest
    /// member first). A bridge is a two-vertex block; a single-vertex graph
    /// has one block.
    pub blocks: Vec<VertexSet>,
    /// Number of edges inside each block, parallel to `blocks`.
    pub block_edges: Vec<usize>,
    pub cut_vertices: VertexSet,
}

impl BlockDecomposition {
    /// Block count.
    pub fn r(&self) -> usize {
        self.blocks.len()
    }

    /// Cut-vertex count.
    pub fn k(&self) -> usize {
        self.cut_vertices.len()
    }

    /// Blocks consisting only of cut vertices.
    pub fn r_prime(&self) -> usize {
        self.blocks
            .iter()
            .filter(|b| b.iter().all(|&v| self.cut_vertices.contains(v)))
            .count()
    }

    /// True when every block induces a clique.
    pub fn all_blocks_cliques(&self) -> bool {
        self.blocks
            .iter()
            .zip(&self.block_edges)
            .all(|(b, &e)| e == b.len() * (b.len() - 1) / 2)
    }
}

/// Lowpoint decomposition (iterative depth-first search, edge stack).
pub fn block_decompose(g: &Graph) -> Result<BlockDecomposition> {
    let n = g.n();
    if !g.is_connected() {
        return Err(Error::domain(
            "block decomposition requires a connected graph",
        ));
    }
    if n == 1 {
        return Ok(BlockDecomposition {
            blocks: vec![VertexSet::from([0])],
            block_edges: vec![0],
            cut_vertices: VertexSet::new(),
        });
    }

    const UNSEEN: usize = usize::MAX;
    let mut disc = vec![UNSEEN; n];
    let mut low = vec![0usize; n];
    let mut parent = vec![UNSEEN; n];
    let mut next_edge = vec![0usize; n];
    let mut is_cut = vec![false; n];
    let mut stamp = vec![UNSEEN; n];
    let mut edge_stack: Vec<(usize, usize)> = Vec::new();
    let mut raw: Vec<(Vec<usize>, usize)> = Vec::new();

    let root = 0;
    let mut root_children = 0;
    disc[root] = 0;
    let mut time = 1;
    let mut stack = vec![root];

    while let Some(&u) = stack.last() {
        if let Some(&w) = g.adj(u).get(next_edge[u]) {
            next_edge[u] += 1;
            if disc[w] == UNSEEN {
                parent[w] = u;
                disc[w] = time;
                low[w] = time;
                time += 1;
                edge_stack.push((u, w));
                stack.push(w);
                if u == root {
                    root_children += 1;
                }
            } else if w != parent[u] && disc[w] < disc[u] {
                edge_stack.push((u, w));
                low[u] = low[u].min(disc[w]);
            }
            continue;
        }
        stack.pop();
        let Some(&p) = stack.last() else { break };
        low[p] = low[p].min(low[u]);
        if low[u] >= disc[p] {
            if p != root {
                is_cut[p] = true;
            }
            let id = raw.len();
            let mut members = Vec::new();
            let mut edges = 0;
            while let Some((a, b)) = edge_stack.pop() {
                edges += 1;
                for x in [a, b] {
                    if stamp[x] != id {
                        stamp[x] = id;
                        members.push(x);
                    }
                }
                if (a, b) == (p, u) {
                    break;
                }
            }
            members.sort_unstable();
            raw.push((members, edges));
        }
    }
    if root_children >= 2 {
        is_cut[root] = true;
    }

    raw.sort_unstable();
    let (blocks, block_edges) = raw
        .into_iter()
        .map(|(members, edges)| (VertexSet::from(members), edges))
        .unzip();
    Ok(BlockDecomposition {
        blocks,
        block_edges,
        cut_vertices: VertexSet::from_mask(&is_cut),
    })
}

/// Whether every block of the (connected) graph is a clique.
pub fn is_block_graph(g: &Graph) -> Result<bool> {
    Ok(block_decompose(g)?.all_blocks_cliques())
}

/// `γ_sc` of a connected block graph as `k + r - r'`, with witness: all cut
/// vertices plus the smallest non-cut vertex of every block that has one.
pub fn gamma_sc_block(g: &Graph) -> Result<SolveReport> {
    let start = Instant::now();
    let decomposition = block_decompose(g)?;
    if !decomposition.all_blocks_cliques() {
        return Err(Error::domain("graph is not a block graph"));
    }
    let cut = &decomposition.cut_vertices;
    let mut witness: Vec<usize> = cut.iter().copied().collect();
    witness.extend(
        decomposition
            .blocks
            .iter()
            .filter_map(|b| b.iter().copied().find(|&v| !cut.contains(v))),
    );
    let witness = VertexSet::from(witness);
    let value = decomposition.k() + decomposition.r() - decomposition.r_prime();
    debug_assert_eq!(value, witness.len());
    Ok(SolveReport {
        variant: Variant::Scds,
        value,
        witness,
        method: Method::BlockFormula,
        elapsed: start.elapsed(),
        nodes_explored: 0,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::{complete, cycle, path, star};

    fn bowtie() -> Graph {
        Graph::from_edges(5, [(0, 1), (0, 2), (1, 2), (2, 3), (2, 4), (3, 4)]).unwrap()
    }

    #[test]
    fn bowtie_decomposition() {
        let d = block_decompose(&bowtie()).unwrap();
        assert_eq!((d.r(), d.k(), d.r_prime()), (2, 1, 0));
        assert_eq!(d.cut_vertices, VertexSet::from([2]));
        assert_eq!(
            d.blocks,
            vec![VertexSet::from([0, 1, 2]), VertexSet::from([2, 3, 4])]
        );
        assert_eq!(d.block_edges, vec![3, 3]);
    }

    #[test]
    fn path_decomposition() {
        let d = block_decompose(&path(4)).unwrap();
        assert_eq!((d.r(), d.k(), d.r_prime()), (3, 2, 1));
        assert_eq!(d.blocks[1], VertexSet::from([1, 2]));
    }

    #[test]
    fn complete_and_single_vertex() {
        let d = block_decompose(&complete(4)).unwrap();
        assert_eq!((d.r(), d.k(), d.r_prime()), (1, 0, 0));
        let d = block_decompose(&Graph::empty(1)).unwrap();
        assert_eq!((d.r(), d.k(), d.r_prime()), (1, 0, 0));
        assert!(block_decompose(&Graph::empty(2)).is_err());
    }

    #[test]
    fn block_graph_recognition() {
        assert!(is_block_graph(&path(6)).unwrap());
        assert!(is_block_graph(&star(4)).unwrap());
        assert!(!is_block_graph(&cycle(4)).unwrap());
        assert!(is_block_graph(&bowtie()).unwrap());
        assert!(is_block_graph(&complete(5)).unwrap());
    }

    #[test]
    fn block_formula_values() {
        let r = gamma_sc_block(&bowtie()).unwrap();
        assert_eq!(r.value, 3);
        assert_eq!(r.witness, VertexSet::from([0, 2, 3]));
        assert_eq!(r.method, Method::BlockFormula);

        assert_eq!(gamma_sc_block(&path(5)).unwrap().value, 5);
        assert_eq!(gamma_sc_block(&star(4)).unwrap().value, 5);
        assert_eq!(gamma_sc_block(&path(2)).unwrap().value, 1);

        let k = gamma_sc_block(&complete(4)).unwrap();
        assert_eq!((k.value, k.method), (1, Method::BlockFormula));
        assert_eq!(k.witness, VertexSet::from([0]));

        let one = gamma_sc_block(&Graph::empty(1)).unwrap();
        assert_eq!((one.value, one.witness), (1, VertexSet::from([0])));

        assert!(matches!(gamma_sc_block(&cycle(5)), Err(Error::Domain(_))));
    }

    #[test]
    fn cut_vertices_of_a_long_path_without_recursion() {
        let d = block_decompose(&path(200_000)).unwrap();
        assert_eq!(d.k(), 199_998);
        assert_eq!(d.r(), 199_999);
    }
}
