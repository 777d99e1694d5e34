//! Test-corpus generators: exhaustive small connected graphs and seeded
//! random graphs from specific classes.
//!
//! Random generators use ChaCha8 seeded from a `u64`, so a seed names the
//! same graph on every platform.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::fast::SplitPartition;
use crate::graph::{Graph, VertexSet};

/// Largest order accepted by [`enumerate_connected_graphs`].
pub const MAX_ENUMERATION_N: usize = 6;

const RANDOM_GRAPH_ATTEMPTS: usize = 10_000;

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn path(n: usize) -> Graph {
    Graph::from_edges(n, (1..n).map(|v| (v - 1, v))).expect("path edges are valid")
}

pub fn cycle(n: usize) -> Graph {
    assert!(n >= 3, "cycle needs at least 3 vertices");
    Graph::from_edges(n, (0..n).map(|v| (v, (v + 1) % n))).expect("cycle edges are valid")
}

pub fn complete(n: usize) -> Graph {
    Graph::from_edges(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))))
        .expect("complete edges are valid")
}

/// `K_{1,leaves}` with center 0.
pub fn star(leaves: usize) -> Graph {
    Graph::from_edges(leaves + 1, (1..=leaves).map(|v| (0, v))).expect("star edges are valid")
}

/// One representative of every connected graph on `n` vertices up to
/// isomorphism, ordered by canonical code.
///
/// Canonical codes minimize the upper-triangle adjacency bitmask over all
/// vertex permutations, which is affordable for `n <= 6`.
pub fn enumerate_connected_graphs(n: usize) -> Result<Vec<Graph>> {
    if n > MAX_ENUMERATION_N {
        return Err(Error::Refused(format!(
            "connected graph enumeration is limited to n <= {MAX_ENUMERATION_N}"
        )));
    }
    if n == 0 {
        return Ok(Vec::new());
    }
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    let mut pair_index = vec![vec![0usize; n]; n];
    for (i, &(u, v)) in pairs.iter().enumerate() {
        pair_index[u][v] = i;
        pair_index[v][u] = i;
    }
    // for each permutation, where each pair bit moves to
    let mut perm_maps: Vec<Vec<usize>> = Vec::new();
    let mut perm: Vec<usize> = (0..n).collect();
    loop {
        perm_maps.push(
            pairs
                .iter()
                .map(|&(u, v)| pair_index[perm[u]][perm[v]])
                .collect(),
        );
        if !next_permutation(&mut perm) {
            break;
        }
    }

    let mut codes: Vec<u32> = Vec::new();
    for mask in 0u32..(1u32 << pairs.len()) {
        if !mask_connected(n, &pairs, mask) {
            continue;
        }
        let canonical = perm_maps
            .iter()
            .map(|map| {
                let mut image = 0u32;
                let mut rest = mask;
                while rest != 0 {
                    let bit = rest.trailing_zeros() as usize;
                    rest &= rest - 1;
                    image |= 1 << map[bit];
                }
                image
            })
            .min()
            .unwrap_or(mask);
        if canonical == mask {
            codes.push(mask);
        }
    }
    codes.sort_unstable();
    codes
        .into_iter()
        .map(|mask| {
            Graph::from_edges(
                n,
                pairs
                    .iter()
                    .enumerate()
                    .filter(|&(i, _)| mask & (1 << i) != 0)
                    .map(|(_, &e)| e),
            )
        })
        .collect()
}

fn mask_connected(n: usize, pairs: &[(usize, usize)], mask: u32) -> bool {
    let mut reached = 1u32;
    loop {
        let mut grown = reached;
        for (i, &(u, v)) in pairs.iter().enumerate() {
            if mask & (1 << i) != 0 && (reached >> u & 1 == 1 || reached >> v & 1 == 1) {
                grown |= (1 << u) | (1 << v);
            }
        }
        if grown == reached {
            return reached.count_ones() as usize == n;
        }
        reached = grown;
    }
}

fn next_permutation(perm: &mut [usize]) -> bool {
    let Some(i) = (1..perm.len()).rev().find(|&i| perm[i - 1] < perm[i]) else {
        return false;
    };
    let j = (i..perm.len())
        .rev()
        .find(|&j| perm[j] > perm[i - 1])
        .unwrap_or(i);
    perm.swap(i - 1, j);
    perm[i..].reverse();
    true
}

/// Connected `G(n, p)`: samples are redrawn until connected.
pub fn random_graph(n: usize, edge_probability: f64, seed: u64) -> Result<Graph> {
    if n == 0 {
        return Err(Error::domain("random graph needs n >= 1"));
    }
    if !(0.0..=1.0).contains(&edge_probability) {
        return Err(Error::domain("edge probability must lie in [0, 1]"));
    }
    let mut rng = rng(seed);
    for _ in 0..RANDOM_GRAPH_ATTEMPTS {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                if rng.gen_bool(edge_probability) {
                    edges.push((u, v));
                }
            }
        }
        let g = Graph::from_edges(n, edges)?;
        if g.is_connected() {
            return Ok(g);
        }
    }
    Err(Error::domain(format!(
        "no connected sample after {RANDOM_GRAPH_ATTEMPTS} attempts (n = {n}, p = {edge_probability})"
    )))
}

/// Random labeled tree: each vertex attaches to a uniformly chosen earlier
/// vertex, then labels are shuffled.
pub fn random_tree(n: usize, seed: u64) -> Graph {
    assert!(n >= 1, "tree needs at least one vertex");
    let mut rng = rng(seed);
    let edges: Vec<(usize, usize)> = (1..n).map(|v| (rng.gen_range(0..v), v)).collect();
    shuffled(n, edges, &mut rng)
}

/// Random connected block graph on exactly `n` vertices: cliques of random
/// size glued one at a time onto a randomly chosen existing vertex.
pub fn random_block_graph(n: usize, seed: u64) -> Graph {
    random_block_graph_bounded(n, 5, seed)
}

/// As [`random_block_graph`] with cliques of at most `max_clique` vertices
/// (at least 2).
pub fn random_block_graph_bounded(n: usize, max_clique: usize, seed: u64) -> Graph {
    assert!(n >= 1, "block graph needs at least one vertex");
    let max_new = max_clique.max(2) - 1;
    let mut rng = rng(seed);
    let mut edges = Vec::new();
    let mut next = 1;
    while next < n {
        let anchor = rng.gen_range(0..next);
        let added = rng.gen_range(1..=max_new.min(n - next));
        let block: Vec<usize> = std::iter::once(anchor).chain(next..next + added).collect();
        for (i, &u) in block.iter().enumerate() {
            for &v in &block[i + 1..] {
                edges.push((u, v));
            }
        }
        next += added;
    }
    shuffled(n, edges, &mut rng)
}

/// Threshold graph from a creation sequence: vertex `i` is added isolated
/// (`false`) or dominating (`true`, adjacent to all of `0..i`). The entry
/// for vertex 0 is ignored.
pub fn threshold_graph_from_sequence(dominating: &[bool]) -> Graph {
    let n = dominating.len();
    let edges = (1..n)
        .filter(|&v| dominating[v])
        .flat_map(|v| (0..v).map(move |u| (u, v)));
    Graph::from_edges(n, edges).expect("creation sequence edges are valid")
}

/// Random connected threshold graph: a random creation sequence whose last
/// vertex is dominating, with shuffled labels.
pub fn random_threshold_graph(n: usize, seed: u64) -> Graph {
    assert!(n >= 1, "threshold graph needs at least one vertex");
    let mut rng = rng(seed);
    let mut sequence: Vec<bool> = (0..n).map(|_| rng.gen_bool(0.5)).collect();
    sequence[n - 1] = true;
    let g = threshold_graph_from_sequence(&sequence);
    shuffled(n, g.edges().collect(), &mut rng)
}

/// Connected threshold graph with `m = O(n)`: all vertices isolated except
/// the last `dominating` ones.
pub fn sparse_threshold_graph(n: usize, dominating: usize) -> Graph {
    let sequence: Vec<bool> = (0..n).map(|v| v + dominating >= n).collect();
    threshold_graph_from_sequence(&sequence)
}

/// Random split graph: a clique on `0..c` for random `c >= 1`, and each
/// remaining vertex joined to a random subset of the clique.
pub fn random_split_graph(n: usize, seed: u64) -> (Graph, SplitPartition) {
    assert!(n >= 1, "split graph needs at least one vertex");
    let mut rng = rng(seed);
    let c = rng.gen_range(1..=n);
    let mut edges = Vec::new();
    for u in 0..c {
        for v in u + 1..c {
            edges.push((u, v));
        }
    }
    for v in c..n {
        for u in 0..c {
            if rng.gen_bool(0.5) {
                edges.push((u, v));
            }
        }
    }
    let g = Graph::from_edges(n, edges).expect("split edges are valid");
    let partition = SplitPartition {
        clique: (0..c).collect(),
        independent: (c..n).collect::<VertexSet>(),
    };
    (g, partition)
}

fn shuffled(n: usize, edges: Vec<(usize, usize)>, rng: &mut ChaCha8Rng) -> Graph {
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(rng);
    Graph::from_edges(n, edges.into_iter().map(|(u, v)| (perm[u], perm[v])))
        .expect("relabelled edges are valid")
}
