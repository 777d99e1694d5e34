//! Brute-force reference implementation over adjacency matrices. Shares no
//! code with the library beyond the `Graph` accessors used to read edges.

#![allow(dead_code)]

use scdom::{Graph, Variant};

pub struct Oracle {
    pub n: usize,
    adj: Vec<Vec<bool>>,
}

impl Oracle {
    pub fn new(g: &Graph) -> Self {
        let n = g.n();
        let mut adj = vec![vec![false; n]; n];
        for (u, v) in g.edges() {
            adj[u][v] = true;
            adj[v][u] = true;
        }
        Oracle { n, adj }
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Self {
        Oracle::new(&Graph::from_edges(n, edges.iter().copied()).unwrap())
    }

    fn dominating(&self, s: &[bool]) -> bool {
        (0..self.n).all(|w| s[w] || (0..self.n).any(|x| s[x] && self.adj[w][x]))
    }

    fn total(&self, s: &[bool]) -> bool {
        (0..self.n).all(|w| (0..self.n).any(|x| s[x] && self.adj[w][x]))
    }

    fn induced_connected(&self, s: &[bool]) -> bool {
        let members: Vec<usize> = (0..self.n).filter(|&v| s[v]).collect();
        let Some(&first) = members.first() else {
            return false;
        };
        let mut reached = vec![false; self.n];
        reached[first] = true;
        let mut changed = true;
        while changed {
            changed = false;
            for &u in &members {
                for &w in &members {
                    if reached[u] && !reached[w] && self.adj[u][w] {
                        reached[w] = true;
                        changed = true;
                    }
                }
            }
        }
        members.iter().all(|&v| reached[v])
    }

    pub fn connected(&self) -> bool {
        self.induced_connected(&vec![true; self.n])
    }

    fn base(&self, s: &[bool], variant: Variant) -> bool {
        match variant {
            Variant::Ds | Variant::Sds => self.dominating(s),
            Variant::Cds | Variant::Scds => self.dominating(s) && self.induced_connected(s),
            Variant::Tds | Variant::Stds => self.total(s),
        }
    }

    /// Membership by definition: the base property, plus for secure
    /// variants a swap `(S - {v}) + {u}` keeping the base property for
    /// every outside `u` and some neighbor `v` in `S`.
    pub fn accepts(&self, s: &[bool], variant: Variant) -> bool {
        if !self.base(s, variant) {
            return false;
        }
        let secure = matches!(variant, Variant::Sds | Variant::Scds | Variant::Stds);
        if !secure {
            return true;
        }
        (0..self.n).filter(|&u| !s[u]).all(|u| {
            (0..self.n).filter(|&v| s[v] && self.adj[u][v]).any(|v| {
                let mut t = s.to_vec();
                t[v] = false;
                t[u] = true;
                self.base(&t, variant)
            })
        })
    }

    pub fn accepts_set(&self, set: &[usize], variant: Variant) -> bool {
        let mut s = vec![false; self.n];
        for &v in set {
            s[v] = true;
        }
        self.accepts(&s, variant)
    }

    /// Minimum size, and the lexicographically least set of that size.
    pub fn minimum(&self, variant: Variant) -> Option<(usize, Vec<usize>)> {
        let mut masks: Vec<u64> = (1..1u64 << self.n).collect();
        masks.sort_by_key(|&m| {
            let set: Vec<usize> = (0..self.n).filter(|&v| m >> v & 1 == 1).collect();
            (m.count_ones(), set)
        });
        masks.into_iter().find_map(|m| {
            let s: Vec<bool> = (0..self.n).map(|v| m >> v & 1 == 1).collect();
            self.accepts(&s, variant).then(|| {
                let set: Vec<usize> = (0..self.n).filter(|&v| s[v]).collect();
                (set.len(), set)
            })
        })
    }

    pub fn value(&self, variant: Variant) -> Option<usize> {
        self.minimum(variant).map(|(k, _)| k)
    }
}
