//! Graph families with closed-form `γ_sc` and explicit minimum certificates.
//!
//! Canonical labelings:
//!
//! * `complete(n)`: `K_n` on `0..n`.
//! * `star(n)`: `K_{1,n}`, center 0, leaves `1..=n`.
//! * `subdivided_wheel(n)`: hub `2n`; rim vertices `c_j = 2j`; the
//!   subdivision vertex between `c_j` and `c_{j+1 mod n}` is `2j + 1`; the
//!   hub is joined to every `c_j`. Odd 1-based labels `v_1, v_3, …, v_{2n+1}`
//!   map to `0, 2, …, 2n`.
//! * `book(n)`: `K_{1,n} □ K_2`. First star: center 0, leaves `1..=n`.
//!   Second star: center `n + 1`, leaves `n+2..=2n+1`. Rungs `i ↔ i + n + 1`.
//!   1-based `v_i ↦ i - 1`, `w_i ↦ n + i`.
//! * `ladder(n)`: `P_n □ P_2`. Bottom path `0..n`, top path `n..2n`, rungs
//!   `i ↔ i + n`. 1-based `v_i ↦ i - 1`, `w_i ↦ n + i - 1`.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::generate;
use crate::graph::{Graph, VertexSet};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum FamilyKind {
    Complete,
    SubdividedWheel,
    Book,
    Ladder,
    Star,
}

impl FamilyKind {
    pub const ALL: [FamilyKind; 5] = [
        FamilyKind::Complete,
        FamilyKind::SubdividedWheel,
        FamilyKind::Book,
        FamilyKind::Ladder,
        FamilyKind::Star,
    ];

    pub fn name(self) -> &'static str {
        match self {
            FamilyKind::Complete => "complete",
            FamilyKind::SubdividedWheel => "subdivided_wheel",
            FamilyKind::Book => "book",
            FamilyKind::Ladder => "ladder",
            FamilyKind::Star => "star",
        }
    }

    /// Smallest admissible parameter.
    pub fn min_n(self) -> usize {
        match self {
            FamilyKind::Complete => 1,
            FamilyKind::SubdividedWheel => 3,
            FamilyKind::Book => 2,
            FamilyKind::Ladder => 3,
            FamilyKind::Star => 2,
        }
    }
}

impl fmt::Display for FamilyKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for FamilyKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let key = s.to_ascii_lowercase().replace('-', "_");
        match key.as_str() {
            "wheel" | "sw" => return Ok(FamilyKind::SubdividedWheel),
            "k" => return Ok(FamilyKind::Complete),
            _ => {}
        }
        FamilyKind::ALL
            .into_iter()
            .find(|k| k.name() == key)
            .ok_or_else(|| Error::domain(format!("unknown family {s:?}")))
    }
}

/// A family member: kind plus parameter.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct FamilySpec {
    pub kind: FamilyKind,
    pub n: usize,
}

impl FamilySpec {
    pub fn new(kind: FamilyKind, n: usize) -> Result<Self> {
        if n < kind.min_n() {
            return Err(Error::domain(format!(
                "{kind} needs n >= {}, got {n}",
                kind.min_n()
            )));
        }
        Ok(FamilySpec { kind, n })
    }

    pub fn generate(&self) -> Graph {
        let n = self.n;
        match self.kind {
            FamilyKind::Complete => generate::complete(n),
            FamilyKind::Star => generate::star(n),
            FamilyKind::SubdividedWheel => {
                let hub = 2 * n;
                let edges = (0..n).flat_map(|j| {
                    let c = 2 * j;
                    let s = c + 1;
                    let next = (c + 2) % (2 * n);
                    [(c, s), (s, next), (hub, c)]
                });
                Graph::from_edges(2 * n + 1, edges).expect("wheel edges are valid")
            }
            FamilyKind::Book => {
                let second = n + 1;
                let edges = (1..=n)
                    .flat_map(|i| [(0, i), (second, second + i)])
                    .chain((0..=n).map(|i| (i, i + n + 1)));
                Graph::from_edges(2 * n + 2, edges).expect("book edges are valid")
            }
            FamilyKind::Ladder => {
                let edges = (1..n)
                    .flat_map(|i| [(i - 1, i), (n + i - 1, n + i)])
                    .chain((0..n).map(|i| (i, i + n)));
                Graph::from_edges(2 * n, edges).expect("ladder edges are valid")
            }
        }
    }

    /// Closed-form `γ_sc`.
    pub fn formula_value(&self) -> usize {
        let n = self.n;
        match self.kind {
            FamilyKind::Complete => 1,
            FamilyKind::SubdividedWheel => n + 1,
            FamilyKind::Book => n + 2,
            FamilyKind::Ladder => n + n.div_ceil(3),
            FamilyKind::Star => n + 1,
        }
    }

    /// Explicit minimum secure connected dominating set.
    ///
    /// Wheel: hub and rim. Book: the first star plus the second center.
    /// Ladder: the bottom path plus top vertices `w_i` with `i ≡ 2 (mod 3)`,
    /// plus `w_n` when `n ≡ 1 (mod 3)`; without `w_n` that end of the top
    /// path has no defender.
    pub fn witness(&self) -> VertexSet {
        let n = self.n;
        match self.kind {
            FamilyKind::Complete => VertexSet::from([0]),
            FamilyKind::Star => (0..=n).collect(),
            FamilyKind::SubdividedWheel => (0..=n).map(|j| 2 * j).collect(),
            FamilyKind::Book => (0..=n + 1).collect(),
            FamilyKind::Ladder => {
                let top = (1..=n).filter(|i| i % 3 == 2).map(|i| n + i - 1);
                let end = (n % 3 == 1).then_some(2 * n - 1);
                (0..n).chain(top).chain(end).collect()
            }
        }
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}({})", self.kind, self.n)
    }
}
