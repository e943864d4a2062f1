//! Degree-based topological indices computed from their defining sums.
//!
//! Nothing here knows about thorn graphs or closed forms; the audit treats
//! these values as ground truth.

use std::fmt;
use std::str::FromStr;

use crate::exact::Int;
use crate::graph::Graph;
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum IndexKind {
    /// First Zagreb index, Σ d(v)².
    M1,
    /// Second Zagreb index, Σ_{uv} d(u)d(v).
    M2,
    /// Hyper Zagreb index, Σ_{uv} (d(u)+d(v))².
    Hm,
    /// Forgotten index, Σ d(v)³.
    F,
    /// Σ_e d(e)² with edge degree d(uv) = d(u)+d(v)−2.
    Em1,
    /// Σ over adjacent edge pairs of d(e)d(f).
    Em2,
}

impl IndexKind {
    pub const ALL: [IndexKind; 6] = [
        IndexKind::M1,
        IndexKind::M2,
        IndexKind::Hm,
        IndexKind::F,
        IndexKind::Em1,
        IndexKind::Em2,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            IndexKind::M1 => "m1",
            IndexKind::M2 => "m2",
            IndexKind::Hm => "hm",
            IndexKind::F => "f",
            IndexKind::Em1 => "em1",
            IndexKind::Em2 => "em2",
        }
    }
}

impl fmt::Display for IndexKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for IndexKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        IndexKind::ALL
            .into_iter()
            .find(|k| k.as_str().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::Unknown {
                what: "index",
                value: s.to_string(),
            })
    }
}

fn deg(g: &Graph, v: usize) -> Int {
    Int::from_usize(g.degrees()[v])
}

pub fn m1(g: &Graph) -> Result<i128> {
    (0..g.n()).map(|v| deg(g, v).pow(2)).sum::<Int>().value()
}

/// M1 through its edge form, Σ_{uv} (d(u)+d(v)).
pub fn m1_edge_form(g: &Graph) -> Result<i128> {
    g.edges()
        .iter()
        .map(|&(u, v)| deg(g, u) + deg(g, v))
        .sum::<Int>()
        .value()
}

pub fn m2(g: &Graph) -> Result<i128> {
    g.edges()
        .iter()
        .map(|&(u, v)| deg(g, u) * deg(g, v))
        .sum::<Int>()
        .value()
}

pub fn hm(g: &Graph) -> Result<i128> {
    g.edges()
        .iter()
        .map(|&(u, v)| (deg(g, u) + deg(g, v)).pow(2))
        .sum::<Int>()
        .value()
}

pub fn f_index(g: &Graph) -> Result<i128> {
    (0..g.n()).map(|v| deg(g, v).pow(3)).sum::<Int>().value()
}

fn edge_degree(g: &Graph, (u, v): (usize, usize)) -> Int {
    deg(g, u) + deg(g, v) - 2
}

pub fn em1(g: &Graph) -> Result<i128> {
    g.edges()
        .iter()
        .map(|&e| edge_degree(g, e).pow(2))
        .sum::<Int>()
        .value()
}

/// Each unordered pair of edges sharing an endpoint is counted once, at the
/// shared vertex. In a simple graph two distinct edges share at most one.
pub fn em2(g: &Graph) -> Result<i128> {
    let mut incident: Vec<Vec<Int>> = vec![Vec::new(); g.n()];
    for &e in g.edges() {
        let d = edge_degree(g, e);
        incident[e.0].push(d);
        incident[e.1].push(d);
    }
    let mut total = Int::ZERO;
    for around in &incident {
        for (i, &a) in around.iter().enumerate() {
            for &b in &around[i + 1..] {
                total = total + a * b;
            }
        }
    }
    total.value()
}

pub fn compute(g: &Graph, kind: IndexKind) -> Result<i128> {
    match kind {
        IndexKind::M1 => m1(g),
        IndexKind::M2 => m2(g),
        IndexKind::Hm => hm(g),
        IndexKind::F => f_index(g),
        IndexKind::Em1 => em1(g),
        IndexKind::Em2 => em2(g),
    }
}
