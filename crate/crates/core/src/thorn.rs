//! The seven generalized thorn constructions.
//!
//! Every construction keeps the base vertices at ids `0..n` and appends fresh
//! vertices after them. Copies are laid out in ascending base vertex, then
//! copy index, then a fixed order inside the gadget, so identical inputs give
//! identical labeled graphs.
//!
//! Types I-IV identify the base vertex with a gadget vertex (path start,
//! cycle vertex, clique vertex, r-side vertex of `K_{r,s}`). Types V-VII keep
//! the gadget disjoint and join it to the base vertex by one bridge edge
//! landing on the lowest fresh id of the copy.

use std::fmt;
use std::ops::Range;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::graph::Graph;
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ThornType {
    /// Paths of order r sharing their initial vertex with v_i.
    I,
    /// Cycles of length r through v_i.
    II,
    /// Cliques K_r containing v_i.
    III,
    /// K_{r,s} with v_i on the r-side.
    IV,
    /// Disjoint cycles C_r bridged to v_i.
    V,
    /// Disjoint cliques K_r bridged to v_i.
    VI,
    /// Disjoint K_{r,s} bridged to v_i through an r-side vertex.
    VII,
}

impl ThornType {
    pub const ALL: [ThornType; 7] = [
        ThornType::I,
        ThornType::II,
        ThornType::III,
        ThornType::IV,
        ThornType::V,
        ThornType::VI,
        ThornType::VII,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            ThornType::I => "I",
            ThornType::II => "II",
            ThornType::III => "III",
            ThornType::IV => "IV",
            ThornType::V => "V",
            ThornType::VI => "VI",
            ThornType::VII => "VII",
        }
    }

    /// Smallest admissible gadget order `r`.
    pub fn min_r(self) -> usize {
        match self {
            ThornType::I => 2,
            ThornType::II | ThornType::III | ThornType::V => 3,
            ThornType::IV | ThornType::VI | ThornType::VII => 1,
        }
    }

    /// Whether the gadget has a second size parameter `s`.
    pub fn uses_s(self) -> bool {
        matches!(self, ThornType::IV | ThornType::VII)
    }
}

impl fmt::Display for ThornType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for ThornType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        ThornType::ALL
            .into_iter()
            .find(|t| t.as_str().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::Unknown {
                what: "thorn type",
                value: s.to_string(),
            })
    }
}

serde_as_str!(ThornType);

/// Per-vertex thorn counts, before they are resolved against a base graph.
///
/// Text forms: `uniform:<k>`, an explicit comma-separated vector, or
/// `random:<max>:<seed>` (each t_i drawn uniformly from `0..=max`).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum ThornCounts {
    Uniform(usize),
    Explicit(Vec<usize>),
    Random { max: usize, seed: u64 },
}

impl ThornCounts {
    pub fn resolve(&self, n: usize) -> Result<Vec<usize>> {
        match self {
            ThornCounts::Uniform(k) => Ok(vec![*k; n]),
            ThornCounts::Explicit(t) if t.len() == n => Ok(t.clone()),
            ThornCounts::Explicit(t) => Err(Error::LengthMismatch {
                expected: n,
                got: t.len(),
            }),
            ThornCounts::Random { max, seed } => {
                let mut rng = ChaCha8Rng::seed_from_u64(*seed);
                Ok((0..n).map(|_| rng.gen_range(0..=*max)).collect())
            }
        }
    }
}

impl fmt::Display for ThornCounts {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ThornCounts::Uniform(k) => write!(f, "uniform:{k}"),
            ThornCounts::Explicit(t) => {
                let parts: Vec<String> = t.iter().map(ToString::to_string).collect();
                f.write_str(&parts.join(","))
            }
            ThornCounts::Random { max, seed } => write!(f, "random:{max}:{seed}"),
        }
    }
}

impl FromStr for ThornCounts {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Unknown {
            what: "thorn count mode",
            value: s.to_string(),
        };
        if let Some(k) = s.strip_prefix("uniform:") {
            return k.parse().map(ThornCounts::Uniform).map_err(|_| bad());
        }
        if let Some(rest) = s.strip_prefix("random:") {
            let (max, seed) = rest.split_once(':').ok_or_else(bad)?;
            return Ok(ThornCounts::Random {
                max: max.parse().map_err(|_| bad())?,
                seed: seed.parse().map_err(|_| bad())?,
            });
        }
        s.split(',')
            .map(|x| x.trim().parse::<usize>())
            .collect::<std::result::Result<Vec<_>, _>>()
            .map(ThornCounts::Explicit)
            .map_err(|_| bad())
    }
}

serde_as_str!(ThornCounts);

/// A fully resolved construction request.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ThornSpec {
    pub kind: ThornType,
    /// Path order, cycle length, clique order, or r-side size.
    pub r: usize,
    /// s-side size; only read by types IV and VII.
    pub s: usize,
    pub t: Vec<usize>,
}

impl ThornSpec {
    pub fn new(kind: ThornType, r: usize, s: usize, t: Vec<usize>) -> Self {
        ThornSpec { kind, r, s, t }
    }

    pub fn validate(&self, base_n: usize) -> Result<()> {
        if self.t.len() != base_n {
            return Err(Error::LengthMismatch {
                expected: base_n,
                got: self.t.len(),
            });
        }
        if self.r < self.kind.min_r() {
            return Err(Error::InvalidSpec(format!(
                "type {} needs r >= {}, got {}",
                self.kind,
                self.kind.min_r(),
                self.r
            )));
        }
        if self.kind.uses_s() && self.s < 1 {
            return Err(Error::InvalidSpec(format!(
                "type {} needs s >= 1, got {}",
                self.kind, self.s
            )));
        }
        Ok(())
    }

    /// True when every t_i is the same value. Vacuously true for `n = 0`.
    pub fn uniform_t(&self) -> Option<usize> {
        match self.t.split_first() {
            Some((&first, rest)) if rest.iter().all(|&x| x == first) => Some(first),
            Some(_) => None,
            None => Some(0),
        }
    }
}

/// A constructed thorn graph. Ids `0..base_n` are the base vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DecoratedGraph {
    pub graph: Graph,
    pub base_n: usize,
}

impl DecoratedGraph {
    pub fn base_vertex_ids(&self) -> Range<usize> {
        0..self.base_n
    }
}

struct Builder {
    next: usize,
    edges: Vec<(usize, usize)>,
}

impl Builder {
    fn fresh(&mut self, count: usize) -> Range<usize> {
        let start = self.next;
        self.next += count;
        start..self.next
    }

    fn edge(&mut self, u: usize, v: usize) {
        self.edges.push((u, v));
    }

    fn clique(&mut self, members: &[usize]) {
        for (i, &u) in members.iter().enumerate() {
            for &v in &members[i + 1..] {
                self.edge(u, v);
            }
        }
    }

    fn biclique(&mut self, left: &[usize], right: &[usize]) {
        for &u in left {
            for &v in right {
                self.edge(u, v);
            }
        }
    }
}

fn attach<F>(
    base: &Graph,
    spec: &ThornSpec,
    expected: ThornType,
    mut gadget: F,
) -> Result<DecoratedGraph>
where
    F: FnMut(&mut Builder, usize),
{
    if spec.kind != expected {
        return Err(Error::InvalidSpec(format!(
            "expected a type {expected} spec, got type {}",
            spec.kind
        )));
    }
    spec.validate(base.n())?;
    let mut b = Builder {
        next: base.n(),
        edges: base.edges().to_vec(),
    };
    for (v, &copies) in spec.t.iter().enumerate() {
        for _ in 0..copies {
            gadget(&mut b, v);
        }
    }
    Ok(DecoratedGraph {
        graph: Graph::from_edges(b.next, b.edges)?,
        base_n: base.n(),
    })
}

/// Type I (`G_P`).
pub fn build_type1(base: &Graph, spec: &ThornSpec) -> Result<DecoratedGraph> {
    let r = spec.r;
    attach(base, spec, ThornType::I, |b, v| {
        let mut prev = v;
        for a in b.fresh(r - 1) {
            b.edge(prev, a);
            prev = a;
        }
    })
}

/// Type II (`G_C`).
pub fn build_type2(base: &Graph, spec: &ThornSpec) -> Result<DecoratedGraph> {
    let r = spec.r;
    attach(base, spec, ThornType::II, |b, v| {
        let ring: Vec<usize> = std::iter::once(v).chain(b.fresh(r - 1)).collect();
        for i in 0..ring.len() {
            b.edge(ring[i], ring[(i + 1) % ring.len()]);
        }
    })
}

/// Type III (`G_K`).
pub fn build_type3(base: &Graph, spec: &ThornSpec) -> Result<DecoratedGraph> {
    let r = spec.r;
    attach(base, spec, ThornType::III, |b, v| {
        let members: Vec<usize> = std::iter::once(v).chain(b.fresh(r - 1)).collect();
        b.clique(&members);
    })
}

/// Type IV (`G_A`).
pub fn build_type4(base: &Graph, spec: &ThornSpec) -> Result<DecoratedGraph> {
    let (r, s) = (spec.r, spec.s);
    attach(base, spec, ThornType::IV, |b, v| {
        let left: Vec<usize> = std::iter::once(v).chain(b.fresh(r - 1)).collect();
        let right: Vec<usize> = b.fresh(s).collect();
        b.biclique(&left, &right);
    })
}

/// Type V (`G_C'`).
pub fn build_type5(base: &Graph, spec: &ThornSpec) -> Result<DecoratedGraph> {
    let r = spec.r;
    attach(base, spec, ThornType::V, |b, v| {
        let ring: Vec<usize> = b.fresh(r).collect();
        for i in 0..r {
            b.edge(ring[i], ring[(i + 1) % r]);
        }
        b.edge(v, ring[0]);
    })
}

/// Type VI (`G_K'`).
pub fn build_type6(base: &Graph, spec: &ThornSpec) -> Result<DecoratedGraph> {
    let r = spec.r;
    attach(base, spec, ThornType::VI, |b, v| {
        let members: Vec<usize> = b.fresh(r).collect();
        b.clique(&members);
        b.edge(v, members[0]);
    })
}

/// Type VII (`G_A'`). The bridge lands on an r-side vertex.
pub fn build_type7(base: &Graph, spec: &ThornSpec) -> Result<DecoratedGraph> {
    let (r, s) = (spec.r, spec.s);
    attach(base, spec, ThornType::VII, |b, v| {
        let left: Vec<usize> = b.fresh(r).collect();
        let right: Vec<usize> = b.fresh(s).collect();
        b.biclique(&left, &right);
        b.edge(v, left[0]);
    })
}

pub fn build(base: &Graph, spec: &ThornSpec) -> Result<DecoratedGraph> {
    match spec.kind {
        ThornType::I => build_type1(base, spec),
        ThornType::II => build_type2(base, spec),
        ThornType::III => build_type3(base, spec),
        ThornType::IV => build_type4(base, spec),
        ThornType::V => build_type5(base, spec),
        ThornType::VI => build_type6(base, spec),
        ThornType::VII => build_type7(base, spec),
    }
}

/// The t-thorn graph: `t` pendant edges at every vertex.
pub fn t_thorn(base: &Graph, t: usize) -> Result<DecoratedGraph> {
    build_type1(base, &ThornSpec::new(ThornType::I, 2, 0, vec![t; base.n()]))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::indices::hm;

    fn c3() -> Graph {
        Graph::cycle(3).unwrap()
    }

    fn single() -> Graph {
        Graph::path(1).unwrap()
    }

    fn hm_of(base: &Graph, kind: ThornType, r: usize, s: usize, t: &[usize]) -> i128 {
        let g = build(base, &ThornSpec::new(kind, r, s, t.to_vec())).unwrap();
        hm(&g.graph).unwrap()
    }

    #[test]
    fn type1_examples() {
        assert_eq!(hm_of(&c3(), ThornType::I, 2, 0, &[1, 1, 1]), 156);
        assert_eq!(hm_of(&c3(), ThornType::I, 3, 0, &[0, 0, 0]), 48);
        let p2 = Graph::path(2).unwrap();
        let g = build(&p2, &ThornSpec::new(ThornType::I, 3, 0, vec![1, 0])).unwrap();
        assert_eq!(
            g.graph,
            Graph::from_edges(4, [(0, 1), (0, 2), (2, 3)]).unwrap()
        );
        assert_eq!(hm(&g.graph).unwrap(), 34);
    }

    #[test]
    fn type2_and_type3_examples() {
        assert_eq!(hm_of(&c3(), ThornType::II, 3, 0, &[1, 1, 1]), 456);
        let g = build(&single(), &ThornSpec::new(ThornType::II, 3, 0, vec![1])).unwrap();
        assert_eq!(g.graph, Graph::cycle(3).unwrap());
        assert_eq!(hm(&g.graph).unwrap(), 48);

        assert_eq!(hm_of(&c3(), ThornType::III, 3, 0, &[1, 1, 1]), 456);
        let g = build(&single(), &ThornSpec::new(ThornType::III, 4, 0, vec![1])).unwrap();
        assert_eq!(g.graph, Graph::complete(4).unwrap());
        assert_eq!(hm(&g.graph).unwrap(), 216);
    }

    #[test]
    fn type4_examples() {
        let g = build(&single(), &ThornSpec::new(ThornType::IV, 2, 2, vec![1])).unwrap();
        assert_eq!(g.graph, Graph::complete_bipartite(2, 2).unwrap());
        assert_eq!(hm(&g.graph).unwrap(), 64);
        let g = build(&single(), &ThornSpec::new(ThornType::IV, 1, 1, vec![1])).unwrap();
        assert_eq!(g.graph, Graph::path(2).unwrap());
        assert_eq!(hm(&g.graph).unwrap(), 4);
    }

    #[test]
    fn bridged_examples() {
        assert_eq!(hm_of(&c3(), ThornType::V, 3, 0, &[1, 1, 1]), 414);
        assert_eq!(hm_of(&single(), ThornType::V, 3, 0, &[1]), 82);
        assert_eq!(hm_of(&c3(), ThornType::VI, 2, 0, &[1, 1, 1]), 210);
        assert_eq!(hm_of(&single(), ThornType::VI, 3, 0, &[1]), 82);
        assert_eq!(hm_of(&c3(), ThornType::VII, 1, 1, &[1, 1, 1]), 210);
        let g = build(&single(), &ThornSpec::new(ThornType::VII, 1, 1, vec![1])).unwrap();
        assert_eq!(g.graph, Graph::path(3).unwrap());
        assert_eq!(hm(&g.graph).unwrap(), 18);
    }

    #[test]
    fn bridge_lands_on_an_r_side_vertex() {
        // K_{2,3} bridged at its r-side vertex: that vertex ends at degree s+1.
        let g = build(&single(), &ThornSpec::new(ThornType::VII, 2, 3, vec![1])).unwrap();
        assert_eq!(g.graph.degree(1).unwrap(), 4);
        assert_eq!(g.graph.degree(0).unwrap(), 1);
    }

    #[test]
    fn zero_thorns_leave_the_base_unchanged() {
        let base = Graph::complete_bipartite(2, 3).unwrap();
        for kind in ThornType::ALL {
            let spec = ThornSpec::new(kind, kind.min_r().max(3), 2, vec![0; base.n()]);
            assert_eq!(build(&base, &spec).unwrap().graph, base, "type {kind}");
        }
        assert_eq!(t_thorn(&base, 0).unwrap().graph, base);
    }

    #[test]
    fn t_thorn_is_type1_with_pendant_paths() {
        let direct =
            build_type1(&c3(), &ThornSpec::new(ThornType::I, 2, 0, vec![1, 1, 1])).unwrap();
        assert_eq!(t_thorn(&c3(), 1).unwrap(), direct);
        let g = t_thorn(&Graph::path(3).unwrap(), 2).unwrap().graph;
        assert_eq!((g.n(), g.m()), (9, 8));
    }

    #[test]
    fn invalid_specs_are_rejected() {
        let base = c3();
        assert!(matches!(
            build(&base, &ThornSpec::new(ThornType::I, 1, 0, vec![1; 3])),
            Err(Error::InvalidSpec(_))
        ));
        assert!(build(&base, &ThornSpec::new(ThornType::II, 2, 0, vec![1; 3])).is_err());
        assert!(build(&base, &ThornSpec::new(ThornType::III, 2, 0, vec![1; 3])).is_err());
        assert!(build(&base, &ThornSpec::new(ThornType::IV, 2, 0, vec![1; 3])).is_err());
        assert!(build(&base, &ThornSpec::new(ThornType::V, 2, 0, vec![1; 3])).is_err());
        assert!(build(&base, &ThornSpec::new(ThornType::VI, 0, 0, vec![1; 3])).is_err());
        assert!(build(&base, &ThornSpec::new(ThornType::VII, 1, 0, vec![1; 3])).is_err());
        assert_eq!(
            build(&base, &ThornSpec::new(ThornType::I, 2, 0, vec![1; 2])),
            Err(Error::LengthMismatch {
                expected: 3,
                got: 2
            })
        );
        assert!(build_type2(&base, &ThornSpec::new(ThornType::I, 3, 0, vec![1; 3])).is_err());
    }

    #[test]
    fn base_vertices_keep_their_ids() {
        let base = Graph::path(4).unwrap();
        let g = build(&base, &ThornSpec::new(ThornType::V, 4, 0, vec![2, 0, 1, 3])).unwrap();
        assert_eq!(g.base_vertex_ids(), 0..4);
        assert_eq!(g.graph.restrict_prefix(4), base);
    }

    #[test]
    fn counts_parse_and_resolve() {
        assert_eq!(
            "uniform:2".parse::<ThornCounts>().unwrap(),
            ThornCounts::Uniform(2)
        );
        assert_eq!(
            "1, 0,3".parse::<ThornCounts>().unwrap(),
            ThornCounts::Explicit(vec![1, 0, 3])
        );
        let random: ThornCounts = "random:3:9".parse().unwrap();
        assert_eq!(random.to_string(), "random:3:9");
        let t = random.resolve(20).unwrap();
        assert_eq!(t, random.resolve(20).unwrap());
        assert!(t.iter().all(|&x| x <= 3));
        assert!(ThornCounts::Explicit(vec![1, 2]).resolve(3).is_err());
        for bad in ["", "uniform:", "uniform:-1", "random:3", "1,,2", "x"] {
            assert!(bad.parse::<ThornCounts>().is_err(), "{bad}");
        }
    }

    #[test]
    fn uniform_detection() {
        assert_eq!(
            ThornSpec::new(ThornType::I, 2, 0, vec![2, 2]).uniform_t(),
            Some(2)
        );
        assert_eq!(
            ThornSpec::new(ThornType::I, 2, 0, vec![2, 1]).uniform_t(),
            None
        );
        assert_eq!(
            ThornSpec::new(ThornType::I, 2, 0, vec![]).uniform_t(),
            Some(0)
        );
    }

    #[test]
    fn type_parsing() {
        assert_eq!("vii".parse::<ThornType>().unwrap(), ThornType::VII);
        assert!("VIII".parse::<ThornType>().is_err());
    }
}
