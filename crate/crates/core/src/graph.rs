//! Simple undirected graphs, the base families and text serialization.

use std::collections::{BTreeSet, VecDeque};
use std::fmt::Write as _;

use rand::Rng;

use crate::{Error, Result};

/// A simple undirected graph on the dense vertex ids `0..n`.
///
/// Edges are stored once, as `(u, v)` with `u < v`, in ascending order. The
/// value is immutable after construction; every constructor produces a new
/// graph.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    degrees: Vec<usize>,
}

impl Graph {
    /// Builds a graph from an edge iterator. Duplicate edges (in either
    /// orientation) collapse; self-loops and out-of-range ids are rejected.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut set = BTreeSet::new();
        for (u, v) in edges {
            if u == v {
                return Err(Error::SelfLoop { vertex: u });
            }
            for id in [u, v] {
                if id >= n {
                    return Err(Error::VertexOutOfRange { id, n });
                }
            }
            set.insert((u.min(v), u.max(v)));
        }
        let mut degrees = vec![0; n];
        for &(u, v) in &set {
            degrees[u] += 1;
            degrees[v] += 1;
        }
        Ok(Graph {
            n,
            edges: set.into_iter().collect(),
            degrees,
        })
    }

    pub fn empty(n: usize) -> Self {
        Graph {
            n,
            edges: Vec::new(),
            degrees: vec![0; n],
        }
    }

    /// Path `0 - 1 - ... - (k-1)`. Vertex 0 is the initial vertex.
    pub fn path(k: usize) -> Result<Self> {
        if k < 1 {
            return Err(Error::InvalidGenerator(
                "path needs at least 1 vertex".into(),
            ));
        }
        Self::from_edges(k, (1..k).map(|i| (i - 1, i)))
    }

    pub fn cycle(k: usize) -> Result<Self> {
        if k < 3 {
            return Err(Error::InvalidGenerator(format!(
                "cycle needs at least 3 vertices, got {k}"
            )));
        }
        Self::from_edges(k, (0..k).map(|i| (i, (i + 1) % k)))
    }

    pub fn complete(k: usize) -> Result<Self> {
        if k < 1 {
            return Err(Error::InvalidGenerator(
                "complete graph needs at least 1 vertex".into(),
            ));
        }
        Self::from_edges(k, (0..k).flat_map(|u| (u + 1..k).map(move |v| (u, v))))
    }

    /// `K_{r,s}`: ids `0..r` form the r-side, `r..r+s` the s-side.
    pub fn complete_bipartite(r: usize, s: usize) -> Result<Self> {
        if r < 1 || s < 1 {
            return Err(Error::InvalidGenerator(format!(
                "complete bipartite graph needs both sides non-empty, got ({r}, {s})"
            )));
        }
        Self::from_edges(r + s, (0..r).flat_map(|u| (r..r + s).map(move |v| (u, v))))
    }

    /// Star on `k` vertices: centre 0 joined to `1..k`.
    pub fn star(k: usize) -> Result<Self> {
        if k < 2 {
            return Err(Error::InvalidGenerator(format!(
                "star needs at least 2 vertices, got {k}"
            )));
        }
        Self::from_edges(k, (1..k).map(|v| (0, v)))
    }

    /// Erdős–Rényi `G(n, p)`.
    pub fn random_gnp<R: Rng + ?Sized>(n: usize, p: f64, rng: &mut R) -> Self {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                if rng.gen_bool(p) {
                    edges.push((u, v));
                }
            }
        }
        Self::from_edges(n, edges).expect("generated edges are valid")
    }

    /// Random connected graph: a random recursive spanning tree plus each
    /// remaining pair with probability `p`.
    pub fn random_connected<R: Rng + ?Sized>(n: usize, p: f64, rng: &mut R) -> Self {
        let mut edges = Vec::new();
        for v in 1..n {
            edges.push((rng.gen_range(0..v), v));
        }
        let tree: BTreeSet<_> = edges.iter().copied().collect();
        for u in 0..n {
            for v in u + 1..n {
                if !tree.contains(&(u, v)) && rng.gen_bool(p) {
                    edges.push((u, v));
                }
            }
        }
        Self::from_edges(n, edges).expect("generated edges are valid")
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    /// Canonical edge list: `u < v`, sorted ascending.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn degree(&self, v: usize) -> Result<usize> {
        self.degrees
            .get(v)
            .copied()
            .ok_or(Error::VertexOutOfRange { id: v, n: self.n })
    }

    /// Degrees indexed by vertex id.
    pub fn degrees(&self) -> &[usize] {
        &self.degrees
    }

    /// Degrees sorted in non-increasing order.
    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut seq = self.degrees.clone();
        seq.sort_unstable_by(|a, b| b.cmp(a));
        seq
    }

    pub fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.n];
        for &(u, v) in &self.edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        adj
    }

    /// The empty graph counts as connected.
    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        let adj = self.adjacency();
        let mut seen = vec![false; self.n];
        let mut queue = VecDeque::from([0]);
        seen[0] = true;
        let mut reached = 1;
        while let Some(u) = queue.pop_front() {
            for &v in &adj[u] {
                if !seen[v] {
                    seen[v] = true;
                    reached += 1;
                    queue.push_back(v);
                }
            }
        }
        reached == self.n
    }

    /// Induced subgraph on the ids `0..k`.
    pub fn restrict_prefix(&self, k: usize) -> Graph {
        let k = k.min(self.n);
        Graph::from_edges(k, self.edges.iter().copied().filter(|&(_, v)| v < k))
            .expect("prefix of a valid graph is valid")
    }
}

/// Parses the edge-list format: one `u v` pair per line, `#` comments, and an
/// optional leading `n <count>` line declaring the vertex count.
pub fn read_edge_list(text: &str) -> Result<Graph> {
    let mut declared: Option<usize> = None;
    let mut edges = Vec::new();
    let mut seen_content = false;

    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let fields: Vec<&str> = line.split_whitespace().collect();
        if fields.len() != 2 {
            return Err(Error::Parse {
                line: line_no,
                message: format!("expected two fields, found {}", fields.len()),
            });
        }
        if fields[0] == "n" {
            if seen_content {
                return Err(Error::Parse {
                    line: line_no,
                    message: "vertex count header must come first".into(),
                });
            }
            declared = Some(parse_id(fields[1], line_no)?);
            seen_content = true;
            continue;
        }
        seen_content = true;
        let u = parse_id(fields[0], line_no)?;
        let v = parse_id(fields[1], line_no)?;
        if u == v {
            return Err(Error::SelfLoop { vertex: u });
        }
        edges.push((u, v));
    }

    let needed = match edges.iter().map(|&(u, v)| u.max(v)).max() {
        Some(max) => max
            .checked_add(1)
            .ok_or_else(|| Error::IdOverflow(max.to_string()))?,
        None => 0,
    };
    let n = match declared {
        Some(n) if n < needed => {
            return Err(Error::VertexOutOfRange { id: needed - 1, n });
        }
        Some(n) => n,
        None => needed,
    };
    Graph::from_edges(n, edges)
}

fn parse_id(field: &str, line: usize) -> Result<usize> {
    if !field.bytes().all(|b| b.is_ascii_digit()) {
        return Err(Error::Parse {
            line,
            message: format!("not a vertex id: {field:?}"),
        });
    }
    field
        .parse()
        .map_err(|_| Error::IdOverflow(field.to_string()))
}

/// Canonical edge-list text. The `n` header is written only when the vertex
/// count is not implied by the largest endpoint.
pub fn write_edge_list(g: &Graph) -> String {
    let implied = g.edges.iter().map(|&(_, v)| v + 1).max().unwrap_or(0);
    let mut lines = Vec::with_capacity(g.m() + 1);
    if implied != g.n {
        lines.push(format!("n {}", g.n));
    }
    lines.extend(g.edges.iter().map(|(u, v)| format!("{u} {v}")));
    lines.join("\n")
}

pub fn write_dot(g: &Graph) -> String {
    let mut out = String::from("graph G {\n");
    let mut covered = vec![false; g.n];
    for &(u, v) in &g.edges {
        covered[u] = true;
        covered[v] = true;
    }
    for (v, _) in covered.iter().enumerate().filter(|(_, c)| !**c) {
        let _ = writeln!(out, "  {v};");
    }
    for (u, v) in &g.edges {
        let _ = writeln!(out, "  {u} -- {v};");
    }
    out.push('}');
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn generator_shapes() {
        let p2 = Graph::path(2).unwrap();
        assert_eq!((p2.n(), p2.m()), (2, 1));
        assert_eq!(p2.degrees(), &[1, 1]);
        assert_eq!(Graph::path(4).unwrap().degrees(), &[1, 2, 2, 1]);
        assert_eq!(Graph::path(1).unwrap().m(), 0);

        let c3 = Graph::cycle(3).unwrap();
        assert_eq!(c3.m(), 3);
        assert_eq!(c3.degrees(), &[2, 2, 2]);

        let k4 = Graph::complete(4).unwrap();
        assert_eq!(k4.m(), 6);
        assert!(k4.degrees().iter().all(|&d| d == 3));

        let k23 = Graph::complete_bipartite(2, 3).unwrap();
        assert_eq!(k23.m(), 6);
        assert_eq!(k23.degrees(), &[3, 3, 2, 2, 2]);
        assert_eq!(
            Graph::complete_bipartite(1, 1).unwrap(),
            Graph::path(2).unwrap()
        );

        let s4 = Graph::star(4).unwrap();
        assert_eq!(s4.degrees(), &[3, 1, 1, 1]);
    }

    #[test]
    fn generator_sizes() {
        for k in 1..12 {
            assert_eq!(Graph::path(k).unwrap().m(), k - 1);
            assert_eq!(Graph::complete(k).unwrap().m(), k * (k - 1) / 2);
        }
        for k in 3..12 {
            assert_eq!(Graph::cycle(k).unwrap().m(), k);
        }
        for r in 1..6 {
            for s in 1..6 {
                assert_eq!(Graph::complete_bipartite(r, s).unwrap().m(), r * s);
            }
        }
    }

    #[test]
    fn generator_preconditions() {
        assert!(Graph::path(0).is_err());
        assert!(Graph::cycle(2).is_err());
        assert!(Graph::complete(0).is_err());
        assert!(Graph::complete_bipartite(0, 3).is_err());
        assert!(Graph::complete_bipartite(3, 0).is_err());
        assert!(Graph::star(1).is_err());
    }

    #[test]
    fn from_edges_rejects_bad_input_and_dedups() {
        assert_eq!(
            Graph::from_edges(3, [(1, 1)]),
            Err(Error::SelfLoop { vertex: 1 })
        );
        assert_eq!(
            Graph::from_edges(2, [(0, 2)]),
            Err(Error::VertexOutOfRange { id: 2, n: 2 })
        );
        let g = Graph::from_edges(3, [(0, 1), (1, 0), (0, 1), (2, 1)]).unwrap();
        assert_eq!(g.edges(), &[(0, 1), (1, 2)]);
    }

    #[test]
    fn degree_queries() {
        let p3 = Graph::path(3).unwrap();
        assert_eq!(p3.degree(1).unwrap(), 2);
        assert_eq!(p3.degree(3), Err(Error::VertexOutOfRange { id: 3, n: 3 }));
        assert_eq!(p3.degree_sequence(), vec![2, 1, 1]);
    }

    #[test]
    fn connectivity() {
        let two_edges = Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap();
        assert!(!two_edges.is_connected());
        assert!(Graph::cycle(5).unwrap().is_connected());
        assert!(Graph::path(1).unwrap().is_connected());
        assert!(Graph::empty(0).is_connected());
        assert!(!Graph::empty(2).is_connected());
    }

    #[test]
    fn read_examples() {
        assert_eq!(read_edge_list("0 1\n1 2").unwrap(), Graph::path(3).unwrap());
        assert_eq!(
            read_edge_list("0 1\n1 2\n2 0").unwrap(),
            Graph::cycle(3).unwrap()
        );
        assert_eq!(read_edge_list("0 0"), Err(Error::SelfLoop { vertex: 0 }));
    }

    #[test]
    fn read_header_comments_and_errors() {
        let g = read_edge_list("# comment\nn 5\n0 1\n\n# trailing\n").unwrap();
        assert_eq!((g.n(), g.m()), (5, 1));
        assert_eq!(read_edge_list("").unwrap(), Graph::empty(0));
        assert!(matches!(
            read_edge_list("0 1\n1"),
            Err(Error::Parse { line: 2, .. })
        ));
        assert!(matches!(
            read_edge_list("0 x"),
            Err(Error::Parse { line: 1, .. })
        ));
        assert!(matches!(
            read_edge_list("0 -1"),
            Err(Error::Parse { line: 1, .. })
        ));
        assert!(matches!(
            read_edge_list("0 1\nn 4"),
            Err(Error::Parse { line: 2, .. })
        ));
        assert!(matches!(
            read_edge_list("0 99999999999999999999999999"),
            Err(Error::IdOverflow(_))
        ));
        assert_eq!(
            read_edge_list("n 2\n0 2"),
            Err(Error::VertexOutOfRange { id: 2, n: 2 })
        );
    }

    #[test]
    fn write_is_canonical() {
        assert_eq!(write_edge_list(&Graph::path(3).unwrap()), "0 1\n1 2");
        assert_eq!(write_edge_list(&Graph::cycle(3).unwrap()), "0 1\n0 2\n1 2");
        assert_eq!(write_edge_list(&Graph::empty(3)), "n 3");
        assert_eq!(write_edge_list(&Graph::empty(0)), "");
        assert_eq!(
            write_dot(&Graph::path(3).unwrap()),
            "graph G {\n  0 -- 1;\n  1 -- 2;\n}"
        );
        assert_eq!(
            write_dot(&Graph::from_edges(3, [(0, 2)]).unwrap()),
            "graph G {\n  1;\n  0 -- 2;\n}"
        );
    }

    #[test]
    fn restrict_prefix_keeps_inner_edges() {
        let g = Graph::from_edges(5, [(0, 1), (1, 2), (2, 3), (0, 4)]).unwrap();
        assert_eq!(g.restrict_prefix(3), Graph::path(3).unwrap());
    }

    #[test]
    fn random_connected_is_connected() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for n in 1..15 {
            assert!(Graph::random_connected(n, 0.2, &mut rng).is_connected());
        }
    }

    proptest! {
        #[test]
        fn edge_list_round_trip(n in 0usize..14, p in 0.0f64..1.0, seed: u64) {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let g = Graph::random_gnp(n, p, &mut rng);
            prop_assert_eq!(read_edge_list(&write_edge_list(&g)).unwrap(), g);
        }

        #[test]
        fn handshake(n in 0usize..14, p in 0.0f64..1.0, seed: u64) {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let g = Graph::random_gnp(n, p, &mut rng);
            prop_assert_eq!(g.degree_sequence().iter().sum::<usize>(), 2 * g.m());
        }
    }
}
