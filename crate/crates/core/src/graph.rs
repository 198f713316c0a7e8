//! Simple undirected graphs, the edge-list text format and line graphs.
//!
//! Vertices are identified by index; labels only matter for I/O. Adjacency is
//! kept as one bitset per vertex so neighborhood intersections are cheap.

use std::collections::HashMap;
use std::fmt;

use fixedbitset::FixedBitSet;

use crate::error::{Error, Result};

/// A simple undirected labeled graph. Immutable once built.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    labels: Vec<String>,
    adj: Vec<FixedBitSet>,
    /// Edges in insertion order, endpoints as given.
    edges: Vec<(usize, usize)>,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let edges: Vec<String> = self
            .edges
            .iter()
            .map(|&(u, v)| format!("{}-{}", self.labels[u], self.labels[v]))
            .collect();
        f.debug_struct("Graph")
            .field("vertices", &self.labels)
            .field("edges", &edges)
            .finish()
    }
}

impl Graph {
    /// Builds a graph from labels and an edge list, rejecting loops,
    /// duplicate edges and repeated labels.
    pub fn from_edges(labels: Vec<String>, edges: &[(usize, usize)]) -> Result<Self> {
        let n = labels.len();
        let mut seen = HashMap::with_capacity(n);
        for (i, l) in labels.iter().enumerate() {
            if l.is_empty() || l.chars().any(char::is_whitespace) {
                return Err(Error::Domain(format!("invalid vertex label {l:?}")));
            }
            if seen.insert(l.as_str(), i).is_some() {
                return Err(Error::Domain(format!("duplicate vertex label {l:?}")));
            }
        }
        let mut adj = vec![FixedBitSet::with_capacity(n); n];
        for &(u, v) in edges {
            for x in [u, v] {
                if x >= n {
                    return Err(Error::VertexOutOfRange { index: x, count: n });
                }
            }
            if u == v {
                return Err(Error::Domain(format!("self-loop at {}", labels[u])));
            }
            if adj[u].contains(v) {
                return Err(Error::Domain(format!(
                    "duplicate edge {}-{}",
                    labels[u], labels[v]
                )));
            }
            adj[u].insert(v);
            adj[v].insert(u);
        }
        Ok(Graph {
            labels,
            adj,
            edges: edges.to_vec(),
        })
    }

    /// Graph on `n` vertices labeled `v1..vn`.
    pub fn with_default_labels(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        Self::from_edges(default_labels(n), edges)
    }

    pub fn complete(n: usize) -> Self {
        let mut edges = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                edges.push((i, j));
            }
        }
        Self::with_default_labels(n, &edges).expect("complete graph is simple")
    }

    /// Path on `n` vertices.
    pub fn path(n: usize) -> Self {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Self::with_default_labels(n, &edges).expect("path is simple")
    }

    /// Cycle on `n >= 3` vertices.
    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "cycle needs at least 3 vertices");
        let mut edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        edges.push((n - 1, 0));
        Self::with_default_labels(n, &edges).expect("cycle is simple")
    }

    /// Star `K_{1,leaves}` with the center at index 0.
    pub fn star(leaves: usize) -> Self {
        let edges: Vec<_> = (1..=leaves).map(|i| (0, i)).collect();
        Self::with_default_labels(leaves + 1, &edges).expect("star is simple")
    }

    pub fn vertex_count(&self) -> usize {
        self.labels.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges in insertion order.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, v: usize) -> &str {
        &self.labels[v]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    fn check(&self, v: usize) -> Result<()> {
        if v < self.vertex_count() {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange {
                index: v,
                count: self.vertex_count(),
            })
        }
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.vertex_count() && self.adj[u].contains(v)
    }

    pub fn degree(&self, v: usize) -> Result<usize> {
        self.check(v)?;
        Ok(self.adj[v].count_ones(..))
    }

    pub fn neighbors(&self, v: usize) -> Result<Vec<usize>> {
        self.check(v)?;
        Ok(self.adj[v].ones().collect())
    }

    /// Neighborhood bitset of `v`. Panics on an out-of-range index.
    pub fn neighbor_set(&self, v: usize) -> &FixedBitSet {
        &self.adj[v]
    }

    /// Degree without the range check, for internal loops.
    pub(crate) fn deg(&self, v: usize) -> usize {
        self.adj[v].count_ones(..)
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.vertex_count()).map(|v| self.deg(v)).collect()
    }

    pub fn is_connected(&self) -> bool {
        let n = self.vertex_count();
        if n == 0 {
            return true;
        }
        let mut seen = FixedBitSet::with_capacity(n);
        let mut stack = vec![0];
        seen.insert(0);
        while let Some(v) = stack.pop() {
            for w in self.adj[v].ones() {
                if !seen.contains(w) {
                    seen.insert(w);
                    stack.push(w);
                }
            }
        }
        seen.count_ones(..) == n
    }

    /// Whether every pair of distinct vertices in `vs` is adjacent.
    pub fn is_clique(&self, vs: &[usize]) -> bool {
        vs.iter()
            .enumerate()
            .all(|(i, &u)| vs[i + 1..].iter().all(|&v| u != v && self.has_edge(u, v)))
    }

    /// Same graph with vertices renumbered: vertex `v` becomes `perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> Graph {
        let n = self.vertex_count();
        let mut labels = vec![String::new(); n];
        for v in 0..n {
            labels[perm[v]] = self.labels[v].clone();
        }
        let edges: Vec<_> = self
            .edges
            .iter()
            .map(|&(u, v)| (perm[u], perm[v]))
            .collect();
        Graph::from_edges(labels, &edges).expect("permutation preserves simplicity")
    }

    /// Serializes to the edge-list text format.
    pub fn to_edge_list(&self) -> String {
        let mut out = format!("{} {}\n", self.vertex_count(), self.edge_count());
        for &(u, v) in &self.edges {
            out.push_str(&self.labels[u]);
            out.push(' ');
            out.push_str(&self.labels[v]);
            out.push('\n');
        }
        out
    }
}

pub(crate) fn default_labels(n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("v{i}")).collect()
}

/// Parses the edge-list format: a header `n m`, then `m` lines `a b`.
/// Blank lines and lines starting with `#` are skipped. Vertex order is
/// first-appearance order.
pub fn parse_graph(text: &str) -> Result<Graph> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let (hline, header) = lines.next().ok_or(Error::Parse {
        line: 0,
        message: "missing header line".into(),
    })?;
    let parse_err = |line: usize, message: String| Error::Parse { line, message };
    let nums: Vec<&str> = header.split_whitespace().collect();
    if nums.len() != 2 {
        return Err(parse_err(
            hline,
            format!("expected header \"n m\", got {header:?}"),
        ));
    }
    let n: usize = nums[0]
        .parse()
        .map_err(|_| parse_err(hline, format!("bad vertex count {:?}", nums[0])))?;
    let m: usize = nums[1]
        .parse()
        .map_err(|_| parse_err(hline, format!("bad edge count {:?}", nums[1])))?;

    let mut index: HashMap<String, usize> = HashMap::new();
    let mut labels = Vec::new();
    let mut edges = Vec::with_capacity(m);
    let mut seen_edges = std::collections::HashSet::new();
    for (lno, line) in lines {
        let toks: Vec<&str> = line.split_whitespace().collect();
        if toks.len() != 2 {
            return Err(parse_err(lno, format!("expected two labels, got {line:?}")));
        }
        if toks[0] == toks[1] {
            return Err(parse_err(lno, format!("self-loop at {}", toks[0])));
        }
        let mut ids = [0usize; 2];
        for (k, t) in toks.iter().enumerate() {
            ids[k] = *index.entry(t.to_string()).or_insert_with(|| {
                labels.push(t.to_string());
                labels.len() - 1
            });
        }
        let key = (ids[0].min(ids[1]), ids[0].max(ids[1]));
        if !seen_edges.insert(key) {
            return Err(parse_err(
                lno,
                format!("duplicate edge {} {}", toks[0], toks[1]),
            ));
        }
        edges.push((ids[0], ids[1]));
        if labels.len() > n {
            return Err(parse_err(
                lno,
                format!("more than the declared {n} vertices"),
            ));
        }
    }
    if edges.len() != m {
        return Err(parse_err(
            hline,
            format!("header declares {m} edges but {} were given", edges.len()),
        ));
    }
    if labels.len() != n {
        return Err(parse_err(
            hline,
            format!(
                "header declares {n} vertices but {} labels appear",
                labels.len()
            ),
        ));
    }
    Graph::from_edges(labels, &edges)
}

/// A graph together with its line graph. Line vertex `i` is base edge `i`.
#[derive(Debug, Clone)]
pub struct LineGraphMap {
    pub base: Graph,
    pub line: Graph,
    /// `edge_to_vertex[e]` is the line-graph vertex of base edge `e`.
    pub edge_to_vertex: Vec<usize>,
}

impl LineGraphMap {
    /// Base edge represented by a line-graph vertex.
    pub fn edge_of(&self, line_vertex: usize) -> (usize, usize) {
        let e = self
            .edge_to_vertex
            .iter()
            .position(|&x| x == line_vertex)
            .expect("line vertex in range");
        self.base.edges()[e]
    }
}

/// Line graph `G*`: one vertex per edge, adjacent when the edges share an endpoint.
pub fn line_graph(g: &Graph) -> Result<LineGraphMap> {
    let m = g.edge_count();
    if m == 0 {
        return Err(Error::Domain("line graph of an edgeless graph".into()));
    }
    let labels: Vec<String> = g
        .edges()
        .iter()
        .map(|&(u, v)| format!("{}-{}", g.label(u), g.label(v)))
        .collect();
    let mut incident: Vec<Vec<usize>> = vec![Vec::new(); g.vertex_count()];
    for (e, &(u, v)) in g.edges().iter().enumerate() {
        incident[u].push(e);
        incident[v].push(e);
    }
    let mut edges = Vec::new();
    for (e, &(u, v)) in g.edges().iter().enumerate() {
        for &x in [u, v].iter() {
            for &f in &incident[x] {
                if f > e {
                    edges.push((e, f));
                }
            }
        }
    }
    // Two distinct edges share at most one endpoint in a simple graph, so the
    // pairs above are already unique.
    let line = Graph::from_edges(labels, &edges)?;
    Ok(LineGraphMap {
        base: g.clone(),
        line,
        edge_to_vertex: (0..m).collect(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_triangle() {
        let g = parse_graph("3 3\na b\nb c\na c").unwrap();
        assert_eq!(g.vertex_count(), 3);
        assert_eq!(g.edge_count(), 3);
        assert_eq!(g.labels(), ["a", "b", "c"]);
        assert!(g.has_edge(0, 2));
    }

    #[test]
    fn parses_single_edge_and_star() {
        let g = parse_graph("2 1\nu v").unwrap();
        assert_eq!(g.edges(), [(0, 1)]);
        let s = parse_graph("# a star\n4 3\nv u1\nv u2\n\nv u3\n").unwrap();
        assert_eq!(s.degree(0).unwrap(), 3);
        assert_eq!(s.neighbors(0).unwrap(), vec![1, 2, 3]);
    }

    #[test]
    fn parse_errors_name_the_line() {
        let dup = parse_graph("2 2\na b\nb a").unwrap_err();
        assert!(matches!(dup, Error::Parse { line: 3, .. }), "{dup}");
        let lp = parse_graph("1 1\na a").unwrap_err();
        assert!(matches!(lp, Error::Parse { line: 2, .. }));
        let bad = parse_graph("2 1\na b c").unwrap_err();
        assert!(matches!(bad, Error::Parse { line: 2, .. }));
        assert!(parse_graph("3 1\na b").is_err());
        assert!(parse_graph("2 2\na b").is_err());
        assert!(parse_graph("").is_err());
    }

    #[test]
    fn degree_neighbors_connectivity() {
        let k4 = Graph::complete(4);
        assert!((0..4).all(|v| k4.degree(v).unwrap() == 3));
        let g = parse_graph("5 4\na b\nb c\na c\nd e").unwrap();
        assert!(!g.is_connected());
        assert!(k4.is_connected());
        assert!(matches!(
            k4.degree(7),
            Err(Error::VertexOutOfRange { index: 7, .. })
        ));
    }

    #[test]
    fn line_graph_small_cases() {
        let p3 = Graph::path(3);
        let l = line_graph(&p3).unwrap();
        assert_eq!(l.line.vertex_count(), 2);
        assert_eq!(l.line.edge_count(), 1);
        assert_eq!(l.line.labels(), ["v1-v2", "v2-v3"]);

        let k4 = line_graph(&Graph::complete(4)).unwrap().line;
        assert_eq!(k4.vertex_count(), 6);
        assert_eq!(k4.edge_count(), 12);
        assert!((0..6).all(|v| k4.degree(v).unwrap() == 4));

        assert!(line_graph(&Graph::with_default_labels(3, &[]).unwrap()).is_err());
    }

    #[test]
    fn star_line_graph_is_complete() {
        for n in 1..=6 {
            let l = line_graph(&Graph::star(n)).unwrap().line;
            for a in 0..n {
                for b in 0..n {
                    assert_eq!(l.has_edge(a, b), a != b);
                }
            }
        }
    }
}
