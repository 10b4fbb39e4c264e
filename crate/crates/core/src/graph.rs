//! Simple undirected graphs, regular-graph validation, generators and the
//! edge-list text format.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("invalid generator parameters: {0}")]
    InvalidParameters(String),
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge ({0}, {1})")]
    DuplicateEdge(usize, usize),
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("graph is not regular (degrees range over {min}..={max})")]
    NotRegular { min: usize, max: usize },
    #[error("graph is 0-regular; at least one edge per vertex is required")]
    DegreeZero,
    #[error("graph has no vertices")]
    Empty,
    #[error("isomorphism search limited to {limit} vertices, got {got}")]
    SizeLimitExceeded { limit: usize, got: usize },
    #[error("edge list parse error on line {line}: {message}")]
    Parse { line: usize, message: String },
}

/// Where a vertex of a (possibly transformed) graph comes from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum VertexLabel {
    BaseVertex {
        index: usize,
    },
    /// Endpoints are stored in ascending order.
    BaseEdge {
        u: usize,
        v: usize,
    },
}

impl VertexLabel {
    pub fn vertex(index: usize) -> Self {
        VertexLabel::BaseVertex { index }
    }

    pub fn edge(a: usize, b: usize) -> Self {
        let (u, v) = if a <= b { (a, b) } else { (b, a) };
        VertexLabel::BaseEdge { u, v }
    }
}

impl fmt::Display for VertexLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            VertexLabel::BaseVertex { index } => write!(f, "v{index}"),
            VertexLabel::BaseEdge { u, v } => write!(f, "e{u}-{v}"),
        }
    }
}

/// Simple undirected graph with labelled vertices.
///
/// Edges are kept in construction order (each stored as `(u, v)` with
/// `u < v`); adjacency lists are sorted. Equality compares labels and the
/// adjacency relation, not edge order.
#[derive(Debug, Clone, Serialize)]
pub struct Graph {
    labels: Vec<VertexLabel>,
    edges: Vec<(usize, usize)>,
    #[serde(skip)]
    neighbors: Vec<Vec<usize>>,
}

impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.labels == other.labels && self.neighbors == other.neighbors
    }
}

impl Eq for Graph {}

impl Graph {
    /// Builds a graph with `BaseVertex` labels `0..n`.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        Self::with_labels(
            (0..n).map(VertexLabel::vertex).collect(),
            edges.iter().copied(),
        )
    }

    pub fn with_labels(
        labels: Vec<VertexLabel>,
        edges: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self, GraphError> {
        let n = labels.len();
        let mut neighbors = vec![Vec::new(); n];
        let mut stored = Vec::new();
        for (a, b) in edges {
            for vertex in [a, b] {
                if vertex >= n {
                    return Err(GraphError::VertexOutOfRange { vertex, n });
                }
            }
            if a == b {
                return Err(GraphError::SelfLoop(a));
            }
            let (u, v) = if a < b { (a, b) } else { (b, a) };
            neighbors[u].push(v);
            neighbors[v].push(u);
            stored.push((u, v));
        }
        for (u, list) in neighbors.iter_mut().enumerate() {
            list.sort_unstable();
            if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
                let (a, b) = if u < w[0] { (u, w[0]) } else { (w[0], u) };
                return Err(GraphError::DuplicateEdge(a, b));
            }
        }
        Ok(Graph {
            labels,
            edges: stored,
            neighbors,
        })
    }

    /// Builds from an adjacency predicate over unordered pairs; edges come out
    /// in lexicographic order.
    fn from_predicate(labels: Vec<VertexLabel>, adjacent: impl Fn(usize, usize) -> bool) -> Self {
        let n = labels.len();
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                if adjacent(u, v) {
                    edges.push((u, v));
                }
            }
        }
        Self::with_labels(labels, edges).expect("predicate edges are simple")
    }

    pub fn vertex_count(&self) -> usize {
        self.labels.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn labels(&self) -> &[VertexLabel] {
        &self.labels
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.neighbors[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.neighbors[v].len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.neighbors.iter().map(Vec::len).collect()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.vertex_count() && self.neighbors[u].binary_search(&v).is_ok()
    }

    /// Complement on the same labelled vertex set.
    pub fn complement(&self) -> Graph {
        Graph::from_predicate(self.labels.clone(), |u, v| !self.has_edge(u, v))
    }

    /// Line graph: one `BaseEdge` vertex per edge (in this graph's edge
    /// order), adjacent iff the edges share an endpoint.
    pub fn line_graph(&self) -> Graph {
        let labels = self
            .edges
            .iter()
            .map(|&(u, v)| VertexLabel::edge(u, v))
            .collect();
        Graph::from_predicate(labels, |i, j| edges_meet(self.edges[i], self.edges[j]))
    }

    /// Subgraph induced on `vertices`, relabelled `0..k` in the given order
    /// but keeping the original labels.
    pub fn induced(&self, vertices: &[usize]) -> Graph {
        let labels = vertices.iter().map(|&v| self.labels[v]).collect();
        Graph::from_predicate(labels, |i, j| self.has_edge(vertices[i], vertices[j]))
    }

    /// Same adjacency relation ignoring labels.
    pub fn same_adjacency(&self, other: &Graph) -> bool {
        self.neighbors == other.neighbors
    }

    pub fn is_connected(&self) -> bool {
        let n = self.vertex_count();
        if n == 0 {
            return true;
        }
        let mut seen = vec![false; n];
        let mut stack = vec![0];
        seen[0] = true;
        let mut count = 1;
        while let Some(u) = stack.pop() {
            for &w in &self.neighbors[u] {
                if !seen[w] {
                    seen[w] = true;
                    count += 1;
                    stack.push(w);
                }
            }
        }
        count == n
    }

    /// Writes the `n m` / `u v` edge-list format.
    pub fn to_edge_list(&self) -> String {
        let mut out = format!("{} {}\n", self.vertex_count(), self.edge_count());
        for &(u, v) in &self.edges {
            out.push_str(&format!("{u} {v}\n"));
        }
        out
    }

    /// Parses the edge-list format; `#` starts a comment.
    pub fn parse_edge_list(text: &str) -> Result<Graph, GraphError> {
        let mut header: Option<(usize, usize)> = None;
        let mut edges = Vec::new();
        let mut last_line = 0;
        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            last_line = line_no;
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let fields: Vec<&str> = line.split_whitespace().collect();
            if fields.len() != 2 {
                return Err(GraphError::Parse {
                    line: line_no,
                    message: format!("expected two integers, found {}", fields.len()),
                });
            }
            let parse = |s: &str| {
                s.parse::<usize>().map_err(|e| GraphError::Parse {
                    line: line_no,
                    message: format!("{s:?}: {e}"),
                })
            };
            let (a, b) = (parse(fields[0])?, parse(fields[1])?);
            if header.is_none() {
                header = Some((a, b));
            } else {
                edges.push((a, b));
            }
        }
        let (n, m) = header.ok_or(GraphError::Parse {
            line: last_line,
            message: "missing \"n m\" header".into(),
        })?;
        if edges.len() != m {
            return Err(GraphError::Parse {
                line: last_line,
                message: format!("header declares {m} edges, found {}", edges.len()),
            });
        }
        Graph::from_edges(n, &edges)
    }
}

fn edges_meet(a: (usize, usize), b: (usize, usize)) -> bool {
    a.0 == b.0 || a.0 == b.1 || a.1 == b.0 || a.1 == b.1
}

/// A graph whose vertices all have degree `r >= 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RegularGraph {
    graph: Graph,
    r: usize,
}

impl RegularGraph {
    pub fn new(graph: Graph) -> Result<Self, GraphError> {
        as_regular(graph)
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn into_graph(self) -> Graph {
        self.graph
    }

    pub fn degree(&self) -> usize {
        self.r
    }

    pub fn n(&self) -> usize {
        self.graph.vertex_count()
    }

    pub fn m(&self) -> usize {
        self.graph.edge_count()
    }
}

pub fn as_regular(graph: Graph) -> Result<RegularGraph, GraphError> {
    let degrees = graph.degrees();
    let (Some(&min), Some(&max)) = (degrees.iter().min(), degrees.iter().max()) else {
        return Err(GraphError::Empty);
    };
    if min != max {
        return Err(GraphError::NotRegular { min, max });
    }
    if min == 0 {
        return Err(GraphError::DegreeZero);
    }
    debug_assert_eq!(2 * graph.edge_count(), min * graph.vertex_count());
    Ok(RegularGraph { graph, r: min })
}

/// Named graph families, parsed from `name:params` strings such as
/// `cycle:6`, `complete_bipartite:3:3`, `circulant:8:1,2` or
/// `edges:3:0-1,1-2`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GeneratorSpec {
    Cycle(usize),
    Complete(usize),
    CompleteBipartite(usize, usize),
    Petersen,
    Hypercube(u32),
    Circulant(usize, Vec<usize>),
    Matching(usize),
    EdgeList(usize, Vec<(usize, usize)>),
}

impl GeneratorSpec {
    pub fn generate(&self) -> Result<Graph, GraphError> {
        generate(self)
    }

    /// Short identifier used in reports, e.g. `C5`, `K3,3`, `Q3`.
    pub fn short_name(&self) -> String {
        match self {
            GeneratorSpec::Cycle(n) => format!("C{n}"),
            GeneratorSpec::Complete(n) => format!("K{n}"),
            GeneratorSpec::CompleteBipartite(a, b) => format!("K{a},{b}"),
            GeneratorSpec::Petersen => "Petersen".into(),
            GeneratorSpec::Hypercube(d) => format!("Q{d}"),
            GeneratorSpec::Circulant(n, offsets) => {
                let list: Vec<String> = offsets.iter().map(usize::to_string).collect();
                format!("Circ{n}({})", list.join(","))
            }
            GeneratorSpec::Matching(n) => format!("M{n}"),
            GeneratorSpec::EdgeList(n, edges) => format!("G(n={n},m={})", edges.len()),
        }
    }
}

impl fmt::Display for GeneratorSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |xs: &[usize]| {
            xs.iter()
                .map(usize::to_string)
                .collect::<Vec<_>>()
                .join(",")
        };
        match self {
            GeneratorSpec::Cycle(n) => write!(f, "cycle:{n}"),
            GeneratorSpec::Complete(n) => write!(f, "complete:{n}"),
            GeneratorSpec::CompleteBipartite(a, b) => write!(f, "complete_bipartite:{a}:{b}"),
            GeneratorSpec::Petersen => write!(f, "petersen"),
            GeneratorSpec::Hypercube(d) => write!(f, "hypercube:{d}"),
            GeneratorSpec::Circulant(n, offsets) => write!(f, "circulant:{n}:{}", join(offsets)),
            GeneratorSpec::Matching(n) => write!(f, "matching:{n}"),
            GeneratorSpec::EdgeList(n, edges) => {
                let list: Vec<String> = edges.iter().map(|(u, v)| format!("{u}-{v}")).collect();
                write!(f, "edges:{n}:{}", list.join(","))
            }
        }
    }
}

impl FromStr for GeneratorSpec {
    type Err = GraphError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || GraphError::InvalidParameters(format!("cannot parse generator {s:?}"));
        let parts: Vec<&str> = s.trim().split(':').collect();
        let num = |i: usize| -> Result<usize, GraphError> {
            parts
                .get(i)
                .and_then(|p| p.trim().parse().ok())
                .ok_or_else(bad)
        };
        let arity = |k: usize| if parts.len() == k { Ok(()) } else { Err(bad()) };
        match parts[0].trim().to_ascii_lowercase().as_str() {
            "cycle" | "c" => arity(2).and_then(|_| Ok(GeneratorSpec::Cycle(num(1)?))),
            "complete" | "k" => arity(2).and_then(|_| Ok(GeneratorSpec::Complete(num(1)?))),
            "complete_bipartite" | "bipartite" => {
                arity(3)?;
                Ok(GeneratorSpec::CompleteBipartite(num(1)?, num(2)?))
            }
            "petersen" => arity(1).map(|_| GeneratorSpec::Petersen),
            "hypercube" | "q" => {
                arity(2)?;
                Ok(GeneratorSpec::Hypercube(num(1)? as u32))
            }
            "circulant" => {
                arity(3)?;
                let offsets = parts[2]
                    .split(',')
                    .map(|p| p.trim().parse::<usize>().map_err(|_| bad()))
                    .collect::<Result<Vec<_>, _>>()?;
                Ok(GeneratorSpec::Circulant(num(1)?, offsets))
            }
            "matching" => arity(2).and_then(|_| Ok(GeneratorSpec::Matching(num(1)?))),
            "edges" => {
                arity(3)?;
                let mut edges = Vec::new();
                for pair in parts[2].split(',').filter(|p| !p.trim().is_empty()) {
                    let (a, b) = pair.split_once('-').ok_or_else(bad)?;
                    let a = a.trim().parse().map_err(|_| bad())?;
                    let b = b.trim().parse().map_err(|_| bad())?;
                    edges.push((a, b));
                }
                Ok(GeneratorSpec::EdgeList(num(1)?, edges))
            }
            _ => Err(bad()),
        }
    }
}

pub fn generate(kind: &GeneratorSpec) -> Result<Graph, GraphError> {
    let invalid = |msg: String| Err(GraphError::InvalidParameters(msg));
    match *kind {
        GeneratorSpec::Cycle(n) => {
            if n < 3 {
                return invalid(format!("cycle needs n >= 3, got {n}"));
            }
            let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
            Graph::from_edges(n, &edges)
        }
        GeneratorSpec::Complete(n) => {
            if n < 1 {
                return invalid("complete graph needs n >= 1".into());
            }
            Ok(Graph::from_predicate(
                (0..n).map(VertexLabel::vertex).collect(),
                |_, _| true,
            ))
        }
        GeneratorSpec::CompleteBipartite(a, b) => {
            if a < 1 || b < 1 {
                return invalid(format!("complete bipartite needs a, b >= 1, got {a}, {b}"));
            }
            let edges: Vec<_> = (0..a)
                .flat_map(|i| (0..b).map(move |j| (i, a + j)))
                .collect();
            Graph::from_edges(a + b, &edges)
        }
        GeneratorSpec::Petersen => {
            // outer 5-cycle, spokes, inner pentagram
            let mut edges: Vec<_> = (0..5).map(|i| (i, (i + 1) % 5)).collect();
            edges.extend((0..5).map(|i| (i, i + 5)));
            edges.extend((0..5).map(|i| (5 + i, 5 + (i + 2) % 5)));
            Graph::from_edges(10, &edges)
        }
        GeneratorSpec::Hypercube(d) => {
            if !(1..=16).contains(&d) {
                return invalid(format!("hypercube dimension must be in 1..=16, got {d}"));
            }
            let n = 1usize << d;
            let edges: Vec<_> = (0..n)
                .flat_map(|v| (0..d).map(move |b| (v, v ^ (1 << b))))
                .filter(|&(u, w)| u < w)
                .collect();
            Graph::from_edges(n, &edges)
        }
        GeneratorSpec::Circulant(n, ref offsets) => {
            if n < 3 {
                return invalid(format!("circulant needs n >= 3, got {n}"));
            }
            let mut steps: Vec<usize> = Vec::new();
            for &k in offsets {
                let k = k % n;
                if k == 0 {
                    return invalid("circulant offset must be nonzero mod n".into());
                }
                let k = k.min(n - k);
                if steps.contains(&k) {
                    return invalid(format!("duplicate circulant offset {k}"));
                }
                steps.push(k);
            }
            let mut edges = Vec::new();
            for &k in &steps {
                let count = if 2 * k == n { n / 2 } else { n };
                for i in 0..count {
                    edges.push((i, (i + k) % n));
                }
            }
            Graph::from_edges(n, &edges)
        }
        GeneratorSpec::Matching(n) => {
            if n == 0 || n % 2 != 0 {
                return invalid(format!("perfect matching needs a positive even n, got {n}"));
            }
            let edges: Vec<_> = (0..n / 2).map(|i| (2 * i, 2 * i + 1)).collect();
            Graph::from_edges(n, &edges)
        }
        GeneratorSpec::EdgeList(n, ref edges) => Graph::from_edges(n, edges),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gen(s: &str) -> Graph {
        s.parse::<GeneratorSpec>().unwrap().generate().unwrap()
    }

    #[test]
    fn named_generators_have_expected_sizes() {
        let c4 = gen("cycle:4");
        assert_eq!((c4.vertex_count(), c4.edge_count()), (4, 4));
        assert!(c4.degrees().iter().all(|&d| d == 2));

        let k5 = gen("complete:5");
        assert_eq!((k5.vertex_count(), k5.edge_count()), (5, 10));

        let p = gen("petersen");
        assert_eq!((p.vertex_count(), p.edge_count()), (10, 15));
        assert!(p.degrees().iter().all(|&d| d == 3));
        // girth 5: no triangles, no 4-cycles
        for (u, v) in p.edges().iter().copied() {
            let common = p.neighbors(u).iter().filter(|w| p.has_edge(**w, v)).count();
            assert_eq!(common, 0);
        }

        let q3 = gen("hypercube:3");
        assert_eq!((q3.vertex_count(), q3.edge_count()), (8, 12));
        let circ = gen("circulant:8:1,2");
        assert!(circ.degrees().iter().all(|&d| d == 4));
        let circ4 = gen("circulant:8:4");
        assert!(circ4.degrees().iter().all(|&d| d == 1));
    }

    #[test]
    fn as_regular_reports_degree() {
        assert_eq!(as_regular(gen("cycle:5")).unwrap().degree(), 2);
        assert_eq!(as_regular(gen("matching:6")).unwrap().degree(), 1);
        let path = Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        assert_eq!(
            as_regular(path),
            Err(GraphError::NotRegular { min: 1, max: 2 })
        );
        assert_eq!(
            as_regular(Graph::from_edges(3, &[]).unwrap()),
            Err(GraphError::DegreeZero)
        );
        assert_eq!(
            as_regular(Graph::from_edges(0, &[]).unwrap()),
            Err(GraphError::Empty)
        );
    }

    #[test]
    fn edge_list_rejects_bad_input() {
        assert_eq!(
            Graph::from_edges(3, &[(1, 1)]),
            Err(GraphError::SelfLoop(1))
        );
        assert_eq!(
            Graph::from_edges(3, &[(0, 1), (1, 0)]),
            Err(GraphError::DuplicateEdge(0, 1))
        );
        assert!(matches!(
            Graph::from_edges(2, &[(0, 2)]),
            Err(GraphError::VertexOutOfRange { vertex: 2, n: 2 })
        ));
        assert!("cycle:2"
            .parse::<GeneratorSpec>()
            .unwrap()
            .generate()
            .is_err());
        assert!("matching:5"
            .parse::<GeneratorSpec>()
            .unwrap()
            .generate()
            .is_err());
        assert!("wheel:5".parse::<GeneratorSpec>().is_err());
    }

    #[test]
    fn complement_cases() {
        let k4c = gen("complete:4").complement();
        assert_eq!(k4c.edge_count(), 0);
        let c4c = gen("cycle:4").complement();
        assert_eq!(c4c.edges(), &[(0, 2), (1, 3)]);
        let p = gen("petersen");
        assert_eq!(p.complement().complement(), p);
    }

    #[test]
    fn line_graph_cases() {
        let k4l = gen("complete:4").line_graph();
        assert_eq!(k4l.vertex_count(), 6);
        assert!(k4l.degrees().iter().all(|&d| d == 2 * (3 - 1)));
        let ml = gen("matching:4").line_graph();
        assert_eq!((ml.vertex_count(), ml.edge_count()), (2, 0));
        assert_eq!(ml.labels()[1], VertexLabel::edge(3, 2));
    }

    #[test]
    fn edge_list_text_round_trip() {
        let text = "# a triangle\n3 3\n0 1\n1 2  # closing\n\n2 0\n";
        let g = Graph::parse_edge_list(text).unwrap();
        assert_eq!(g, gen("cycle:3"));
        let again = Graph::parse_edge_list(&g.to_edge_list()).unwrap();
        assert_eq!(again, g);
        assert!(matches!(
            Graph::parse_edge_list("3 2\n0 1\n"),
            Err(GraphError::Parse { .. })
        ));
        assert!(matches!(
            Graph::parse_edge_list("3 1\n0 x\n"),
            Err(GraphError::Parse { line: 2, .. })
        ));
    }

    #[test]
    fn generator_spec_display_parses_back() {
        for s in [
            "cycle:6",
            "complete_bipartite:3:3",
            "circulant:8:1,2",
            "petersen",
            "edges:3:0-1,1-2",
        ] {
            let spec: GeneratorSpec = s.parse().unwrap();
            assert_eq!(spec.to_string(), s);
        }
    }
}
