//! Construction of the xyz-transformations `G^{xyz}` on the vertex set
//! `V ∪ E`.
//!
//! Vertex order: base vertices `0..n`, then base edges `n..n+m` in the base
//! graph's edge order. Edge order: the `G^x` part, then `(G^l)^y`, then the
//! vertex-edge part `W` (vertex-major).

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{Graph, RegularGraph, VertexLabel};

/// Choice for one of the three edge parts.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Part {
    /// No edges.
    Zero,
    /// All possible edges.
    One,
    /// Edges as in `G` (for `z`: incidence).
    Plus,
    /// Complemented (for `z`: non-incidence).
    Minus,
}

impl Part {
    pub const ALL: [Part; 4] = [Part::Zero, Part::One, Part::Plus, Part::Minus];

    pub fn symbol(self) -> char {
        match self {
            Part::Zero => '0',
            Part::One => '1',
            Part::Plus => '+',
            Part::Minus => '-',
        }
    }

    pub fn from_symbol(c: char) -> Option<Part> {
        match c {
            '0' => Some(Part::Zero),
            '1' => Some(Part::One),
            '+' => Some(Part::Plus),
            '-' => Some(Part::Minus),
            _ => None,
        }
    }

    /// Swaps `0 ↔ 1` and `+ ↔ −`.
    pub fn bar(self) -> Part {
        match self {
            Part::Zero => Part::One,
            Part::One => Part::Zero,
            Part::Plus => Part::Minus,
            Part::Minus => Part::Plus,
        }
    }

    /// Adjacency rule given whether the base relation holds.
    fn admits(self, related: bool) -> bool {
        match self {
            Part::Zero => false,
            Part::One => true,
            Part::Plus => related,
            Part::Minus => !related,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TransformError {
    #[error("invalid code {0:?}: expected three characters from 0, 1, +, -")]
    InvalidCode(String),
    #[error("vertex {vertex}: expected degree {expected}, built graph has {got}")]
    DegreeMismatch {
        vertex: VertexLabel,
        expected: usize,
        got: usize,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct XyzCode {
    pub x: Part,
    pub y: Part,
    pub z: Part,
}

impl XyzCode {
    pub const fn new(x: Part, y: Part, z: Part) -> Self {
        XyzCode { x, y, z }
    }

    pub fn bar(self) -> XyzCode {
        XyzCode::new(self.x.bar(), self.y.bar(), self.z.bar())
    }

    /// `(y, x, z)`.
    pub fn swap_xy(self) -> XyzCode {
        XyzCode::new(self.y, self.x, self.z)
    }

    /// All 64 codes, `x` varying fastest, then `y`, then `z`, each over
    /// `0, 1, +, −`.
    pub fn all() -> Vec<XyzCode> {
        let mut out = Vec::with_capacity(64);
        for z in Part::ALL {
            for y in Part::ALL {
                for x in Part::ALL {
                    out.push(XyzCode::new(x, y, z));
                }
            }
        }
        out
    }

    /// Position in [`XyzCode::all`].
    pub fn index(self) -> usize {
        let i = |p: Part| Part::ALL.iter().position(|&q| q == p).unwrap();
        i(self.x) + 4 * i(self.y) + 16 * i(self.z)
    }
}

impl fmt::Display for XyzCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}{}{}",
            self.x.symbol(),
            self.y.symbol(),
            self.z.symbol()
        )
    }
}

impl FromStr for XyzCode {
    type Err = TransformError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let parts: Vec<Part> = s
            .chars()
            .map(Part::from_symbol)
            .collect::<Option<_>>()
            .unwrap_or_default();
        match parts[..] {
            [x, y, z] => Ok(XyzCode::new(x, y, z)),
            _ => Err(TransformError::InvalidCode(s.to_string())),
        }
    }
}

impl Serialize for XyzCode {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for XyzCode {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

fn transformation_labels(g: &Graph) -> Vec<VertexLabel> {
    (0..g.vertex_count())
        .map(VertexLabel::vertex)
        .chain(g.edges().iter().map(|&(u, v)| VertexLabel::edge(u, v)))
        .collect()
}

fn vertex_edge_part(g: &Graph, z: Part) -> Vec<(usize, usize)> {
    let n = g.vertex_count();
    let mut out = Vec::new();
    for v in 0..n {
        for (e, &(a, b)) in g.edges().iter().enumerate() {
            if z.admits(v == a || v == b) {
                out.push((v, n + e));
            }
        }
    }
    out
}

/// `B(G)` (incidence) or `B^c(G)` (non-incidence) on `V ∪ E`.
pub fn bipartite_incidence_graph(g: &RegularGraph, complemented: bool) -> Graph {
    let z = if complemented {
        Part::Minus
    } else {
        Part::Plus
    };
    let g = g.graph();
    Graph::with_labels(transformation_labels(g), vertex_edge_part(g, z))
        .expect("bipartite parts are simple")
}

pub fn xyz_transform(g: &RegularGraph, code: XyzCode) -> Graph {
    let g = g.graph();
    let n = g.vertex_count();
    let edges = g.edges();
    let m = edges.len();
    let mut out = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if code.x.admits(g.has_edge(u, v)) {
                out.push((u, v));
            }
        }
    }
    for e in 0..m {
        for f in e + 1..m {
            let (a, b) = edges[e];
            let (c, d) = edges[f];
            if code.y.admits(a == c || a == d || b == c || b == d) {
                out.push((n + e, n + f));
            }
        }
    }
    out.extend(vertex_edge_part(g, code.z));
    Graph::with_labels(transformation_labels(g), out).expect("transformation parts are simple")
}

/// Degrees every vertex of `G^{xyz}` must have, by part.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ExpectedDegrees {
    pub vertex_part: usize,
    pub edge_part: usize,
}

pub fn expected_degrees(n: usize, m: usize, r: usize, code: XyzCode) -> ExpectedDegrees {
    let (n, m, r) = (n as i64, m as i64, r as i64);
    let within_v = match code.x {
        Part::Zero => 0,
        Part::One => n - 1,
        Part::Plus => r,
        Part::Minus => n - 1 - r,
    };
    let within_e = match code.y {
        Part::Zero => 0,
        Part::One => m - 1,
        Part::Plus => 2 * r - 2,
        Part::Minus => m - 2 * r + 1,
    };
    let (v_to_e, e_to_v) = match code.z {
        Part::Zero => (0, 0),
        Part::One => (m, n),
        Part::Plus => (r, 2),
        Part::Minus => (m - r, n - 2),
    };
    ExpectedDegrees {
        vertex_part: (within_v + v_to_e) as usize,
        edge_part: (within_e + e_to_v) as usize,
    }
}

/// Builds `G^{xyz}` and checks every vertex against [`expected_degrees`].
pub fn transform_degree_check(
    g: &RegularGraph,
    code: XyzCode,
) -> Result<ExpectedDegrees, TransformError> {
    let expected = expected_degrees(g.n(), g.m(), g.degree(), code);
    let built = xyz_transform(g, code);
    for v in 0..built.vertex_count() {
        let want = if v < g.n() {
            expected.vertex_part
        } else {
            expected.edge_part
        };
        if built.degree(v) != want {
            return Err(TransformError::DegreeMismatch {
                vertex: built.labels()[v],
                expected: want,
                got: built.degree(v),
            });
        }
    }
    Ok(expected)
}
