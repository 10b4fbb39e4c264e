//! Laplacian spectra and spanning-tree counts of the xyz-transformations of
//! regular graphs.
//!
//! For an `r`-regular graph `G = (V, E)` and `x, y, z ∈ {0, 1, +, −}`, the
//! graph `G^{xyz}` lives on `V ∪ E`: `x` picks the edges among `V` (none,
//! all, as in `G`, complemented), `y` the edges among `E` relative to the
//! line graph, and `z` the edges between `V` and `E` relative to incidence.
//!
//! [`formulas`] holds the closed forms for all 64 codes; [`verify`] checks
//! them against explicit construction ([`transform`]) and exact
//! ([`algebra`]) or numeric ground truth.

pub mod algebra;
pub mod formulas;
pub mod graph;
pub mod iso;
pub mod par;
pub mod transform;
pub mod verify;

pub use graph::{
    as_regular, generate, GeneratorSpec, Graph, GraphError, RegularGraph, VertexLabel,
};
pub use iso::is_isomorphic;
pub use par::Execution;
pub use transform::{
    bipartite_incidence_graph, transform_degree_check, xyz_transform, Part, XyzCode,
};
