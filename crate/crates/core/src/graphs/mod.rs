//! Explicit construction of set-inclusion graphs, Johnson-scheme relation
//! graphs and line graphs, plus interchange-format export.

mod export;
mod inclusion;
mod johnson;
mod line;
mod params;
mod simple;
pub mod subsets;

pub use export::{export_graph, parse_graph6, to_dot, to_edge_list, to_graph6, ExportFormat, GRAPH6_MAX_VERTICES};
pub use inclusion::{
    build_inclusion_graph, complement_map, verify_complement_isomorphism, SubsetGraph, SubsetIndex, SubsetVertex,
};
pub use johnson::{build_johnson_graph, JohnsonGraph};
pub use line::build_line_graph;
pub use params::{canonical_params, GraphParams};
pub use simple::{DenseMatrix, SimpleGraph};
pub use subsets::enumerate_subsets;
