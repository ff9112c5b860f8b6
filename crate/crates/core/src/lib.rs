//! Exact spectra and symmetries of set-inclusion graphs.
//!
//! `G(n,k,l)` is the bipartite graph on the k-subsets and l-subsets of
//! `[n] = {1, …, n}`, with a k-subset joined to every l-subset containing it.
//! This crate builds these graphs (and Johnson-scheme relation graphs and
//! line graphs), evaluates their spectra in exact arithmetic, checks the
//! closed forms against a numeric eigensolver, and describes and verifies
//! their automorphism groups.
//!
//! ```
//! use setinc_core::{spectrum_inclusion, GraphParams};
//!
//! let spectrum = spectrum_inclusion(&GraphParams::new(5, 2, 3).unwrap()).unwrap();
//! assert_eq!(spectrum.largest().unwrap().to_string(), "3");
//! ```

pub mod automorphisms;
pub mod combinatorics;
mod error;
pub mod graphs;
pub mod scheme;
pub mod spectra;

pub use automorphisms::{
    aut_group, brute_force_aut_order, induced_action, is_automorphism, orbit_count, tau_action, BasePermutation,
    GroupDescription, GroupKind, InducedAction, OrbitTarget,
};
pub use error::{Error, Result};
pub use graphs::{
    build_inclusion_graph, build_johnson_graph, build_line_graph, ExportFormat, GraphParams, SimpleGraph, SubsetGraph,
};
pub use scheme::{check_scheme, SchemeReport};
pub use spectra::{
    compare_spectra, eigensolver_oracle, spectrum_inclusion, spectrum_line_inclusion, Eigenvalue, Spectrum,
};
