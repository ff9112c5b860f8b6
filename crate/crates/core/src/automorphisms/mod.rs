//! Symmetries of inclusion graphs: actions induced from `S_n` and
//! complementation, the described group, orbits, and a brute-force
//! group-order oracle.

mod action;
mod fingerprint;
mod group;
mod orbits;
mod perm;
mod search;

pub use action::{induced_action, is_automorphism, tau_action, InducedAction, Provenance};
pub use fingerprint::{
    check_fingerprints, common_neighbor_fingerprint, intersection_floor, predicted_fingerprint, FingerprintReport,
};
pub use group::{aut_group, Generator, GroupDescription, GroupKind, GroupReport};
pub use orbits::{orbit_count, OrbitTarget};
pub use perm::BasePermutation;
pub use search::{
    brute_force_aut_order, pointwise_stabilizer_order, pointwise_stabilizer_trivial, search_automorphisms, AutSearch,
    DEFAULT_BRUTE_FORCE_CAP,
};
