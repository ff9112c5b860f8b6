//! Exhaustive automorphism-group order by backtracking.
//!
//! The order is counted level by level. Fix a prefix of base points; for the
//! next base point `b`, count the candidates `w` for which some automorphism
//! fixing the prefix maps `b` to `w`. That count is the orbit length of `b`
//! under the prefix stabilizer, and the product of orbit lengths is the group
//! order. Each existence question is settled by a complete backtracking
//! search that refines the left and right colorings together (1-dimensional
//! Weisfeiler-Leman with a shared signature table) and branches on the
//! smallest non-singleton cell.

use num_bigint::BigUint;
use num_traits::One;

use crate::automorphisms::action::{InducedAction, Provenance};
use crate::error::{Error, Result};
use crate::graphs::{SimpleGraph, SubsetGraph};

/// Default largest vertex count accepted by the brute-force search.
pub const DEFAULT_BRUTE_FORCE_CAP: usize = 40;

/// Outcome of a full automorphism search.
#[derive(Debug, Clone)]
pub struct AutSearch {
    pub order: BigUint,
    /// Base points in the order they were fixed.
    pub base: Vec<usize>,
    /// Orbit length of each base point under the stabilizer of the earlier ones.
    pub orbit_lengths: Vec<usize>,
    /// One automorphism for every non-trivial orbit element found.
    pub witnesses: Vec<InducedAction>,
}

fn check_cap(g: &SimpleGraph, cap: usize) -> Result<()> {
    if g.vertex_count() > cap {
        return Err(Error::CapExceeded { what: "brute-force automorphism search", size: g.vertex_count(), cap });
    }
    Ok(())
}

/// Order of the automorphism group of `g`.
pub fn brute_force_aut_order(g: &SimpleGraph, cap: usize) -> Result<BigUint> {
    search_automorphisms(g, cap).map(|s| s.order)
}

/// Full search, keeping the base and the witnessing automorphisms.
pub fn search_automorphisms(g: &SimpleGraph, cap: usize) -> Result<AutSearch> {
    check_cap(g, cap)?;
    Ok(stabilizer_search(g, &[]))
}

/// Order of the subgroup fixing every vertex in `fixed`.
pub fn pointwise_stabilizer_order(g: &SimpleGraph, fixed: &[usize], cap: usize) -> Result<BigUint> {
    check_cap(g, cap)?;
    if let Some(&v) = fixed.iter().find(|&&v| v >= g.vertex_count()) {
        return Err(Error::OutOfRange(format!("vertex {v} in a graph on {} vertices", g.vertex_count())));
    }
    Ok(stabilizer_search(g, fixed).order)
}

/// True when the only automorphism fixing each k-subset is the identity.
pub fn pointwise_stabilizer_trivial(g: &SubsetGraph, cap: usize) -> Result<bool> {
    let first: Vec<usize> = (0..g.split()).collect();
    pointwise_stabilizer_order(g.graph(), &first, cap).map(|o| o.is_one())
}

fn stabilizer_search(g: &SimpleGraph, fixed: &[usize]) -> AutSearch {
    let n = g.vertex_count();
    let mut prefix = fixed.to_vec();
    let mut order = BigUint::one();
    let mut base = Vec::new();
    let mut orbit_lengths = Vec::new();
    let mut witnesses = Vec::new();
    loop {
        let mut colors = vec![0u32; n];
        for (i, &v) in prefix.iter().enumerate() {
            colors[v] = i as u32 + 1;
        }
        let mut right = colors.clone();
        let ok = refine_pair(g, &mut colors, &mut right);
        debug_assert!(ok, "a coloring always matches itself");
        let Some(cell) = target_cell(&colors) else { break };
        let b = cell[0];
        let fresh = class_count(&colors);
        let mut length = 1;
        for &w in &cell[1..] {
            let mut left = colors.clone();
            let mut right = colors.clone();
            left[b] = fresh;
            right[w] = fresh;
            if let Some(images) = extend(g, left, right) {
                length += 1;
                witnesses
                    .push(InducedAction::from_images(images, Provenance::Found).expect("search yields bijections"));
            }
        }
        order *= BigUint::from(length);
        base.push(b);
        orbit_lengths.push(length);
        prefix.push(b);
    }
    AutSearch { order, base, orbit_lengths, witnesses }
}

/// Looks for an isomorphism carrying the left coloring onto the right one.
fn extend(g: &SimpleGraph, mut left: Vec<u32>, mut right: Vec<u32>) -> Option<Vec<usize>> {
    if !refine_pair(g, &mut left, &mut right) {
        return None;
    }
    let Some(cell) = target_cell(&left) else {
        let mut by_color = vec![0usize; left.len()];
        for (w, &c) in right.iter().enumerate() {
            by_color[c as usize] = w;
        }
        let images: Vec<usize> = left.iter().map(|&c| by_color[c as usize]).collect();
        let preserves = g.edges().into_iter().all(|(u, v)| g.has_edge(images[u], images[v]));
        return preserves.then_some(images);
    };
    let x = cell[0];
    let c = left[x];
    let fresh = class_count(&left);
    for y in (0..right.len()).filter(|&y| right[y] == c) {
        let mut l = left.clone();
        let mut r = right.clone();
        l[x] = fresh;
        r[y] = fresh;
        if let Some(images) = extend(g, l, r) {
            return Some(images);
        }
    }
    None
}

fn class_count(colors: &[u32]) -> u32 {
    colors.iter().max().map_or(0, |&m| m + 1)
}

/// Vertices of the smallest non-singleton color class, or `None` if discrete.
fn target_cell(colors: &[u32]) -> Option<Vec<usize>> {
    let mut counts = vec![0usize; class_count(colors) as usize];
    for &c in colors {
        counts[c as usize] += 1;
    }
    let (color, _) = counts.iter().enumerate().filter(|(_, &k)| k > 1).min_by_key(|(_, &k)| k)?;
    Some((0..colors.len()).filter(|&v| colors[v] as usize == color).collect())
}

/// Refines both colorings to a joint equitable partition.
///
/// New colors are ranks of `(old color, sorted neighbor colors)` in the
/// sorted union of both sides' signatures, so equal colors mean equal
/// signatures across the two graphs. Returns false as soon as the color
/// histograms differ.
fn refine_pair(g: &SimpleGraph, left: &mut [u32], right: &mut [u32]) -> bool {
    let n = left.len();
    let histogram = |colors: &[u32]| {
        let mut h = vec![0usize; class_count(colors) as usize];
        for &c in colors {
            h[c as usize] += 1;
        }
        h
    };
    let mut classes = usize::MAX;
    loop {
        let signature = |colors: &[u32], v: usize| {
            let mut s: Vec<u32> = g.neighbors(v).iter().map(|&w| colors[w]).collect();
            s.sort_unstable();
            (colors[v], s)
        };
        let ls: Vec<_> = (0..n).map(|v| signature(left, v)).collect();
        let rs: Vec<_> = (0..n).map(|v| signature(right, v)).collect();
        let mut table: Vec<&(u32, Vec<u32>)> = ls.iter().chain(&rs).collect();
        table.sort_unstable();
        table.dedup();
        let rank = |s: &(u32, Vec<u32>)| table.binary_search(&s).expect("signature was tabled") as u32;
        for v in 0..n {
            left[v] = rank(&ls[v]);
            right[v] = rank(&rs[v]);
        }
        if histogram(left) != histogram(right) {
            return false;
        }
        let now = histogram(left).iter().filter(|&&k| k > 0).count();
        if now == classes {
            return true;
        }
        classes = now;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::automorphisms::action::is_automorphism;
    use crate::combinatorics::factorial;
    use crate::graphs::{build_inclusion_graph, build_johnson_graph, GraphParams};

    fn order_of(n: u32, k: u32, l: u32) -> BigUint {
        let g = build_inclusion_graph(GraphParams::new(n, k, l).unwrap()).unwrap();
        brute_force_aut_order(g.graph(), DEFAULT_BRUTE_FORCE_CAP).unwrap()
    }

    fn graph(vertices: usize, edges: &[(usize, usize)]) -> SimpleGraph {
        SimpleGraph::from_edges(vertices, edges.iter().copied()).unwrap()
    }

    #[test]
    fn small_graph_orders() {
        assert_eq!(brute_force_aut_order(&graph(1, &[]), 10).unwrap(), BigUint::from(1u32));
        assert_eq!(brute_force_aut_order(&graph(4, &[]), 10).unwrap(), BigUint::from(24u32));
        // path P4: reversal only
        let p4 = graph(4, &[(0, 1), (1, 2), (2, 3)]);
        assert_eq!(brute_force_aut_order(&p4, 10).unwrap(), BigUint::from(2u32));
        // cycle C6: dihedral of order 12
        let c6 = graph(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0)]);
        assert_eq!(brute_force_aut_order(&c6, 10).unwrap(), BigUint::from(12u32));
        // Petersen graph: order 120
        let petersen = build_johnson_graph(5, 2, 0).unwrap();
        assert_eq!(brute_force_aut_order(petersen.graph(), 10).unwrap(), BigUint::from(120u32));
    }

    #[test]
    fn asymmetric_graph_has_trivial_group() {
        // spider with legs of lengths 1, 2 and 3: the smallest asymmetric tree
        let t = graph(7, &[(0, 1), (0, 2), (2, 3), (0, 4), (4, 5), (5, 6)]);
        assert_eq!(brute_force_aut_order(&t, 10).unwrap(), BigUint::from(1u32));
    }

    #[test]
    fn inclusion_graph_orders() {
        assert_eq!(order_of(4, 1, 2), BigUint::from(24u32));
        assert_eq!(order_of(4, 1, 3), BigUint::from(48u32));
        assert_eq!(order_of(5, 2, 3), BigUint::from(240u32));
        assert_eq!(order_of(6, 2, 3), BigUint::from(720u32));
    }

    #[test]
    fn witnesses_are_automorphisms_that_respect_classes() {
        for (n, k, l) in [(4, 1, 2), (4, 1, 3), (5, 2, 3), (5, 1, 3)] {
            let g = build_inclusion_graph(GraphParams::new(n, k, l).unwrap()).unwrap();
            let s = search_automorphisms(g.graph(), DEFAULT_BRUTE_FORCE_CAP).unwrap();
            assert!(!s.witnesses.is_empty());
            let split = g.split();
            for w in &s.witnesses {
                assert!(is_automorphism(g.graph(), w).unwrap());
                let first = (0..split).map(|v| w.apply(v) < split);
                let kept = first.clone().all(|b| b);
                let swapped = first.clone().all(|b| !b);
                assert!(kept || (swapped && k + l == n));
            }
        }
    }

    #[test]
    fn johnson_graph_orders() {
        for (n, k) in [(4, 1), (5, 2), (6, 2), (4, 2), (6, 3)] {
            let j = build_johnson_graph(n, k, k - 1).unwrap();
            let expected = if 2 * k == n && k >= 2 { factorial(n) * 2u32 } else { factorial(n) };
            assert_eq!(brute_force_aut_order(j.graph(), DEFAULT_BRUTE_FORCE_CAP).unwrap(), expected);
        }
    }

    #[test]
    fn stabilizer_of_first_class() {
        for (n, k, l) in [(4, 1, 2), (5, 2, 3), (6, 1, 2)] {
            let g = build_inclusion_graph(GraphParams::new(n, k, l).unwrap()).unwrap();
            assert!(pointwise_stabilizer_trivial(&g, DEFAULT_BRUTE_FORCE_CAP).unwrap());
        }
        // fixing one vertex of C6 leaves the reflection through it
        let c6 = graph(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0)]);
        assert_eq!(pointwise_stabilizer_order(&c6, &[0], 10).unwrap(), BigUint::from(2u32));
        assert!(pointwise_stabilizer_order(&c6, &[9], 10).is_err());
    }

    #[test]
    fn cap_is_enforced() {
        let g = build_inclusion_graph(GraphParams::new(6, 2, 3).unwrap()).unwrap();
        assert!(matches!(brute_force_aut_order(g.graph(), 30), Err(Error::CapExceeded { .. })));
        assert!(pointwise_stabilizer_trivial(&g, 30).is_err());
    }
}
