use std::collections::BTreeMap;

use num_bigint::BigInt;

use crate::combinatorics::binom;
use crate::error::{Error, Result};
use crate::graphs::{GraphParams, SubsetGraph};

/// Number of common neighbours of two k-subsets `u`, `v` (vertex indices).
pub fn common_neighbor_fingerprint(g: &SubsetGraph, u: usize, v: usize) -> Result<usize> {
    for x in [u, v] {
        if x >= g.vertex_count() || !g.index().in_first_class(x) {
            return Err(Error::NotInFirstClass(x));
        }
    }
    Ok(g.graph().common_neighbors(u, v))
}

/// Common-neighbour count predicted for two k-subsets meeting in `i` points.
///
/// An l-set containing both has to hold their union of size `2k - i`, so the
/// count is `C(n-2k+i, l-2k+i)`, which is zero once `i < 2k - l`.
pub fn predicted_fingerprint(params: GraphParams, i: u32) -> BigInt {
    let (n, k, l) = params.as_i64();
    let i = i as i64;
    binom(n - 2 * k + i, l - 2 * k + i)
}

/// Smallest intersection size with a nonzero fingerprint, `max(2k - l, 0)`.
pub fn intersection_floor(params: GraphParams) -> u32 {
    (2 * params.k()).saturating_sub(params.l())
}

/// Result of comparing fingerprints to intersection sizes over all pairs of
/// distinct k-subsets.
#[derive(Debug, Clone)]
pub struct FingerprintReport {
    pub pairs: usize,
    /// Observed fingerprints for each intersection size `i < k`.
    pub by_intersection: BTreeMap<u32, Vec<usize>>,
    /// Every observed count equals the closed form.
    pub formula_holds: bool,
    /// Intersection sizes from the floor up to `k-1` get pairwise distinct,
    /// nonzero fingerprints, so the fingerprint recovers `|u ∩ v|` there, and
    /// every pair below the floor is recognised as such by its zero count.
    pub determines_intersection: bool,
}

/// Checks over all pairs of distinct k-subsets that the common-neighbour
/// count recovers the intersection size.
pub fn check_fingerprints(g: &SubsetGraph) -> FingerprintReport {
    let params = g.params();
    let index = g.index();
    let split = g.split();
    let mut by_intersection: BTreeMap<u32, Vec<usize>> = BTreeMap::new();
    let mut formula_holds = true;
    let mut pairs = 0;
    for u in 0..split {
        for v in u + 1..split {
            pairs += 1;
            let i = (index.mask(u) & index.mask(v)).count_ones();
            let f = g.graph().common_neighbors(u, v);
            formula_holds &= BigInt::from(f) == predicted_fingerprint(params, i);
            let seen = by_intersection.entry(i).or_default();
            if !seen.contains(&f) {
                seen.push(f);
            }
        }
    }
    let floor = intersection_floor(params);
    let mut in_range = Vec::new();
    let mut determines_intersection = true;
    for (&i, values) in &by_intersection {
        if i >= floor {
            determines_intersection &= values.len() == 1 && values[0] != 0;
            in_range.extend(values.iter().copied());
        } else {
            determines_intersection &= values == &[0];
        }
    }
    let distinct = {
        let mut v = in_range.clone();
        v.sort_unstable();
        v.dedup();
        v.len()
    };
    determines_intersection &= distinct == in_range.len();
    FingerprintReport { pairs, by_intersection, formula_holds, determines_intersection }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphs::{build_inclusion_graph, canonical_params};

    fn graph(n: u32, k: u32, l: u32) -> SubsetGraph {
        build_inclusion_graph(GraphParams::new(n, k, l).unwrap()).unwrap()
    }

    fn pair_with_intersection(g: &SubsetGraph, i: u32) -> (usize, usize) {
        let idx = g.index();
        for u in 0..g.split() {
            for v in u + 1..g.split() {
                if (idx.mask(u) & idx.mask(v)).count_ones() == i {
                    return (u, v);
                }
            }
        }
        panic!("no pair meets in {i} points");
    }

    #[test]
    fn worked_values() {
        let g = graph(5, 2, 3);
        let (u, v) = pair_with_intersection(&g, 1);
        assert_eq!(common_neighbor_fingerprint(&g, u, v).unwrap(), 1);
        let (u, v) = pair_with_intersection(&g, 0);
        assert_eq!(common_neighbor_fingerprint(&g, u, v).unwrap(), 0);
        let g = graph(6, 1, 3);
        let (u, v) = pair_with_intersection(&g, 0);
        assert_eq!(common_neighbor_fingerprint(&g, u, v).unwrap(), 4);
    }

    #[test]
    fn diagonal_is_degree() {
        let g = graph(6, 2, 3);
        assert_eq!(common_neighbor_fingerprint(&g, 0, 0).unwrap(), 4);
    }

    #[test]
    fn rejects_second_class() {
        let g = graph(4, 1, 2);
        assert!(matches!(common_neighbor_fingerprint(&g, 0, 5), Err(Error::NotInFirstClass(5))));
        assert!(matches!(common_neighbor_fingerprint(&g, 99, 0), Err(Error::NotInFirstClass(99))));
    }

    #[test]
    fn determination_up_to_eight() {
        for p in canonical_params(3..=8) {
            let r = check_fingerprints(&build_inclusion_graph(p).unwrap());
            assert!(r.formula_holds, "{p}");
            assert!(r.determines_intersection, "{p}: {:?}", r.by_intersection);
        }
    }

    #[test]
    fn several_sizes_below_floor_share_zero() {
        // floor is 2, so sizes 0 and 1 both give no common neighbour
        let r = check_fingerprints(&graph(7, 3, 4));
        assert_eq!(r.by_intersection[&0], [0]);
        assert_eq!(r.by_intersection[&1], [0]);
        assert!(r.determines_intersection);
    }
}
