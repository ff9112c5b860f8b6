use crate::automorphisms::perm::BasePermutation;
use crate::error::{Error, Result};
use crate::graphs::subsets::full_mask;
use crate::graphs::{GraphParams, SimpleGraph, SubsetIndex};

/// Where a vertex permutation came from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Provenance {
    /// Induced by a permutation of the ground set acting elementwise.
    Sigma(BasePermutation),
    /// Complementation `v -> [n] \ v`.
    Tau,
    /// Product of other actions.
    Composite,
    /// Found by search, with no known ground-set description.
    Found,
}

/// A permutation of the vertex set of a graph: `images[v]` is the image of `v`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InducedAction {
    images: Vec<usize>,
    provenance: Provenance,
}

impl InducedAction {
    /// Wraps a vertex image table, checking that it is a bijection.
    pub fn from_images(images: Vec<usize>, provenance: Provenance) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &x in &images {
            if x >= n || seen[x] {
                return Err(Error::InvalidPermutation(format!("vertex map is not a bijection on 0..{n}")));
            }
            seen[x] = true;
        }
        Ok(InducedAction { images, provenance })
    }

    pub fn identity(vertices: usize) -> Self {
        InducedAction { images: (0..vertices).collect(), provenance: Provenance::Composite }
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn provenance(&self) -> &Provenance {
        &self.provenance
    }

    pub fn len(&self) -> usize {
        self.images.len()
    }

    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }

    pub fn apply(&self, v: usize) -> usize {
        self.images[v]
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &InducedAction) -> Result<InducedAction> {
        if self.len() != other.len() {
            return Err(Error::DomainMismatch { expected: self.len(), actual: other.len() });
        }
        Ok(InducedAction {
            images: other.images.iter().map(|&v| self.images[v]).collect(),
            provenance: Provenance::Composite,
        })
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(v, &w)| v == w)
    }

    /// Same vertex map, ignoring provenance.
    pub fn same_map(&self, other: &InducedAction) -> bool {
        self.images == other.images
    }
}

/// The vertex permutation `σ_g: v -> {g(x) : x ∈ v}` of `G(n,k,l)`.
pub fn induced_action(g: &BasePermutation, params: GraphParams) -> Result<InducedAction> {
    params.require_canonical()?;
    if g.degree() != params.n() {
        return Err(Error::InvalidPermutation(format!(
            "permutation of degree {} acting on subsets of [{}]",
            g.degree(),
            params.n()
        )));
    }
    let index = SubsetIndex::new(params)?;
    induced_on_index(g, &index)
}

pub(crate) fn induced_on_index(g: &BasePermutation, index: &SubsetIndex) -> Result<InducedAction> {
    let images =
        index.masks().iter().map(|&m| index.index_of(g.apply_mask(m)).expect("σ_g preserves subset sizes")).collect();
    Ok(InducedAction { images, provenance: Provenance::Sigma(g.clone()) })
}

/// Complementation `τ: v -> [n] \ v` on `G(n,k,n-k)`.
///
/// Only defined when `k + l = n`; otherwise complementation does not map the
/// vertex set to itself.
pub fn tau_action(params: GraphParams) -> Result<InducedAction> {
    if !params.is_self_complementary() {
        return Err(Error::InvalidParams(format!(
            "complementation is a vertex permutation only when k + l = n, got {params}"
        )));
    }
    let index = SubsetIndex::new(params)?;
    let full = full_mask(params.n());
    let images =
        index.masks().iter().map(|&m| index.index_of(full & !m).expect("complement of a k-set is an l-set")).collect();
    Ok(InducedAction { images, provenance: Provenance::Tau })
}

/// True when `a` maps every edge of `g` to an edge.
pub fn is_automorphism(g: &SimpleGraph, a: &InducedAction) -> Result<bool> {
    if a.len() != g.vertex_count() {
        return Err(Error::DomainMismatch { expected: g.vertex_count(), actual: a.len() });
    }
    // A bijection mapping edges into edges on a finite graph maps E onto E.
    Ok(g.edges().into_iter().all(|(u, v)| g.has_edge(a.apply(u), a.apply(v))))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphs::{build_inclusion_graph, canonical_params};
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn params(n: u32, k: u32, l: u32) -> GraphParams {
        GraphParams::new(n, k, l).unwrap()
    }

    #[test]
    fn identity_is_identity() {
        let p = params(5, 2, 3);
        let a = induced_action(&BasePermutation::identity(5), p).unwrap();
        assert!(a.is_identity());
        let g = build_inclusion_graph(p).unwrap();
        assert!(is_automorphism(g.graph(), &a).unwrap());
    }

    #[test]
    fn transposition_on_g312() {
        let p = params(3, 1, 2);
        let index = SubsetIndex::new(p).unwrap();
        let a = induced_action(&BasePermutation::transposition(3, 0, 1).unwrap(), p).unwrap();
        let at = |mask: u64| index.mask(a.apply(index.index_of(mask).unwrap()));
        assert_eq!(at(0b001), 0b010);
        assert_eq!(at(0b101), 0b110);
    }

    #[test]
    fn tau_maps_singletons_to_triples() {
        let p = params(4, 1, 3);
        let index = SubsetIndex::new(p).unwrap();
        let t = tau_action(p).unwrap();
        assert_eq!(index.mask(t.apply(index.index_of(0b0001).unwrap())), 0b1110);
        assert!(tau_action(params(4, 1, 2)).is_err());
    }

    #[test]
    fn tau_is_an_involution() {
        let t = tau_action(params(5, 2, 3)).unwrap();
        assert!(t.compose(&t).unwrap().is_identity());
        assert!(!t.is_identity());
    }

    #[test]
    fn random_sigma_actions_are_automorphisms() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for p in canonical_params(3..=7) {
            let g = build_inclusion_graph(p).unwrap();
            for _ in 0..100 {
                let perm = BasePermutation::random(p.n(), &mut rng);
                let a = induced_action(&perm, p).unwrap();
                assert!(is_automorphism(g.graph(), &a).unwrap(), "{p} {perm}");
            }
        }
    }

    #[test]
    fn action_laws() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for p in [params(5, 2, 3), params(6, 2, 4), params(6, 1, 3)] {
            for _ in 0..30 {
                let g = BasePermutation::random(p.n(), &mut rng);
                let h = BasePermutation::random(p.n(), &mut rng);
                let gh = induced_action(&g.compose(&h).unwrap(), p).unwrap();
                let sg = induced_action(&g, p).unwrap();
                let sh = induced_action(&h, p).unwrap();
                assert!(gh.same_map(&sg.compose(&sh).unwrap()));
                if p.is_self_complementary() {
                    let t = tau_action(p).unwrap();
                    assert!(t.compose(&sg).unwrap().same_map(&sg.compose(&t).unwrap()));
                }
            }
        }
    }

    #[test]
    fn class_breaking_swap_is_rejected() {
        let p = params(4, 1, 2);
        let g = build_inclusion_graph(p).unwrap();
        let mut images: Vec<usize> = (0..g.vertex_count()).collect();
        images.swap(0, 4);
        let a = InducedAction::from_images(images, Provenance::Composite).unwrap();
        assert!(!is_automorphism(g.graph(), &a).unwrap());
        let short = InducedAction::identity(3);
        assert!(is_automorphism(g.graph(), &short).is_err());
    }

    #[test]
    fn rejects_wrong_degree() {
        assert!(induced_action(&BasePermutation::identity(4), params(5, 2, 3)).is_err());
        assert!(InducedAction::from_images(vec![0, 0], Provenance::Composite).is_err());
    }
}
