use crate::error::{Error, Result};
use crate::graphs::params::GraphParams;
use crate::graphs::simple::SimpleGraph;
use crate::graphs::subsets::{self, enumerate_subsets, full_mask, MAX_GROUND_SET};

/// A vertex of a subset graph: its bitmask and its colex rank within its
/// size class.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SubsetVertex {
    pub mask: u64,
    pub rank: u64,
}

impl SubsetVertex {
    pub fn size(&self) -> u32 {
        self.mask.count_ones()
    }
}

/// Vertex table for the `k`- and `l`-subsets of `[n]`: all `k`-subsets in colex
/// order, followed by all `l`-subsets in colex order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubsetIndex {
    params: GraphParams,
    masks: Vec<u64>,
    split: usize,
}

impl SubsetIndex {
    pub fn new(params: GraphParams) -> Result<Self> {
        if params.n() > MAX_GROUND_SET {
            return Err(Error::OutOfRange(format!("n = {} exceeds the bitmask limit {MAX_GROUND_SET}", params.n())));
        }
        let mut masks = enumerate_subsets(params.n(), params.k())?;
        let split = masks.len();
        masks.extend(enumerate_subsets(params.n(), params.l())?);
        Ok(SubsetIndex { params, masks, split })
    }

    pub fn params(&self) -> GraphParams {
        self.params
    }

    pub fn len(&self) -> usize {
        self.masks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.masks.is_empty()
    }

    /// Number of `k`-subsets; vertices `0..split` form the first class.
    pub fn split(&self) -> usize {
        self.split
    }

    pub fn mask(&self, v: usize) -> u64 {
        self.masks[v]
    }

    pub fn masks(&self) -> &[u64] {
        &self.masks
    }

    pub fn vertex(&self, v: usize) -> SubsetVertex {
        let offset = if v < self.split { 0 } else { self.split };
        SubsetVertex { mask: self.masks[v], rank: (v - offset) as u64 }
    }

    /// Index of the vertex with the given mask, if it has size `k` or `l`.
    pub fn index_of(&self, mask: u64) -> Option<usize> {
        let size = mask.count_ones();
        if mask & !full_mask(self.params.n()) != 0 {
            return None;
        }
        let r = subsets::rank(mask) as usize;
        if size == self.params.k() {
            Some(r)
        } else if size == self.params.l() {
            Some(self.split + r)
        } else {
            None
        }
    }

    pub fn in_first_class(&self, v: usize) -> bool {
        v < self.split
    }
}

/// Explicit set-inclusion graph `G(n,k,l)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubsetGraph {
    index: SubsetIndex,
    graph: SimpleGraph,
}

impl SubsetGraph {
    /// Builds `G(n,k,l)` for any valid parameters, canonical or not.
    pub(crate) fn build(params: GraphParams) -> Result<Self> {
        let index = SubsetIndex::new(params)?;
        let (k, l) = (params.k(), params.l());
        let patterns = enumerate_subsets(l, k)?;
        let mut adj = vec![Vec::new(); index.len()];
        for v in index.split()..index.len() {
            let positions: Vec<u32> = subsets::elements(index.mask(v)).iter().map(|x| x - 1).collect();
            for &pattern in &patterns {
                let mut sub = 0u64;
                let mut bits = pattern;
                while bits != 0 {
                    sub |= 1u64 << positions[bits.trailing_zeros() as usize];
                    bits &= bits - 1;
                }
                let u = subsets::rank(sub) as usize;
                adj[u].push(v);
                adj[v].push(u);
            }
        }
        Ok(SubsetGraph { index, graph: SimpleGraph::from_unsorted(adj) })
    }

    pub fn params(&self) -> GraphParams {
        self.index.params()
    }

    pub fn index(&self) -> &SubsetIndex {
        &self.index
    }

    pub fn graph(&self) -> &SimpleGraph {
        &self.graph
    }

    pub fn vertex_count(&self) -> usize {
        self.graph.vertex_count()
    }

    pub fn edge_count(&self) -> usize {
        self.graph.edge_count()
    }

    /// Number of `k`-subsets; vertices below this index are the first class.
    pub fn split(&self) -> usize {
        self.index.split()
    }

    pub fn vertex(&self, v: usize) -> SubsetVertex {
        self.index.vertex(v)
    }

    /// Vertex labels in set notation, in vertex order.
    pub fn labels(&self) -> Vec<String> {
        self.index.masks().iter().map(|&m| subsets::format_subset(m)).collect()
    }

    /// Checks the semi-regular degree pattern `(C(n,k), C(n,l), C(n-k,l-k), C(l,k))`.
    pub fn is_semiregular(&self) -> bool {
        let p = self.params();
        let (n1, n2, r1, r2) = (p.n1(), p.n2(), p.r1(), p.r2());
        let split = self.split();
        n1 == split.into()
            && n2 == (self.vertex_count() - split).into()
            && (0..split).all(|v| r1 == self.graph.degree(v).into())
            && (split..self.vertex_count()).all(|v| r2 == self.graph.degree(v).into())
    }
}

/// Builds `G(n,k,l)` for canonical parameters (`k + l <= n`).
pub fn build_inclusion_graph(params: GraphParams) -> Result<SubsetGraph> {
    params.require_canonical()?;
    SubsetGraph::build(params)
}

/// The complement map `v -> [n] \ v` from `G(n,k,l)` onto `G(n,n-l,n-k)`,
/// as a vertex table: `map[v]` is the image index in the target graph.
pub fn complement_map(source: &SubsetIndex) -> Result<(GraphParams, Vec<usize>)> {
    let p = source.params();
    let target_params = GraphParams::new(p.n(), p.n() - p.l(), p.n() - p.k())?;
    let target = SubsetIndex::new(target_params)?;
    let full = full_mask(p.n());
    let map = source
        .masks()
        .iter()
        .map(|&m| target.index_of(full & !m).expect("complement has a complementary size"))
        .collect();
    Ok((target_params, map))
}

/// Verifies edge by edge that complementation maps `G(n,k,l)` isomorphically
/// onto `G(n,n-l,n-k)`.
pub fn verify_complement_isomorphism(params: GraphParams) -> Result<bool> {
    let source = SubsetGraph::build(params)?;
    let (target_params, map) = complement_map(source.index())?;
    let target = SubsetGraph::build(target_params)?;
    if source.edge_count() != target.edge_count() || source.vertex_count() != target.vertex_count() {
        return Ok(false);
    }
    Ok(source.graph().edges().into_iter().all(|(u, v)| target.graph().has_edge(map[u], map[v])))
}
