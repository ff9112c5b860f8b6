use crate::error::{Error, Result};
use crate::graphs::simple::{DenseMatrix, SimpleGraph};
use crate::graphs::subsets::{enumerate_subsets, MAX_GROUND_SET};

/// The relation graph `J(n,k,i)` of the Johnson scheme: `k`-subsets of `[n]`,
/// adjacent when they meet in exactly `i` elements.
///
/// For `i = k` the relation is the identity. Its loops live only in
/// [`JohnsonGraph::adjacency_matrix`]; the edge lists stay empty.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JohnsonGraph {
    n: u32,
    k: u32,
    i: u32,
    masks: Vec<u64>,
    graph: SimpleGraph,
}

impl JohnsonGraph {
    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn i(&self) -> u32 {
        self.i
    }

    pub fn has_loops(&self) -> bool {
        self.i == self.k
    }

    pub fn masks(&self) -> &[u64] {
        &self.masks
    }

    pub fn graph(&self) -> &SimpleGraph {
        &self.graph
    }

    /// Adjacency matrix; the diagonal is 1 exactly for the identity relation.
    pub fn adjacency_matrix(&self) -> DenseMatrix {
        let mut m = self.graph.adjacency_matrix();
        if self.has_loops() {
            for v in 0..self.masks.len() {
                m.set(v, v, 1.0);
            }
        }
        m
    }

    /// Integer 0/1 adjacency matrix (row-major) including loops.
    pub fn relation_matrix(&self) -> Vec<i64> {
        let dim = self.masks.len();
        let mut m = vec![0i64; dim * dim];
        for (u, &a) in self.masks.iter().enumerate() {
            for (v, &b) in self.masks.iter().enumerate() {
                if (a & b).count_ones() == self.i {
                    m[u * dim + v] = 1;
                }
            }
        }
        m
    }
}

/// Builds `J(n,k,i)` for `0 <= i <= k <= n/2`.
pub fn build_johnson_graph(n: u32, k: u32, i: u32) -> Result<JohnsonGraph> {
    if n > MAX_GROUND_SET || 2 * k > n || i > k {
        return Err(Error::OutOfRange(format!(
            "J(n,k,i) requires 0 <= i <= k <= n/2 and n <= {MAX_GROUND_SET}, got ({n},{k},{i})"
        )));
    }
    let masks = enumerate_subsets(n, k)?;
    let mut adj = vec![Vec::new(); masks.len()];
    if i < k {
        for (u, &a) in masks.iter().enumerate() {
            for (v, &b) in masks.iter().enumerate().skip(u + 1) {
                if (a & b).count_ones() == i {
                    adj[u].push(v);
                    adj[v].push(u);
                }
            }
        }
    }
    Ok(JohnsonGraph { n, k, i, masks, graph: SimpleGraph::from_unsorted(adj) })
}
