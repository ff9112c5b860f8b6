//! Entrywise verification of the Johnson-scheme identities on explicit
//! relation matrices.

use num_traits::ToPrimitive;

use crate::combinatorics::intersection_number;
use crate::error::{Error, Result};
use crate::graphs::build_johnson_graph;

/// Largest scheme (number of `k`-subsets) the explicit check will build.
pub const DEFAULT_SCHEME_CAP: usize = 2000;

/// Outcome of [`check_scheme`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SchemeReport {
    pub n: u32,
    pub k: u32,
    /// `A_i A_j = Σ_s p^s_ij A_s` for every ordered pair `i != j`.
    pub products_match: bool,
    /// `A_i A_j = A_j A_i` for every pair.
    pub commutative: bool,
    /// `Σ_i A_i = J`.
    pub sums_to_all_ones: bool,
    /// `A_k = I`.
    pub top_is_identity: bool,
    /// First failing `(i, j)` product, if any.
    pub first_failure: Option<(u32, u32)>,
}

impl SchemeReport {
    pub fn passed(&self) -> bool {
        self.products_match && self.commutative && self.sums_to_all_ones && self.top_is_identity
    }
}

fn multiply(a: &[i64], b: &[i64], dim: usize) -> Vec<i64> {
    let mut out = vec![0i64; dim * dim];
    for r in 0..dim {
        for m in 0..dim {
            let x = a[r * dim + m];
            if x == 0 {
                continue;
            }
            let row_b = &b[m * dim..(m + 1) * dim];
            for (o, &y) in out[r * dim..(r + 1) * dim].iter_mut().zip(row_b) {
                *o += x * y;
            }
        }
    }
    out
}

/// Builds every relation matrix `A_0..A_k` of the scheme on `k`-subsets of
/// `[n]` and checks the scheme identities exactly.
pub fn check_scheme(n: u32, k: u32, cap: usize) -> Result<SchemeReport> {
    if 2 * k > n {
        return Err(Error::OutOfRange(format!("scheme requires k <= n/2, got n={n}, k={k}")));
    }
    let relations: Vec<_> = (0..=k).map(|i| build_johnson_graph(n, k, i)).collect::<Result<_>>()?;
    let dim = relations[0].masks().len();
    if dim > cap {
        return Err(Error::CapExceeded { what: "Johnson scheme", size: dim, cap });
    }
    let mats: Vec<Vec<i64>> = relations.iter().map(|r| r.relation_matrix()).collect();

    let mut products_match = true;
    let mut commutative = true;
    let mut first_failure = None;
    for i in 0..=k {
        for j in 0..=k {
            if i == j {
                continue;
            }
            let prod = multiply(&mats[i as usize], &mats[j as usize], dim);
            let mut expected = vec![0i64; dim * dim];
            for s in 0..=k {
                let p = intersection_number(n.into(), k.into(), i.into(), j.into(), s.into())?
                    .to_i64()
                    .ok_or_else(|| Error::OutOfRange("intersection number exceeds i64".into()))?;
                for (e, &a) in expected.iter_mut().zip(&mats[s as usize]) {
                    *e += p * a;
                }
            }
            if prod != expected {
                products_match = false;
                first_failure.get_or_insert((i, j));
            }
            if i < j && prod != multiply(&mats[j as usize], &mats[i as usize], dim) {
                commutative = false;
            }
        }
    }

    let sums_to_all_ones = (0..dim * dim).all(|e| mats.iter().map(|m| m[e]).sum::<i64>() == 1);
    let top = &mats[k as usize];
    let top_is_identity = (0..dim).all(|r| (0..dim).all(|c| top[r * dim + c] == i64::from(r == c)));

    Ok(SchemeReport { n, k, products_match, commutative, sums_to_all_ones, top_is_identity, first_failure })
}
