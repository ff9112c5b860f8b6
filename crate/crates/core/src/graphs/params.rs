use std::fmt;

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

use crate::combinatorics::binom_unsigned;
use crate::error::{Error, Result};

/// Validated parameters `(n, k, l)` of the set-inclusion graph `G(n,k,l)`,
/// with `1 <= k < l <= n - 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct GraphParams {
    n: u32,
    k: u32,
    l: u32,
}

impl GraphParams {
    pub fn new(n: u32, k: u32, l: u32) -> Result<Self> {
        if k < 1 {
            return Err(Error::InvalidParams(format!("k must be at least 1, got k={k}")));
        }
        if k >= l {
            return Err(Error::InvalidParams(format!("k < l required, got k={k}, l={l}")));
        }
        if l + 1 > n {
            return Err(Error::InvalidParams(format!("l <= n - 1 required, got n={n}, l={l}")));
        }
        Ok(Self { n, k, l })
    }

    /// Parameters of the middle-layer graph `B(n,k) = G(n,k,k+1)`.
    pub fn middle(n: u32, k: u32) -> Result<Self> {
        Self::new(n, k, k + 1)?.canonical_only()
    }

    /// Parameters of the bipartite Kneser graph `H(n,k) = G(n,k,n-k)`.
    pub fn kneser(n: u32, k: u32) -> Result<Self> {
        if n < k {
            return Err(Error::InvalidParams(format!("k <= n required, got n={n}, k={k}")));
        }
        Self::new(n, k, n - k)?.canonical_only()
    }

    fn canonical_only(self) -> Result<Self> {
        self.require_canonical()?;
        Ok(self)
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn l(&self) -> u32 {
        self.l
    }

    pub(crate) fn as_i64(&self) -> (i64, i64, i64) {
        (i64::from(self.n), i64::from(self.k), i64::from(self.l))
    }

    pub fn is_canonical(&self) -> bool {
        self.k + self.l <= self.n
    }

    /// True for the bipartite Kneser case `k + l = n`, where complementation
    /// is an automorphism.
    pub fn is_self_complementary(&self) -> bool {
        self.k + self.l == self.n
    }

    pub fn require_canonical(&self) -> Result<()> {
        if self.is_canonical() {
            Ok(())
        } else {
            Err(Error::NotCanonical { n: self.n, k: self.k, l: self.l })
        }
    }

    /// Maps to the isomorphic canonical representative via complementation:
    /// `G(n,k,l) ≅ G(n,n-l,n-k)`. The flag reports whether the map was applied.
    pub fn canonicalize(&self) -> (GraphParams, bool) {
        if self.is_canonical() {
            (*self, false)
        } else {
            let c = GraphParams { n: self.n, k: self.n - self.l, l: self.n - self.k };
            (c, true)
        }
    }

    /// `n1 = C(n,k)`, the size of the `k`-subset class.
    pub fn n1(&self) -> BigUint {
        self.binom(self.n, self.k)
    }

    /// `n2 = C(n,l)`, the size of the `l`-subset class.
    pub fn n2(&self) -> BigUint {
        self.binom(self.n, self.l)
    }

    /// `r1 = C(n-k,l-k)`, the degree of every `k`-subset.
    pub fn r1(&self) -> BigUint {
        self.binom(self.n - self.k, self.l - self.k)
    }

    /// `r2 = C(l,k)`, the degree of every `l`-subset.
    pub fn r2(&self) -> BigUint {
        self.binom(self.l, self.k)
    }

    pub fn edge_count(&self) -> BigUint {
        self.n1() * self.r1()
    }

    fn binom(&self, a: u32, b: u32) -> BigUint {
        binom_unsigned(i64::from(a), i64::from(b))
    }
}

impl fmt::Display for GraphParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "G({},{},{})", self.n, self.k, self.l)
    }
}

/// Every canonical parameter triple with `n` in the given range, in
/// lexicographic `(n, k, l)` order.
pub fn canonical_params(ns: std::ops::RangeInclusive<u32>) -> Vec<GraphParams> {
    let mut out = Vec::new();
    for n in ns {
        for k in 1..n {
            for l in k + 1..n {
                if k + l <= n {
                    out.push(GraphParams { n, k, l });
                }
            }
        }
    }
    out
}
