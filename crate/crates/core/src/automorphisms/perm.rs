use std::fmt;

use rand::seq::SliceRandom;
use rand::Rng;

use crate::error::{Error, Result};

/// A permutation `g` of the ground set `[n]`, stored 0-based: `image[x]` is
/// `g(x)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BasePermutation {
    image: Vec<u32>,
}

impl BasePermutation {
    pub fn new(image: Vec<u32>) -> Result<Self> {
        let n = image.len();
        let mut seen = vec![false; n];
        for &x in &image {
            let x = x as usize;
            if x >= n || seen[x] {
                return Err(Error::InvalidPermutation(format!("{image:?} is not a bijection on 0..{n}")));
            }
            seen[x] = true;
        }
        Ok(BasePermutation { image })
    }

    /// Builds from a 1-based image table, the way permutations of `[n]` are
    /// usually written.
    pub fn from_one_based(image: &[u32]) -> Result<Self> {
        if image.contains(&0) {
            return Err(Error::InvalidPermutation("0 is not an element of [n]".into()));
        }
        Self::new(image.iter().map(|x| x - 1).collect())
    }

    pub fn identity(n: u32) -> Self {
        BasePermutation { image: (0..n).collect() }
    }

    /// The transposition swapping (0-based) `a` and `b`.
    pub fn transposition(n: u32, a: u32, b: u32) -> Result<Self> {
        if a >= n || b >= n {
            return Err(Error::InvalidPermutation(format!("transposition ({a} {b}) outside 0..{n}")));
        }
        let mut image: Vec<u32> = (0..n).collect();
        image.swap(a as usize, b as usize);
        Ok(BasePermutation { image })
    }

    /// The cycle `x -> x + 1 mod n`.
    pub fn rotation(n: u32) -> Self {
        BasePermutation { image: (0..n).map(|x| (x + 1) % n).collect() }
    }

    pub fn random<R: Rng + ?Sized>(n: u32, rng: &mut R) -> Self {
        let mut image: Vec<u32> = (0..n).collect();
        image.shuffle(rng);
        BasePermutation { image }
    }

    pub fn degree(&self) -> u32 {
        self.image.len() as u32
    }

    pub fn apply(&self, x: u32) -> u32 {
        self.image[x as usize]
    }

    /// Image of a subset bitmask: `{g(x) : x ∈ mask}`.
    pub fn apply_mask(&self, mask: u64) -> u64 {
        let mut out = 0u64;
        let mut bits = mask;
        while bits != 0 {
            out |= 1u64 << self.image[bits.trailing_zeros() as usize];
            bits &= bits - 1;
        }
        out
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &BasePermutation) -> Result<BasePermutation> {
        if self.degree() != other.degree() {
            return Err(Error::InvalidPermutation("degrees differ".into()));
        }
        Ok(BasePermutation { image: other.image.iter().map(|&x| self.image[x as usize]).collect() })
    }

    pub fn inverse(&self) -> BasePermutation {
        let mut inv = vec![0; self.image.len()];
        for (x, &y) in self.image.iter().enumerate() {
            inv[y as usize] = x as u32;
        }
        BasePermutation { image: inv }
    }

    pub fn is_identity(&self) -> bool {
        self.image.iter().enumerate().all(|(x, &y)| x as u32 == y)
    }
}

impl fmt::Display for BasePermutation {
    /// Cycle notation on `[n]` (1-based), e.g. `(1 2)(3 4 5)`; `()` for the identity.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut seen = vec![false; self.image.len()];
        let mut wrote = false;
        for start in 0..self.image.len() {
            if seen[start] || self.image[start] as usize == start {
                continue;
            }
            let mut cycle = Vec::new();
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                cycle.push((x + 1).to_string());
                x = self.image[x] as usize;
            }
            write!(f, "({})", cycle.join(" "))?;
            wrote = true;
        }
        if !wrote {
            f.write_str("()")?;
        }
        Ok(())
    }
}
