//! Subsets of `[n]` as `u64` bitmasks (bit `x - 1` set for element `x`),
//! ranked in colexicographic order by the combinatorial number system.

use crate::error::{Error, Result};

/// Largest ground-set size a bitmask can hold.
pub const MAX_GROUND_SET: u32 = 64;

fn check(n: u32, size: u32) -> Result<()> {
    if n > MAX_GROUND_SET {
        return Err(Error::OutOfRange(format!("ground set size {n} exceeds {MAX_GROUND_SET}")));
    }
    if size > n {
        return Err(Error::OutOfRange(format!("subset size {size} exceeds n = {n}")));
    }
    Ok(())
}

/// `C(a, b)` in `u64`; exact for every `a <= 64`.
pub(crate) fn small_binom(a: u32, b: u32) -> u64 {
    if b > a {
        return 0;
    }
    let b = b.min(a - b);
    let mut acc: u128 = 1;
    for j in 0..u128::from(b) {
        acc = acc * (u128::from(a) - j) / (j + 1);
    }
    acc as u64
}

/// All `size`-subsets of `[n]` in colexicographic order (which coincides with
/// increasing numeric order of the masks).
pub fn enumerate_subsets(n: u32, size: u32) -> Result<Vec<u64>> {
    check(n, size)?;
    let count = small_binom(n, size);
    let mut out = Vec::with_capacity(usize::try_from(count).unwrap_or(0));
    if size == 0 {
        out.push(0);
        return Ok(out);
    }
    let limit: u128 = 1u128 << n;
    let mut mask: u128 = (1u128 << size) - 1;
    while mask < limit {
        out.push(mask as u64);
        // Gosper's hack: next integer with the same popcount.
        let low = mask & mask.wrapping_neg();
        let ripple = mask + low;
        mask = (((ripple ^ mask) >> 2) / low) | ripple;
    }
    Ok(out)
}

/// Colexicographic rank of `mask` among subsets of its own size.
pub fn rank(mask: u64) -> u64 {
    let mut r = 0;
    let mut bits = mask;
    let mut j = 1;
    while bits != 0 {
        let c = bits.trailing_zeros();
        r += small_binom(c, j);
        j += 1;
        bits &= bits - 1;
    }
    r
}

/// Inverse of [`rank`] for `size`-subsets of `[n]`.
pub fn unrank(n: u32, size: u32, mut r: u64) -> Result<u64> {
    check(n, size)?;
    if r >= small_binom(n, size) {
        return Err(Error::OutOfRange(format!("rank {r} out of range for C({n},{size})")));
    }
    let mut mask = 0u64;
    let mut top = n;
    for j in (1..=size).rev() {
        // largest c with C(c, j) <= r
        let mut c = top - 1;
        while small_binom(c, j) > r {
            c -= 1;
        }
        mask |= 1u64 << c;
        r -= small_binom(c, j);
        top = c;
    }
    Ok(mask)
}

/// Elements of `mask` as 1-based integers, ascending.
pub fn elements(mask: u64) -> Vec<u32> {
    let mut out = Vec::with_capacity(mask.count_ones() as usize);
    let mut bits = mask;
    while bits != 0 {
        out.push(bits.trailing_zeros() + 1);
        bits &= bits - 1;
    }
    out
}

/// Mask of all of `[n]`.
pub fn full_mask(n: u32) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Renders a subset as `{1,3,4}`.
pub fn format_subset(mask: u64) -> String {
    let parts: Vec<String> = elements(mask).iter().map(u32::to_string).collect();
    format!("{{{}}}", parts.join(","))
}
