//! Exact integer evaluation of the closed-form quantities: binomial
//! coefficients, Johnson-scheme eigenvalues, the radicands of the
//! set-inclusion spectrum and the scheme intersection numbers.
//!
//! Every function returns arbitrary-precision integers. Binomials are
//! computed in `u128` while they fit and escalate to `BigUint` on overflow.

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::graphs::GraphParams;

/// `C(a, b)`, total over all integers: zero when `b < 0`, `b > a` or `a < 0`.
pub fn binom(a: i64, b: i64) -> BigInt {
    BigInt::from(binom_unsigned(a, b))
}

/// Unsigned form of [`binom`].
pub fn binom_unsigned(a: i64, b: i64) -> BigUint {
    if a < 0 || b < 0 || b > a {
        return BigUint::zero();
    }
    let b = b.min(a - b) as u64;
    let a = a as u64;
    let mut acc: u128 = 1;
    for j in 0..b {
        // C(a, j) * (a - j) = C(a, j + 1) * (j + 1)
        match acc.checked_mul(u128::from(a - j)) {
            Some(p) => acc = p / u128::from(j + 1),
            None => return binom_big(a, b, j, acc),
        }
    }
    BigUint::from(acc)
}

fn binom_big(a: u64, b: u64, start: u64, acc: u128) -> BigUint {
    let mut acc = BigUint::from(acc);
    for j in start..b {
        acc *= a - j;
        acc /= j + 1;
    }
    acc
}

/// `n!` as an arbitrary-precision integer.
pub fn factorial(n: u32) -> BigUint {
    (1..=n).fold(BigUint::one(), |acc, j| acc * j)
}

fn sign(exp: i64) -> i32 {
    if exp % 2 == 0 {
        1
    } else {
        -1
    }
}

fn check_scheme(n: i64, k: i64, i: i64) -> Result<()> {
    if n < 1 || k < 0 || 2 * k > n || i < 0 || i > k {
        return Err(Error::OutOfRange(format!("scheme index requires 0 <= i <= k <= n/2, got n={n}, k={k}, i={i}")));
    }
    Ok(())
}

/// Eigenvalue of the relation `|u ∩ v| = i` of the Johnson scheme on
/// `k`-subsets of `[n]`, on the eigenspace indexed by `s`.
pub fn alpha(n: i64, k: i64, i: i64, s: i64) -> Result<BigInt> {
    check_scheme(n, k, i)?;
    if s < 0 || s > k {
        return Err(Error::OutOfRange(format!("eigenspace index s={s} not in 0..={k}")));
    }
    let mut total = BigInt::zero();
    for r in 0..=s {
        let term = binom(s, r) * binom(k - r, i - r) * binom(n - k - s + r, k - i - s + r);
        if sign(s - r) > 0 {
            total += term;
        } else {
            total -= term;
        }
    }
    Ok(total)
}

/// Eigenvalue `β_s` of `B Bᵀ`, where `B` is the `k`-subset by `l`-subset
/// inclusion matrix. The nonzero eigenvalues of `G(n,k,l)` are `±√β_s`.
pub fn beta(params: &GraphParams, s: u32) -> Result<BigInt> {
    params.require_canonical()?;
    let (n, k, l) = params.as_i64();
    let s = i64::from(s);
    if s > k {
        return Err(Error::OutOfRange(format!("eigenspace index s={s} not in 0..={k}")));
    }
    let mut total = BigInt::zero();
    for i in (2 * k - l).max(0)..=k {
        total += binom(n - 2 * k + i, l - 2 * k + i) * alpha(n, k, i, s)?;
    }
    Ok(total)
}

/// Closed form of `β_s` for the middle-layer graph `B(n,k) = G(n,k,k+1)`:
/// `(n - k - s)(k + 1 - s)`.
pub fn beta_middle(n: u32, k: u32, s: u32) -> Result<BigInt> {
    if k < 1 || 2 * k + 1 > n {
        return Err(Error::OutOfRange(format!("middle layer requires 1 <= k <= (n-1)/2, got n={n}, k={k}")));
    }
    if s > k {
        return Err(Error::OutOfRange(format!("eigenspace index s={s} not in 0..={k}")));
    }
    let (n, k, s) = (i64::from(n), i64::from(k), i64::from(s));
    Ok(BigInt::from(n - k - s) * BigInt::from(k + 1 - s))
}

/// Intersection number `p^s_{ij}`: the coefficient of `A_s` in `A_i A_j`
/// for the Johnson scheme on `k`-subsets of `[n]`. Only `i != j` is supported.
pub fn intersection_number(n: i64, k: i64, i: i64, j: i64, s: i64) -> Result<BigInt> {
    check_scheme(n, k, i)?;
    check_scheme(n, k, j)?;
    check_scheme(n, k, s)?;
    if i == j {
        return Err(Error::OutOfRange(format!(
            "intersection numbers are only defined here for i != j (got i = j = {i})"
        )));
    }
    let mut total = BigInt::zero();
    for r in 0..=s {
        total += binom(s, r) * binom(k - s, i - r) * binom(k - s, j - r) * binom(n - 2 * k + s, k - i - j + r);
    }
    Ok(total)
}

/// Multiplicity `C(n,s) - C(n,s-1)` of the `s`-th eigenspace of the scheme.
pub fn eigenspace_dimension(n: i64, s: i64) -> BigInt {
    binom(n, s) - binom(n, s - 1)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(n: u32, k: u32, l: u32) -> GraphParams {
        GraphParams::new(n, k, l).unwrap()
    }

    #[test]
    fn binom_conventions() {
        assert_eq!(binom(5, 2), BigInt::from(10));
        assert_eq!(binom(3, 5), BigInt::zero());
        assert_eq!(binom(4, -1), BigInt::zero());
        assert_eq!(binom(-3, 1), BigInt::zero());
        assert_eq!(binom(0, 0), BigInt::one());
        assert_eq!(binom(7, 0), BigInt::one());
    }

    #[test]
    fn binom_escalates_past_u128() {
        // C(200,100) = 90548514656103281165404177077484163874504589675413336841320
        let expected: BigInt = "90548514656103281165404177077484163874504589675413336841320".parse().unwrap();
        assert_eq!(binom(200, 100), expected);
        // Pascal's rule around the escalation boundary.
        for a in 120..140 {
            for b in 1..a {
                assert_eq!(binom(a, b), binom(a - 1, b - 1) + binom(a - 1, b));
            }
        }
    }

    #[test]
    fn alpha_identity_relation() {
        for n in 2..12 {
            for k in 0..=n / 2 {
                for s in 0..=k {
                    assert_eq!(alpha(n, k, k, s).unwrap(), BigInt::one());
                }
            }
        }
    }

    #[test]
    fn alpha_small_values() {
        assert_eq!(alpha(4, 1, 0, 0).unwrap(), BigInt::from(3));
        assert_eq!(alpha(4, 1, 0, 1).unwrap(), BigInt::from(-1));
        assert_eq!(alpha(5, 2, 1, 0).unwrap(), BigInt::from(6));
    }

    #[test]
    fn alpha_rejects_bounds() {
        assert!(alpha(5, 3, 1, 0).is_err());
        assert!(alpha(6, 2, 3, 0).is_err());
        assert!(alpha(6, 2, 1, 3).is_err());
    }

    #[test]
    fn beta_values() {
        assert_eq!(beta(&p(4, 1, 2), 0).unwrap(), BigInt::from(6));
        assert_eq!(beta(&p(4, 1, 2), 1).unwrap(), BigInt::from(2));
        let b: Vec<_> = (0..=2).map(|s| beta(&p(5, 2, 3), s).unwrap()).collect();
        assert_eq!(b, vec![BigInt::from(9), BigInt::from(4), BigInt::from(1)]);
        assert!(beta(&p(5, 2, 3), 3).is_err());
        assert!(matches!(beta(&p(5, 3, 4), 0), Err(Error::NotCanonical { .. })));
    }

    #[test]
    fn beta_middle_values() {
        assert_eq!(beta_middle(4, 1, 0).unwrap(), BigInt::from(6));
        assert_eq!(beta_middle(4, 1, 1).unwrap(), BigInt::from(2));
        assert_eq!(beta_middle(5, 2, 2).unwrap(), BigInt::from(1));
        assert!(beta_middle(5, 2, 3).is_err());
        assert!(beta_middle(4, 2, 0).is_err());
    }

    #[test]
    fn intersection_numbers() {
        // Frozen from an explicit A_i A_j product on 2-subsets.
        let got: Vec<_> = (0..=2).map(|s| intersection_number(5, 2, 1, 2, s).unwrap()).collect();
        assert_eq!(got, vec![BigInt::zero(), BigInt::one(), BigInt::zero()]);
        let got: Vec<_> = (0..=2).map(|s| intersection_number(6, 2, 0, 1, s).unwrap()).collect();
        assert_eq!(got, vec![BigInt::from(4), BigInt::from(3), BigInt::zero()]);
        for n in 2..10 {
            for k in 1..=n / 2 {
                for i in 0..=k {
                    for j in 0..=k {
                        if i != j {
                            assert!(intersection_number(n, k, i, j, k).unwrap().is_zero());
                        }
                    }
                }
            }
        }
        assert!(intersection_number(6, 2, 1, 1, 0).is_err());
    }

    #[test]
    fn factorials() {
        assert_eq!(factorial(0), BigUint::one());
        assert_eq!(factorial(5), BigUint::from(120u32));
        assert_eq!(factorial(20), BigUint::from(2_432_902_008_176_640_000u64));
    }
}
