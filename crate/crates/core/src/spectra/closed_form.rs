//! Closed-form spectra of `G(n,k,l)`, `B(n,k)` and their line graphs.

use num_bigint::{BigInt, BigUint};
use num_traits::Zero;

use crate::combinatorics::{beta, beta_middle, binom, eigenspace_dimension};
use crate::error::{Error, Result};
use crate::graphs::GraphParams;
use crate::spectra::eigenvalue::{Eigenvalue, ExactEigenvalue, SurdEigenvalue};
use crate::spectra::spectrum::Spectrum;

fn to_radicand(b: BigInt) -> Result<BigUint> {
    b.to_biguint().ok_or_else(|| Error::OutOfRange("negative radicand in a bipartite spectrum".into()))
}

/// Radicands `β_0..β_k` paired with their multiplicities `C(n,s) - C(n,s-1)`.
fn radicands(params: &GraphParams) -> Result<Vec<(BigUint, BigInt)>> {
    let n = i64::from(params.n());
    (0..=params.k()).map(|s| Ok((to_radicand(beta(params, s)?)?, eigenspace_dimension(n, i64::from(s))))).collect()
}

fn bipartite_spectrum(radicands: Vec<(BigUint, BigInt)>, zeros: BigInt) -> Result<Spectrum> {
    let mut pairs = Vec::with_capacity(2 * radicands.len() + 1);
    for (r, m) in radicands {
        pairs.push((Eigenvalue::from(ExactEigenvalue::positive(r.clone())), m.clone()));
        if !r.is_zero() {
            pairs.push((Eigenvalue::from(ExactEigenvalue::negative(r)), m));
        } else {
            pairs.push((Eigenvalue::int(0), m));
        }
    }
    pairs.push((Eigenvalue::int(0), zeros));
    Spectrum::from_signed_pairs(pairs)
}

/// Spectrum of `G(n,k,l)`: `±√β_s` with multiplicity `C(n,s) - C(n,s-1)` for
/// `0 <= s <= k`, and `0` with multiplicity `C(n,l) - C(n,k)`.
pub fn spectrum_inclusion(params: &GraphParams) -> Result<Spectrum> {
    params.require_canonical()?;
    let (n, k, l) = params.as_i64();
    bipartite_spectrum(radicands(params)?, binom(n, l) - binom(n, k))
}

/// Spectrum of the middle-layer graph `B(n,k)`, from `β_s = (n-k-s)(k+1-s)`.
pub fn spectrum_middle(n: u32, k: u32) -> Result<Spectrum> {
    let params = GraphParams::middle(n, k)?;
    let (ni, ki, _) = params.as_i64();
    let radicands = (0..=k)
        .map(|s| Ok((to_radicand(beta_middle(n, k, s)?)?, eigenspace_dimension(ni, i64::from(s)))))
        .collect::<Result<Vec<_>>>()?;
    bipartite_spectrum(radicands, binom(ni, ki + 1) - binom(ni, ki))
}

/// Spectrum of the line graph of a semi-regular bipartite graph with
/// parameters `(n1, n2, r1, r2)`, `n1 <= n2`, given its `n1` largest
/// eigenvalues (with multiplicity).
///
/// The principal eigenvalue `√(r1 r2)` contributes `r1 + r2 - 2`; every other
/// `λ` contributes both roots of `(x - r1 + 2)(x - r2 + 2) = λ²`. On top of
/// those come `r2 - 2` with multiplicity `n2 - n1` and `-2` with multiplicity
/// `n2 r2 - n1 - n2 + 1`.
pub fn spectrum_line_semiregular(
    n1: &BigUint,
    n2: &BigUint,
    r1: &BigUint,
    r2: &BigUint,
    top_eigenvalues: &[(ExactEigenvalue, BigUint)],
) -> Result<Spectrum> {
    if n1 > n2 {
        return Err(Error::LineGraphInput(format!("n1 = {n1} exceeds n2 = {n2}")));
    }
    if n1 * r1 != n2 * r2 {
        return Err(Error::LineGraphInput(format!(
            "edge counts disagree: n1·r1 = {} but n2·r2 = {}",
            n1 * r1,
            n2 * r2
        )));
    }
    let total: BigUint = top_eigenvalues.iter().map(|(_, m)| m).sum();
    if &total != n1 {
        return Err(Error::LineGraphInput(format!("eigenvalue multiplicities sum to {total}, expected n1 = {n1}")));
    }
    let principal = ExactEigenvalue::positive(r1 * r2);
    let principal_value = Eigenvalue::Sqrt(principal.clone());
    let mut largest: Option<Eigenvalue> = None;
    for (lambda, _) in top_eigenvalues {
        let v = Eigenvalue::Sqrt(lambda.clone());
        if largest.as_ref().is_none_or(|l| v > *l) {
            largest = Some(v);
        }
    }
    if largest.as_ref() != Some(&principal_value) {
        return Err(Error::LineGraphInput(format!("largest eigenvalue must be √(r1·r2) = {principal_value}")));
    }

    let (n1i, n2i) = (BigInt::from(n1.clone()), BigInt::from(n2.clone()));
    let (r1i, r2i) = (BigInt::from(r1.clone()), BigInt::from(r2.clone()));
    let two = BigInt::from(2);
    let mut pairs: Vec<(Eigenvalue, BigInt)> = vec![
        (Eigenvalue::Int(&r1i + &r2i - &two), BigInt::from(1)),
        (Eigenvalue::Int(&r2i - &two), &n2i - &n1i),
        (Eigenvalue::Int(-two.clone()), &n2i * &r2i - &n1i - &n2i + 1),
    ];
    let mut principal_pending = true;
    for (lambda, m) in top_eigenvalues {
        let mut m = BigInt::from(m.clone());
        if principal_pending && lambda.sign() >= 0 && lambda.radicand() == principal.radicand() {
            m -= 1;
            principal_pending = false;
        }
        if m.is_zero() {
            continue;
        }
        let (plus, minus) = line_pair(&r1i, &r2i, lambda.square())?;
        pairs.push((plus, m.clone()));
        pairs.push((minus, m));
    }
    Spectrum::from_signed_pairs(pairs)
}

/// Roots of `(x - r1 + 2)(x - r2 + 2) - λ² = 0`.
fn line_pair(r1: &BigInt, r2: &BigInt, lambda_sq: &BigUint) -> Result<(Eigenvalue, Eigenvalue)> {
    let two = BigInt::from(2);
    let (plus, minus) =
        SurdEigenvalue::roots_of_shifted_product(&(r1 - &two), &(r2 - &two), &BigInt::from(lambda_sq.clone()))
            .ok_or_else(|| Error::LineGraphInput("negative discriminant".into()))?;
    Ok((Eigenvalue::from(plus), Eigenvalue::from(minus)))
}

/// Spectrum of the line graph of `G(n,k,l)`.
pub fn spectrum_line_inclusion(params: &GraphParams) -> Result<Spectrum> {
    params.require_canonical()?;
    let top: Vec<(ExactEigenvalue, BigUint)> = radicands(params)?
        .into_iter()
        .map(|(r, m)| Ok((ExactEigenvalue::new(if r.is_zero() { 0 } else { 1 }, r), to_radicand(m)?)))
        .collect::<Result<_>>()?;
    spectrum_line_semiregular(&params.n1(), &params.n2(), &params.r1(), &params.r2(), &top)
}

/// Integral spectrum of the line graph of `B(n,k)`:
/// `n-1` once, `k-1` with multiplicity `C(n,k+1) - C(n,k)`, `-2` with
/// multiplicity `k C(n,k+1) - C(n,k) + 1`, and for `1 <= s <= k` both `s-2`
/// and `n-s-1` with multiplicity `C(n,s) - C(n,s-1)`.
pub fn spectrum_line_middle(n: u32, k: u32) -> Result<Spectrum> {
    GraphParams::middle(n, k)?;
    let (n, k) = (i64::from(n), i64::from(k));
    let mut pairs = vec![
        (Eigenvalue::from(n - 1), BigInt::from(1)),
        (Eigenvalue::from(k - 1), binom(n, k + 1) - binom(n, k)),
        (Eigenvalue::from(-2), BigInt::from(k) * binom(n, k + 1) - binom(n, k) + 1),
    ];
    for s in 1..=k {
        let m = eigenspace_dimension(n, s);
        pairs.push((Eigenvalue::from(s - 2), m.clone()));
        pairs.push((Eigenvalue::from(n - s - 1), m));
    }
    Spectrum::from_signed_pairs(pairs)
}
