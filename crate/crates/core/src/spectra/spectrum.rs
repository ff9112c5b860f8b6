use std::collections::BTreeMap;
use std::fmt::Write as _;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::spectra::eigenvalue::{decimal as decimal_serde, Eigenvalue};

/// A multiset of exact eigenvalues: distinct values in descending order, each
/// with a positive multiplicity.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Spectrum {
    entries: Vec<SpectrumEntry>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpectrumEntry {
    pub value: Eigenvalue,
    #[serde(with = "decimal_serde")]
    pub multiplicity: BigUint,
}

impl Spectrum {
    /// Builds the canonical spectrum: zero multiplicities dropped, values
    /// normalized, exactly-equal values merged, descending order.
    pub fn from_pairs(pairs: impl IntoIterator<Item = (Eigenvalue, BigUint)>) -> Self {
        let mut items: Vec<(Eigenvalue, BigUint)> =
            pairs.into_iter().filter(|(_, m)| !m.is_zero()).map(|(v, m)| (v.normalized(), m)).collect();
        items.sort_by(|a, b| b.0.cmp(&a.0));
        let mut entries: Vec<SpectrumEntry> = Vec::with_capacity(items.len());
        for (value, multiplicity) in items {
            match entries.last_mut() {
                Some(last) if last.value == value => {
                    last.multiplicity += multiplicity;
                    // keep the simpler representation
                    if matches!(value, Eigenvalue::Int(_)) {
                        last.value = value;
                    }
                }
                _ => entries.push(SpectrumEntry { value, multiplicity }),
            }
        }
        Spectrum { entries }
    }

    /// Like [`Spectrum::from_pairs`] but with signed multiplicities; a
    /// negative multiplicity is an error.
    pub fn from_signed_pairs(pairs: impl IntoIterator<Item = (Eigenvalue, BigInt)>) -> Result<Self> {
        let mut out = Vec::new();
        for (v, m) in pairs {
            let m = m
                .to_biguint()
                .ok_or_else(|| Error::OutOfRange(format!("negative multiplicity {m} for eigenvalue {v}")))?;
            out.push((v, m));
        }
        Ok(Self::from_pairs(out))
    }

    pub fn entries(&self) -> &[SpectrumEntry] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Sum of multiplicities: the order of the matrix the spectrum describes.
    pub fn total_multiplicity(&self) -> BigUint {
        self.entries.iter().map(|e| &e.multiplicity).sum()
    }

    pub fn largest(&self) -> Option<&Eigenvalue> {
        self.entries.first().map(|e| &e.value)
    }

    pub fn smallest(&self) -> Option<&Eigenvalue> {
        self.entries.last().map(|e| &e.value)
    }

    pub fn distinct_values(&self) -> Vec<Eigenvalue> {
        self.entries.iter().map(|e| e.value.clone()).collect()
    }

    pub fn multiplicity_of(&self, value: &Eigenvalue) -> BigUint {
        self.entries.iter().find(|e| &e.value == value).map(|e| e.multiplicity.clone()).unwrap_or_default()
    }

    /// True when every eigenvalue is an integer.
    pub fn is_integral(&self) -> bool {
        self.entries.iter().all(|e| e.value.is_integer())
    }

    /// True when the multiset is invariant under `λ -> -λ`, which is the
    /// case for every bipartite graph.
    pub fn is_symmetric(&self) -> bool {
        let n = self.entries.len();
        (0..n).all(|i| {
            let (a, b) = (&self.entries[i], &self.entries[n - 1 - i]);
            a.multiplicity == b.multiplicity && is_negation(&a.value, &b.value)
        })
    }

    /// Exact power sum `Σ m·λ^power` for `power` in 0..=2, as a combination of
    /// square roots of squarefree integers.
    pub fn moment(&self, power: u32) -> Result<QuadraticSum> {
        if power > 2 {
            return Err(Error::OutOfRange(format!("moments are supported up to power 2, got {power}")));
        }
        let mut sum = QuadraticSum::default();
        for e in &self.entries {
            let parts = e
                .value
                .to_quadratic_parts()
                .ok_or_else(|| Error::OutOfRange(format!("radicand of {} too large to reduce exactly", e.value)))?;
            let m = BigRational::from_integer(BigInt::from(e.multiplicity.clone()));
            let (a, b, r) = (parts.rational, parts.coeff, parts.squarefree);
            match power {
                0 => sum.add(BigUint::one(), m),
                1 => {
                    sum.add(BigUint::one(), &m * &a);
                    sum.add(r, &m * &b);
                }
                _ => {
                    let rr = BigRational::from_integer(BigInt::from(r.clone()));
                    sum.add(BigUint::one(), &m * (&a * &a + &b * &b * rr));
                    sum.add(r, &m * BigRational::from_integer(BigInt::from(2)) * &a * &b);
                }
            }
        }
        Ok(sum)
    }

    /// Every eigenvalue, repeated by multiplicity, in descending order.
    pub fn expand_f64(&self) -> Result<Vec<f64>> {
        let mut out = Vec::new();
        for e in &self.entries {
            let m: usize = (&e.multiplicity)
                .try_into()
                .map_err(|_| Error::OutOfRange("multiplicity too large to expand".into()))?;
            let x = e.value.to_f64();
            out.extend(std::iter::repeat_n(x, m));
        }
        Ok(out)
    }

    /// Two-column table with symbolic values.
    pub fn to_table(&self) -> String {
        let rendered: Vec<String> = self.entries.iter().map(|e| e.value.to_string()).collect();
        let width = rendered.iter().map(|s| s.chars().count()).max().unwrap_or(0).max("eigenvalue".len());
        let mut out = format!("{:<width$}  multiplicity\n", "eigenvalue");
        for (text, e) in rendered.iter().zip(&self.entries) {
            let pad = width - text.chars().count();
            let _ = writeln!(out, "{text}{}  {}", " ".repeat(pad), e.multiplicity);
        }
        out
    }

    /// `value,multiplicity` rows with 17 significant digits.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("value,multiplicity\n");
        for e in &self.entries {
            let _ = writeln!(out, "{},{}", format_sig17(e.value.to_f64()), e.multiplicity);
        }
        out
    }
}

impl Serialize for Spectrum {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.entries.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Spectrum {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let entries = Vec::<SpectrumEntry>::deserialize(d)?;
        Ok(Spectrum::from_pairs(entries.into_iter().map(|e| (e.value, e.multiplicity))))
    }
}

fn is_negation(a: &Eigenvalue, b: &Eigenvalue) -> bool {
    use crate::spectra::eigenvalue::{Branch, ExactEigenvalue, SurdEigenvalue};
    let neg = match a {
        Eigenvalue::Int(x) => Eigenvalue::Int(-x),
        Eigenvalue::Sqrt(e) => Eigenvalue::Sqrt(ExactEigenvalue::negated(e)),
        Eigenvalue::Surd(s) => {
            let branch = match s.branch() {
                Branch::Plus => Branch::Minus,
                Branch::Minus => Branch::Plus,
            };
            Eigenvalue::Surd(SurdEigenvalue::new(-s.p(), s.d().clone(), branch))
        }
    };
    &neg == b
}

/// Formats with 17 significant decimal digits in positional notation.
pub fn format_sig17(x: f64) -> String {
    if x == 0.0 || !x.is_finite() {
        return format!("{:.16}", x);
    }
    let magnitude = x.abs().log10().floor() as i32;
    let decimals = (16 - magnitude).max(0) as usize;
    format!("{:.*}", decimals, x)
}

/// `Σ_m c_m √m` over squarefree `m`, with rational coefficients; `m = 1`
/// carries the rational part.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct QuadraticSum {
    terms: BTreeMap<BigUint, BigRational>,
}

impl QuadraticSum {
    fn add(&mut self, radicand: BigUint, coeff: BigRational) {
        if coeff.is_zero() {
            return;
        }
        let slot = self.terms.entry(radicand.clone()).or_insert_with(BigRational::zero);
        *slot += coeff;
        if slot.is_zero() {
            self.terms.remove(&radicand);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// The value when it is an integer.
    pub fn as_integer(&self) -> Option<BigInt> {
        match self.terms.len() {
            0 => Some(BigInt::zero()),
            1 => {
                let (r, c) = self.terms.iter().next()?;
                (r.is_one() && c.is_integer()).then(|| c.to_integer())
            }
            _ => None,
        }
    }
}
