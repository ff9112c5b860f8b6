//! Exact algebraic eigenvalues.
//!
//! Every eigenvalue produced by the closed forms is an integer, a signed
//! square root `±√r`, or a quadratic surd `(p ± √d)/2`. All three embed into
//! the common form `(p + e√d)/2` with `e ∈ {-1, 0, 1}`, which admits exact
//! comparison by repeated squaring; no floating point is involved.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::{Integer, Roots};
use num_traits::{One, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

/// Extra binary digits carried when expanding a square root to `f64`.
const EXPANSION_BITS: u32 = 64;

/// Largest radicand whose square factor is extracted by trial division.
const FACTOR_LIMIT_BITS: u64 = 64;

/// `sign · √radicand`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ExactEigenvalue {
    sign: i8,
    radicand: BigUint,
}

impl ExactEigenvalue {
    /// `sign · √radicand`; the sign is forced to 0 when the radicand is 0.
    pub fn new(sign: i8, radicand: BigUint) -> Self {
        assert!(sign != 0 || radicand.is_zero(), "a nonzero radicand needs a sign");
        let sign = if radicand.is_zero() { 0 } else { sign.signum() };
        ExactEigenvalue { sign, radicand }
    }

    pub fn positive(radicand: BigUint) -> Self {
        Self::new(1, radicand)
    }

    pub fn negative(radicand: BigUint) -> Self {
        Self::new(-1, radicand)
    }

    pub fn zero() -> Self {
        ExactEigenvalue { sign: 0, radicand: BigUint::zero() }
    }

    pub fn sign(&self) -> i8 {
        self.sign
    }

    pub fn radicand(&self) -> &BigUint {
        &self.radicand
    }

    /// The square of the value, `radicand`.
    pub fn square(&self) -> &BigUint {
        &self.radicand
    }

    pub fn negated(&self) -> Self {
        ExactEigenvalue { sign: -self.sign, radicand: self.radicand.clone() }
    }

    /// The integer value when the radicand is a perfect square.
    pub fn as_integer(&self) -> Option<BigInt> {
        perfect_sqrt(&self.radicand).map(|m| signed(self.sign, m))
    }
}

/// Which root of a quadratic: `(p + √d)/2` or `(p - √d)/2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Branch {
    #[serde(rename = "+")]
    Plus,
    #[serde(rename = "-")]
    Minus,
}

impl Branch {
    fn sign(self) -> i8 {
        match self {
            Branch::Plus => 1,
            Branch::Minus => -1,
        }
    }

    fn symbol(self) -> char {
        match self {
            Branch::Plus => '+',
            Branch::Minus => '-',
        }
    }
}

/// `(p + branch · √d) / 2`: a root of `x² - p x + (p² - d)/4`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SurdEigenvalue {
    p: BigInt,
    d: BigUint,
    branch: Branch,
}

impl SurdEigenvalue {
    pub fn new(p: BigInt, d: BigUint, branch: Branch) -> Self {
        SurdEigenvalue { p, d, branch }
    }

    /// Both roots of `(x - a)(x - b) - c = 0`, larger first.
    pub fn roots_of_shifted_product(a: &BigInt, b: &BigInt, c: &BigInt) -> Option<(Self, Self)> {
        let p = a + b;
        let diff = a - b;
        let disc = &diff * &diff + BigInt::from(4) * c;
        let d = disc.to_biguint()?;
        Some((SurdEigenvalue::new(p.clone(), d.clone(), Branch::Plus), SurdEigenvalue::new(p, d, Branch::Minus)))
    }

    pub fn p(&self) -> &BigInt {
        &self.p
    }

    pub fn d(&self) -> &BigUint {
        &self.d
    }

    pub fn branch(&self) -> Branch {
        self.branch
    }

    /// True when `d` is a perfect square, i.e. the value is rational.
    pub fn is_rational(&self) -> bool {
        perfect_sqrt(&self.d).is_some()
    }
}

/// An exact real eigenvalue in one of the three closed forms.
#[derive(Debug, Clone)]
pub enum Eigenvalue {
    Int(BigInt),
    Sqrt(ExactEigenvalue),
    Surd(SurdEigenvalue),
}

impl Eigenvalue {
    pub fn int(v: impl Into<BigInt>) -> Self {
        Eigenvalue::Int(v.into())
    }

    /// Rewrites to the simplest form: perfect-square radicands become
    /// integers, integral surds become integers and surds with `p = 0`
    /// become square roots when possible.
    pub fn normalized(self) -> Self {
        match self {
            Eigenvalue::Sqrt(e) => match e.as_integer() {
                Some(v) => Eigenvalue::Int(v),
                None => Eigenvalue::Sqrt(e),
            },
            Eigenvalue::Surd(s) => {
                if let Some(m) = perfect_sqrt(&s.d) {
                    let num = &s.p + signed(s.branch.sign(), m);
                    if num.is_even() {
                        return Eigenvalue::Int(num / 2);
                    }
                    return Eigenvalue::Surd(s);
                }
                let four = BigUint::from(4u32);
                if s.p.is_zero() && (&s.d % &four).is_zero() {
                    return Eigenvalue::Sqrt(ExactEigenvalue::new(s.branch.sign(), &s.d / four));
                }
                Eigenvalue::Surd(s)
            }
            int => int,
        }
    }

    fn quad(&self) -> Quad {
        match self {
            Eigenvalue::Int(v) => Quad { p: v * 2, e: 0, d: BigUint::zero() },
            Eigenvalue::Sqrt(s) => Quad { p: BigInt::zero(), e: s.sign, d: &s.radicand * 4u32 },
            Eigenvalue::Surd(s) => Quad { p: s.p.clone(), e: s.branch.sign(), d: s.d.clone() },
        }
    }

    pub fn is_integer(&self) -> bool {
        self.clone().normalized().as_int().is_some()
    }

    pub fn as_int(&self) -> Option<&BigInt> {
        match self {
            Eigenvalue::Int(v) => Some(v),
            _ => None,
        }
    }

    /// Value rounded once to `f64`, from an integer square root carried to
    /// 64 extra bits.
    pub fn to_f64(&self) -> f64 {
        let q = self.quad();
        let scale = BigUint::one() << (2 * EXPANSION_BITS);
        let root = BigInt::from((&q.d * scale).sqrt());
        let num = (&q.p << EXPANSION_BITS) + signed(q.e, BigUint::one()) * root;
        let approx = num.to_f64().unwrap_or(f64::NAN);
        approx * 2f64.powi(-(EXPANSION_BITS as i32 + 1))
    }

    /// The value as `a + b√m` with `m` squarefree (m = 1 for rationals), when
    /// the radicand is small enough to factor.
    pub fn to_quadratic_parts(&self) -> Option<QuadraticParts> {
        let q = self.quad();
        let half = |x: BigInt| num_rational::BigRational::new(x, BigInt::from(2));
        if q.e == 0 || q.d.is_zero() {
            return Some(QuadraticParts { rational: half(q.p), coeff: Zero::zero(), squarefree: BigUint::one() });
        }
        let (c, m) = square_factor(&q.d)?;
        let coeff = half(signed(q.e, c));
        if m.is_one() {
            Some(QuadraticParts { rational: half(q.p) + coeff, coeff: Zero::zero(), squarefree: m })
        } else {
            Some(QuadraticParts { rational: half(q.p), coeff, squarefree: m })
        }
    }

    /// Symbolic rendering, e.g. `3`, `-√6`, `2√2`, `(5+√21)/2`, `7/2`.
    pub fn render(&self) -> String {
        self.to_string()
    }
}

/// `rational + coeff · √squarefree`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuadraticParts {
    pub rational: num_rational::BigRational,
    pub coeff: num_rational::BigRational,
    pub squarefree: BigUint,
}

impl PartialEq for Eigenvalue {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}

impl Eq for Eigenvalue {}

impl PartialOrd for Eigenvalue {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Eigenvalue {
    fn cmp(&self, other: &Self) -> Ordering {
        let (a, b) = (self.quad(), other.quad());
        // sign of (a.p - b.p) + a.e√a.d - b.e√b.d
        sign_two_roots(&(&a.p - &b.p), a.e, &a.d, b.e, &b.d).cmp(&0)
    }
}

impl From<ExactEigenvalue> for Eigenvalue {
    fn from(e: ExactEigenvalue) -> Self {
        Eigenvalue::Sqrt(e).normalized()
    }
}

impl From<SurdEigenvalue> for Eigenvalue {
    fn from(s: SurdEigenvalue) -> Self {
        Eigenvalue::Surd(s).normalized()
    }
}

impl From<i64> for Eigenvalue {
    fn from(v: i64) -> Self {
        Eigenvalue::Int(BigInt::from(v))
    }
}

/// `(p + e√d) / 2`.
struct Quad {
    p: BigInt,
    e: i8,
    d: BigUint,
}

fn signed(sign: i8, v: BigUint) -> BigInt {
    match sign.cmp(&0) {
        Ordering::Less => -BigInt::from(v),
        Ordering::Equal => BigInt::zero(),
        Ordering::Greater => BigInt::from(v),
    }
}

fn sign_of(v: &BigInt) -> i32 {
    match v.sign() {
        Sign::Minus => -1,
        Sign::NoSign => 0,
        Sign::Plus => 1,
    }
}

/// Exact sign of `a + b√u`.
fn sign_one_root(a: &BigInt, b: &BigInt, u: &BigUint) -> i32 {
    let sa = sign_of(a);
    if b.is_zero() || u.is_zero() {
        return sa;
    }
    let sb = sign_of(b);
    if sa == 0 || sa == sb {
        return sb;
    }
    // opposite signs: compare a² with b²u
    let a2 = a * a;
    let b2u = b * b * BigInt::from(u.clone());
    match a2.cmp(&b2u) {
        Ordering::Greater => sa,
        Ordering::Less => sb,
        Ordering::Equal => 0,
    }
}

/// Exact sign of `c + e1√u - e2√v` for `e1, e2 ∈ {-1, 0, 1}`.
fn sign_two_roots(c: &BigInt, e1: i8, u: &BigUint, e2: i8, v: &BigUint) -> i32 {
    let x = sign_one_root(c, &BigInt::from(e1), u);
    let y = if v.is_zero() { 0 } else { i32::from(e2) };
    if x != y {
        return (x - y).signum();
    }
    if x == 0 {
        return 0;
    }
    // Same strict sign: compare squares. X² - Y² = c² + u - v + 2 c e1 √u.
    let u_int = BigInt::from(u.clone());
    let rational = c * c + &u_int - BigInt::from(v.clone());
    let root_coeff = c * BigInt::from(2 * i32::from(e1));
    let s = sign_one_root(&rational, &root_coeff, u);
    if x > 0 {
        s
    } else {
        -s
    }
}

/// `Some(m)` when `v = m²`.
pub fn perfect_sqrt(v: &BigUint) -> Option<BigUint> {
    let m = v.sqrt();
    (&m * &m == *v).then_some(m)
}

/// Splits `r = c² m` with `m` squarefree. Returns `None` for radicands too
/// large to factor by trial division.
pub fn square_factor(r: &BigUint) -> Option<(BigUint, BigUint)> {
    if r.is_zero() {
        return Some((BigUint::zero(), BigUint::one()));
    }
    if r.bits() > FACTOR_LIMIT_BITS {
        return None;
    }
    let mut rest = r.to_u64()?;
    let mut c: u64 = 1;
    let mut m: u64 = 1;
    let mut p: u64 = 2;
    while (p as u128).pow(3) <= u128::from(rest) {
        while rest % (p * p) == 0 {
            rest /= p * p;
            c *= p;
        }
        if rest % p == 0 {
            rest /= p;
            m *= p;
        }
        p += if p == 2 { 1 } else { 2 };
    }
    // rest has at most two prime factors, all >= p
    let s = rest.sqrt();
    if s > 1 && s * s == rest {
        c *= s;
    } else {
        m *= rest;
    }
    Some((BigUint::from(c), BigUint::from(m)))
}

fn write_root(f: &mut fmt::Formatter<'_>, coeff: &BigUint, radicand: &BigUint) -> fmt::Result {
    if !coeff.is_one() {
        write!(f, "{coeff}")?;
    }
    write!(f, "√{radicand}")
}

impl fmt::Display for ExactEigenvalue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(v) = self.as_integer() {
            return write!(f, "{v}");
        }
        if self.sign < 0 {
            f.write_str("-")?;
        }
        let (c, m) = square_factor(&self.radicand).unwrap_or((BigUint::one(), self.radicand.clone()));
        write_root(f, &c, &m)
    }
}

impl fmt::Display for SurdEigenvalue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sym = self.branch.symbol();
        if let Some(m) = perfect_sqrt(&self.d) {
            let num = &self.p + signed(self.branch.sign(), m);
            return if num.is_even() { write!(f, "{}", num / 2) } else { write!(f, "{num}/2") };
        }
        let (c, m) = square_factor(&self.d).unwrap_or((BigUint::one(), self.d.clone()));
        if self.p.is_even() && (&c % 2u32).is_zero() {
            let half_p: BigInt = &self.p / 2;
            let half_c = &c / 2u32;
            if half_p.is_zero() {
                if sym == '-' {
                    f.write_str("-")?;
                }
            } else {
                write!(f, "{half_p}{sym}")?;
            }
            return write_root(f, &half_c, &m);
        }
        write!(f, "(")?;
        if !self.p.is_zero() {
            write!(f, "{}", self.p)?;
            write!(f, "{sym}")?;
        } else if sym == '-' {
            f.write_str("-")?;
        }
        write_root(f, &c, &m)?;
        write!(f, ")/2")
    }
}

impl fmt::Display for Eigenvalue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Eigenvalue::Int(v) => write!(f, "{v}"),
            Eigenvalue::Sqrt(e) => write!(f, "{e}"),
            Eigenvalue::Surd(s) => write!(f, "{s}"),
        }
    }
}

pub(crate) mod decimal {
    use serde::{de::Error, Deserialize, Deserializer, Serializer};
    use std::fmt::Display;
    use std::str::FromStr;

    pub fn serialize<T: Display, S: Serializer>(v: &T, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(v)
    }

    pub fn deserialize<'de, T: FromStr, D: Deserializer<'de>>(d: D) -> Result<T, D::Error> {
        let text = String::deserialize(d)?;
        text.parse().map_err(|_| D::Error::custom(format!("invalid decimal integer '{text}'")))
    }
}

#[derive(Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
enum EigenvalueJson {
    Int {
        #[serde(with = "decimal")]
        value: BigInt,
    },
    Sqrt {
        sign: i8,
        #[serde(with = "decimal")]
        radicand: BigUint,
    },
    Surd {
        #[serde(with = "decimal")]
        p: BigInt,
        #[serde(with = "decimal")]
        d: BigUint,
        branch: Branch,
    },
}

impl Serialize for Eigenvalue {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let json = match self.clone() {
            Eigenvalue::Int(value) => EigenvalueJson::Int { value },
            Eigenvalue::Sqrt(e) => EigenvalueJson::Sqrt { sign: e.sign, radicand: e.radicand },
            Eigenvalue::Surd(sd) => EigenvalueJson::Surd { p: sd.p, d: sd.d, branch: sd.branch },
        };
        json.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Eigenvalue {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        Ok(match EigenvalueJson::deserialize(d)? {
            EigenvalueJson::Int { value } => Eigenvalue::Int(value),
            EigenvalueJson::Sqrt { sign, radicand } => {
                if sign == 0 && !radicand.is_zero() {
                    return Err(serde::de::Error::custom("sqrt eigenvalue with nonzero radicand needs a sign"));
                }
                Eigenvalue::Sqrt(ExactEigenvalue::new(sign, radicand))
            }
            EigenvalueJson::Surd { p, d, branch } => Eigenvalue::Surd(SurdEigenvalue::new(p, d, branch)),
        })
    }
}
