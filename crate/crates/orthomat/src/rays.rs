//! Exact-arithmetic projective rays over the integers (Euclidean form) or
//! the Gaussian integers (Hermitian form with conjugation).
//!
//! Orthogonality of rays is a zero-test on inner products, so everything here
//! is exact: arbitrary-precision integers, no floating point anywhere. The
//! scalar type is abstracted by [`FormScalar`] — the ray machinery is generic
//! and the two concrete instantiations are aliased at the crate root.

use std::fmt;
use std::hash::Hash;

use num_bigint::BigInt;
use num_integer::Integer;
use serde::Serialize;

use crate::error::{Error, Result};

/// Which sesquilinear form interprets the coordinates.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum FormKind {
    /// `⟨x|y⟩ = Σ xᵢ yᵢ` over the integers.
    Euclidean,
    /// `⟨x|y⟩ = Σ xᵢ ŷᵢ` over the Gaussian integers, `ŷ` the conjugate.
    Hermitian,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct FormSpec {
    pub kind: FormKind,
    pub dimension: usize,
}

/// What to do with a ray whose inner product with itself vanishes.
///
/// Such a ray would be self-orthogonal, violating anti-reflexivity, so the
/// default is to reject it as evidence that the model left the framework.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum IsotropicPolicy {
    Reject,
    Drop,
}

/// An exact scalar with the operations ray canonicalization needs: ring
/// arithmetic, an involution, gcd, exact division and unit normalization.
pub trait FormScalar: Clone + Eq + Hash + fmt::Debug + fmt::Display {
    fn zero() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    /// The involution of the form (identity for integers, conjugation for
    /// Gaussian integers).
    fn conjugate(&self) -> Self;
    /// Greatest common divisor, normalized to the canonical associate.
    /// `gcd(0, x) = canonical associate of x`; `gcd(0, 0) = 0`.
    fn gcd(&self, rhs: &Self) -> Self;
    /// Exact division; panics if `d` does not divide `self`.
    fn div_exact(&self, d: &Self) -> Self;
    /// The unit `u` such that `u · self` is the canonical associate
    /// (positive for integers; in the half-open sector `re > 0, im ≥ 0`
    /// for Gaussian integers). `self` must be nonzero.
    fn canonicalizing_unit(&self) -> Self;
}

impl FormScalar for BigInt {
    fn zero() -> Self {
        BigInt::ZERO
    }

    fn is_zero(&self) -> bool {
        *self == BigInt::ZERO
    }

    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }

    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }

    fn conjugate(&self) -> Self {
        self.clone()
    }

    fn gcd(&self, rhs: &Self) -> Self {
        Integer::gcd(self, rhs)
    }

    fn div_exact(&self, d: &Self) -> Self {
        let (q, r) = self.div_rem(d);
        assert!(r == BigInt::ZERO, "{self} is not divisible by {d}");
        q
    }

    fn canonicalizing_unit(&self) -> Self {
        assert!(!FormScalar::is_zero(self));
        if *self < BigInt::ZERO {
            BigInt::from(-1)
        } else {
            BigInt::from(1)
        }
    }
}

/// A Gaussian integer `re + im·i`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct GaussInt {
    pub re: BigInt,
    pub im: BigInt,
}

impl GaussInt {
    pub fn new(re: impl Into<BigInt>, im: impl Into<BigInt>) -> Self {
        GaussInt {
            re: re.into(),
            im: im.into(),
        }
    }

    /// Field norm `re² + im²`.
    pub fn norm(&self) -> BigInt {
        &self.re * &self.re + &self.im * &self.im
    }

    fn sub(&self, rhs: &Self) -> Self {
        GaussInt::new(&self.re - &rhs.re, &self.im - &rhs.im)
    }

    /// Nearest-integer division: the quotient whose components round
    /// `self / d` componentwise, giving a remainder of norm < norm(d).
    fn div_round(&self, d: &Self) -> Self {
        let num = FormScalar::mul(self, &d.conjugate());
        let den = d.norm();
        GaussInt::new(round_div(&num.re, &den), round_div(&num.im, &den))
    }

    /// Multiply by the unit that lands in the sector `re > 0, im ≥ 0`.
    fn canonical_associate(&self) -> Self {
        if FormScalar::is_zero(self) {
            return self.clone();
        }
        FormScalar::mul(self, &self.canonicalizing_unit())
    }
}

/// Round `a / b` (b > 0) to the nearest integer, halves away from zero.
fn round_div(a: &BigInt, b: &BigInt) -> BigInt {
    debug_assert!(*b > BigInt::ZERO);
    let two_a: BigInt = a * 2;
    let two_b: BigInt = b * 2;
    if two_a >= BigInt::ZERO {
        Integer::div_floor(&(two_a + b), &two_b)
    } else {
        -Integer::div_floor(&(-two_a + b), &two_b)
    }
}

impl FormScalar for GaussInt {
    fn zero() -> Self {
        GaussInt::new(0, 0)
    }

    fn is_zero(&self) -> bool {
        self.re == BigInt::ZERO && self.im == BigInt::ZERO
    }

    fn add(&self, rhs: &Self) -> Self {
        GaussInt::new(&self.re + &rhs.re, &self.im + &rhs.im)
    }

    fn mul(&self, rhs: &Self) -> Self {
        GaussInt::new(
            &self.re * &rhs.re - &self.im * &rhs.im,
            &self.re * &rhs.im + &self.im * &rhs.re,
        )
    }

    fn conjugate(&self) -> Self {
        GaussInt::new(self.re.clone(), -&self.im)
    }

    fn gcd(&self, rhs: &Self) -> Self {
        let mut a = self.clone();
        let mut b = rhs.clone();
        while !FormScalar::is_zero(&b) {
            let q = a.div_round(&b);
            let r = a.sub(&FormScalar::mul(&q, &b));
            a = b;
            b = r;
        }
        a.canonical_associate()
    }

    fn div_exact(&self, d: &Self) -> Self {
        let num = FormScalar::mul(self, &d.conjugate());
        let den = d.norm();
        GaussInt::new(num.re.div_exact(&den), num.im.div_exact(&den))
    }

    fn canonicalizing_unit(&self) -> Self {
        assert!(!FormScalar::is_zero(self));
        // The four associates are rotations by i; exactly one lies in the
        // half-open sector re > 0, im ≥ 0.
        let one = GaussInt::new(1, 0);
        let i = GaussInt::new(0, 1);
        let mut unit = one.clone();
        for _ in 0..4 {
            let candidate = FormScalar::mul(self, &unit);
            if candidate.re > BigInt::ZERO && candidate.im >= BigInt::ZERO {
                return unit;
            }
            unit = FormScalar::mul(&unit, &i);
        }
        unreachable!("a nonzero Gaussian integer has an associate in the sector");
    }
}

impl fmt::Display for GaussInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if FormScalar::is_zero(self) {
            return write!(f, "0");
        }
        if self.im == BigInt::ZERO {
            return write!(f, "{}", self.re);
        }
        let imag = |f: &mut fmt::Formatter<'_>, im: &BigInt, lead_sign: bool| {
            let one = BigInt::from(1);
            let minus_one = BigInt::from(-1);
            if *im == one {
                write!(f, "{}i", if lead_sign { "+" } else { "" })
            } else if *im == minus_one {
                write!(f, "-i")
            } else if *im > BigInt::ZERO && lead_sign {
                write!(f, "+{}i", im)
            } else {
                write!(f, "{}i", im)
            }
        };
        if self.re == BigInt::ZERO {
            imag(f, &self.im, false)
        } else {
            write!(f, "{}", self.re)?;
            imag(f, &self.im, true)
        }
    }
}

impl fmt::Debug for GaussInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// A projective ray in canonical form: content divided out, leading
/// coefficient unit-normalized. Equal rays compare equal coordinatewise.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Ray<S: FormScalar> {
    coords: Vec<S>,
}

impl<S: FormScalar> Ray<S> {
    /// Canonicalize a nonzero vector into its ray representative; `None` for
    /// the zero vector.
    pub fn new(coords: Vec<S>) -> Option<Self> {
        let mut content = S::zero();
        for c in &coords {
            if !c.is_zero() {
                content = if content.is_zero() {
                    c.gcd(&S::zero())
                } else {
                    content.gcd(c)
                };
            }
        }
        if content.is_zero() {
            return None;
        }
        let mut coords: Vec<S> = coords.iter().map(|c| c.div_exact(&content)).collect();
        let unit = coords
            .iter()
            .find(|c| !c.is_zero())
            .expect("nonzero vector")
            .canonicalizing_unit();
        for c in &mut coords {
            *c = c.mul(&unit);
        }
        Some(Ray { coords })
    }

    pub fn coords(&self) -> &[S] {
        &self.coords
    }

    pub fn dimension(&self) -> usize {
        self.coords.len()
    }
}

impl<S: FormScalar> fmt::Display for Ray<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, c) in self.coords.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", c)?;
        }
        write!(f, ")")
    }
}

impl<S: FormScalar> fmt::Debug for Ray<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// `⟨x|y⟩ = Σ xᵢ · conj(yᵢ)`; linear in the first argument.
pub fn inner<S: FormScalar>(x: &[S], y: &[S]) -> S {
    debug_assert_eq!(x.len(), y.len());
    let mut acc = S::zero();
    for (a, b) in x.iter().zip(y) {
        acc = acc.add(&a.mul(&b.conjugate()));
    }
    acc
}

/// Parse one vector file: one vector per line, whitespace-separated entries,
/// blank lines ignored. Entries are integers or Gaussian integers written
/// `a+bi` (also `i`, `-i`, `3i`, `1-2i`).
pub fn parse_vector_file(text: &str) -> Result<Vec<Vec<(i64, i64)>>> {
    let mut out = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        let mut vector = Vec::new();
        for token in line.split_whitespace() {
            vector.push(parse_entry(token).map_err(|e| {
                Error::Parse(format!("line {}: {}", lineno + 1, e))
            })?);
        }
        out.push(vector);
    }
    Ok(out)
}

/// Parse a single scalar entry into `(re, im)`.
pub fn parse_entry(token: &str) -> std::result::Result<(i64, i64), String> {
    let bad = || format!("invalid entry {:?}", token);
    if let Some(body) = token.strip_suffix('i') {
        // Find a sign separating real and imaginary parts (not at position 0).
        let split = body
            .char_indices()
            .skip(1)
            .find(|&(_, c)| c == '+' || c == '-')
            .map(|(k, _)| k);
        let (re_str, im_str) = match split {
            Some(k) => (&body[..k], &body[k..]),
            None => ("", body),
        };
        let re: i64 = if re_str.is_empty() {
            0
        } else {
            re_str.parse().map_err(|_| bad())?
        };
        let im: i64 = match im_str {
            "" | "+" => 1,
            "-" => -1,
            s => s.parse().map_err(|_| bad())?,
        };
        Ok((re, im))
    } else {
        Ok((token.parse().map_err(|_| bad())?, 0))
    }
}
