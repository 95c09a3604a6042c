//! Truncated graded coefficient rings.
//!
//! Chern classes of formal bundles live in any [`GradedRing`]. Three instances
//! ship with the crate: the Schubert ring of a Grassmannian
//! ([`crate::schubert::GrassmannContext`]), the one-generator ring
//! [`TruncatedLineRing`] used for projective spaces and Picard-rank-one
//! threefolds, and [`WeightedPolyRing`], a free polynomial ring on graded
//! generators used for symbolic identities.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub trait GradedRing: Clone + PartialEq + fmt::Debug + Send + Sync {
    type Elem: Clone + PartialEq + fmt::Debug + Send + Sync;

    /// Products of total degree above this vanish.
    fn truncation(&self) -> usize;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn scale(&self, a: &Self::Elem, c: &BigInt) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;

    /// True when `a` is zero or homogeneous of the given degree.
    fn is_homogeneous_of(&self, a: &Self::Elem, degree: usize) -> bool;

    fn neg(&self, a: &Self::Elem) -> Self::Elem {
        self.scale(a, &-BigInt::one())
    }

    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.add(a, &self.neg(b))
    }

    fn pow(&self, a: &Self::Elem, e: usize) -> Self::Elem {
        let mut acc = self.one();
        for _ in 0..e {
            acc = self.mul(&acc, a);
        }
        acc
    }

    fn constant(&self, c: &BigInt) -> Self::Elem {
        self.scale(&self.one(), c)
    }
}

/// `Z[h]/(h^{top+1})` with a declared intersection number for `h^top`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TruncatedLineRing {
    top: usize,
    top_intersection: BigInt,
}

/// Element of a [`TruncatedLineRing`]: coefficients of `h^0 .. h^top`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LineClass(Vec<BigInt>);

impl TruncatedLineRing {
    pub fn new(top: usize, top_intersection: impl Into<BigInt>) -> Self {
        TruncatedLineRing { top, top_intersection: top_intersection.into() }
    }

    /// Ring of `P^n`: `h^n` is a point.
    pub fn projective_space(n: usize) -> Self {
        Self::new(n, 1)
    }

    pub fn top(&self) -> usize {
        self.top
    }

    pub fn top_intersection(&self) -> &BigInt {
        &self.top_intersection
    }

    /// `c * h^degree`, zero past the truncation.
    pub fn monomial(&self, c: impl Into<BigInt>, degree: usize) -> LineClass {
        let mut v = vec![BigInt::zero(); self.top + 1];
        if degree <= self.top {
            v[degree] = c.into();
        }
        LineClass(v)
    }

    pub fn h(&self) -> LineClass {
        self.monomial(1, 1)
    }

    pub fn coeff(&self, a: &LineClass, degree: usize) -> BigInt {
        a.0.get(degree).cloned().unwrap_or_default()
    }

    /// Degree of the top-dimensional part.
    pub fn integrate(&self, a: &LineClass) -> BigInt {
        &a.0[self.top] * &self.top_intersection
    }
}

impl LineClass {
    pub fn coeffs(&self) -> &[BigInt] {
        &self.0
    }
}

impl fmt::Display for LineClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_terms(
            f,
            self.0.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(d, c)| {
                let m = match d {
                    0 => String::new(),
                    1 => "h".to_string(),
                    _ => format!("h^{d}"),
                };
                (c.clone(), m)
            }),
        )
    }
}

impl GradedRing for TruncatedLineRing {
    type Elem = LineClass;

    fn truncation(&self) -> usize {
        self.top
    }

    fn zero(&self) -> LineClass {
        LineClass(vec![BigInt::zero(); self.top + 1])
    }

    fn one(&self) -> LineClass {
        self.monomial(1, 0)
    }

    fn add(&self, a: &LineClass, b: &LineClass) -> LineClass {
        LineClass(a.0.iter().zip(&b.0).map(|(x, y)| x + y).collect())
    }

    fn mul(&self, a: &LineClass, b: &LineClass) -> LineClass {
        let mut out = self.zero();
        for (i, x) in a.0.iter().enumerate().filter(|(_, x)| !x.is_zero()) {
            for (j, y) in b.0.iter().enumerate().take(self.top + 1 - i) {
                out.0[i + j] += x * y;
            }
        }
        out
    }

    fn scale(&self, a: &LineClass, c: &BigInt) -> LineClass {
        LineClass(a.0.iter().map(|x| x * c).collect())
    }

    fn is_zero(&self, a: &LineClass) -> bool {
        a.0.iter().all(Zero::is_zero)
    }

    fn is_homogeneous_of(&self, a: &LineClass, degree: usize) -> bool {
        a.0.iter().enumerate().all(|(d, c)| d == degree || c.is_zero())
    }
}

/// Free commutative polynomial ring over Z on generators of prescribed
/// positive degrees, truncated above a total degree.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct WeightedPolyRing {
    degrees: Vec<usize>,
    truncation: usize,
}

/// Element of a [`WeightedPolyRing`], keyed by exponent vectors.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Poly {
    terms: BTreeMap<Vec<u32>, BigInt>,
}

impl WeightedPolyRing {
    pub fn new(degrees: Vec<usize>, truncation: usize) -> Result<Self> {
        if degrees.contains(&0) {
            return Err(Error::InvalidArgument("generator degrees must be positive".into()));
        }
        Ok(WeightedPolyRing { degrees, truncation })
    }

    /// Generators all of degree one.
    pub fn linear(vars: usize, truncation: usize) -> Self {
        WeightedPolyRing { degrees: vec![1; vars], truncation }
    }

    pub fn num_generators(&self) -> usize {
        self.degrees.len()
    }

    pub fn generator(&self, i: usize) -> Poly {
        let mut e = vec![0; self.degrees.len()];
        e[i] = 1;
        self.monomial(e, BigInt::one())
    }

    pub fn monomial(&self, exponents: Vec<u32>, c: BigInt) -> Poly {
        let mut terms = BTreeMap::new();
        if !c.is_zero() && self.degree_of(&exponents) <= self.truncation {
            terms.insert(exponents, c);
        }
        Poly { terms }
    }

    pub fn degree_of(&self, exponents: &[u32]) -> usize {
        exponents.iter().zip(&self.degrees).map(|(&e, &d)| e as usize * d).sum()
    }

    /// Part of `a` of the given degree.
    pub fn homogeneous_part(&self, a: &Poly, degree: usize) -> Poly {
        Poly {
            terms: a
                .terms
                .iter()
                .filter(|(e, _)| self.degree_of(e) == degree)
                .map(|(e, c)| (e.clone(), c.clone()))
                .collect(),
        }
    }
}

impl Poly {
    pub fn terms(&self) -> &BTreeMap<Vec<u32>, BigInt> {
        &self.terms
    }

    pub fn coeff(&self, exponents: &[u32]) -> BigInt {
        self.terms.get(exponents).cloned().unwrap_or_default()
    }

    /// Leading term in lexicographic order of exponent vectors.
    pub fn leading(&self) -> Option<(&Vec<u32>, &BigInt)> {
        self.terms.iter().next_back()
    }

    pub(crate) fn add_term(&mut self, exponents: Vec<u32>, c: BigInt) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(exponents) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_terms(
            f,
            self.terms.iter().rev().map(|(e, c)| {
                let m = e
                    .iter()
                    .enumerate()
                    .filter(|(_, &p)| p > 0)
                    .map(|(i, &p)| if p == 1 { format!("x{}", i + 1) } else { format!("x{}^{p}", i + 1) })
                    .collect::<Vec<_>>()
                    .join("*");
                (c.clone(), m)
            }),
        )
    }
}

impl GradedRing for WeightedPolyRing {
    type Elem = Poly;

    fn truncation(&self) -> usize {
        self.truncation
    }

    fn zero(&self) -> Poly {
        Poly::default()
    }

    fn one(&self) -> Poly {
        self.monomial(vec![0; self.degrees.len()], BigInt::one())
    }

    fn add(&self, a: &Poly, b: &Poly) -> Poly {
        let mut out = a.clone();
        for (e, c) in &b.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    fn mul(&self, a: &Poly, b: &Poly) -> Poly {
        let mut acc: BTreeMap<Vec<u32>, BigInt> = BTreeMap::new();
        for (ea, ca) in &a.terms {
            let da = self.degree_of(ea);
            for (eb, cb) in &b.terms {
                if da + self.degree_of(eb) > self.truncation {
                    continue;
                }
                let e: Vec<u32> = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
                *acc.entry(e).or_default() += ca * cb;
            }
        }
        acc.retain(|_, c| !c.is_zero());
        Poly { terms: acc }
    }

    fn scale(&self, a: &Poly, c: &BigInt) -> Poly {
        if c.is_zero() {
            return Poly::default();
        }
        Poly { terms: a.terms.iter().map(|(e, x)| (e.clone(), x * c)).collect() }
    }

    fn is_zero(&self, a: &Poly) -> bool {
        a.terms.is_empty()
    }

    fn is_homogeneous_of(&self, a: &Poly, degree: usize) -> bool {
        a.terms.keys().all(|e| self.degree_of(e) == degree)
    }
}

/// Writes `c1*m1 + c2*m2 - ...`, with an empty monomial meaning a constant.
pub(crate) fn write_terms(
    f: &mut fmt::Formatter<'_>,
    terms: impl Iterator<Item = (BigInt, String)>,
) -> fmt::Result {
    let mut first = true;
    for (c, m) in terms {
        let neg = c.is_negative();
        let abs = c.abs();
        if first {
            if neg {
                write!(f, "-")?;
            }
        } else {
            write!(f, " {} ", if neg { '-' } else { '+' })?;
        }
        first = false;
        if m.is_empty() {
            write!(f, "{abs}")?;
        } else if abs.is_one() {
            write!(f, "{m}")?;
        } else {
            write!(f, "{abs}*{m}")?;
        }
    }
    if first {
        write!(f, "0")?;
    }
    Ok(())
}
