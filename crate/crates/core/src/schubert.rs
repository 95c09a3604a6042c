//! Chow ring of a Grassmannian in the Schubert basis.
//!
//! Products are computed by expanding one factor with the Giambelli
//! determinant into special classes `s[a]` and then applying the Pieri rule
//! one special class at a time. Partitions outside the `k x (n-k)` box are the
//! zero class and are dropped as soon as they appear.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::chern::FormalBundle;
use crate::error::{Error, Result};
use crate::par::{self, Strategy};
use crate::partition::Partition;
use crate::ring::{write_terms, GradedRing};

/// The Grassmannian `G(k, n)` of `k`-dimensional subspaces of an
/// `n`-dimensional space (linear convention).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct GrassmannContext {
    k: usize,
    n: usize,
}

impl GrassmannContext {
    pub fn new(k: usize, n: usize) -> Result<Self> {
        if k == 0 || k >= n {
            return Err(Error::InvalidGrassmannian { k, n });
        }
        Ok(GrassmannContext { k, n })
    }

    /// Projective convention: `G(a, b)` is the space of `a`-planes in `P^b`,
    /// so lines in `P^4` are `G(1, 4)`.
    pub fn from_projective(a: usize, b: usize) -> Result<Self> {
        Self::new(a + 1, b + 1)
    }

    pub fn to_projective(self) -> (usize, usize) {
        (self.k - 1, self.n - 1)
    }

    pub fn k(self) -> usize {
        self.k
    }

    pub fn n(self) -> usize {
        self.n
    }

    pub fn rows(self) -> usize {
        self.k
    }

    pub fn cols(self) -> usize {
        self.n - self.k
    }

    pub fn top_degree(self) -> usize {
        self.k * (self.n - self.k)
    }

    pub fn point_class(self) -> Partition {
        Partition::rectangle(self.rows(), self.cols())
    }

    pub fn basis(self) -> Vec<Partition> {
        Partition::in_box(self.rows(), self.cols())
    }
}

impl fmt::Display for GrassmannContext {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "G({},{})", self.k, self.n)
    }
}

/// Integer combination of Schubert classes on one Grassmannian.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ChowElement {
    ctx: GrassmannContext,
    terms: BTreeMap<Partition, BigInt>,
}

impl ChowElement {
    pub fn zero(ctx: GrassmannContext) -> Self {
        ChowElement { ctx, terms: BTreeMap::new() }
    }

    pub fn one(ctx: GrassmannContext) -> Self {
        Self::zero(ctx).with_term(Partition::empty(), BigInt::one())
    }

    /// `s[lambda]`; rejects partitions outside the box.
    pub fn schubert(ctx: GrassmannContext, lambda: Partition) -> Result<Self> {
        if !lambda.fits(ctx.rows(), ctx.cols()) {
            return Err(Error::OutOfBox(lambda, ctx.rows(), ctx.cols()));
        }
        Ok(Self::zero(ctx).with_term(lambda, BigInt::one()))
    }

    /// Special class `s[a]`, zero when `a` exceeds the box width.
    pub fn special(ctx: GrassmannContext, a: usize) -> Self {
        let mut out = Self::zero(ctx);
        if a <= ctx.cols() {
            out.add_term(Partition::row(a), BigInt::one());
        }
        out
    }

    pub fn from_terms(
        ctx: GrassmannContext,
        terms: impl IntoIterator<Item = (Partition, BigInt)>,
    ) -> Result<Self> {
        let mut out = Self::zero(ctx);
        for (p, c) in terms {
            if !p.fits(ctx.rows(), ctx.cols()) {
                return Err(Error::OutOfBox(p, ctx.rows(), ctx.cols()));
            }
            out.add_term(p, c);
        }
        Ok(out)
    }

    fn with_term(mut self, p: Partition, c: BigInt) -> Self {
        self.add_term(p, c);
        self
    }

    /// Adds `c * s[p]`. Out-of-box partitions are dropped.
    fn add_term(&mut self, p: Partition, c: BigInt) {
        use std::collections::btree_map::Entry;
        if c.is_zero() || !p.fits(self.ctx.rows(), self.ctx.cols()) {
            return;
        }
        match self.terms.entry(p) {
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

    pub fn context(&self) -> GrassmannContext {
        self.ctx
    }

    pub fn terms(&self) -> &BTreeMap<Partition, BigInt> {
        &self.terms
    }

    pub fn coeff(&self, p: &Partition) -> BigInt {
        self.terms.get(p).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// The common weight of all terms, or `None` for zero and mixed elements.
    pub fn homogeneous_degree(&self) -> Option<usize> {
        let mut weights = self.terms.keys().map(Partition::weight);
        let first = weights.next()?;
        weights.all(|w| w == first).then_some(first)
    }

    pub fn add(&self, other: &ChowElement) -> Result<ChowElement> {
        check_ctx(self.ctx, other.ctx)?;
        let mut out = self.clone();
        for (p, c) in &other.terms {
            out.add_term(p.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn scale(&self, c: &BigInt) -> ChowElement {
        let mut out = Self::zero(self.ctx);
        for (p, x) in &self.terms {
            out.add_term(p.clone(), x * c);
        }
        out
    }
}

impl fmt::Display for ChowElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut ordered: Vec<_> = self.terms.iter().collect();
        ordered.sort_by(|(a, _), (b, _)| a.weight().cmp(&b.weight()).then_with(|| b.cmp(a)));
        write_terms(
            f,
            ordered.into_iter().map(|(p, c)| {
                let m = if p.is_empty() { String::new() } else { format!("s{p}") };
                (c.clone(), m)
            }),
        )
    }
}

fn check_ctx(a: GrassmannContext, b: GrassmannContext) -> Result<()> {
    if a != b {
        return Err(Error::RingMismatch);
    }
    Ok(())
}

/// Partitions `mu` with `mu / lambda` a horizontal strip of size `a` inside
/// the `rows x cols` box.
pub fn horizontal_strips(lambda: &Partition, a: usize, rows: usize, cols: usize) -> Vec<Partition> {
    fn rec(
        i: usize,
        remaining: usize,
        lambda: &Partition,
        rows: usize,
        cols: usize,
        cur: &mut Vec<usize>,
        out: &mut Vec<Partition>,
    ) {
        if remaining == 0 {
            let mut parts = cur.clone();
            parts.extend((i..rows).map(|j| lambda.part(j)));
            out.push(Partition::from_sorted(parts));
            return;
        }
        if i == rows {
            return;
        }
        let lo = lambda.part(i);
        let hi = if i == 0 { cols } else { lambda.part(i - 1) };
        for mu_i in lo..=hi.min(lo + remaining) {
            cur.push(mu_i);
            rec(i + 1, remaining - (mu_i - lo), lambda, rows, cols, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if lambda.fits(rows, cols) {
        rec(0, a, lambda, rows, cols, &mut Vec::with_capacity(rows), &mut out);
    }
    out
}

/// `x * s[a]` by the Pieri rule. `a = 0` is the identity.
pub fn pieri(x: &ChowElement, a: usize) -> ChowElement {
    let ctx = x.ctx;
    let mut out = ChowElement::zero(ctx);
    for (lambda, c) in &x.terms {
        for mu in horizontal_strips(lambda, a, ctx.rows(), ctx.cols()) {
            out.add_term(mu, c.clone());
        }
    }
    out
}

/// `s[lambda]` written as an integer polynomial in the special classes:
/// each key lists the (nonzero) special indices of one monomial, sorted
/// decreasingly.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GiambelliExpansion {
    pub lambda: Partition,
    pub monomials: BTreeMap<Vec<usize>, BigInt>,
}

impl GiambelliExpansion {
    /// Expands `det(s[lambda_i + j - i])`, an `l x l` determinant where `l` is
    /// the length of `lambda`.
    pub fn of(lambda: &Partition) -> Self {
        let l = lambda.len();
        let mut monomials: BTreeMap<Vec<usize>, BigInt> = BTreeMap::new();
        let mut perm: Vec<usize> = (0..l).collect();
        permutations(&mut perm, 0, true, &mut |perm, even| {
            let mut idx = Vec::with_capacity(l);
            for (i, &j) in perm.iter().enumerate() {
                let a = lambda.part(i) as isize + j as isize - i as isize;
                if a < 0 {
                    return;
                }
                if a > 0 {
                    idx.push(a as usize);
                }
            }
            idx.sort_unstable_by(|a, b| b.cmp(a));
            *monomials.entry(idx).or_default() += if even { 1 } else { -1 };
        });
        monomials.retain(|_, c| !c.is_zero());
        GiambelliExpansion { lambda: lambda.clone(), monomials }
    }

    /// Applies the expansion to `x`, i.e. computes `x * s[lambda]`.
    pub fn apply(&self, x: &ChowElement) -> ChowElement {
        let mut out = ChowElement::zero(x.ctx);
        for (idx, c) in &self.monomials {
            let term = idx.iter().fold(x.clone(), |acc, &a| pieri(&acc, a));
            for (p, v) in term.terms {
                out.add_term(p, v * c);
            }
        }
        out
    }
}

impl fmt::Display for GiambelliExpansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut ordered: Vec<_> = self.monomials.iter().collect();
        ordered.sort_by(|(a, _), (b, _)| b.len().cmp(&a.len()).then_with(|| b.cmp(a)));
        write_terms(
            f,
            ordered.into_iter().map(|(idx, c)| {
                let m = idx.iter().map(|a| format!("s[{a}]")).collect::<Vec<_>>().join("*");
                (c.clone(), m)
            }),
        )
    }
}

fn permutations(v: &mut [usize], start: usize, even: bool, visit: &mut impl FnMut(&[usize], bool)) {
    if start == v.len() {
        visit(v, even);
        return;
    }
    for i in start..v.len() {
        v.swap(start, i);
        permutations(v, start + 1, if i == start { even } else { !even }, visit);
        v.swap(start, i);
    }
}

/// `s[lambda]` evaluated through its Giambelli determinant.
pub fn giambelli(ctx: GrassmannContext, lambda: &Partition) -> Result<ChowElement> {
    if !lambda.fits(ctx.rows(), ctx.cols()) {
        return Err(Error::OutOfBox(lambda.clone(), ctx.rows(), ctx.cols()));
    }
    Ok(GiambelliExpansion::of(lambda).apply(&ChowElement::one(ctx)))
}

pub fn multiply(x: &ChowElement, y: &ChowElement) -> Result<ChowElement> {
    multiply_with(Strategy::default(), x, y)
}

pub fn multiply_with(strategy: Strategy, x: &ChowElement, y: &ChowElement) -> Result<ChowElement> {
    check_ctx(x.ctx, y.ctx)?;
    let jobs: Vec<(&Partition, &BigInt)> = y.terms.iter().collect();
    let partial = par::map(strategy, &jobs, |(mu, c)| GiambelliExpansion::of(mu).apply(x).scale(c));
    let mut out = ChowElement::zero(x.ctx);
    for p in partial {
        for (lambda, c) in p.terms {
            out.add_term(lambda, c);
        }
    }
    Ok(out)
}

/// Coefficient of the point class. Zero integrates to zero; any other term
/// below top degree is an error.
pub fn integrate(x: &ChowElement) -> Result<BigInt> {
    let point = x.ctx.point_class();
    if x.terms.keys().any(|p| *p != point) {
        return Err(Error::NotTopDegree { expected: x.ctx.top_degree() });
    }
    Ok(x.coeff(&point))
}

/// One entry of the intersection pairing between classes of complementary
/// codimension.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PairingEntry {
    pub left: Partition,
    pub right: Partition,
    pub value: BigInt,
}

/// `integrate(s[lambda] * s[mu])` for every ordered pair of basis classes
/// with complementary weights.
pub fn pairing_table(ctx: GrassmannContext) -> Vec<PairingEntry> {
    pairing_table_with(Strategy::default(), ctx)
}

pub fn pairing_table_with(strategy: Strategy, ctx: GrassmannContext) -> Vec<PairingEntry> {
    let basis = ctx.basis();
    let pairs: Vec<(Partition, Partition)> = basis
        .iter()
        .flat_map(|l| {
            basis
                .iter()
                .filter(move |m| l.weight() + m.weight() == ctx.top_degree())
                .map(move |m| (l.clone(), m.clone()))
        })
        .collect();
    par::map(strategy, &pairs, |(l, m)| {
        let a = ChowElement::schubert(ctx, l.clone()).expect("basis fits");
        let b = ChowElement::schubert(ctx, m.clone()).expect("basis fits");
        let value = integrate(&multiply_with(Strategy::Sequential, &a, &b).expect("same context"))
            .expect("complementary weights");
        PairingEntry { left: l.clone(), right: m.clone(), value }
    })
}

/// Dual of the tautological subbundle: rank `k`, `c_i = s[1^i]`.
pub fn tautological_dual(ctx: GrassmannContext) -> FormalBundle<GrassmannContext> {
    let chern = (1..=ctx.k().min(ctx.top_degree()))
        .map(|i| ChowElement::schubert(ctx, Partition::column(i)).unwrap_or_else(|_| ChowElement::zero(ctx)))
        .collect();
    FormalBundle::new(ctx, ctx.k(), chern).expect("tautological classes are homogeneous")
}

impl GradedRing for GrassmannContext {
    type Elem = ChowElement;

    fn truncation(&self) -> usize {
        self.top_degree()
    }

    fn zero(&self) -> ChowElement {
        ChowElement::zero(*self)
    }

    fn one(&self) -> ChowElement {
        ChowElement::one(*self)
    }

    fn add(&self, a: &ChowElement, b: &ChowElement) -> ChowElement {
        a.add(b).expect("elements of this Grassmannian")
    }

    fn mul(&self, a: &ChowElement, b: &ChowElement) -> ChowElement {
        multiply_with(Strategy::Sequential, a, b).expect("elements of this Grassmannian")
    }

    fn scale(&self, a: &ChowElement, c: &BigInt) -> ChowElement {
        a.scale(c)
    }

    fn is_zero(&self, a: &ChowElement) -> bool {
        a.is_zero()
    }

    fn is_homogeneous_of(&self, a: &ChowElement, degree: usize) -> bool {
        a.terms.keys().all(|p| p.weight() == degree)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn s(ctx: GrassmannContext, parts: &[usize]) -> ChowElement {
        ChowElement::schubert(ctx, p(parts)).unwrap()
    }

    fn g25() -> GrassmannContext {
        GrassmannContext::new(2, 5).unwrap()
    }

    #[test]
    fn context_conventions() {
        assert!(GrassmannContext::new(0, 3).is_err());
        assert!(GrassmannContext::new(3, 3).is_err());
        let ctx = GrassmannContext::from_projective(1, 4).unwrap();
        assert_eq!((ctx.k(), ctx.n()), (2, 5));
        assert_eq!(ctx.to_projective(), (1, 4));
        assert_eq!(ctx.top_degree(), 6);
    }

    #[test]
    fn pieri_examples() {
        let ctx = g25();
        let sq = pieri(&s(ctx, &[1]), 1);
        assert_eq!(sq, s(ctx, &[2]).add(&s(ctx, &[1, 1])).unwrap());
        assert!(pieri(&s(ctx, &[2, 2]), 2).is_zero());
        assert!(pieri(&ChowElement::zero(ctx), 3).is_zero());
        assert_eq!(pieri(&s(ctx, &[2, 1]), 0), s(ctx, &[2, 1]));
    }

    #[test]
    fn giambelli_examples() {
        let ctx = g25();
        assert_eq!(giambelli(ctx, &p(&[3])).unwrap(), s(ctx, &[3]));
        let e = GiambelliExpansion::of(&p(&[1, 1]));
        assert_eq!(e.to_string(), "s[1]*s[1] - s[2]");
        assert_eq!(giambelli(ctx, &p(&[1, 1])).unwrap(), s(ctx, &[1, 1]));
        // det [[s2, s3], [s0, s1]] = s2 s1 - s3
        let e = GiambelliExpansion::of(&p(&[2, 1]));
        assert_eq!(e.to_string(), "s[2]*s[1] - s[3]");
        assert_eq!(giambelli(ctx, &p(&[2, 1])).unwrap(), s(ctx, &[2, 1]));
        assert!(giambelli(ctx, &p(&[4])).is_err());
        assert!(giambelli(ctx, &p(&[1, 1, 1])).is_err());
    }

    #[test]
    fn multiply_examples() {
        let ctx = g25();
        let c1 = s(ctx, &[1]);
        assert_eq!(multiply(&c1, &c1).unwrap().to_string(), "s[2] + s[1,1]");
        assert_eq!(multiply(&s(ctx, &[1, 1]), &s(ctx, &[2])).unwrap(), s(ctx, &[3, 1]));
        let x = s(ctx, &[2, 1]).add(&s(ctx, &[3]).scale(&BigInt::from(-4))).unwrap();
        assert_eq!(multiply(&ChowElement::one(ctx), &x).unwrap(), x);
        let other = GrassmannContext::new(2, 4).unwrap();
        assert_eq!(multiply(&c1, &ChowElement::one(other)), Err(Error::RingMismatch));
    }

    #[test]
    fn integrate_examples() {
        let ctx = g25();
        let c2 = s(ctx, &[1, 1]);
        let s2 = s(ctx, &[2]);
        let prod = multiply(&multiply(&c2, &s2).unwrap(), &s2).unwrap();
        assert_eq!(integrate(&prod).unwrap(), BigInt::from(1));
        let c1 = s(ctx, &[1]);
        let c1_6 = (0..5).fold(c1.clone(), |acc, _| multiply(&acc, &c1).unwrap());
        assert_eq!(integrate(&c1_6).unwrap(), BigInt::from(5));
        assert_eq!(integrate(&s(ctx, &[3, 3])).unwrap(), BigInt::from(1));
        assert_eq!(integrate(&ChowElement::zero(ctx)).unwrap(), BigInt::from(0));
        assert!(matches!(integrate(&c1), Err(Error::NotTopDegree { expected: 6 })));
    }

    #[test]
    fn out_of_box_is_rejected_or_dropped() {
        let ctx = g25();
        assert!(ChowElement::schubert(ctx, p(&[4])).is_err());
        assert!(ChowElement::special(ctx, 4).is_zero());
    }

    #[test]
    fn tautological_dual_classes() {
        let ctx = g25();
        let u = tautological_dual(ctx);
        assert_eq!(u.rank(), 2);
        assert_eq!(u.chern_class(1).unwrap(), s(ctx, &[1]));
        assert_eq!(u.chern_class(2).unwrap(), s(ctx, &[1, 1]));
        assert_eq!(tautological_dual(GrassmannContext::new(2, 4).unwrap()).rank(), 2);
    }

    #[test]
    fn display_forms() {
        let ctx = g25();
        let x = s(ctx, &[2, 2]).scale(&BigInt::from(27)).add(&s(ctx, &[3, 1]).scale(&BigInt::from(18))).unwrap();
        assert_eq!(x.to_string(), "18*s[3,1] + 27*s[2,2]");
        assert_eq!(ChowElement::zero(ctx).to_string(), "0");
        assert_eq!(ChowElement::one(ctx).scale(&BigInt::from(-3)).to_string(), "-3");
    }
}
