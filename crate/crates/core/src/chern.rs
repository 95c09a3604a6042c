//! Formal bundles and the splitting principle.
//!
//! A [`FormalBundle`] is a rank together with Chern classes in some
//! [`GradedRing`]. Symmetric and exterior powers go through universal
//! formulas: the total Chern class of the functor applied to formal roots
//! `x_1..x_r` is expanded, each homogeneous part is rewritten in elementary
//! symmetric polynomials, and the result is evaluated at the bundle's
//! Chern classes. Formulas are cached per `(functor, rank, k, truncation)`.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::BigInt;
use num_integer::binomial;
use num_traits::One;

use crate::error::{Error, Result};
use crate::ring::{GradedRing, Poly, WeightedPolyRing};

#[derive(Debug, Clone, PartialEq)]
pub struct FormalBundle<R: GradedRing> {
    ring: R,
    rank: usize,
    /// `c_1 .. c_{min(rank, truncation)}`
    chern: Vec<R::Elem>,
}

impl<R: GradedRing> FormalBundle<R> {
    /// Builds a bundle from `c_1, c_2, ...`; missing classes are zero.
    pub fn new(ring: R, rank: usize, chern: Vec<R::Elem>) -> Result<Self> {
        let len = rank.min(ring.truncation());
        for (i, c) in chern.iter().enumerate() {
            if !ring.is_homogeneous_of(c, i + 1) {
                return Err(Error::NotHomogeneous { expected: i + 1 });
            }
            if i >= len && !ring.is_zero(c) {
                return Err(Error::IndexOutOfRange { index: i + 1, max: len });
            }
        }
        let mut chern: Vec<_> = chern.into_iter().take(len).collect();
        while chern.len() < len {
            chern.push(ring.zero());
        }
        Ok(FormalBundle { ring, rank, chern })
    }

    pub fn trivial(ring: R, rank: usize) -> Self {
        let len = rank.min(ring.truncation());
        let chern = vec![ring.zero(); len];
        FormalBundle { ring, rank, chern }
    }

    /// Line bundle with first Chern class `c1`.
    pub fn line(ring: R, c1: R::Elem) -> Result<Self> {
        Self::new(ring, 1, vec![c1])
    }

    /// Direct sum of line bundles with the given first Chern classes.
    pub fn split(ring: R, classes: &[R::Elem]) -> Result<Self> {
        let mut acc = Self::trivial(ring.clone(), 0);
        for c in classes {
            acc = whitney_sum(&acc, &Self::line(ring.clone(), c.clone())?)?;
        }
        Ok(acc)
    }

    pub fn ring(&self) -> &R {
        &self.ring
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// `c_1 .. c_{min(rank, truncation)}`.
    pub fn chern_classes(&self) -> &[R::Elem] {
        &self.chern
    }

    /// `c_i`, with `c_0 = 1` and `c_i = 0` above the rank.
    pub fn chern_class(&self, i: usize) -> Result<R::Elem> {
        let max = self.ring.truncation();
        if i > max {
            return Err(Error::IndexOutOfRange { index: i, max });
        }
        Ok(match i {
            0 => self.ring.one(),
            _ => self.chern.get(i - 1).cloned().unwrap_or_else(|| self.ring.zero()),
        })
    }

    /// `c_{min(rank, truncation)}`.
    pub fn top_chern(&self) -> R::Elem {
        self.chern_class(self.rank.min(self.ring.truncation())).expect("in range")
    }

    /// `1 + c_1 + ... ` as a list indexed by degree.
    pub fn total_chern(&self) -> Vec<R::Elem> {
        std::iter::once(self.ring.one()).chain(self.chern.iter().cloned()).collect()
    }
}

impl<R: GradedRing> fmt::Display for FormalBundle<R>
where
    R::Elem: fmt::Display,
{
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "rank {}", self.rank)?;
        for (i, c) in self.chern.iter().enumerate() {
            write!(f, "; c{} = {}", i + 1, c)?;
        }
        Ok(())
    }
}

fn check_ring<R: GradedRing>(a: &R, b: &R) -> Result<()> {
    if a != b {
        return Err(Error::RingMismatch);
    }
    Ok(())
}

pub fn whitney_sum<R: GradedRing>(a: &FormalBundle<R>, b: &FormalBundle<R>) -> Result<FormalBundle<R>> {
    check_ring(&a.ring, &b.ring)?;
    let ring = &a.ring;
    let rank = a.rank + b.rank;
    let ca = a.total_chern();
    let cb = b.total_chern();
    let chern = (1..=rank.min(ring.truncation()))
        .map(|p| {
            (0..=p).fold(ring.zero(), |acc, i| match (ca.get(i), cb.get(p - i)) {
                (Some(x), Some(y)) => ring.add(&acc, &ring.mul(x, y)),
                _ => acc,
            })
        })
        .collect();
    Ok(FormalBundle { ring: ring.clone(), rank, chern })
}

pub fn dual<R: GradedRing>(b: &FormalBundle<R>) -> FormalBundle<R> {
    let chern = b
        .chern
        .iter()
        .enumerate()
        .map(|(i, c)| if i % 2 == 0 { b.ring.neg(c) } else { c.clone() })
        .collect();
    FormalBundle { ring: b.ring.clone(), rank: b.rank, chern }
}

/// `b (x) L` with `c_1(L) = t`: every Chern root shifts by `t`, so
/// `c_p = sum_i binom(r - i, p - i) c_i t^(p - i)`.
pub fn twist_line<R: GradedRing>(b: &FormalBundle<R>, t: &R::Elem) -> Result<FormalBundle<R>> {
    let ring = &b.ring;
    if !ring.is_homogeneous_of(t, 1) {
        return Err(Error::NotHomogeneous { expected: 1 });
    }
    let r = b.rank;
    let total = b.total_chern();
    let t_pow: Vec<_> = (0..=total.len()).map(|e| ring.pow(t, e)).collect();
    let chern = (1..=total.len() - 1)
        .map(|p| {
            (0..=p).fold(ring.zero(), |acc, i| {
                let coeff = binomial(BigInt::from(r - i), BigInt::from(p - i));
                ring.add(&acc, &ring.scale(&ring.mul(&total[i], &t_pow[p - i]), &coeff))
            })
        })
        .collect();
    Ok(FormalBundle { ring: ring.clone(), rank: r, chern })
}

/// Which functor a universal formula describes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Functor {
    Sym,
    Ext,
}

/// Chern classes of `F(E)` as integer polynomials in `c_1(E) .. c_r(E)`.
///
/// `classes[j - 1]` maps exponent vectors `(m_1, .., m_r)` (meaning
/// `c_1^m_1 ... c_r^m_r`) to coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UniversalFormula {
    pub functor: Functor,
    pub rank: usize,
    pub k: usize,
    pub output_rank: usize,
    pub classes: Vec<BTreeMap<Vec<u32>, BigInt>>,
}

type FormulaKey = (Functor, usize, usize, usize);

fn formula_cache() -> &'static RwLock<HashMap<FormulaKey, Arc<UniversalFormula>>> {
    static CACHE: OnceLock<RwLock<HashMap<FormulaKey, Arc<UniversalFormula>>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

fn output_rank(functor: Functor, rank: usize, k: usize) -> usize {
    match functor {
        Functor::Sym => binomial(rank + k - 1, k),
        Functor::Ext => binomial(rank, k),
    }
}

/// Universal formula for `Sym^k` or `Ext^k` of a rank-`rank` bundle, up to
/// degree `truncation`.
pub fn universal_formula(functor: Functor, rank: usize, k: usize, truncation: usize) -> Result<Arc<UniversalFormula>> {
    if k == 0 {
        return Err(Error::InvalidArgument("power must be positive".into()));
    }
    if functor == Functor::Ext && k > rank {
        return Err(Error::ExtPowerTooLarge { k, rank });
    }
    let key = (functor, rank, k, truncation);
    if let Some(f) = formula_cache().read().expect("formula cache poisoned").get(&key) {
        return Ok(Arc::clone(f));
    }
    let formula = Arc::new(compute_formula(functor, rank, k, truncation));
    formula_cache().write().expect("formula cache poisoned").entry(key).or_insert_with(|| Arc::clone(&formula));
    Ok(formula)
}

/// Weight vectors of the formal roots of `F(E)` in terms of the roots of `E`.
pub fn root_weights(functor: Functor, rank: usize, k: usize) -> Vec<Vec<u32>> {
    fn multisets(rank: usize, k: usize, i: usize, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if i + 1 == rank {
            cur.push(k as u32);
            out.push(cur.clone());
            cur.pop();
            return;
        }
        for m in (0..=k).rev() {
            cur.push(m as u32);
            multisets(rank, k - m, i + 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if rank == 0 {
        return out;
    }
    match functor {
        Functor::Sym => multisets(rank, k, 0, &mut Vec::new(), &mut out),
        Functor::Ext => {
            for mask in 0u64..(1 << rank) {
                if mask.count_ones() as usize == k {
                    out.push((0..rank).map(|i| ((mask >> i) & 1) as u32).collect());
                }
            }
            out.reverse();
        }
    }
    out
}

fn compute_formula(functor: Functor, rank: usize, k: usize, truncation: usize) -> UniversalFormula {
    let out_rank = output_rank(functor, rank, k);
    let top = out_rank.min(truncation);
    let roots = WeightedPolyRing::linear(rank, top);

    let mut total = roots.one();
    for w in root_weights(functor, rank, k) {
        let mut factor = roots.one();
        for (i, &c) in w.iter().enumerate() {
            factor = roots.add(&factor, &roots.scale(&roots.generator(i), &BigInt::from(c)));
        }
        total = roots.mul(&total, &factor);
    }

    let elementary: Vec<Poly> = (1..=rank).map(|i| elementary_symmetric(&roots, i)).collect();
    let classes = (1..=top)
        .map(|j| to_elementary(&roots, &elementary, roots.homogeneous_part(&total, j)))
        .collect();
    UniversalFormula { functor, rank, k, output_rank: out_rank, classes }
}

fn elementary_symmetric(roots: &WeightedPolyRing, i: usize) -> Poly {
    let n = roots.num_generators();
    let mut out = roots.zero();
    for mask in 0u64..(1 << n) {
        if mask.count_ones() as usize == i {
            let e: Vec<u32> = (0..n).map(|j| ((mask >> j) & 1) as u32).collect();
            out = roots.add(&out, &roots.monomial(e, BigInt::one()));
        }
    }
    out
}

/// Rewrites a homogeneous symmetric polynomial in the elementary basis by
/// repeatedly cancelling its lexicographically leading monomial.
fn to_elementary(roots: &WeightedPolyRing, elementary: &[Poly], mut p: Poly) -> BTreeMap<Vec<u32>, BigInt> {
    let r = elementary.len();
    let mut out = BTreeMap::new();
    while let Some((lead, c)) = p.leading() {
        let (lead, c) = (lead.clone(), c.clone());
        assert!(lead.windows(2).all(|w| w[0] >= w[1]), "polynomial is not symmetric");
        let m: Vec<u32> = (0..r).map(|i| lead[i] - lead.get(i + 1).copied().unwrap_or(0)).collect();
        let mut prod = roots.one();
        for (i, &e) in m.iter().enumerate() {
            prod = roots.mul(&prod, &roots.pow(&elementary[i], e as usize));
        }
        p = roots.sub(&p, &roots.scale(&prod, &c));
        out.insert(m, c);
    }
    out
}

fn evaluate<R: GradedRing>(formula: &UniversalFormula, b: &FormalBundle<R>) -> FormalBundle<R> {
    let ring = &b.ring;
    let total = b.total_chern();
    let class = |i: usize| total.get(i).cloned().unwrap_or_else(|| ring.zero());
    let chern = formula
        .classes
        .iter()
        .map(|poly| {
            poly.iter().fold(ring.zero(), |acc, (m, c)| {
                let mut term = ring.one();
                for (i, &e) in m.iter().enumerate() {
                    if e > 0 {
                        term = ring.mul(&term, &ring.pow(&class(i + 1), e as usize));
                    }
                }
                ring.add(&acc, &ring.scale(&term, c))
            })
        })
        .collect();
    FormalBundle { ring: ring.clone(), rank: formula.output_rank, chern }
}

pub fn sym_power<R: GradedRing>(b: &FormalBundle<R>, k: usize) -> Result<FormalBundle<R>> {
    if b.rank == 0 {
        return Err(Error::InvalidArgument("symmetric power of a rank-0 bundle".into()));
    }
    let f = universal_formula(Functor::Sym, b.rank, k, b.ring.truncation())?;
    Ok(evaluate(&f, b))
}

pub fn ext_power<R: GradedRing>(b: &FormalBundle<R>, k: usize) -> Result<FormalBundle<R>> {
    let f = universal_formula(Functor::Ext, b.rank, k, b.ring.truncation())?;
    Ok(evaluate(&f, b))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::TruncatedLineRing;
    use crate::schubert::{integrate, multiply, tautological_dual, ChowElement, GrassmannContext};
    use crate::Partition;

    fn p3() -> TruncatedLineRing {
        TruncatedLineRing::projective_space(3)
    }

    fn big(v: i64) -> BigInt {
        BigInt::from(v)
    }

    #[test]
    fn whitney_of_hyperplane_lines() {
        let r = p3();
        let four = FormalBundle::split(r.clone(), &vec![r.h(); 4]).unwrap();
        assert_eq!(four.rank(), 4);
        assert_eq!(four.chern_class(1).unwrap(), r.monomial(4, 1));
        assert_eq!(four.chern_class(2).unwrap(), r.monomial(6, 2));
        assert_eq!(four.chern_class(3).unwrap(), r.monomial(4, 3));
        let same = whitney_sum(&four, &FormalBundle::trivial(r.clone(), 0)).unwrap();
        assert_eq!(same, four);
        // Euler sequence: c(T) * c(O) = c(O(1)^4)
        let tangent = FormalBundle::new(r.clone(), 3, vec![r.monomial(4, 1), r.monomial(6, 2), r.monomial(4, 3)]).unwrap();
        let extended = whitney_sum(&tangent, &FormalBundle::trivial(r.clone(), 1)).unwrap();
        assert_eq!(extended.chern_classes(), four.chern_classes());
    }

    #[test]
    fn ring_mismatch_is_rejected() {
        let a = FormalBundle::trivial(p3(), 1);
        let b = FormalBundle::trivial(TruncatedLineRing::projective_space(4), 1);
        assert_eq!(whitney_sum(&a, &b), Err(Error::RingMismatch));
    }

    #[test]
    fn dual_sign_rule() {
        let r = WeightedPolyRing::new(vec![1, 2, 3], 3).unwrap();
        let b = FormalBundle::new(r.clone(), 3, vec![r.generator(0), r.generator(1), r.generator(2)]).unwrap();
        let d = dual(&b);
        assert_eq!(d.chern_class(1).unwrap(), r.neg(&r.generator(0)));
        assert_eq!(d.chern_class(2).unwrap(), r.generator(1));
        assert_eq!(d.chern_class(3).unwrap(), r.neg(&r.generator(2)));
        assert_eq!(dual(&d), b);
    }

    #[test]
    fn twist_examples() {
        let r = WeightedPolyRing::new(vec![1, 2, 1], 2).unwrap();
        let (c1, c2, t) = (r.generator(0), r.generator(1), r.generator(2));
        let b = FormalBundle::new(r.clone(), 2, vec![c1.clone(), c2.clone()]).unwrap();
        let tw = twist_line(&b, &t).unwrap();
        let two_t = r.scale(&t, &big(2));
        assert_eq!(tw.chern_class(1).unwrap(), r.add(&c1, &two_t));
        let expected = r.add(&r.add(&c2, &r.mul(&c1, &t)), &r.mul(&t, &t));
        assert_eq!(tw.chern_class(2).unwrap(), expected);
        assert_eq!(twist_line(&b, &r.zero()).unwrap(), b);
        let line = FormalBundle::line(r.clone(), c1.clone()).unwrap();
        assert_eq!(twist_line(&line, &t).unwrap().chern_class(1).unwrap(), r.add(&c1, &t));
        assert!(twist_line(&b, &c2).is_err());
    }

    #[test]
    fn sym_cube_of_rank_two() {
        let r = WeightedPolyRing::new(vec![1, 2], 4).unwrap();
        let (c1, c2) = (r.generator(0), r.generator(1));
        let b = FormalBundle::new(r.clone(), 2, vec![c1.clone(), c2.clone()]).unwrap();
        let s3 = sym_power(&b, 3).unwrap();
        assert_eq!(s3.rank(), 4);
        assert_eq!(s3.chern_class(1).unwrap(), r.scale(&c1, &big(6)));
        let inner = r.add(&r.scale(&r.mul(&c1, &c1), &big(2)), &c2);
        assert_eq!(s3.chern_class(4).unwrap(), r.scale(&r.mul(&c2, &inner), &big(9)));
        assert_eq!(sym_power(&b, 1).unwrap(), b);
    }

    #[test]
    fn cubic_threefold_lines_class() {
        let ctx = GrassmannContext::new(2, 5).unwrap();
        let c4 = sym_power(&tautological_dual(ctx), 3).unwrap().top_chern();
        let expected = ChowElement::from_terms(
            ctx,
            [(Partition::new(vec![3, 1]).unwrap(), big(18)), (Partition::new(vec![2, 2]).unwrap(), big(27))],
        )
        .unwrap();
        assert_eq!(c4, expected);
        let s2 = ChowElement::special(ctx, 2);
        assert_eq!(integrate(&multiply(&c4, &s2).unwrap()).unwrap(), big(18));
    }

    #[test]
    fn cubic_surface_has_27_lines() {
        let ctx = GrassmannContext::new(2, 4).unwrap();
        let top = sym_power(&tautological_dual(ctx), 3).unwrap().top_chern();
        assert_eq!(integrate(&top).unwrap(), big(27));
    }

    #[test]
    fn ext_power_examples() {
        let r = WeightedPolyRing::new(vec![1, 2], 2).unwrap();
        let b = FormalBundle::new(r.clone(), 2, vec![r.generator(0), r.generator(1)]).unwrap();
        let det = ext_power(&b, 2).unwrap();
        assert_eq!(det.rank(), 1);
        assert_eq!(det.chern_class(1).unwrap(), r.generator(0));
        assert!(matches!(ext_power(&b, 3), Err(Error::ExtPowerTooLarge { k: 3, rank: 2 })));
    }

    #[test]
    fn ext_square_of_tangent_is_twisted_cotangent() {
        let r = p3();
        let tangent = FormalBundle::new(r.clone(), 3, vec![r.monomial(4, 1), r.monomial(6, 2), r.monomial(4, 3)]).unwrap();
        let lhs = ext_power(&tangent, 2).unwrap();
        let rhs = twist_line(&dual(&tangent), &r.monomial(4, 1)).unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn chern_class_range() {
        let r = p3();
        let b = FormalBundle::split(r.clone(), &[r.h(), r.h()]).unwrap();
        assert_eq!(b.chern_class(0).unwrap(), r.one());
        assert!(r.is_zero(&b.chern_class(3).unwrap()));
        assert!(matches!(b.chern_class(4), Err(Error::IndexOutOfRange { index: 4, max: 3 })));
        assert_eq!(b.top_chern(), r.monomial(1, 2));
    }

    #[test]
    fn root_weight_counts() {
        assert_eq!(root_weights(Functor::Sym, 2, 3).len(), 4);
        assert_eq!(root_weights(Functor::Sym, 3, 2).len(), 6);
        assert_eq!(root_weights(Functor::Ext, 4, 2).len(), 6);
    }
}
