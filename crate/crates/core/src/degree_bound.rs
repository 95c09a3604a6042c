//! Numerical certificates bounding the degree of a finite morphism
//! `f: X -> Y` onto a Fano threefold `Y` with cyclic Picard group.
//!
//! Write `f^* H_Y = m H_X`, so `deg f = m^3 H_X^3 / H_Y^3`. The tools here
//! are:
//!
//! * the Chern-class criterion: if `Omega_Y(l)` is globally generated then
//!   `deg(f) c_3(Omega_Y(l)) <= c_3(Omega_X(lm))`, and after cancelling the
//!   `l^3` terms the left side grows like `m^3` as soon as
//!   `E(Y, l) = c_3(Omega_Y) + l c_2(Omega_Y) H + l^2 c_1(Omega_Y) H^2 > 0`;
//! * the ramification arithmetic deciding when the preimage of the surface
//!   swept by special lines can sit inside the critical locus;
//! * twist bounds from lines with a negative normal direction;
//! * the normal-bundle comparison forcing `m = 1` between index-one
//!   threefolds with very ample `H`;
//! * the Noether-Lefschetz threshold for morphisms onto the quadric.

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::chern::{twist_line, FormalBundle};
use crate::error::{Error, Result};
use crate::fano_db::{conic_normal_bundle_degrees, line_normal_bundle_options, FanoRecord, NormalBundleOption};
use crate::par::{self, Strategy};
use crate::ring::TruncatedLineRing;
use crate::wps::cotangent_twist_lmin;

/// Numerical data of the source `X`, all against its ample generator `H_X`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SourceInvariants {
    pub h3: i64,
    /// `K_X = kappa H_X`
    pub kappa: i64,
    /// `c_2(T_X) . H_X`
    pub c2h: i64,
    /// `c_3(Omega_X) = -chi_top(X)`
    pub c3_omega: i64,
    pub very_ample: bool,
}

impl SourceInvariants {
    pub fn new(h3: i64, kappa: i64, c2h: i64, c3_omega: i64, very_ample: bool) -> Result<Self> {
        if h3 < 1 {
            return Err(Error::InvalidArgument(format!("H_X^3 = {h3} must be positive")));
        }
        Ok(SourceInvariants { h3, kappa, c2h, c3_omega, very_ample })
    }

    /// Invariants of a tabulated Fano threefold.
    pub fn from_fano(rec: &FanoRecord) -> Result<Self> {
        Self::new(rec.h3, -rec.index, 24 / rec.index, rec.b3_required()? - 4, rec.very_ample)
    }

    pub fn is_fano(&self) -> bool {
        self.kappa < 0
    }
}

/// Smallest twist `l` for which the argument shows `Omega_Y(l)` generated:
/// 2 when `H` is very ample, otherwise the weighted-ambient bound.
pub fn cotangent_twist(y: &FanoRecord) -> Result<i64> {
    if y.very_ample {
        return Ok(2);
    }
    let ambient = y.ambient().ok_or_else(|| Error::MissingAmbient(y.name.clone()))?;
    Ok(cotangent_twist_lmin(&ambient)? as i64)
}

/// Coefficients `(l^2, l, 1)` of `E(Y, l)`: `(-r H^3, 24 / r, b_3 - 4)`.
pub fn e_polynomial(y: &FanoRecord) -> Result<[i64; 3]> {
    let b3 = y.b3_required()?;
    Ok([-y.index * y.h3, 24 / y.index, b3 - 4])
}

/// `E(Y, l) = c_3(Omega_Y) + l c_2(Omega_Y) H + l^2 c_1(Omega_Y) H^2`.
pub fn e_value(y: &FanoRecord, l: i64) -> Result<i64> {
    let [a, b, c] = e_polynomial(y)?;
    Ok(a * l * l + b * l + c)
}

/// `Omega_Y` as a formal bundle over `Z[h]/h^4` with `h^3 = H^3`. Fails when
/// `c_2` or `c_3` is not an integer multiple of `h^2` or `h^3`.
pub fn cotangent_bundle(y: &FanoRecord) -> Result<FormalBundle<TruncatedLineRing>> {
    let ring = TruncatedLineRing::new(3, y.h3);
    let c2h = 24 / y.index;
    let c3 = y.b3_required()? - 4;
    let exact = |num: i64, what: &str| {
        if num % y.h3 == 0 {
            Ok(num / y.h3)
        } else {
            Err(Error::NotIntegral(format!("{what} = {num}/{}", y.h3)))
        }
    };
    let c2 = ring.monomial(exact(c2h, "c2")?, 2);
    let c3 = ring.monomial(exact(c3, "c3")?, 3);
    FormalBundle::new(ring.clone(), 3, vec![ring.monomial(-y.index, 1), c2, c3])
}

/// `E(Y, l)` recomputed as `c_3(Omega_Y(l)) - l^3 H^3` through the Chern
/// calculus.
pub fn e_value_via_chern(y: &FanoRecord, l: i64) -> Result<i64> {
    let omega = cotangent_bundle(y)?;
    let ring = omega.ring().clone();
    let twisted = twist_line(&omega, &ring.monomial(l, 1))?;
    let top = ring.integrate(&twisted.chern_class(3)?);
    let value = top - BigInt::from(l.pow(3) * y.h3);
    value.to_i64().ok_or_else(|| Error::InvalidArgument("E(Y,l) overflows".into()))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Verdict {
    Bounded,
    Inconclusive,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Bounded => "bounded",
            Verdict::Inconclusive => "inconclusive",
        })
    }
}

pub fn boundedness_verdict(y: &FanoRecord, l: i64) -> Result<Verdict> {
    Ok(if e_value(y, l)? > 0 { Verdict::Bounded } else { Verdict::Inconclusive })
}

/// A hypothetical finite morphism `X -> Y` with `f^* H_Y = m H_X`, tested
/// against the Chern inequality with twist `l`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MorphismScenario<'a> {
    pub source: SourceInvariants,
    pub target: &'a FanoRecord,
    pub twist: i64,
    pub multiplier: u64,
}

impl MorphismScenario<'_> {
    pub fn degree(&self) -> Result<BigInt> {
        degree_from_multiplier(self.multiplier, self.source.h3, self.target.h3)
    }

    /// Both sides of `deg(f) c_3(Omega_Y(l)) <= c_3(Omega_X(lm))`, each
    /// multiplied by `H_Y^3` so they stay integral.
    pub fn chern_inequality_sides(&self) -> Result<(BigInt, BigInt)> {
        let x = &self.source;
        let m = BigInt::from(self.multiplier);
        let l = BigInt::from(self.twist);
        let h3y = BigInt::from(self.target.h3);
        let h3x = BigInt::from(x.h3);
        let e_full = BigInt::from(e_value(self.target, self.twist)?) + l.pow(3) * &h3y;
        let lhs = m.pow(3) * &h3x * e_full;
        let lm = &l * &m;
        let rhs = &h3y
            * (BigInt::from(x.c3_omega)
                + &lm * x.c2h
                + lm.pow(2) * (x.kappa * x.h3)
                + lm.pow(3) * &h3x);
        Ok((lhs, rhs))
    }

    pub fn passes_chern_inequality(&self) -> Result<bool> {
        let (lhs, rhs) = self.chern_inequality_sides()?;
        Ok(lhs <= rhs)
    }
}

/// Largest `m >= 1` with
/// `(m^3 H_X^3 / H_Y^3) E(Y, l) <= c_3(Omega_X) + l m c_2 H_X + l^2 m^2 kappa H_X^3`,
/// or 0 when no `m` passes. Integrality of the degree is not checked here.
pub fn max_multiplier(x: &SourceInvariants, y: &FanoRecord, l: i64) -> Result<u64> {
    max_multiplier_with(Strategy::default(), x, y, l)
}

pub fn max_multiplier_with(strategy: Strategy, x: &SourceInvariants, y: &FanoRecord, l: i64) -> Result<u64> {
    let e = e_value(y, l)?;
    if e <= 0 {
        return Err(Error::NonPositiveCriterion(e));
    }
    // h3y * RHS - h3x * E * m^3 = b m^2 + c m + d - a m^3
    let h3y = BigInt::from(y.h3);
    let a = BigInt::from(x.h3) * e;
    let b = &h3y * BigInt::from(l * l) * x.kappa * x.h3;
    let c = &h3y * BigInt::from(l) * x.c2h;
    let d = &h3y * x.c3_omega;
    // for m > (|b| + |c| + |d|) / a the cubic term dominates
    let cutoff = ((b.abs() + c.abs() + d.abs()) / &a).to_u64().ok_or_else(|| {
        Error::InvalidArgument("multiplier search range overflows".into())
    })?;
    let passes = |m: u64| {
        let m = BigInt::from(m);
        &a * m.pow(3) <= &b * m.pow(2) + &c * &m + &d
    };
    Ok(par::max_satisfying(strategy, 1..=cutoff.max(1), passes).unwrap_or(0))
}

/// Multipliers `1 ..= max_multiplier` whose degree is an integer, with the
/// degree.
pub fn realizable_multipliers(x: &SourceInvariants, y: &FanoRecord, l: i64) -> Result<Vec<(u64, BigInt)>> {
    let top = max_multiplier(x, y, l)?;
    Ok((1..=top).filter_map(|m| degree_from_multiplier(m, x.h3, y.h3).ok().map(|d| (m, d))).collect())
}

/// `m^3 H_X^3 / H_Y^3`, which must be an integer.
pub fn degree_from_multiplier(m: u64, h3x: i64, h3y: i64) -> Result<BigInt> {
    if m == 0 {
        return Err(Error::InvalidArgument("multiplier must be at least 1".into()));
    }
    if h3x < 1 || h3y < 1 {
        return Err(Error::InvalidArgument("degrees must be positive".into()));
    }
    let num = BigInt::from(m).pow(3) * h3x;
    let den = BigInt::from(h3y);
    let (q, r) = num.div_rem(&den);
    if !r.is_zero() {
        return Err(Error::NonIntegralDegree { num: num.to_string(), den: den.to_string() });
    }
    Ok(q)
}

/// Whether the preimage of the surface `S ~ kH_Y` swept by special lines can
/// lie in the critical locus of `f`.
///
/// Containment would give `R ~ rho m H_X` with `rho >= k/2`, and
/// `K_X = -r_Y m H_X + R`, so `kappa >= m (k/2 - r_Y)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RamificationVerdict {
    /// The inequality holds for every `m`: no conclusion.
    AlwaysOk,
    /// Containment only possible for `m <= bound`.
    Bounded(u64),
    /// Containment only possible for `m >= from` (outside the lemma's range
    /// of `k`).
    OnlyFrom(u64),
    /// Containment impossible for every `m >= 1`.
    InfeasibleForAllM,
}

impl RamificationVerdict {
    pub fn containment_possible(&self, m: u64) -> bool {
        match *self {
            RamificationVerdict::AlwaysOk => true,
            RamificationVerdict::Bounded(b) => m <= b,
            RamificationVerdict::OnlyFrom(f) => m >= f,
            RamificationVerdict::InfeasibleForAllM => false,
        }
    }
}

impl fmt::Display for RamificationVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RamificationVerdict::AlwaysOk => write!(f, "always_ok"),
            RamificationVerdict::Bounded(b) => write!(f, "bound m <= {b}"),
            RamificationVerdict::OnlyFrom(m) => write!(f, "containment only for m >= {m}"),
            RamificationVerdict::InfeasibleForAllM => write!(f, "infeasible_for_all_m"),
        }
    }
}

pub fn ramification_feasibility(r_y: i64, k: i64, x: &SourceInvariants) -> Result<RamificationVerdict> {
    if !(1..=2).contains(&r_y) {
        return Err(Error::InvalidArgument(format!("target index {r_y} must be 1 or 2")));
    }
    if k < 1 {
        return Err(Error::InvalidArgument(format!("surface multiple {k} must be positive")));
    }
    // 2 kappa >= m (k - 2 r_Y)
    let slope = k - 2 * r_y;
    let twice_kappa = 2 * x.kappa;
    Ok(match slope.signum() {
        1 => match twice_kappa.div_euclid(slope) {
            b if b >= 1 => RamificationVerdict::Bounded(b as u64),
            _ => RamificationVerdict::InfeasibleForAllM,
        },
        0 if twice_kappa >= 0 => RamificationVerdict::AlwaysOk,
        0 => RamificationVerdict::InfeasibleForAllM,
        _ if twice_kappa >= slope => RamificationVerdict::AlwaysOk,
        // both negative: m >= ceil(2 kappa / slope)
        _ => {
            let (num, den) = (-twice_kappa, -slope);
            RamificationVerdict::OnlyFrom(((num + den - 1) / den) as u64)
        }
    })
}

/// `T_X(d - 2)` is generated on a smooth hypersurface of degree `d`.
pub fn tangent_twist_hypersurface(d: i64) -> Result<i64> {
    if d < 2 {
        return Err(Error::InvalidArgument(format!("hypersurface degree {d} must be at least 2")));
    }
    Ok(d - 2)
}

/// `m <= j` for any `j` with `T_X(j)` generated: `T_X|_D` surjects generically
/// onto a bundle with a summand `O_D(-m)`.
pub fn multiplier_bound_from_negative_lines(j: u64) -> u64 {
    j
}

/// A map `O(a) + O(b) -> O(c) + O(d)` on `P^1` with nonzero determinant exists
/// iff, after sorting both pairs decreasingly, `c >= a` and `d >= b`.
pub fn generic_iso_exists(src: (i64, i64), dst: (i64, i64)) -> bool {
    let (a, b) = (src.0.max(src.1), src.0.min(src.1));
    let (c, d) = (dst.0.max(dst.1), dst.0.min(dst.1));
    c >= a && d >= b
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Component {
    Line,
    Conic,
}

impl Component {
    /// `H_X . D`
    pub fn degree(self) -> i64 {
        match self {
            Component::Line => 1,
            Component::Conic => 2,
        }
    }
}

impl fmt::Display for Component {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Component::Line => "line",
            Component::Conic => "conic",
        })
    }
}

/// A reduced component `D` of `f^{-1}(l)` whose normal bundle maps
/// generically isomorphically onto the pulled-back normal bundle of `l`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FeasibilityWitness {
    pub multiplier: u64,
    pub component: Component,
    pub source: NormalBundleOption,
    pub target_line: NormalBundleOption,
    pub pulled_back: (i64, i64),
}

fn component_options(r_x: i64, very_ample: bool) -> Result<Vec<(Component, NormalBundleOption)>> {
    let mut out: Vec<_> =
        line_normal_bundle_options(r_x, very_ample)?.into_iter().map(|o| (Component::Line, o)).collect();
    // reducible conics restrict to line types, so only smooth conics are new
    if r_x == 1 {
        out.extend(conic_normal_bundle_degrees().into_iter().map(|c| (Component::Conic, c.option)));
    }
    Ok(out)
}

/// First witness for multiplier `m`, scanning lines before conics.
pub fn feasibility_witness(r_x: i64, r_y: i64, very_ample: bool, m: u64) -> Result<Option<FeasibilityWitness>> {
    let sources = component_options(r_x, very_ample)?;
    let targets = line_normal_bundle_options(r_y, very_ample)?;
    Ok(witness_in(&sources, &targets, m))
}

fn witness_in(
    sources: &[(Component, NormalBundleOption)],
    targets: &[NormalBundleOption],
    m: u64,
) -> Option<FeasibilityWitness> {
    let m_i = m as i64;
    sources.iter().find_map(|&(component, source)| {
        let scale = m_i * component.degree();
        targets.iter().find_map(|&target_line| {
            let pulled_back = (target_line.a * scale, target_line.b * scale);
            generic_iso_exists(source.pair(), pulled_back).then_some(FeasibilityWitness {
                multiplier: m,
                component,
                source,
                target_line,
                pulled_back,
            })
        })
    })
}

/// Multipliers in `range` for which some component type admits a generic
/// isomorphism of normal bundles.
pub fn feasible_multipliers(
    r_x: i64,
    r_y: i64,
    very_ample: bool,
    range: std::ops::RangeInclusive<u64>,
) -> Result<BTreeSet<u64>> {
    feasible_multipliers_with(Strategy::default(), r_x, r_y, very_ample, range)
}

pub fn feasible_multipliers_with(
    strategy: Strategy,
    r_x: i64,
    r_y: i64,
    very_ample: bool,
    range: std::ops::RangeInclusive<u64>,
) -> Result<BTreeSet<u64>> {
    if !(1..=2).contains(&r_x) || !(1..=2).contains(&r_y) {
        return Err(Error::InvalidArgument(format!("indices must be 1 or 2, got {r_x} and {r_y}")));
    }
    if range.is_empty() || *range.start() == 0 {
        return Err(Error::InvalidArgument("multiplier range must be nonempty and start at 1 or later".into()));
    }
    let sources = component_options(r_x, very_ample)?;
    let targets = line_normal_bundle_options(r_y, very_ample)?;
    let (lo, hi) = (*range.start(), *range.end());
    let hits = par::map_range(strategy, lo..hi + 1, |m| witness_in(&sources, &targets, m).map(|_| m));
    Ok(hits.into_iter().flatten().collect())
}

/// `3 kappa + 16`: past this multiple of `H_X`, `S = f^{-1}H` satisfies the
/// Ein-Lazarsfeld ampleness condition `S ~ 3K_X + 16A`.
pub fn noether_lefschetz_threshold(kappa: i64) -> i64 {
    3 * kappa + 16
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuadricBound {
    /// `m <= 3 kappa + 16`
    pub max_multiplier: i64,
    /// Largest integral `m^3 H_X^3 / 2` over admissible `m`, if any.
    pub max_degree: Option<BigInt>,
    pub degree_multiplier: Option<u64>,
}

/// Bound on `f: X -> Q` from infinitesimal Noether-Lefschetz: the pulled-back
/// line/hyperplane pair has a split normal sequence, impossible once
/// `S = f^{-1}H ~ mH_X` is ample enough.
pub fn quadric_multiplier_bound(x: &SourceInvariants) -> Result<QuadricBound> {
    if x.kappa >= 0 && !x.very_ample {
        return Err(Error::Unsupported("kappa >= 0 with H_X not very ample".into()));
    }
    let top = noether_lefschetz_threshold(x.kappa);
    const QUADRIC_H3: i64 = 2;
    let best = (1..=top.max(0) as u64)
        .rev()
        .find_map(|m| degree_from_multiplier(m, x.h3, QUADRIC_H3).ok().map(|d| (m, d)));
    Ok(QuadricBound {
        max_multiplier: top,
        degree_multiplier: best.as_ref().map(|(m, _)| *m),
        max_degree: best.map(|(_, d)| d),
    })
}
