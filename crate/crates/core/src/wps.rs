//! Weighted projective spaces `P(a_0, ..., a_n)`.
//!
//! Covers well-forming of weight vectors, the singular strata, the canonical
//! degree, global generation of `O(m)` on the smooth locus (a numerical
//! semigroup test over coordinate strata), the smallest twist `l` for which
//! the Euler sequence shows `Omega(l)` is generated, and the standard weighted
//! models of double covers.

use std::fmt;
use std::str::FromStr;

use num_integer::Integer;

use crate::error::{Error, Result};
use crate::par::{self, Strategy};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct WeightVector(Vec<u64>);

impl WeightVector {
    pub fn new(weights: Vec<u64>) -> Result<Self> {
        if weights.len() < 2 {
            return Err(Error::InvalidArgument("need at least two weights".into()));
        }
        if weights.contains(&0) {
            return Err(Error::InvalidArgument("weights must be positive".into()));
        }
        Ok(WeightVector(weights))
    }

    /// `P^n`.
    pub fn ones(len: usize) -> Result<Self> {
        Self::new(vec![1; len])
    }

    pub fn weights(&self) -> &[u64] {
        &self.0
    }

    /// Projective dimension `n`.
    pub fn dim(&self) -> usize {
        self.0.len() - 1
    }

    pub fn sum(&self) -> u64 {
        self.0.iter().sum()
    }

    fn gcd_except(&self, i: usize) -> u64 {
        self.0.iter().enumerate().filter(|&(j, _)| j != i).fold(0, |g, (_, &a)| g.gcd(&a))
    }

    /// Global gcd is 1 and so is the gcd of any `n` of the weights.
    pub fn is_well_formed(&self) -> bool {
        self.0.iter().fold(0, |g, &a| g.gcd(&a)) == 1 && (0..self.0.len()).all(|i| self.gcd_except(i) == 1)
    }

    fn require_well_formed(&self) -> Result<()> {
        if !self.is_well_formed() {
            return Err(Error::NotWellFormed(self.0.clone()));
        }
        Ok(())
    }
}

impl fmt::Display for WeightVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let w: Vec<String> = self.0.iter().map(u64::to_string).collect();
        write!(f, "P({})", w.join(","))
    }
}

impl FromStr for WeightVector {
    type Err = Error;

    /// Accepts `1,1,1,1,2`, `1:1:1:1:2` or `P(1,1,1,1,2)`.
    fn from_str(s: &str) -> Result<Self> {
        let body = s.trim();
        let body = body
            .strip_prefix("P(")
            .and_then(|b| b.strip_suffix(')'))
            .unwrap_or(body);
        let weights = body
            .split([',', ':'])
            .map(|t| t.trim().parse::<u64>().map_err(|_| Error::InvalidArgument(format!("bad weight `{t}`"))))
            .collect::<Result<Vec<_>>>()?;
        WeightVector::new(weights)
    }
}

/// Divides out the global gcd, then repeatedly divides the other weights by
/// the gcd of all weights but one, until the vector is well-formed.
pub fn normalize(w: &WeightVector) -> WeightVector {
    let g = w.0.iter().fold(0, |g, &a| g.gcd(&a));
    let mut a: Vec<u64> = w.0.iter().map(|x| x / g).collect();
    loop {
        let cur = WeightVector(a.clone());
        let Some((i, d)) = (0..a.len()).map(|i| (i, cur.gcd_except(i))).find(|&(_, d)| d > 1) else {
            return cur;
        };
        for (j, x) in a.iter_mut().enumerate() {
            if j != i {
                *x /= d;
            }
        }
    }
}

/// The locus `{x_i = 0 unless k | a_i}` for a prime `k`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SingularStratum {
    pub k: u64,
    pub coords: Vec<usize>,
}

impl SingularStratum {
    pub fn dimension(&self) -> usize {
        self.coords.len() - 1
    }

    /// The coordinate point when the stratum is zero-dimensional.
    pub fn point(&self, len: usize) -> Option<Vec<u8>> {
        (self.coords.len() == 1).then(|| (0..len).map(|i| u8::from(i == self.coords[0])).collect())
    }
}

fn prime_factors(mut x: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= x {
        if x.is_multiple_of(p) {
            out.push(p);
            while x.is_multiple_of(p) {
                x /= p;
            }
        }
        p += 1;
    }
    if x > 1 {
        out.push(x);
    }
    out
}

/// Maximal singular strata, one per prime dividing some weight.
pub fn singular_strata(w: &WeightVector) -> Result<Vec<SingularStratum>> {
    w.require_well_formed()?;
    let mut primes: Vec<u64> = w.0.iter().flat_map(|&a| prime_factors(a)).collect();
    primes.sort_unstable();
    primes.dedup();
    let strata: Vec<SingularStratum> = primes
        .into_iter()
        .map(|k| SingularStratum { k, coords: (0..w.0.len()).filter(|&i| w.0[i].is_multiple_of(k)).collect() })
        .collect();
    let maximal = strata
        .iter()
        .enumerate()
        .filter(|(i, s)| {
            !strata.iter().enumerate().any(|(j, t)| {
                let contained = s.coords.iter().all(|c| t.coords.contains(c));
                // keep the first of two equal strata
                contained && (s.coords.len() < t.coords.len() || (s.coords == t.coords && j < *i))
            })
        })
        .map(|(_, s)| s.clone())
        .collect();
    Ok(maximal)
}

/// `K = O(-sum a_i)`.
pub fn canonical_degree(w: &WeightVector) -> Result<i64> {
    w.require_well_formed()?;
    Ok(-(w.sum() as i64))
}

/// Whether `m` lies in the numerical semigroup generated by `gens`.
pub fn in_semigroup(m: u64, gens: &[u64]) -> bool {
    let m = m as usize;
    let mut reach = vec![false; m + 1];
    reach[0] = true;
    for v in 1..=m {
        reach[v] = gens.iter().any(|&g| g as usize <= v && reach[v - g as usize]);
    }
    reach[m]
}

/// `O(m)` is generated on the smooth locus: for every coordinate support `T`
/// whose weights have gcd 1, `m` is a nonnegative combination of those
/// weights.
pub fn is_generated(w: &WeightVector, m: i64) -> Result<bool> {
    is_generated_with(Strategy::default(), w, m)
}

pub fn is_generated_with(strategy: Strategy, w: &WeightVector, m: i64) -> Result<bool> {
    w.require_well_formed()?;
    if m < 0 {
        return Err(Error::InvalidArgument(format!("twist {m} is negative")));
    }
    if w.0.len() > 40 {
        return Err(Error::InvalidArgument("too many weights for subset enumeration".into()));
    }
    Ok(generated_unchecked(strategy, w, m as u64))
}

fn generated_unchecked(strategy: Strategy, w: &WeightVector, m: u64) -> bool {
    let len = w.0.len();
    par::all_range(strategy, 1..(1u64 << len), |mask| {
        let gens: Vec<u64> = (0..len).filter(|i| (mask >> i) & 1 == 1).map(|i| w.0[i]).collect();
        gens.iter().fold(0, |g, &a| g.gcd(&a)) != 1 || in_semigroup(m, &gens)
    })
}

/// Smallest `l` such that every `O(l - a_j - a_k)`, `j < k`, is a generated
/// sheaf with `l - a_j - a_k >= 0`.
///
/// Through the Euler sequence `Omega(l)` is a quotient of the sum of these
/// line bundles, so this is an upper bound for the minimal generating twist.
pub fn cotangent_twist_lmin(w: &WeightVector) -> Result<u64> {
    w.require_well_formed()?;
    if w.dim() < 2 {
        return Err(Error::InvalidArgument("need n >= 2".into()));
    }
    let a = &w.0;
    let mut pair_sums: Vec<u64> = Vec::new();
    for j in 0..a.len() {
        for k in j + 1..a.len() {
            pair_sums.push(a[j] + a[k]);
        }
    }
    pair_sums.sort_unstable();
    pair_sums.dedup();
    let max_pair = *pair_sums.last().expect("n >= 2");
    let limit = w.sum() + max_pair;
    (max_pair..=limit)
        .find(|&l| pair_sums.iter().all(|&s| generated_unchecked(Strategy::Sequential, w, l - s)))
        .ok_or(Error::TwistSearchExhausted(limit))
}

/// Base of a double cover with a standard weighted model.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CoverBase {
    /// `P^n`
    ProjectiveSpace(usize),
    /// Cone over the Veronese surface, i.e. `P(1,1,1,2)`.
    VeroneseCone,
    /// Smooth quadric threefold in `P^4`.
    Quadric4,
}

impl FromStr for CoverBase {
    type Err = Error;

    /// `p3`, `projective-space:3`, `veronese-cone`, `quadric-4`.
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim().to_ascii_lowercase();
        let dim = t.strip_prefix("projective-space:").or_else(|| t.strip_prefix('p'));
        match t.as_str() {
            "veronese-cone" => Ok(CoverBase::VeroneseCone),
            "quadric-4" | "quadric" => Ok(CoverBase::Quadric4),
            _ => match dim.and_then(|d| d.parse::<usize>().ok()) {
                Some(n) if n >= 1 => Ok(CoverBase::ProjectiveSpace(n)),
                _ => Err(Error::InvalidArgument(format!("unknown cover base `{s}`"))),
            },
        }
    }
}

/// A double cover realised inside a weighted projective space.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HypersurfaceModel {
    pub ambient: WeightVector,
    /// Weighted degree of `y^2 = f`.
    pub degree: u64,
    /// Degrees of further equations cutting out the base (complete
    /// intersection case).
    pub extra_degrees: Vec<u64>,
    pub description: String,
}

/// Double cover of `base` branched along a section of weighted degree `2k`;
/// the new coordinate `y` has weight `k`.
pub fn double_cover_model(base: CoverBase, k: u64) -> Result<HypersurfaceModel> {
    if k == 0 {
        return Err(Error::InvalidArgument("branch half-degree must be positive".into()));
    }
    let (weights, extra_degrees, description) = match base {
        CoverBase::ProjectiveSpace(n) => {
            let mut w = vec![1; n + 1];
            w.push(k);
            (w, vec![], format!("y^2 = f(x_0..x_{n}), deg f = {}", 2 * k))
        }
        CoverBase::VeroneseCone => (
            vec![1, 1, 1, 2, k],
            vec![],
            format!("z^2 = g(x_0, x_1, x_2, y), deg g = {}", 2 * k),
        ),
        CoverBase::Quadric4 => (
            vec![1, 1, 1, 1, 1, k],
            vec![2],
            format!("q(x_0..x_4) = 0, y^2 = f(x_0..x_4), deg f = {}", 2 * k),
        ),
    };
    Ok(HypersurfaceModel { ambient: WeightVector::new(weights)?, degree: 2 * k, extra_degrees, description })
}
