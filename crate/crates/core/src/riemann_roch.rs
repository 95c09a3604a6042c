//! Euler characteristics on surfaces and threefolds, and the numerical
//! invariants of a Fano threefold with cyclic Picard group.

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::error::{Error, Result};

/// Intersection numbers of a divisor `D` on a smooth surface.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SurfaceIntersectionData {
    pub dd: i64,
    pub dk: i64,
    pub kk: i64,
    pub c2: i64,
}

/// Intersection numbers of a divisor `D` on a smooth threefold.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ThreefoldIntersectionData {
    pub d3: i64,
    pub kd2: i64,
    pub kkd: i64,
    pub c2d: i64,
    pub c1c2: i64,
}

impl ThreefoldIntersectionData {
    /// `D = multiple * H` on a Fano threefold of index `r` with `K = -rH`,
    /// `c_2 . H = 24 / r` and `c_1 c_2 = 24`.
    pub fn fano(r: i64, h3: i64, multiple: i64) -> Result<Self> {
        if !(1..=4).contains(&r) {
            return Err(Error::InvalidArgument(format!("Fano index {r} outside 1..=4")));
        }
        let c2h = 24 / r;
        Ok(ThreefoldIntersectionData {
            d3: multiple.pow(3) * h3,
            kd2: -r * multiple.pow(2) * h3,
            kkd: r * r * multiple * h3,
            c2d: multiple * c2h,
            c1c2: 24,
        })
    }
}

fn ratio(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// `D(D-K)/2 + (K^2 + c_2)/12`.
pub fn chi_surface(d: &SurfaceIntersectionData) -> BigRational {
    ratio(d.dd - d.dk, 2) + ratio(d.kk + d.c2, 12)
}

/// `D^3/6 - K D^2/4 + D (K^2 + c_2)/12 + c_1 c_2 / 24`.
pub fn chi_threefold(d: &ThreefoldIntersectionData) -> BigRational {
    ratio(d.d3, 6) - ratio(d.kd2, 4) + ratio(d.kkd + d.c2d, 12) + ratio(d.c1c2, 24)
}

/// Integrality assertion for Euler characteristics.
pub fn expect_integer(q: &BigRational) -> Result<BigInt> {
    if q.is_integer() {
        Ok(q.to_integer())
    } else {
        Err(Error::NotIntegral(q.to_string()))
    }
}

/// Topological and canonical invariants of a Fano surface with cyclic Picard
/// group.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FanoSurfaceNumbers {
    pub c2: i64,
    pub k2: i64,
}

/// With Betti numbers `(1, 0, 1, 0, 1)` the Euler number is 3, and Noether's
/// formula `K^2 + c_2 = 12 chi(O) = 12` gives `K^2 = 9`.
pub fn noether_surface_fano() -> FanoSurfaceNumbers {
    let betti = [1i64, 0, 1, 0, 1];
    let c2: i64 = betti.iter().enumerate().map(|(i, b)| if i % 2 == 0 { *b } else { -b }).sum();
    let chi_o = 1;
    FanoSurfaceNumbers { c2, k2: 12 * chi_o - c2 }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FanoNumericalInvariants {
    pub r: i64,
    pub h3: i64,
    /// `c_2(T) . H`
    pub c2h: i64,
    /// `c_3(Omega) = -chi_top = b_3 - 4`
    pub c3_omega: i64,
    pub b3: i64,
    /// Index one only.
    pub genus: Option<i64>,
    /// `dim |-K|`, index one only.
    pub anticanonical_dim: Option<i64>,
}

pub fn derive_fano_invariants(r: i64, h3: i64, b3: i64) -> Result<FanoNumericalInvariants> {
    if !(1..=4).contains(&r) {
        return Err(Error::InvalidArgument(format!("Fano index {r} outside 1..=4")));
    }
    if h3 < 1 {
        return Err(Error::InvalidArgument(format!("H^3 = {h3} must be positive")));
    }
    if b3 < 0 || b3 % 2 != 0 {
        return Err(Error::InvalidArgument(format!("b3 = {b3} must be even and nonnegative")));
    }
    if 24 % r != 0 {
        return Err(Error::NotIntegral(format!("24/{r}")));
    }
    let (genus, anticanonical_dim) = if r == 1 {
        if h3 % 2 != 0 {
            return Err(Error::InvalidArgument(format!("(-K)^3 = {h3} must be even")));
        }
        let g = (h3 + 2) / 2;
        (Some(g), Some(g + 1))
    } else {
        (None, None)
    };
    Ok(FanoNumericalInvariants { r, h3, c2h: 24 / r, c3_omega: b3 - 4, b3, genus, anticanonical_dim })
}

/// Genus `g` with `(-K)^3 = 2g - 2`; defined for index one only.
pub fn genus(r: i64, h3: i64) -> Result<i64> {
    if r != 1 {
        return Err(Error::InvalidArgument(format!("genus is defined for index 1, not {r}")));
    }
    if h3 % 2 != 0 || h3 < 2 {
        return Err(Error::InvalidArgument(format!("(-K)^3 = {h3} must be even and at least 2")));
    }
    Ok((h3 + 2) / 2)
}
