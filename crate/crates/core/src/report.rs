//! The enumerative chain for lines on a smooth cubic threefold `X` in `P^4`.
//!
//! Lines on `X` are the zeros of a section of `S^3 U^*` on `G(2,5)`, so their
//! class is `c_4(S^3 U^*)`. Lines through a point of `X` are counted by
//! cutting with `sigma_2` (lines meeting a plane) and dividing by `deg X`.
//! On the surface `F` of lines, the curve `C_l` of lines meeting a general
//! line `l` has `C_l^2 = 5` and maps to `l` with degree 5 (six lines through
//! a point, one of them `l`). Adjunction with `K_F = O_F(1) = 3 C_l` gives
//! `deg K_{C_l} = 4 C_l^2`, and Hurwitz gives the ramification degree that
//! makes `D ~ 30H`.

use std::fmt;

use num_bigint::BigInt;
use num_traits::ToPrimitive;

use crate::chern::{sym_power, FormalBundle};
use crate::error::Result;
use crate::fano_db::lookup;
use crate::partition::Partition;
use crate::ring::{GradedRing, WeightedPolyRing};
use crate::schubert::{integrate, multiply, tautological_dual, ChowElement, GrassmannContext};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinesOnCubicReport {
    pub lines_class: ChowElement,
    /// `9 c_2 (2 c_1^2 + c_2)` evaluated in the Chow ring of `G(2,5)`.
    pub symbolic_class: ChowElement,
    /// `c_4(S^3 V)` for a rank-2 `V`, as a polynomial in `c_1(V), c_2(V)`.
    pub symbolic_formula: String,
    pub lines_meeting_plane: BigInt,
    pub cubic_degree: i64,
    pub lines_through_point: BigInt,
    pub cone_self_intersection: i64,
    pub projection_degree: i64,
    /// `deg K_{C_l} = (K_F + C_l) . C_l = 4 C_l^2`
    pub canonical_degree: i64,
    /// `deg K_{C_l} - deg(pi) deg K_l`
    pub ramification_degree: i64,
    pub expected_special_multiple: Option<i64>,
    pub special_multiple_lower_bound: Option<i64>,
    /// `integrate(c_4(S^3 U^*))` on `G(2,4)`: lines on a cubic surface.
    pub cubic_surface_lines: BigInt,
}

fn symbolic_sym3_top() -> Result<(String, bool)> {
    let ring = WeightedPolyRing::new(vec![1, 2], 4)?;
    let (c1, c2) = (ring.generator(0), ring.generator(1));
    let b = FormalBundle::new(ring.clone(), 2, vec![c1.clone(), c2.clone()])?;
    let top = sym_power(&b, 3)?.top_chern();
    let nine = BigInt::from(9);
    let expected = ring.scale(&ring.mul(&c2, &ring.add(&ring.scale(&ring.mul(&c1, &c1), &BigInt::from(2)), &c2)), &nine);
    Ok((top.to_string().replace('x', "c"), top == expected))
}

pub fn lines_on_cubic_threefold() -> Result<LinesOnCubicReport> {
    let ctx = GrassmannContext::new(2, 5)?;
    let udual = tautological_dual(ctx);
    let lines_class = sym_power(&udual, 3)?.top_chern();

    let c1 = udual.chern_class(1)?;
    let c2 = udual.chern_class(2)?;
    let two_c1_sq = ctx.scale(&ctx.mul(&c1, &c1), &BigInt::from(2));
    let symbolic_class = ctx.scale(&ctx.mul(&c2, &ctx.add(&two_c1_sq, &c2)), &BigInt::from(9));
    let (symbolic_formula, _) = symbolic_sym3_top()?;

    let lines_meeting_plane = integrate(&multiply(&lines_class, &ChowElement::special(ctx, 2))?)?;
    let cubic_degree: i64 = 3;
    let lines_through_point = &lines_meeting_plane / cubic_degree;

    // two meeting lines share all other lines through their common point
    let others = lines_through_point.to_i64().expect("small count") - 1;
    let cone_self_intersection = others;
    let projection_degree = others;
    let canonical_degree = 4 * cone_self_intersection;
    let line_canonical = -2;
    let ramification_degree = canonical_degree - projection_degree * line_canonical;

    let cubic = lookup("A3")?;
    let surface = GrassmannContext::new(2, 4)?;
    let cubic_surface_lines = integrate(&sym_power(&tautological_dual(surface), 3)?.top_chern())?;

    Ok(LinesOnCubicReport {
        lines_class,
        symbolic_class,
        symbolic_formula,
        lines_meeting_plane,
        cubic_degree,
        lines_through_point,
        cone_self_intersection,
        projection_degree,
        canonical_degree,
        ramification_degree,
        expected_special_multiple: cubic.special_surface_multiple(),
        special_multiple_lower_bound: cubic.special_surface_lower_bound(),
        cubic_surface_lines,
    })
}

impl LinesOnCubicReport {
    /// The class identity and the integer chain all hold.
    pub fn is_consistent(&self) -> bool {
        let expected = ChowElement::from_terms(
            self.lines_class.context(),
            [
                (Partition::from_sorted(vec![3, 1]), BigInt::from(18)),
                (Partition::from_sorted(vec![2, 2]), BigInt::from(27)),
            ],
        );
        expected.is_ok_and(|e| e == self.lines_class)
            && self.lines_class == self.symbolic_class
            && &self.lines_through_point * self.cubic_degree == self.lines_meeting_plane
            && self.expected_special_multiple == Some(self.ramification_degree)
    }
}

impl fmt::Display for LinesOnCubicReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "c4(S^3 U*) on G(2,5)  = {}", self.lines_class)?;
        writeln!(f, "9 c2 (2 c1^2 + c2)    = {}", self.symbolic_class)?;
        writeln!(f, "c4(S^3 V), rank V = 2 = {}", self.symbolic_formula)?;
        writeln!(f, "lines meeting a plane = {}", self.lines_meeting_plane)?;
        writeln!(f, "lines through a general point = {} / {} = {}", self.lines_meeting_plane, self.cubic_degree, self.lines_through_point)?;
        writeln!(f, "C_l^2 = {}, deg(C_l -> l) = {}", self.cone_self_intersection, self.projection_degree)?;
        writeln!(f, "deg K_(C_l) = {}", self.canonical_degree)?;
        writeln!(
            f,
            "ramification = {} - {} * (-2) = {}",
            self.canonical_degree, self.projection_degree, self.ramification_degree
        )?;
        match (self.expected_special_multiple, self.special_multiple_lower_bound) {
            (Some(k), Some(lb)) => writeln!(f, "D ~ {k}H (certified lower bound {lb})")?,
            (Some(k), None) => writeln!(f, "D ~ {k}H")?,
            _ => writeln!(f, "D: no tabulated multiple")?,
        }
        write!(f, "lines on a cubic surface = {}", self.cubic_surface_lines)
    }
}
