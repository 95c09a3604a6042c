use fanocalc::degree_bound::{
    degree_from_multiplier, e_polynomial, e_value, e_value_via_chern, feasibility_witness, feasible_multipliers,
    feasible_multipliers_with, generic_iso_exists, max_multiplier, ramification_feasibility, MorphismScenario,
    SourceInvariants,
};
use fanocalc::fano_db::{lookup, FanoDatabase};
use fanocalc::Strategy as Execution;
use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;

#[test]
fn e_is_the_quadratic_for_every_record_with_b3() {
    for rec in FanoDatabase::embedded().records() {
        let Ok([a, b, c]) = e_polynomial(rec) else { continue };
        for l in 1..=6 {
            assert_eq!(e_value(rec, l).unwrap(), a * l * l + b * l + c);
            if let Ok(v) = e_value_via_chern(rec, l) {
                assert_eq!(v, e_value(rec, l).unwrap(), "{}", rec.name);
            }
        }
    }
}

#[test]
fn self_map_of_quartic_is_tight_at_m_one() {
    let y = lookup("V4-quartic").unwrap();
    let x = SourceInvariants::from_fano(y).unwrap();
    let s = MorphismScenario { source: x, target: y, twist: 2, multiplier: 1 };
    let (lhs, rhs) = s.chern_inequality_sides().unwrap();
    assert_eq!(lhs, rhs);
    assert_eq!(e_value(y, 2).unwrap(), 56 + 48 - 16);
    assert_eq!(max_multiplier(&x, y, 2).unwrap(), 1);
}

fn rational_containment(kappa: i64, r_y: i64, k: i64, m: u64) -> bool {
    // kappa >= m (k/2 - r_Y)
    BigRational::from_integer(BigInt::from(kappa))
        >= BigRational::from_integer(BigInt::from(m)) * (BigRational::new(BigInt::from(k), BigInt::from(2)) - BigInt::from(r_y))
}

proptest! {
    #[test]
    fn ramification_matches_rational_inequality(kappa in -10i64..=10, r_y in 1i64..=2, k in 1i64..=12) {
        let x = SourceInvariants::new(2, kappa, 0, 0, true).unwrap();
        let verdict = ramification_feasibility(r_y, k, &x).unwrap();
        for m in 1..=60u64 {
            prop_assert_eq!(verdict.containment_possible(m), rational_containment(kappa, r_y, k, m), "m = {}", m);
        }
    }

    #[test]
    fn fano_sources_never_contain_for_large_surfaces(kappa in -4i64..=-1, r_y in 1i64..=2, extra in 0i64..6) {
        let x = SourceInvariants::new(2, kappa, 0, 0, true).unwrap();
        let verdict = ramification_feasibility(r_y, 2 * r_y + extra, &x).unwrap();
        prop_assert_eq!(verdict.to_string(), "infeasible_for_all_m");
    }

    #[test]
    fn max_multiplier_is_the_last_passing_scenario(c3 in -100i64..200_000, c2 in 0i64..100, kappa in -4i64..4, h3 in 1i64..20) {
        let y = lookup("V4-quartic").unwrap();
        let x = SourceInvariants::new(h3, kappa, c2, c3, true).unwrap();
        let m = max_multiplier(&x, y, 2).unwrap();
        let at = |m| MorphismScenario { source: x, target: y, twist: 2, multiplier: m }.passes_chern_inequality().unwrap();
        if m > 0 {
            prop_assert!(at(m));
        }
        for above in m + 1..m + 20 {
            prop_assert!(!at(above));
        }
    }

    #[test]
    fn max_multiplier_monotone_in_euler_number(c3 in 0i64..100_000, extra in 0i64..100_000) {
        let y = lookup("V4-quartic").unwrap();
        let lo = SourceInvariants::new(4, -1, 24, c3, true).unwrap();
        let hi = SourceInvariants::new(4, -1, 24, c3 + extra, true).unwrap();
        prop_assert!(max_multiplier(&lo, y, 2).unwrap() <= max_multiplier(&hi, y, 2).unwrap());
    }

    #[test]
    fn generic_iso_reflexive_and_transitive(a in -5i64..5, b in -5i64..5, c in 0i64..4, d in 0i64..4) {
        prop_assert!(generic_iso_exists((a, b), (a, b)));
        prop_assert!(generic_iso_exists((a, b), (b, a)));
        prop_assert!(generic_iso_exists((a, b), (a.max(b) + c, a.min(b) + d)));
    }

    #[test]
    fn degree_is_integral_or_rejected(m in 1u64..50, h3x in 1i64..30, h3y in 1i64..30) {
        let num = BigInt::from(m).pow(3) * h3x;
        match degree_from_multiplier(m, h3x, h3y) {
            Ok(d) => prop_assert_eq!(d * h3y, num),
            Err(_) => prop_assert!(num % h3y != BigInt::from(0)),
        }
    }

    #[test]
    fn feasible_multipliers_have_witnesses(r_x in 1i64..=2, r_y in 1i64..=2, va in any::<bool>(), hi in 1u64..12) {
        let set = feasible_multipliers(r_x, r_y, va, 1..=hi).unwrap();
        prop_assert_eq!(&set, &feasible_multipliers_with(Execution::Sequential, r_x, r_y, va, 1..=hi).unwrap());
        for m in 1..=hi {
            let w = feasibility_witness(r_x, r_y, va, m).unwrap();
            prop_assert_eq!(set.contains(&m), w.is_some());
            if let Some(w) = w {
                prop_assert!(generic_iso_exists(w.source.pair(), w.pulled_back));
            }
        }
    }
}
