//! Universal symmetric/exterior power formulas checked against explicit
//! enumeration of Chern roots on split bundles.

use fanocalc::chern::{dual, ext_power, sym_power, twist_line, whitney_sum, FormalBundle};
use fanocalc::ring::{GradedRing, TruncatedLineRing, WeightedPolyRing};
use num_bigint::BigInt;
use proptest::prelude::*;

fn multisets(n: usize, k: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>, strict: bool) {
    if cur.len() == k {
        out.push(cur.clone());
        return;
    }
    for i in start..n {
        cur.push(i);
        multisets(n, k, if strict { i + 1 } else { i }, cur, out, strict);
        cur.pop();
    }
}

/// Split bundle whose roots are the sums of `roots` over `k`-multisets
/// (or `k`-subsets when `strict`).
fn power_by_roots<R: GradedRing>(ring: &R, roots: &[R::Elem], k: usize, strict: bool) -> FormalBundle<R> {
    let mut idx = Vec::new();
    multisets(roots.len(), k, 0, &mut Vec::new(), &mut idx, strict);
    let classes: Vec<R::Elem> =
        idx.iter().map(|s| s.iter().fold(ring.zero(), |acc, &i| ring.add(&acc, &roots[i]))).collect();
    if classes.is_empty() {
        return FormalBundle::trivial(ring.clone(), 0);
    }
    FormalBundle::split(ring.clone(), &classes).unwrap()
}

#[test]
fn generic_roots_in_polynomial_ring() {
    for rank in 1..=4usize {
        let trunc = 4;
        let ring = WeightedPolyRing::linear(rank, trunc);
        let roots: Vec<_> = (0..rank).map(|i| ring.generator(i)).collect();
        let bundle = FormalBundle::split(ring.clone(), &roots).unwrap();
        for k in 1..=3 {
            assert_eq!(sym_power(&bundle, k).unwrap(), power_by_roots(&ring, &roots, k, false), "Sym^{k}, rank {rank}");
            if k <= rank {
                assert_eq!(ext_power(&bundle, k).unwrap(), power_by_roots(&ring, &roots, k, true), "Ext^{k}, rank {rank}");
            }
        }
    }
}

#[test]
fn integer_roots_on_projective_space() {
    let ring = TruncatedLineRing::projective_space(6);
    let shapes: [&[i64]; 4] = [&[1, 2], &[-1, 0, 3], &[2, 2, -5, 1], &[0, 0, 0]];
    for degrees in shapes {
        let roots: Vec<_> = degrees.iter().map(|&d| ring.monomial(d, 1)).collect();
        let bundle = FormalBundle::split(ring.clone(), &roots).unwrap();
        for k in 1..=3 {
            assert_eq!(sym_power(&bundle, k).unwrap(), power_by_roots(&ring, &roots, k, false));
            if k <= degrees.len() {
                assert_eq!(ext_power(&bundle, k).unwrap(), power_by_roots(&ring, &roots, k, true));
            }
        }
    }
}

fn line_bundle_degrees() -> impl Strategy<Value = Vec<i64>> {
    proptest::collection::vec(-6i64..=6, 1..=4)
}

fn split_on_p5(degrees: &[i64]) -> (TruncatedLineRing, FormalBundle<TruncatedLineRing>) {
    let ring = TruncatedLineRing::projective_space(5);
    let roots: Vec<_> = degrees.iter().map(|&d| ring.monomial(d, 1)).collect();
    let b = FormalBundle::split(ring.clone(), &roots).unwrap();
    (ring, b)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn whitney_of_split_bundles(a in line_bundle_degrees(), b in line_bundle_degrees()) {
        let (_, ea) = split_on_p5(&a);
        let (_, eb) = split_on_p5(&b);
        let joined: Vec<i64> = a.iter().chain(&b).copied().collect();
        prop_assert_eq!(whitney_sum(&ea, &eb).unwrap(), split_on_p5(&joined).1);
    }

    #[test]
    fn dual_commutes_with_powers(d in line_bundle_degrees(), k in 1usize..=3) {
        let (_, e) = split_on_p5(&d);
        prop_assert_eq!(dual(&sym_power(&e, k).unwrap()), sym_power(&dual(&e), k).unwrap());
        if k <= d.len() {
            prop_assert_eq!(dual(&ext_power(&e, k).unwrap()), ext_power(&dual(&e), k).unwrap());
        }
    }

    #[test]
    fn twist_shifts_every_root(d in line_bundle_degrees(), t in -4i64..=4) {
        let (ring, e) = split_on_p5(&d);
        let shifted: Vec<i64> = d.iter().map(|x| x + t).collect();
        prop_assert_eq!(twist_line(&e, &ring.monomial(t, 1)).unwrap(), split_on_p5(&shifted).1);
    }

    #[test]
    fn top_exterior_power_is_determinant(d in line_bundle_degrees()) {
        let (ring, e) = split_on_p5(&d);
        let det = ext_power(&e, d.len()).unwrap();
        prop_assert_eq!(det.rank(), 1);
        prop_assert_eq!(det.chern_class(1).unwrap(), ring.monomial(BigInt::from(d.iter().sum::<i64>()), 1));
    }
}
