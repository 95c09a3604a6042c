use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};

use fanocalc::degree_bound::{max_multiplier_with, SourceInvariants};
use fanocalc::fano_db::lookup;
use fanocalc::schubert::{multiply_with, pairing_table_with, ChowElement, GrassmannContext};
use fanocalc::wps::{is_generated_with, WeightVector};
use fanocalc::Strategy;

const STRATEGIES: [Strategy; 2] = [Strategy::Sequential, Strategy::Parallel];

fn schubert(c: &mut Criterion) {
    let ctx = GrassmannContext::new(4, 9).unwrap();
    let mut x = ChowElement::one(ctx);
    for a in 1..=3 {
        x = x.add(&ChowElement::special(ctx, a)).unwrap();
    }
    let mut group = c.benchmark_group("multiply G(4,9)");
    for s in STRATEGIES {
        group.bench_with_input(BenchmarkId::from_parameter(format!("{s:?}")), &s, |b, &s| {
            b.iter(|| multiply_with(s, black_box(&x), black_box(&x)).unwrap())
        });
    }
    group.finish();

    let ctx = GrassmannContext::new(3, 7).unwrap();
    let mut group = c.benchmark_group("pairing table G(3,7)");
    for s in STRATEGIES {
        group.bench_with_input(BenchmarkId::from_parameter(format!("{s:?}")), &s, |b, &s| {
            b.iter(|| pairing_table_with(s, black_box(ctx)))
        });
    }
    group.finish();
}

fn degree_bound(c: &mut Criterion) {
    let y = lookup("V4-quartic").unwrap();
    let x = SourceInvariants::new(4, -1, 24, 5_000_000, true).unwrap();
    let mut group = c.benchmark_group("max multiplier");
    for s in STRATEGIES {
        group.bench_with_input(BenchmarkId::from_parameter(format!("{s:?}")), &s, |b, &s| {
            b.iter(|| max_multiplier_with(s, black_box(&x), y, 2).unwrap())
        });
    }
    group.finish();
}

fn weighted(c: &mut Criterion) {
    let w: WeightVector = "2,3,5,7,11,13,17,19,23,29,31,37".parse().unwrap();
    let mut group = c.benchmark_group("is_generated 12 weights");
    for s in STRATEGIES {
        group.bench_with_input(BenchmarkId::from_parameter(format!("{s:?}")), &s, |b, &s| {
            b.iter(|| is_generated_with(s, black_box(&w), 41).unwrap())
        });
    }
    group.finish();
}

criterion_group!(benches, schubert, degree_bound, weighted);
criterion_main!(benches);
