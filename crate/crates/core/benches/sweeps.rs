//! Parallel-vs-sequential comparison of the verification sweeps.

use criterion::{criterion_group, criterion_main, BatchSize, Criterion};

use qschur::klr::{check_pair_case, WordPolicy};
use qschur::ktheory::{decompose_two_segment_product, dim_class, dim_fund};
use qschur::segments::Segment;
use qschur::suites::segment_tuples;
use qschur::sweep::{sweep_par, sweep_seq};

fn pair_grid() -> Vec<Vec<Segment>> {
    segment_tuples(3, 2, 5)
}

fn pair_check(t: &Vec<Segment>) -> bool {
    qschur::klr::classify(t[0], t[1])
        .map(|_| check_pair_case(t[0], t[1], WordPolicy::MinDescent).is_ok())
        .unwrap_or(true)
}

fn ktheory_grid() -> Vec<(i64, Segment, Segment)> {
    let mut grid = Vec::new();
    for n in 3..=6i64 {
        for a in -2..=3 {
            for b in a..=(a + n - 2).min(3) {
                for ap in -2..=3 {
                    for bp in ap..=(ap + n - 2).min(3) {
                        grid.push((n, Segment::new(a, b), Segment::new(ap, bp)));
                    }
                }
            }
        }
    }
    grid
}

fn ktheory_check(t: &(i64, Segment, Segment)) -> u64 {
    let (n, s1, s2) = *t;
    let d = decompose_two_segment_product(s1, s2, n).unwrap();
    let total: u64 = d
        .iter()
        .map(|(c, m)| u64::from(*m) * dim_class(qschur::denom::Family::A1, c).unwrap())
        .sum();
    assert_eq!(
        total,
        dim_fund(s1.len(), n).unwrap() * dim_fund(s2.len(), n).unwrap()
    );
    total
}

fn bench_pair_cases(c: &mut Criterion) {
    let grid = pair_grid();
    let mut g = c.benchmark_group("pair_case_sweep");
    g.sample_size(10);
    g.bench_function("sequential", |b| {
        b.iter_batched(|| grid.clone(), |g| sweep_seq(&g, pair_check), BatchSize::SmallInput)
    });
    g.bench_function("parallel", |b| {
        b.iter_batched(|| grid.clone(), |g| sweep_par(&g, pair_check), BatchSize::SmallInput)
    });
    g.finish();
}

fn bench_ktheory(c: &mut Criterion) {
    let grid = ktheory_grid();
    let mut g = c.benchmark_group("ktheory_sweep");
    g.bench_function("sequential", |b| {
        b.iter_batched(
            || grid.clone(),
            |g| sweep_seq(&g, ktheory_check),
            BatchSize::SmallInput,
        )
    });
    g.bench_function("parallel", |b| {
        b.iter_batched(
            || grid.clone(),
            |g| sweep_par(&g, ktheory_check),
            BatchSize::SmallInput,
        )
    });
    g.finish();
}

criterion_group!(benches, bench_pair_cases, bench_ktheory);
criterion_main!(benches);
