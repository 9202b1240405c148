use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use rtv_bench::rgg;
use rtv_core::engine::{interleaved_multisource, Budget, SearchOptions};
use rtv_core::{
    build_candidate_table, roundtrip_brute, roundtrip_dynamic, roundtrip_revised,
    single_site_diagram, two_site_sum_diagram, PairRule,
};

fn classic(c: &mut Criterion) {
    let mut group = c.benchmark_group("classic");
    for n in [1000, 4000] {
        let (net, sites) = rgg(n, 0);
        group.bench_with_input(BenchmarkId::new("single", n), &n, |b, _| {
            b.iter(|| single_site_diagram(&net, &sites).unwrap())
        });
        group.bench_with_input(BenchmarkId::new("sum", n), &n, |b, _| {
            b.iter(|| two_site_sum_diagram(&net, &sites).unwrap())
        });
        group.bench_with_input(BenchmarkId::new("multisource_b2", n), &n, |b, _| {
            b.iter(|| {
                interleaved_multisource(
                    &net,
                    &sites,
                    Budget::Limited(2),
                    None,
                    SearchOptions::default(),
                )
                .unwrap()
            })
        });
    }
    group.finish();
}

fn roundtrip(c: &mut Criterion) {
    let mut group = c.benchmark_group("roundtrip");
    group.sample_size(10);
    for n in [1000, 4000] {
        let (net, sites) = rgg(n, 0);
        group.bench_with_input(BenchmarkId::new("table", n), &n, |b, _| {
            b.iter(|| build_candidate_table(&net, &sites, PairRule::AnyTwo).unwrap())
        });
        group.bench_with_input(BenchmarkId::new("brute", n), &n, |b, _| {
            b.iter(|| roundtrip_brute(&net, &sites).unwrap())
        });
        for bound in [0, 8] {
            group.bench_with_input(
                BenchmarkId::new(format!("revised_b{bound}"), n),
                &n,
                |b, _| b.iter(|| roundtrip_revised(&net, &sites, bound).unwrap()),
            );
        }
        group.bench_with_input(BenchmarkId::new("dynamic", n), &n, |b, _| {
            b.iter(|| roundtrip_dynamic(&net, &sites).unwrap())
        });
    }
    group.finish();
}

criterion_group!(benches, classic, roundtrip);
criterion_main!(benches);
