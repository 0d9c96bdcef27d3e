use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use std::hint::black_box;
use std::time::Duration;
use wcpkit_core::equivalence::transport_structure;
use wcpkit_core::fixtures::{self, make_group_algebra_crossed, make_pair_groupoid_wha};
use wcpkit_core::{field, wcc, wcp};

fn bench_build(c: &mut Criterion) {
    let mut group = c.benchmark_group("build");
    group.measurement_time(Duration::from_secs(5));
    for n in [2, 3] {
        let b = make_pair_groupoid_wha(n).unwrap();
        let q = b.quadruple().clone();
        group.bench_with_input(BenchmarkId::new("nabla_pgpd", n), &q, |bch, q| {
            bch.iter(|| wcp::compute_nabla(black_box(q)).unwrap())
        });
        group.bench_with_input(BenchmarkId::new("crossed_product_pgpd", n), &q, |bch, q| {
            bch.iter(|| wcp::build_crossed_product(black_box(q)).unwrap())
        });
    }
    let t = field::int(2);
    group.bench_function("fixture_cz3", |bch| {
        bch.iter(|| make_group_algebra_crossed(3, black_box(&t)).unwrap())
    });
    group.finish();
}

fn bench_checks(c: &mut Criterion) {
    let mut group = c.benchmark_group("checks");
    group.sample_size(20);
    let b = make_pair_groupoid_wha(3).unwrap();
    group.bench_function("check_quadruple_pgpd3", |bch| {
        bch.iter(|| wcp::check_quadruple(black_box(b.quadruple())).unwrap())
    });
    let d = fixtures::dual_fixture(&b).unwrap();
    group.bench_function("dual_crosscheck_pgpd3", |bch| {
        bch.iter(|| wcc::dual_crosscheck(black_box(&d.coquadruple), Some(&d.ups)).unwrap())
    });
    group.finish();
}

fn bench_transport(c: &mut Criterion) {
    let mut group = c.benchmark_group("transport");
    group.sample_size(20);
    let b = make_pair_groupoid_wha(2).unwrap();
    let gp =
        fixtures::groupoid_scaling_gauge(&b, |i, j| field::int((i + 2 * j + 1) as i64)).unwrap();
    group.bench_function("pgpd2_scaling", |bch| {
        bch.iter(|| transport_structure(black_box(&b.product), &gp).unwrap())
    });
    let cz = fixtures::by_name("CZ2TW").unwrap();
    let sg = fixtures::scalar_gauge(&cz, &field::int(3)).unwrap();
    group.bench_function("cz2tw_scalar", |bch| {
        bch.iter(|| transport_structure(black_box(&cz.product), &sg).unwrap())
    });
    group.finish();
}

criterion_group!(benches, bench_build, bench_checks, bench_transport);
criterion_main!(benches);
