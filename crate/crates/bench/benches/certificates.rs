use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use painleve_core::{analyze_nve, nve_potential, VorobevYablonskiTable};

fn vy_table(c: &mut Criterion) {
    c.bench_function("vy table to Q_12", |b| {
        b.iter(|| {
            let mut table = VorobevYablonskiTable::new(11);
            table.get(12).unwrap().degree()
        })
    });
}

fn potentials(c: &mut Criterion) {
    let mut group = c.benchmark_group("nve potential");
    for n in [2i64, 5, 8] {
        group.bench_with_input(BenchmarkId::from_parameter(n), &n, |b, &n| {
            b.iter(|| nve_potential(n, &mut VorobevYablonskiTable::default()).unwrap())
        });
    }
    group.finish();
}

fn certificates(c: &mut Criterion) {
    let mut group = c.benchmark_group("analyze");
    group.sample_size(20);
    let mut table = VorobevYablonskiTable::default();
    for n in [1i64, 3, 6, 8] {
        let problem = nve_potential(n, &mut table).unwrap();
        group.bench_with_input(BenchmarkId::from_parameter(n), &problem, |b, p| {
            b.iter(|| analyze_nve(p).unwrap().verdict)
        });
    }
    group.finish();
}

criterion_group!(benches, vy_table, potentials, certificates);
criterion_main!(benches);
