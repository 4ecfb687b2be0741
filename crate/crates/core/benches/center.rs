use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use skewpbw::catalog::{self, Params};
use skewpbw::center::{center_basis_with, CenterOptions};
use skewpbw::coeff::Field;
use skewpbw::exec::Exec;

fn center(c: &mut Criterion) {
    let cases = [
        ("woronowicz", Field::RationalFunction, 4),
        ("conformal", Field::Rational, 5),
        ("qsymplectic", Field::RationalFunction, 3),
    ];
    let mut group = c.benchmark_group("center_basis");
    group.sample_size(10);
    for (id, field, d) in cases {
        let p = catalog::build(id, &Params::new(field)).unwrap();
        for exec in [Exec::Sequential, Exec::Parallel] {
            let opts = CenterOptions { exec, ..CenterOptions::default() };
            group.bench_with_input(BenchmarkId::new(format!("{exec:?}"), format!("{id}/D{d}")), &d, |b, &d| {
                b.iter(|| center_basis_with(&p, d, &opts).unwrap())
            });
        }
    }
    group.finish();
}

criterion_group!(benches, center);
criterion_main!(benches);
