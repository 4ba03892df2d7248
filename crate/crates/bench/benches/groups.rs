use cobase_bench::bench_groups;
use cobase_core::constructions::build;
use cobase_core::group::DEFAULT_ENUMERATION_CAP;
use cobase_core::SupportKind;
use criterion::{criterion_group, criterion_main, Criterion};

fn enumeration(c: &mut Criterion) {
    let mut g = c.benchmark_group("enumerate");
    for spec in bench_groups() {
        let gens = build(&spec).unwrap();
        g.bench_function(spec.to_string(), |b| {
            b.iter(|| gens.enumerate(DEFAULT_ENUMERATION_CAP).unwrap())
        });
    }
    g.finish();
}

fn spectra(c: &mut Criterion) {
    let mut g = c.benchmark_group("support_spectrum");
    for spec in bench_groups() {
        let gens = build(&spec).unwrap();
        g.bench_function(spec.to_string(), |b| {
            b.iter(|| {
                // Supports are cached per group, so enumerate inside the loop.
                let group = gens.enumerate(DEFAULT_ENUMERATION_CAP).unwrap();
                group.support_spectrum(SupportKind::Projective).unwrap()
            })
        });
    }
    g.finish();
}

criterion_group!(benches, enumeration, spectra);
criterion_main!(benches);
