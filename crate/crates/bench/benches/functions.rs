use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use num_complex::Complex64;
use zetakit::fdbe::{ext_be, ext_fd, ExtParams, Strategy};
use zetakit::identity::{run_catalog, Backend, GridSize};
use zetakit::numeric::ln_gamma;
use zetakit::weyl::{weyl_transform, KernelSpec};
use zetakit::zeta::{hurwitz_zeta, lerch_phi, LerchParams};
use zetakit::{c64, real, EvalConfig};

fn zeta_family(c: &mut Criterion) {
    let cfg = EvalConfig::default();
    let mut g = c.benchmark_group("zeta");
    for s in [real(2.0), c64(0.5, 14.1), real(-3.5), c64(-6.0, 2.0)] {
        g.bench_with_input(BenchmarkId::new("hurwitz", s), &s, |b, &s| {
            b.iter(|| hurwitz_zeta(black_box(s), real(0.7), &cfg.series))
        });
    }
    for z in [real(0.5), real(-1.0), Complex64::from_polar(1.0, 0.3)] {
        g.bench_with_input(BenchmarkId::new("lerch", z), &z, |b, &z| {
            b.iter(|| lerch_phi(LerchParams::new(black_box(z), real(2.0), real(1.5)), &cfg.series))
        });
    }
    g.bench_function("ln_gamma", |b| b.iter(|| ln_gamma(black_box(c64(3.7, -12.0)))));
    g.finish();
}

fn extended(c: &mut Criterion) {
    let cfg = EvalConfig::default();
    let mut g = c.benchmark_group("extended");
    let p = ExtParams::real(0.5, 2.5, 1.0);
    for strat in [Strategy::XSeries, Strategy::WeylQuad, Strategy::Auto] {
        g.bench_with_input(BenchmarkId::new("ext_fd", strat), &strat, |b, &st| {
            b.iter(|| ext_fd(black_box(p), st, &cfg))
        });
        g.bench_with_input(BenchmarkId::new("ext_be", strat), &strat, |b, &st| {
            b.iter(|| ext_be(black_box(p), st, &cfg))
        });
    }
    let small = ExtParams::real(0.5, -0.5, 0.02);
    g.bench_function("ext_fd_power_series", |b| {
        b.iter(|| ext_fd(black_box(small), Strategy::PowerSeriesX, &cfg))
    });
    g.finish();
}

fn weyl(c: &mut Criterion) {
    let cfg = EvalConfig::default();
    let k = KernelSpec::fermi_dirac(real(0.0));
    let mut g = c.benchmark_group("weyl");
    for s in [real(0.3), real(1.5), c64(2.0, 3.0)] {
        g.bench_with_input(BenchmarkId::new("fermi", s), &s, |b, &s| {
            b.iter(|| weyl_transform(&k, black_box(s), 0.5, &cfg.quad))
        });
    }
    g.finish();
}

fn identities(c: &mut Criterion) {
    let backend = Backend::default();
    let mut g = c.benchmark_group("identities");
    g.sample_size(10);
    g.bench_function("catalog_reduced", |b| b.iter(|| run_catalog(None, &backend, GridSize::Reduced)));
    g.finish();
}

criterion_group!(benches, zeta_family, extended, weyl, identities);
criterion_main!(benches);
