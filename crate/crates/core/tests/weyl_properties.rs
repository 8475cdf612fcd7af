use num_complex::Complex64;
use zetakit::fdbe::{ext_fd, ExtParams, Strategy};
use zetakit::weyl::{taylor_representation, weyl_transform, Decay, KernelSpec};
use zetakit::{real, EvalConfig, QuadratureConfig};

fn rel(a: Complex64, b: Complex64) -> f64 {
    (a - b).norm() / a.norm().max(b.norm()).max(1e-30)
}

#[test]
fn composition_of_orders() {
    let q = QuadratureConfig::default();
    let omega = KernelSpec::exponential(real(1.0));
    for (s, beta) in [(0.5, 0.5), (1.0, 1.0), (1.5, 0.7)] {
        let inner_kernel = omega.clone();
        let inner = KernelSpec::from_fn("W^-beta[exp(-t)]", Decay::Rapid, move |t| {
            weyl_transform(&inner_kernel, real(beta), t, &q)
                .map(|r| r.value)
                .unwrap_or(Complex64::new(f64::NAN, f64::NAN))
        });
        for x in [0.0, 0.5, 2.0] {
            let direct = weyl_transform(&omega, real(s + beta), x, &q).unwrap().value;
            let nested = weyl_transform(&inner, real(s), x, &q).unwrap().value;
            assert!(rel(direct, nested) <= 1e-8, "s={s} beta={beta} x={x}: {direct} vs {nested}");
        }
    }
}

#[test]
fn shift_consistency() {
    let q = QuadratureConfig::default();
    let k = KernelSpec::fermi_dirac(real(0.0));
    for (s, x) in [(real(0.5), 0.3), (real(1.0), 1.0), (real(2.0), 0.25), (Complex64::new(1.5, 1.0), 2.0), (real(3.0), 4.0)] {
        let a = weyl_transform(&k, s, x, &q).unwrap().value;
        let b = weyl_transform(&k.shifted(x), s, 0.0, &q).unwrap().value;
        assert!(rel(a, b) <= 1e-10, "s={s} x={x}");
    }
}

#[test]
fn taylor_matches_transform() {
    let cfg = EvalConfig::default();
    let s = 2.0;
    let coeffs: Vec<Complex64> = (0..40)
        .map(|n| ext_fd(ExtParams::real(0.0, s - n as f64, 0.0), Strategy::Auto, &cfg).unwrap().value)
        .collect();
    let k = KernelSpec::fermi_dirac(real(0.0));
    for x in [0.1, 0.5] {
        let t = taylor_representation(&coeffs, x, 30).unwrap();
        let w = weyl_transform(&k, real(s), x, &cfg.quad).unwrap();
        assert!(rel(t.value, w.value) <= 1e-8, "x={x}: {} vs {}", t.value, w.value);
    }
}
