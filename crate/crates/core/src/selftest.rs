//! Golden-value checks plus a reduced run of the identity catalog.
//!
//! The report carries no timings so that repeated runs serialize to the
//! same bytes.

use num_complex::Complex64;
use serde::Serialize;

use crate::error::Result;
use crate::fdbe::{self, ExtParams, Strategy};
use crate::identity::{printed_form_notes, run_catalog, Backend, GridSize, IdentityReport, PrintedFormNote};
use crate::numeric::ln_gamma;
use crate::types::{c64, real, EvalConfig, EvalResult, Method};
use crate::weyl::{self, KernelSpec};
use crate::zeta::{self, LerchParams};

/// Tolerance for series and closed-form paths.
pub const SERIES_TOL: f64 = 1e-11;
/// Tolerance for paths that go through quadrature.
pub const QUAD_TOL: f64 = 1e-9;

type GoldenFn = fn(&EvalConfig) -> Result<EvalResult>;

/// A reference constant and the call that should reproduce it.
pub struct GoldenValue {
    pub name: &'static str,
    pub expected: Complex64,
    pub tol: f64,
    eval: GoldenFn,
}

impl GoldenValue {
    pub fn evaluate(&self, cfg: &EvalConfig) -> Result<EvalResult> {
        (self.eval)(cfg)
    }
}

const ZETA2: f64 = 1.644_934_066_848_226_4;
const ETA2: f64 = 0.822_467_033_424_113_2;
const LN2: f64 = std::f64::consts::LN_2;
const LI2_INV_E: f64 = 0.408_754_287_348_896_24;

fn fd(nu: f64, s: f64, x: f64, strat: Strategy, cfg: &EvalConfig) -> Result<EvalResult> {
    fdbe::ext_fd(ExtParams::real(nu, s, x), strat, cfg)
}

fn be(nu: f64, s: f64, x: f64, strat: Strategy, cfg: &EvalConfig) -> Result<EvalResult> {
    fdbe::ext_be(ExtParams::real(nu, s, x), strat, cfg)
}

/// Reference constants, in a fixed order.
pub fn golden_values() -> Vec<GoldenValue> {
    let g = |name, expected: f64, tol, eval: GoldenFn| GoldenValue {
        name,
        expected: real(expected),
        tol,
        eval,
    };
    vec![
        g("zeta(2)", ZETA2, SERIES_TOL, |c| zeta::riemann_zeta(real(2.0), &c.series)),
        g("zeta(0)", -0.5, SERIES_TOL, |c| zeta::riemann_zeta(real(0.0), &c.series)),
        g("zeta(-1)", -1.0 / 12.0, SERIES_TOL, |c| zeta::riemann_zeta(real(-1.0), &c.series)),
        g("eta(1)", LN2, SERIES_TOL, |c| zeta::dirichlet_eta(real(1.0), &c.series)),
        g("eta(2)", ETA2, SERIES_TOL, |c| zeta::dirichlet_eta(real(2.0), &c.series)),
        g("eta(0)", 0.5, SERIES_TOL, |c| zeta::dirichlet_eta(real(0.0), &c.series)),
        g("hurwitz_zeta(2,1/2)", 4.934_802_200_544_679, SERIES_TOL, |c| {
            zeta::hurwitz_zeta(real(2.0), real(0.5), &c.series)
        }),
        g("ext_fd(0,2,0)", ETA2, SERIES_TOL, |c| fd(0.0, 2.0, 0.0, Strategy::Auto, c)),
        g("ext_fd(0,2,0) weyl_quad", ETA2, QUAD_TOL, |c| fd(0.0, 2.0, 0.0, Strategy::WeylQuad, c)),
        g("ext_fd(1,2,0)", 0.177_532_966_575_886_8, SERIES_TOL, |c| fd(1.0, 2.0, 0.0, Strategy::Auto, c)),
        g("ext_be(0,2,0)", ZETA2, SERIES_TOL, |c| be(0.0, 2.0, 0.0, Strategy::Auto, c)),
        g("ext_be(0,2,0) weyl_quad", ZETA2, QUAD_TOL, |c| be(0.0, 2.0, 0.0, Strategy::WeylQuad, c)),
        g("ext_be(0,-1,0)", -1.0 / 12.0, SERIES_TOL, |c| be(0.0, -1.0, 0.0, Strategy::Auto, c)),
        g("ext_be(0.5,2,0)", 0.934_802_200_544_679, SERIES_TOL, |c| be(0.5, 2.0, 0.0, Strategy::Auto, c)),
        g("ext_be(0,2,1)", LI2_INV_E, SERIES_TOL, |c| be(0.0, 2.0, 1.0, Strategy::Auto, c)),
        g("polylog(e^-1,2)", LI2_INV_E, SERIES_TOL, |c| {
            zeta::polylog(real((-1.0f64).exp()), real(2.0), &c.series)
        }),
        g("lerch_phi(-1,2,1)", ETA2, SERIES_TOL, |c| {
            zeta::lerch_phi(LerchParams::new(real(-1.0), real(2.0), real(1.0)), &c.series)
        }),
        g("fd_classical(1,0)", LN2, SERIES_TOL, |c| fdbe::fd_classical(real(1.0), 0.0, c)),
        g("be_classical(1,-1)", 0.458_675_145_387_081_93, SERIES_TOL, |c| {
            fdbe::be_classical(real(1.0), -1.0, c)
        }),
        g("chi_ratio(2)", -19.739_208_802_178_716, SERIES_TOL, |_| zeta::chi_ratio(real(2.0))),
        g("ln_gamma(1/2)", 0.572_364_942_924_700_1, SERIES_TOL, |_| {
            Ok(EvalResult::exact(ln_gamma(real(0.5))?, Method::LogGamma))
        }),
        g("ext_fd(1,-0,pi i)", -1.5, SERIES_TOL, |c| {
            fdbe::ext_fd(
                ExtParams::new(real(1.0), real(0.0), c64(0.0, std::f64::consts::PI)),
                Strategy::NegIntBernoulli,
                c,
            )
        }),
        g("weyl[e^-3t](2;0)", 1.0 / 9.0, QUAD_TOL, |c| {
            weyl::weyl_transform(&KernelSpec::exponential(real(3.0)), real(2.0), 0.0, &c.quad)
        }),
        g("weyl[e^-3t](-1;0)", 3.0, QUAD_TOL, |c| {
            weyl::weyl_negative_order(&KernelSpec::exponential(real(3.0)), real(-1.0), 0.0, &c.quad)
        }),
        g("weyl[fermi](1;0)", LN2, QUAD_TOL, |c| {
            weyl::weyl_transform(&KernelSpec::fermi_dirac(real(0.0)), real(1.0), 0.0, &c.quad)
        }),
    ]
}

/// Outcome of one golden-value check.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct GoldenReport {
    pub name: String,
    #[serde(with = "crate::types::complex_serde")]
    pub expected: Complex64,
    #[serde(with = "crate::types::complex_serde")]
    pub computed: Complex64,
    pub rel_err: f64,
    pub tol: f64,
    pub strategy: Option<Method>,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

fn check_golden(g: &GoldenValue, cfg: &EvalConfig) -> GoldenReport {
    match g.evaluate(cfg) {
        Ok(r) => {
            let rel_err = (r.value - g.expected).norm() / g.expected.norm().max(1e-30);
            GoldenReport {
                name: g.name.into(),
                expected: g.expected,
                computed: r.value,
                rel_err,
                tol: g.tol,
                strategy: Some(r.strategy),
                pass: rel_err <= g.tol,
                error: None,
            }
        }
        Err(e) => GoldenReport {
            name: g.name.into(),
            expected: g.expected,
            computed: Complex64::new(f64::NAN, f64::NAN),
            rel_err: f64::INFINITY,
            tol: g.tol,
            strategy: None,
            pass: false,
            error: Some(e.to_string()),
        },
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct SelftestOptions {
    /// Use the smallest identity grids.
    pub quick: bool,
    pub backend: Backend,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SelftestReport {
    pub golden: Vec<GoldenReport>,
    pub identities: Vec<IdentityReport>,
    pub printed_forms: Vec<PrintedFormNote>,
    pub golden_passed: usize,
    pub identities_passed: usize,
    pub pass: bool,
}

pub fn run_selftest(opts: &SelftestOptions) -> SelftestReport {
    let golden: Vec<GoldenReport> = golden_values().iter().map(|g| check_golden(g, &opts.backend.cfg)).collect();
    let size = if opts.quick { GridSize::Quick } else { GridSize::Reduced };
    let identities = run_catalog(None, &opts.backend, size);
    let printed_forms = printed_form_notes(&opts.backend);
    let golden_passed = golden.iter().filter(|g| g.pass).count();
    let identities_passed = identities.iter().filter(|r| r.pass).count();
    let pass = golden_passed == golden.len() && identities_passed == identities.len();
    SelftestReport {
        golden,
        identities,
        printed_forms,
        golden_passed,
        identities_passed,
        pass,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::CompensatedSum;

    fn partial_zeta(s: f64, n: usize) -> f64 {
        // Sum plus the first Euler-Maclaurin tail terms.
        let mut acc = CompensatedSum::new();
        for k in 1..n {
            acc.add(real((k as f64).powf(-s)));
        }
        let nf = n as f64;
        let tail = nf.powf(1.0 - s) / (s - 1.0) + 0.5 * nf.powf(-s) + s / 12.0 * nf.powf(-s - 1.0);
        acc.value().re + tail
    }

    fn simpson<F: Fn(f64) -> f64>(f: F, a: f64, b: f64, n: usize) -> f64 {
        let h = (b - a) / n as f64;
        let mut acc = f(a) + f(b);
        for i in 1..n {
            let w = if i % 2 == 1 { 4.0 } else { 2.0 };
            acc += w * f(a + i as f64 * h);
        }
        acc * h / 3.0
    }

    #[test]
    fn frozen_constants_match_oracles() {
        let z2 = partial_zeta(2.0, 100_000);
        assert!((z2 - ZETA2).abs() < 1e-13);
        let alt: f64 = (1..200_000).map(|k| if k % 2 == 1 { 1.0 } else { -1.0 } / (k as f64).powi(2)).sum();
        assert!((alt - ETA2).abs() < 1e-10);
        let li2: f64 = (1..200).map(|k| (-(k as f64)).exp() / (k * k) as f64).sum();
        assert!((li2 - LI2_INV_E).abs() < 1e-16);
        let lg = simpson(|u: f64| 2.0 * (-u * u).exp(), 0.0, 12.0, 20_000).ln();
        assert!((lg - 0.572_364_942_924_700_1).abs() < 1e-13);
        let li1 = -(1.0 - (-1.0f64).exp()).ln();
        assert!((li1 - 0.458_675_145_387_081_93).abs() < 1e-16);
        let s212 = 3.0 * partial_zeta(2.0, 100_000);
        assert!((s212 - 4.934_802_200_544_679).abs() < 1e-12);
        assert!((s212 - 4.0 - 0.934_802_200_544_679).abs() < 1e-12);
        assert!((1.0 - ETA2 - 0.177_532_966_575_886_8).abs() < 1e-16);
        // chi(2) = zeta(2)/zeta(-1)
        assert!((ZETA2 * -12.0 - -19.739_208_802_178_716).abs() < 1e-13);
        let fermi = simpson(|t: f64| 1.0 / (t.exp() + 1.0), 0.0, 60.0, 20_000);
        assert!((fermi - LN2).abs() < 1e-12);
    }

    #[test]
    fn golden_values_pass() {
        let cfg = EvalConfig::default();
        for g in golden_values() {
            let r = check_golden(&g, &cfg);
            assert!(r.pass, "{}: {:?} vs {} ({:?})", r.name, r.computed, r.expected, r.error);
        }
    }

    #[test]
    fn quick_selftest_is_deterministic() {
        let opts = SelftestOptions { quick: true, ..Default::default() };
        let a = serde_json::to_string(&run_selftest(&opts)).unwrap();
        let b = serde_json::to_string(&run_selftest(&opts)).unwrap();
        assert_eq!(a, b);
        assert!(run_selftest(&opts).pass);
    }
}
