use std::f64::consts::PI;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_traits::{One, Pow};
use serde::Serialize;

use super::exact::{euler_poly_generating, small_rational};
use super::{thin, Backend, GridPoint, GridSize, IdentitySpec};
use crate::error::{Error, Result};
use crate::fdbe::Strategy;
use crate::numeric::{bernoulli_number_f64, bernoulli_poly_exact, Rational};
use crate::types::{c64, real};
use crate::weyl::{Decay, KernelSpec};

const NU: [f64; 4] = [0.0, 0.5, 1.0, 2.3];
const X: [f64; 4] = [0.0, 0.25, 1.0, 3.0];

fn s_grid() -> [Complex64; 4] {
    [real(1.5), real(2.0), real(3.0), c64(2.5, 2.0)]
}

fn grid_nsx(nus: &[Complex64], ss: &[Complex64], xs: &[Complex64]) -> Vec<GridPoint> {
    let mut out = Vec::new();
    for &nu in nus {
        for &s in ss {
            for &x in xs {
                out.push(GridPoint::new().with("nu", nu).with("s", s).with("x", x));
            }
        }
    }
    out
}

fn reals(v: &[f64]) -> Vec<Complex64> {
    v.iter().map(|&r| real(r)).collect()
}

fn default_grid() -> Vec<GridPoint> {
    grid_nsx(&reals(&NU), &s_grid(), &reals(&X))
}

/// Series paths at x = 0 need Re(s) > 1.
fn x_zero_needs_s_above_one(p: &GridPoint) -> bool {
    p.c("x") != Complex64::new(0.0, 0.0) || p.r("s") > 1.0
}

fn pow2(e: Complex64) -> Complex64 {
    (e * std::f64::consts::LN_2).exp()
}

fn rational_param(p: &GridPoint, name: &str) -> Result<Rational> {
    let v = p.r(name);
    small_rational(v).ok_or_else(|| Error::domain(format!("{name}={v} is not a small rational")))
}

fn index_param(p: &GridPoint, name: &str) -> usize {
    p.r(name) as usize
}

/// Σ_n η(s-n) x^n/n! (the x-power series of F_{s-1}).
fn eta_series(b: &Backend, s: Complex64, x: f64) -> Result<Complex64> {
    let mut acc = Complex64::new(0.0, 0.0);
    let mut factor = 1.0;
    let mut small = 0;
    for n in 0..=crate::fdbe::MAX_POWER_TERMS {
        if n > 0 {
            factor *= x / n as f64;
        }
        let term = b.eta(s - n as f64)? * factor;
        acc += term;
        if term.norm() <= 1e-17 * acc.norm() {
            small += 1;
            if small == 2 {
                return Ok(acc);
            }
        } else {
            small = 0;
        }
    }
    Err(Error::convergence(format!("eta series not converged at x={x}")))
}

/// Ψ_b(s; y) through the Lerch bridge, valid for any b with b+1 off the poles.
fn be_via_lerch(b: &Backend, nu: Complex64, s: Complex64, y: Complex64) -> Result<Complex64> {
    let a = nu + 1.0;
    Ok((-a * y).exp() * b.lerch((-y).exp(), s, a)?)
}

/// Ψ_b(s; 0) with b possibly below zero.
fn be_at_zero(b: &Backend, nu: Complex64, s: Complex64) -> Result<Complex64> {
    if nu.re >= 0.0 {
        b.ext_be(nu, s, real(0.0), Strategy::Auto)
    } else {
        b.hurwitz(s, nu + 1.0)
    }
}

fn all_entries() -> Vec<IdentitySpec> {
    let mut v = Vec::new();

    v.push(
        IdentitySpec::numeric(
            "bisection-6.1",
            "Phi_{2nu}(s;x) = Psi_{2nu}(s;x) - 2^{1-s} Psi_nu(s;2x)",
            1e-10,
            default_grid(),
            |b, p| b.ext_fd(2.0 * p.c("nu"), p.c("s"), p.c("x"), Strategy::Auto),
            |b, p| {
                let (nu, s, x) = (p.c("nu"), p.c("s"), p.c("x"));
                Ok(b.ext_be(2.0 * nu, s, x, Strategy::Auto)? - pow2(1.0 - s) * b.ext_be(nu, s, 2.0 * x, Strategy::Auto)?)
            },
        )
        .guarded(x_zero_needs_s_above_one),
    );

    let mut s612 = s_grid().to_vec();
    s612.extend([real(0.5), c64(0.5, 3.0)]);
    v.push(IdentitySpec::numeric(
        "cor-6.12-corrected",
        "Phi_nu(s;0) = 2^{-s}[zeta(s,(nu+1)/2) - zeta(s,(nu+2)/2)]",
        1e-10,
        grid_nsx(&reals(&NU), &s612, &[real(0.0)]),
        |b, p| b.ext_fd(p.c("nu"), p.c("s"), real(0.0), Strategy::XSeries),
        |b, p| {
            let (nu, s) = (p.c("nu"), p.c("s"));
            Ok(pow2(-s) * (b.hurwitz(s, (nu + 1.0) / 2.0)? - b.hurwitz(s, (nu + 2.0) / 2.0)?))
        },
    ));

    v.push(IdentitySpec::numeric(
        "corrected-2.5",
        "zeta(2n) = (-1)^{n+1} (2 pi)^{2n} B_{2n} / (2 (2n)!)",
        1e-11,
        (1..=6).map(|n| GridPoint::new().with("n", real(n as f64))).collect(),
        |b, p| b.riemann(real(2.0 * p.r("n"))),
        |_, p| {
            let n = index_param(p, "n");
            let b2n = bernoulli_number_f64(2 * n)?;
            let sign = if n % 2 == 1 { 1.0 } else { -1.0 };
            let fact: f64 = (1..=2 * n).map(|k| k as f64).product();
            Ok(real(sign * (2.0 * PI).powi(2 * n as i32) * b2n / (2.0 * fact)))
        },
    ));

    let mut g26 = Vec::new();
    for n in 0..=12 {
        for x in [0.0, 0.5, 1.0, 2.0, 1.0 / 3.0] {
            g26.push(GridPoint::new().with("n", real(n as f64)).with("x", real(x)));
        }
    }
    v.push(IdentitySpec::exact(
        "corrected-2.6",
        "E_n(x) = 2/(n+1) [B_{n+1}(x) - 2^{n+1} B_{n+1}(x/2)] (exact)",
        g26,
        |p| Ok(euler_poly_generating(index_param(p, "n"), &rational_param(p, "x")?)),
        |p| {
            let n = index_param(p, "n");
            let x = rational_param(p, "x")?;
            let two = Rational::from_integer(BigInt::from(2));
            let half = &x / &two;
            let scale = Pow::pow(&two, (n + 1) as u32);
            let bracket = bernoulli_poly_exact(n + 1, &x)? - scale * bernoulli_poly_exact(n + 1, &half)?;
            Ok(two / Rational::from_integer(BigInt::from(n + 1)) * bracket)
        },
    ));

    v.push(IdentitySpec::numeric(
        "diff-eq-7.2",
        "Phi_{nu+1}(s;x) + Phi_nu(s;x) = (nu+1)^{-s} e^{-(nu+1)x}",
        1e-10,
        default_grid(),
        |b, p| {
            let (nu, s, x) = (p.c("nu"), p.c("s"), p.c("x"));
            Ok(b.ext_fd(nu + 1.0, s, x, Strategy::Auto)? + b.ext_fd(nu, s, x, Strategy::Auto)?)
        },
        |_, p| {
            let (a, s, x) = (p.c("nu") + 1.0, p.c("s"), p.c("x"));
            Ok((-s * a.ln()).exp() * (-a * x).exp())
        },
    ));

    v.push(IdentitySpec::numeric(
        "diff-eq-7.6",
        "Phi_nu(s;0) + Phi_{nu-1}(s;0) = nu^{-s}",
        1e-10,
        grid_nsx(&reals(&[1.0, 1.5, 2.3]), &s_grid(), &[real(0.0)]),
        |b, p| {
            let (nu, s) = (p.c("nu"), p.c("s"));
            Ok(b.ext_fd(nu, s, real(0.0), Strategy::Auto)? + b.ext_fd(nu - 1.0, s, real(0.0), Strategy::Auto)?)
        },
        |_, p| Ok((-p.c("s") * p.c("nu").ln()).exp()),
    ));

    v.push(
        IdentitySpec::numeric(
            "duality-6.7-corrected",
            "Psi_nu(s;x) = e^{+i(nu+1)pi} Phi_nu(s; x+pi i)",
            1e-9,
            default_grid(),
            |b, p| b.ext_be(p.c("nu"), p.c("s"), p.c("x"), Strategy::WeylQuad),
            |b, p| {
                let nu = p.c("nu");
                let phase = (Complex64::new(0.0, PI) * (nu + 1.0)).exp();
                Ok(phase * b.ext_fd(nu, p.c("s"), p.c("x") + Complex64::new(0.0, PI), Strategy::XSeries)?)
            },
        )
        .guarded(x_zero_needs_s_above_one),
    );

    let mut g610 = grid_nsx(&reals(&NU), &s_grid(), &reals(&X));
    g610.extend(grid_nsx(&[c64(0.0, 0.5)], &[real(0.5), c64(0.5, 1.0)], &reals(&[0.0, 0.25, 1.0])));
    v.push(
        IdentitySpec::numeric(
            "evenodd-6.10",
            "Phi_{nu+1}(s;x) = 2^{-s}[Psi_{nu/2}(s;2x) - Psi_{(nu+1)/2}(s;2x)]",
            1e-10,
            g610,
            |b, p| b.ext_fd(p.c("nu") + 1.0, p.c("s"), p.c("x"), Strategy::Auto),
            |b, p| {
                let (nu, s, x) = (p.c("nu"), p.c("s"), p.c("x"));
                let d = b.ext_be(nu / 2.0, s, 2.0 * x, Strategy::Auto)? - b.ext_be((nu + 1.0) / 2.0, s, 2.0 * x, Strategy::Auto)?;
                Ok(pow2(-s) * d)
            },
        )
        .guarded(|p| {
            let (nu, s) = (p.c("nu"), p.c("s"));
            nu.re > 0.0 || (nu.re == 0.0 && nu.im != 0.0 && s.re > 0.0 && s.re < 1.0)
        }),
    );

    v.push(IdentitySpec::numeric(
        "fd-be-6.6",
        "F_{s-1}(x) = B_{s-1}(x) - 2^{1-s} B_{s-1}(2x), x <= 0",
        1e-10,
        s_grid()
            .iter()
            .flat_map(|&s| [-2.0, -1.0, -0.25].map(|x| GridPoint::new().with("s", s).with("x", real(x))))
            .collect(),
        |b, p| b.fd_classical(p.c("s"), p.r("x")),
        |b, p| {
            let (s, x) = (p.c("s"), p.r("x"));
            Ok(b.be_classical(s, x)? - pow2(1.0 - s) * b.be_classical(s, 2.0 * x)?)
        },
    ));

    let mut gfe = Vec::new();
    for sigma in [-3.0, -2.5, -1.7, -0.8, -0.3, 0.4, 1.6, 2.2, 3.1, 4.0] {
        for tau in [-10.0, -4.5, 0.5, 3.0, 10.0] {
            gfe.push(GridPoint::new().with("s", c64(sigma, tau)));
        }
    }
    v.push(IdentitySpec::numeric(
        "functional-eq-1.2",
        "zeta(s) = chi(s) zeta(1-s)",
        1e-9,
        gfe,
        |b, p| b.riemann(p.c("s")),
        |b, p| b.riemann_functional(p.c("s")),
    ));

    let mut s711 = s_grid().to_vec();
    s711.extend([real(0.5), real(-1.5), c64(-2.5, 1.0)]);
    v.push(IdentitySpec::numeric(
        "hurwitz-diff-7.11",
        "zeta(s,nu) - zeta(s,nu+1) = nu^{-s}",
        1e-10,
        grid_nsx(&reals(&[1.0, 1.5, 2.3]), &s711, &[real(0.0)]),
        |b, p| {
            let (nu, s) = (p.c("nu"), p.c("s"));
            Ok(b.hurwitz(s, nu)? - b.hurwitz(s, nu + 1.0)?)
        },
        |_, p| Ok((-p.c("s") * p.c("nu").ln()).exp()),
    ));

    let mut g77 = Vec::new();
    for z in [0.5, -0.8, -1.0] {
        for s in [real(1.5), real(2.0), c64(2.0, 1.0)] {
            for nu in [1.0, 2.5] {
                g77.push(GridPoint::new().with("z", real(z)).with("s", s).with("nu", real(nu)));
            }
        }
    }
    v.push(IdentitySpec::numeric(
        "lerch-diff-7.7",
        "Phi(z,s,nu) - z Phi(z,s,nu+1) = nu^{-s}",
        1e-10,
        g77,
        |b, p| {
            let (z, s, nu) = (p.c("z"), p.c("s"), p.c("nu"));
            Ok(b.lerch(z, s, nu)? - z * b.lerch(z, s, nu + 1.0)?)
        },
        |_, p| Ok((-p.c("s") * p.c("nu").ln()).exp()),
    ));

    let mut g510 = Vec::new();
    for q in [2.0, 3.0] {
        for gp in grid_nsx(&reals(&NU), &s_grid(), &reals(&[0.0, 0.25, 1.0])) {
            g510.push(gp.with("q", real(q)));
        }
    }
    v.push(
        IdentitySpec::numeric(
            "mult-5.10-corrected",
            "Psi_a(s;x) = q^{-s} sum_{j=1}^{q} Psi_{(a+j-q)/q}(s;qx), via the Lerch multiplication formula",
            1e-10,
            g510,
            |b, p| b.ext_be(p.c("nu"), p.c("s"), p.c("x"), Strategy::Auto),
            |b, p| {
                let (a, s, x) = (p.c("nu"), p.c("s"), p.c("x"));
                let q = index_param(p, "q");
                let qf = q as f64;
                let z = (-x).exp();
                let zq = (-qf * x).exp();
                let mut acc = Complex64::new(0.0, 0.0);
                for j in 1..=q {
                    acc += z.powu(j as u32 - 1) * b.lerch(zq, s, (a + j as f64) / qf)?;
                }
                Ok((-(a + 1.0) * x).exp() * (-s * qf.ln()).exp() * acc)
            },
        )
        .guarded(x_zero_needs_s_above_one),
    );

    let mut g512 = Vec::new();
    for q in [2.0, 3.0] {
        for gp in grid_nsx(&reals(&NU), &s_grid(), &[real(0.0)]) {
            g512.push(gp.with("q", real(q)));
        }
    }
    v.push(IdentitySpec::numeric(
        "mult-5.12",
        "Psi_a(s;0) = q^{-s} sum_{j=1}^{q} Psi_{(a+j-q)/q}(s;0)",
        1e-10,
        g512,
        |b, p| b.ext_be(p.c("nu"), p.c("s"), real(0.0), Strategy::Auto),
        |b, p| {
            let (a, s) = (p.c("nu"), p.c("s"));
            let q = index_param(p, "q");
            let qf = q as f64;
            let mut acc = Complex64::new(0.0, 0.0);
            for j in 1..=q {
                acc += be_at_zero(b, (a + j as f64 - qf) / qf, s)?;
            }
            Ok((-s * qf.ln()).exp() * acc)
        },
    ));

    let mut g513 = Vec::new();
    for q in [2.0, 3.0, 5.0] {
        for a in [0.0, 0.5, 1.7] {
            for s in [real(2.0), real(3.5), c64(2.0, 3.0)] {
                g513.push(GridPoint::new().with("q", real(q)).with("a", real(a)).with("s", s));
            }
        }
    }
    v.push(IdentitySpec::numeric(
        "mult-5.13",
        "zeta(s,a+1) = q^{-s} sum_{j=1}^{q} zeta(s,(a+j)/q)",
        1e-10,
        g513,
        |b, p| b.hurwitz(p.c("s"), p.c("a") + 1.0),
        |b, p| {
            let (a, s) = (p.c("a"), p.c("s"));
            let q = index_param(p, "q");
            let qf = q as f64;
            let mut acc = Complex64::new(0.0, 0.0);
            for j in 1..=q {
                acc += b.hurwitz(s, (a + j as f64) / qf)?;
            }
            Ok((-s * qf.ln()).exp() * acc)
        },
    ));

    let mut g514 = Vec::new();
    for sigma in [1.2, 1.5, 2.0, 3.0, 5.0] {
        for tau in [0.0, 1.0, -3.0, 7.0] {
            g514.push(GridPoint::new().with("s", c64(sigma, tau)));
        }
    }
    v.push(IdentitySpec::numeric(
        "mult-5.14",
        "zeta(s)(2^s - 1) = zeta(s, 1/2)",
        1e-10,
        g514,
        |b, p| {
            let s = p.c("s");
            Ok(b.riemann(s)? * (pow2(s) - 1.0))
        },
        |b, p| b.hurwitz(p.c("s"), real(0.5)),
    ));

    let negint_grid = || {
        let mut g = Vec::new();
        for nu in NU {
            for n in 0..=8 {
                g.push(GridPoint::new().with("nu", real(nu)).with("n", real(n as f64)));
            }
        }
        g
    };
    v.push(IdentitySpec::numeric(
        "negint-5.9",
        "Psi_nu(-n;0) = -B_{n+1}(nu+1)/(n+1)",
        1e-10,
        negint_grid(),
        |b, p| b.ext_be(p.c("nu"), real(-p.r("n")), real(0.0), Strategy::NegIntBernoulli),
        |b, p| b.hurwitz(real(-p.r("n")), p.c("nu") + 1.0),
    ));
    v.push(IdentitySpec::numeric(
        "negint-7.8",
        "Phi_nu(-n; pi i) = e^{-i pi nu} B_{n+1}(nu+1)/(n+1)",
        1e-10,
        negint_grid(),
        |b, p| b.ext_fd(p.c("nu"), real(-p.r("n")), c64(0.0, PI), Strategy::XSeries),
        |b, p| b.ext_fd(p.c("nu"), real(-p.r("n")), c64(0.0, PI), Strategy::NegIntBernoulli),
    ));

    let mut g79 = Vec::new();
    for nu in [0.0, 0.5, 1.0, 2.3, 1.0 / 3.0] {
        for n in 0..=8 {
            g79.push(GridPoint::new().with("nu", real(nu)).with("n", real(n as f64)));
        }
    }
    v.push(IdentitySpec::exact(
        "negint-7.9",
        "B_{n+1}(nu+1) - B_{n+1}(nu) = (n+1) nu^n (exact)",
        g79,
        |p| {
            let n = index_param(p, "n");
            let nu = rational_param(p, "nu")?;
            Ok(bernoulli_poly_exact(n + 1, &(&nu + Rational::one()))? - bernoulli_poly_exact(n + 1, &nu)?)
        },
        |p| {
            let n = index_param(p, "n");
            let nu = rational_param(p, "nu")?;
            Ok(Rational::from_integer(BigInt::from(n + 1)) * Pow::pow(&nu, n as u32))
        },
    ));

    let nu_series_grid = || grid_nsx(&reals(&[0.0, 0.5, 0.9]), &s_grid(), &[real(0.0)]);
    v.push(IdentitySpec::numeric(
        "nuseries-4.7",
        "Phi_nu(s;0) = sum_n (-1)^n (s)_n eta(s+n) nu^n/n!",
        1e-10,
        nu_series_grid(),
        |b, p| b.fd_nu_series(p.r("nu"), p.c("s")),
        |b, p| b.ext_fd(p.c("nu"), p.c("s"), real(0.0), Strategy::XSeries),
    ));
    v.push(IdentitySpec::numeric(
        "nuseries-5.8",
        "Psi_nu(s;0) = sum_n (-1)^n (s)_n zeta(s+n) nu^n/n!",
        1e-10,
        nu_series_grid(),
        |b, p| b.be_nu_series(p.r("nu"), p.c("s")),
        |b, p| b.hurwitz(p.c("s"), p.c("nu") + 1.0),
    ));

    let mut gself = Vec::new();
    for (s, beta) in [(1.0, 1.0), (0.5, 1.5)] {
        for nu in [0.0, 1.0] {
            for x in [0.0, 0.5] {
                gself.push(
                    GridPoint::new()
                        .with("s", real(s))
                        .with("beta", real(beta))
                        .with("nu", real(nu))
                        .with("x", real(x)),
                );
            }
        }
    }
    v.push(IdentitySpec::numeric(
        "weyl-selfrep-4.8",
        "Phi_nu(s+beta;x) = W^{-s}[Phi_nu(beta; .)](x)",
        1e-7,
        gself,
        |b, p| b.ext_fd(p.c("nu"), p.c("s") + p.c("beta"), p.c("x"), Strategy::Auto),
        |b, p| {
            let (nu, beta) = (p.c("nu"), p.c("beta"));
            let inner = *b;
            let kernel = KernelSpec::from_fn("Phi_nu(beta; t)", Decay::Rapid, move |t| {
                inner
                    .ext_fd(nu, beta, real(t), Strategy::Auto)
                    .unwrap_or(Complex64::new(f64::NAN, f64::NAN))
            });
            b.weyl(&kernel, p.c("s"), p.r("x"))
        },
    ));

    v.push(
        IdentitySpec::numeric(
            "xseries-4.14",
            "Phi_nu(s;x) = sum_n (-1)^n Phi_nu(s-n;0) x^n/n!",
            1e-8,
            grid_nsx(&reals(&NU), &s_grid(), &reals(&[0.0, 0.25, 1.0])),
            |b, p| b.ext_fd(p.c("nu"), p.c("s"), p.c("x"), Strategy::PowerSeriesX),
            |b, p| b.ext_fd(p.c("nu"), p.c("s"), p.c("x"), Strategy::XSeries),
        )
        .guarded(|p| p.c("x").norm() <= 1.0),
    );

    v.push(IdentitySpec::numeric(
        "xseries-4.15-corrected",
        "F_{s-1}(x) = sum_n eta(s-n) x^n/n!",
        1e-8,
        s_grid()
            .iter()
            .flat_map(|&s| [-0.5, -0.2, 0.25, 1.0].map(|x| GridPoint::new().with("s", s).with("x", real(x))))
            .collect(),
        |b, p| b.fd_classical(p.c("s"), p.r("x")),
        |b, p| eta_series(b, p.c("s"), p.r("x")),
    ));

    v
}

/// All catalog entries at the given grid density, sorted by name.
pub fn catalog(size: GridSize) -> Vec<IdentitySpec> {
    let mut v: Vec<IdentitySpec> = all_entries()
        .into_iter()
        .map(|mut spec| {
            spec.grid = thin(std::mem::take(&mut spec.grid), &spec.guard, size);
            spec
        })
        .collect();
    v.sort_by(|a, b| a.name.cmp(&b.name));
    v
}

pub fn catalog_names() -> Vec<String> {
    catalog(GridSize::Quick).into_iter().map(|s| s.name).collect()
}

/// Whether an identity in its originally printed form holds numerically.
/// Informational only; never part of the pass/fail gate.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PrintedFormNote {
    pub identity: String,
    pub printed_form: String,
    pub max_rel_err: f64,
    pub holds: bool,
}

pub fn printed_form_notes(b: &Backend) -> Vec<PrintedFormNote> {
    let rel = |l: Complex64, r: Complex64| (l - r).norm() / l.norm().max(r.norm()).max(1e-30);
    let mut out = Vec::new();

    let mut worst: f64 = 0.0;
    for a in [0.5, 1.0] {
        for x in [0.25, 1.0] {
            let (a, s, x, q) = (real(a), real(2.0), real(x), 2usize);
            let qf = q as f64;
            let lhs = b.ext_be(a, s, x, Strategy::Auto);
            let mut acc = Complex64::new(0.0, 0.0);
            let mut ok = lhs.is_ok();
            for j in 1..=q {
                let jf = j as f64;
                let weight = (x * jf * (1.0 - qf) / qf).exp();
                match be_via_lerch(b, (a + jf - qf) / qf, s, qf * x) {
                    Ok(v) => acc += weight * v,
                    Err(_) => ok = false,
                }
            }
            let printed = (-s * qf.ln()).exp() * (a * x * (1.0 - qf) / qf).exp() * acc;
            worst = worst.max(if ok { rel(lhs.unwrap_or_default(), printed) } else { f64::INFINITY });
        }
    }
    out.push(PrintedFormNote {
        identity: "mult-5.10".into(),
        printed_form: "Psi_a(s;x) = q^{-s} e^{ax(1-q)/q} sum_j e^{xj(1-q)/q} Psi_{(a+j-q)/q}(s;qx)".into(),
        max_rel_err: worst,
        holds: worst <= 1e-8,
    });

    let mut worst: f64 = 0.0;
    for nu in [0.5, 2.3] {
        let (nu, s, x) = (real(nu), real(2.0), real(0.25));
        let lhs = b.ext_be(nu, s, x, Strategy::Auto);
        let rhs = b.ext_fd(nu, s, x + Complex64::new(0.0, PI), Strategy::XSeries);
        let phase = (Complex64::new(0.0, -PI) * (nu + 1.0)).exp();
        worst = worst.max(match (lhs, rhs) {
            (Ok(l), Ok(r)) => rel(l, phase * r),
            _ => f64::INFINITY,
        });
    }
    out.push(PrintedFormNote {
        identity: "duality-6.7".into(),
        printed_form: "Psi_nu(s;x) = e^{-i(nu+1)pi} Phi_nu(s; x+pi i)".into(),
        max_rel_err: worst,
        holds: worst <= 1e-8,
    });
    out
}
