use std::f64::consts::{LN_2, PI};

use num_complex::Complex64;

use super::ExtParams;
use crate::error::{Error, Result};
use crate::numeric::{bernoulli_poly, euler_poly, gamma, CompensatedSum};
use crate::types::{EvalConfig, EvalResult, Method};
use crate::zeta::{dirichlet_eta, hurwitz_zeta, hurwitz_zeta_diff, riemann_zeta};

/// Term cap for the power series in x.
pub const MAX_POWER_TERMS: usize = 40;

/// Φ_ν(s;0) = 2^{-s}[ζ(s,(ν+1)/2) - ζ(s,(ν+2)/2)], valid for all s.
pub fn fd_at_zero(nu: Complex64, s: Complex64, cfg: &EvalConfig) -> Result<EvalResult> {
    let d = hurwitz_zeta_diff(s, (nu + 1.0) / 2.0, (nu + 2.0) / 2.0, &cfg.series)?;
    let scale = (-s * LN_2).exp();
    Ok(d.scaled(scale).with_strategy(Method::HurwitzDifference))
}

/// Φ_ν(-n;0) = E_n(ν+1)/2.
pub fn ext_fd_negint(nu: Complex64, n: usize) -> Result<Complex64> {
    Ok(euler_poly(n, nu + 1.0)? / 2.0)
}

/// Φ_ν(-n;πi) = e^{-iπν} B_{n+1}(ν+1)/(n+1).
pub fn ext_fd_negint_at_pi_i(nu: Complex64, n: usize) -> Result<Complex64> {
    let phase = (Complex64::new(0.0, -PI) * nu).exp();
    Ok(phase * bernoulli_poly(n + 1, nu + 1.0)? / (n + 1) as f64)
}

/// Ψ_ν(-n;0) = -B_{n+1}(ν+1)/(n+1).
pub fn ext_be_negint(nu: Complex64, n: usize) -> Result<Complex64> {
    Ok(-bernoulli_poly(n + 1, nu + 1.0)? / (n + 1) as f64)
}

/// Accumulates Σ c_n y^n/n! with per-coefficient errors, stopping once the
/// terms fall below tolerance. Terms must have started to decrease by
/// `max_terms / 2`.
fn power_series<F>(y: Complex64, max_terms: usize, rel_tol: f64, what: &str, mut coeff: F) -> Result<EvalResult>
where
    F: FnMut(usize) -> Result<EvalResult>,
{
    let mut acc = CompensatedSum::new();
    let mut err = 0.0;
    let mut work = 0;
    let mut factor = Complex64::new(1.0, 0.0);
    let mut peak: f64 = 0.0;
    let mut small_run = 0;
    for n in 0..=max_terms {
        if n > 0 {
            factor *= y / n as f64;
        }
        if factor == Complex64::new(0.0, 0.0) {
            return Ok(EvalResult::new(acc.value(), err, Method::PowerSeriesX, work));
        }
        let c = coeff(n)?;
        work += c.work;
        let term = c.value * factor;
        let mag = term.norm();
        acc.add(term);
        err += c.err_estimate * factor.norm();
        if n == max_terms / 2 && n > 0 && mag >= peak {
            return Err(Error::convergence(format!("{what}: terms still growing at n={n} for x={}", -y)));
        }
        peak = peak.max(mag);
        if mag <= rel_tol * acc.value().norm() || mag == 0.0 {
            small_run += 1;
            if small_run == 2 {
                err += mag + f64::EPSILON * acc.value().norm();
                return Ok(EvalResult::new(acc.value(), err, Method::PowerSeriesX, work));
            }
        } else {
            small_run = 0;
        }
    }
    Err(Error::convergence(format!("{what}: not converged in {max_terms} terms for x={}", -y)))
}

/// Φ_ν(s;x) = Σ_n (-1)^n Φ_ν(s-n;0) x^n/n!, coefficients from the
/// Hurwitz-difference continuation.
pub fn ext_fd_xseries(p: ExtParams, max_terms: usize, cfg: &EvalConfig) -> Result<EvalResult> {
    p.validate()?;
    if p.x.norm() >= PI {
        return Err(Error::domain(format!("x-power series needs |x| < pi, got x={}", p.x)));
    }
    power_series(-p.x, max_terms.min(MAX_POWER_TERMS), cfg.series.rel_tol, "FD x-power series", |n| {
        fd_at_zero(p.nu, p.s - n as f64, cfg)
    })
}

/// Ψ_ν(s;x) = Γ(1-s) x^{s-1} + Σ_k ζ(s-k, ν+1)(-x)^k/k!, for non-integer s
/// and 0 < |x| < 2π.
pub fn ext_be_power_series(p: ExtParams, max_terms: usize, cfg: &EvalConfig) -> Result<EvalResult> {
    p.validate()?;
    if p.s.im == 0.0 && p.s.re.fract() == 0.0 {
        return Err(Error::domain(format!("BE x-power series needs non-integer s, got s={}", p.s)));
    }
    let r = p.x.norm();
    if r == 0.0 || r >= 2.0 * PI {
        return Err(Error::domain(format!("BE x-power series needs 0 < |x| < 2 pi, got x={}", p.x)));
    }
    let a = p.a();
    let series = power_series(-p.x, max_terms.min(MAX_POWER_TERMS), cfg.series.rel_tol, "BE x-power series", |k| {
        hurwitz_zeta(p.s - k as f64, a, &cfg.series)
    })?;
    let g = gamma(1.0 - p.s)?;
    let singular = g * (p.x.ln() * (p.s - 1.0)).exp();
    let value = series.value + singular;
    let err = series.err_estimate + 8.0 * f64::EPSILON * singular.norm();
    Ok(EvalResult::new(value, err, Method::PowerSeriesX, series.work + 1))
}

/// Σ_n (-ν)^n (s)_n/n! · f(s+n) for 0 ≤ ν < 1.
fn nu_series<F>(nu: f64, s: Complex64, max_terms: usize, rel_tol: f64, what: &str, mut f: F) -> Result<EvalResult>
where
    F: FnMut(Complex64) -> Result<EvalResult>,
{
    if !(0.0..1.0).contains(&nu) {
        return Err(Error::domain(format!("{what} needs 0 <= nu < 1, got nu={nu}")));
    }
    if !(s.re > 0.0) {
        return Err(Error::domain(format!("{what} needs Re(s) > 0, got s={s}")));
    }
    let mut acc = CompensatedSum::new();
    let mut err = 0.0;
    let mut work = 0;
    let mut c = Complex64::new(1.0, 0.0);
    let mut prev = f64::INFINITY;
    for n in 0..max_terms.max(1) {
        if n > 0 {
            c *= -nu * (s + (n - 1) as f64) / n as f64;
        }
        if c == Complex64::new(0.0, 0.0) {
            return Ok(EvalResult::new(acc.value(), err, Method::NuSeries, work));
        }
        let v = f(s + n as f64)?;
        work += v.work;
        let term = c * v.value;
        acc.add(term);
        err += c.norm() * v.err_estimate;
        let mag = term.norm();
        let q = nu * (s + n as f64).norm() / (n + 1) as f64;
        if n > 0 && q < 1.0 && mag < prev {
            let tail = mag * q / (1.0 - q) * 1.01;
            if tail <= rel_tol * acc.value().norm() {
                err += tail + f64::EPSILON * acc.value().norm();
                return Ok(EvalResult::new(acc.value(), err, Method::NuSeries, work));
            }
        }
        prev = mag;
    }
    Err(Error::convergence(format!("{what}: terms not small after {max_terms} terms (nu={nu}, s={s})")))
}

/// Φ_ν(s;0) = Σ_n (-1)^n (s)_n η(s+n) ν^n/n! for 0 ≤ ν < 1, Re(s) > 0.
pub fn ext_fd_nu_series(nu: f64, s: Complex64, max_terms: usize, cfg: &EvalConfig) -> Result<EvalResult> {
    nu_series(nu, s, max_terms, cfg.series.rel_tol, "FD nu-series", |w| dirichlet_eta(w, &cfg.series))
}

/// Ψ_ν(s;0) = Σ_n (-1)^n (s)_n ζ(s+n) ν^n/n! for 0 ≤ ν < 1, Re(s) > 0, s ≠ 1.
pub fn ext_be_nu_series(nu: f64, s: Complex64, max_terms: usize, cfg: &EvalConfig) -> Result<EvalResult> {
    nu_series(nu, s, max_terms, cfg.series.rel_tol, "BE nu-series", |w| riemann_zeta(w, &cfg.series))
}
