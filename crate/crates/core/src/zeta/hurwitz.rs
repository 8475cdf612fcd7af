//! Hurwitz zeta ζ(s, a) = Σ (n+a)^{-s}, continued to all complex s ≠ 1.
//!
//! Two routes:
//! * Euler-Maclaurin: N direct terms, the integral term, the half term and
//!   Bernoulli corrections. Valid everywhere, but for very negative Re(s) the
//!   direct terms dwarf the result.
//! * Hurwitz's Fourier series for Re(s) < -3.5 and real a, which converges
//!   faster the more negative Re(s) is.

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::numeric::{bernoulli_number_f64_unchecked as bernoulli_f64, exprel, ln_gamma, CompensatedSum, MAX_DEGREE};
use crate::types::{ensure_finite, EvalResult, Method, SeriesConfig};

/// Below this real part (and for real a) the Fourier series is used.
pub const FOURIER_BELOW: f64 = -3.5;

const MAX_CORRECTIONS: usize = MAX_DEGREE / 2;

/// (n+a)^{-s} on the principal branch.
#[inline]
pub(crate) fn pow_neg(base: Complex64, s: Complex64) -> Complex64 {
    (-s * base.ln()).exp()
}

struct EmSum {
    value: Complex64,
    err: f64,
    work: usize,
    converged: bool,
}

/// Direct head of `n` terms and the Euler-Maclaurin corrections at w = a + n,
/// without the integral term.
fn em_parts(s: Complex64, a: Complex64, n: usize, max_k: usize, tol: f64) -> (CompensatedSum, EmTail) {
    let mut direct = CompensatedSum::new();
    let mut abs_sum = 0.0;
    for j in 0..n {
        let t = pow_neg(a + j as f64, s);
        abs_sum += t.norm();
        direct.add(t);
    }
    let w = a + n as f64;
    let w_pow = pow_neg(w, s);
    let tail = em_tail(s, w, w_pow, max_k, tol, direct.value().norm());
    (direct, EmTail { abs_direct: abs_sum, ..tail })
}

struct EmTail {
    /// w^{-s}/2 plus the Bernoulli corrections.
    corrections: Complex64,
    last_term: f64,
    converged: bool,
    terms: usize,
    abs_direct: f64,
}

fn em_tail(s: Complex64, w: Complex64, w_pow: Complex64, max_k: usize, tol: f64, scale: f64) -> EmTail {
    let mut acc = CompensatedSum::new();
    acc.add(0.5 * w_pow);
    // c_k = (s)_{2k-1} w^{-s-2k+1} / (2k)!
    let w_inv = 1.0 / w;
    let w_inv2 = w_inv * w_inv;
    let mut c = s * w_pow * w_inv / 2.0;
    let mut last = f64::INFINITY;
    let mut converged = false;
    let mut terms = 0;
    for k in 1..=max_k {
        let term = c * bernoulli_f64(2 * k);
        let mag = term.norm();
        terms = k;
        if mag > last && k > 2 {
            // asymptotic series started to diverge; keep what we have
            break;
        }
        acc.add(term);
        last = mag;
        let reference = (acc.value().norm()).max(scale);
        if mag <= tol * reference {
            converged = true;
            break;
        }
        let k2 = 2.0 * k as f64;
        c *= (s + (k2 - 1.0)) * (s + k2) * w_inv2 / ((k2 + 1.0) * (k2 + 2.0));
    }
    EmTail {
        corrections: acc.value(),
        last_term: if last.is_finite() { last } else { 0.0 },
        converged,
        terms,
        abs_direct: 0.0,
    }
}

fn em_eval(s: Complex64, a: Complex64, n: usize, max_k: usize, tol: f64) -> EmSum {
    let (direct, tail) = em_parts(s, a, n, max_k, tol);
    let w = a + n as f64;
    let integral = pow_neg(w, s) * w / (s - 1.0);
    let value = direct.value() + integral + tail.corrections;
    let rounding = 4.0 * f64::EPSILON * (tail.abs_direct + integral.norm() + tail.corrections.norm());
    let err = tail.last_term + rounding;
    EmSum {
        value,
        err,
        work: n + tail.terms,
        converged: tail.converged || tail.last_term <= tol * value.norm(),
    }
}

/// Euler-Maclaurin evaluation with the configured shift, extended
/// adaptively until the first omitted correction is below tolerance.
fn hurwitz_em(s: Complex64, a: Complex64, cfg: &SeriesConfig) -> Result<EvalResult> {
    let tol = cfg.rel_tol;
    let mut best: Option<EmSum> = None;
    // For Re(s) < 0 the direct terms grow, so start as small as possible;
    // otherwise start from the configured default.
    let mut n = if s.re < 0.0 {
        1
    } else {
        cfg.em_shift.max(s.norm().ceil() as usize + 10)
    };
    let mut max_k = if s.re < 0.0 { MAX_CORRECTIONS } else { (cfg.em_order / 2).max(1) };
    for _ in 0..12 {
        let r = em_eval(s, a, n, max_k, tol);
        let done = r.converged;
        if best.as_ref().is_none_or(|b| r.err < b.err) {
            best = Some(r);
        }
        if done {
            break;
        }
        if max_k < MAX_CORRECTIONS {
            max_k = MAX_CORRECTIONS;
        } else {
            n *= 2;
            if n > cfg.max_terms {
                break;
            }
        }
    }
    let best = best.expect("at least one Euler-Maclaurin pass");
    if !best.value.re.is_finite() || !best.value.im.is_finite() {
        return Err(Error::convergence(format!("Euler-Maclaurin overflow at s={s}, a={a}")));
    }
    Ok(EvalResult::new(best.value, best.err, Method::EulerMaclaurin, best.work))
}

/// Hurwitz's formula: for 0 < a <= 1 and w = 1 - s with Re(w) > 1,
/// ζ(1-w, a) = 2 Γ(w) (2π)^{-w} Σ_{k≥1} k^{-w} cos(πw/2 - 2πka).
fn hurwitz_fourier(s: Complex64, a: f64, cfg: &SeriesConfig) -> Result<EvalResult> {
    let shifts = (a.ceil() - 1.0).max(0.0);
    let a0 = a - shifts;
    let w = 1.0 - s;
    let pref = 2.0 * (ln_gamma(w)? - w * (2.0 * PI).ln()).exp();
    let half_angle = 0.5 * PI * w;
    let amp = (0.5 * PI * w.im).cosh();

    let mut acc = CompensatedSum::new();
    let mut abs_sum = 0.0;
    let mut tail = f64::INFINITY;
    let mut k = 0usize;
    while k < cfg.max_terms {
        k += 1;
        let kf = k as f64;
        let phase = 2.0 * PI * (kf * a0).fract();
        let term = pow_neg(Complex64::new(kf, 0.0), w) * (half_angle - phase).cos();
        abs_sum += term.norm();
        acc.add(term);
        tail = amp * kf.powf(1.0 - w.re) / (w.re - 1.0);
        if tail <= 0.25 * f64::EPSILON * abs_sum.max(amp) {
            break;
        }
    }
    if tail > 1e-12 * abs_sum.max(amp) {
        return Err(Error::convergence(format!("Hurwitz Fourier series at s={s} needs more than {} terms", cfg.max_terms)));
    }
    let mut value = pref * acc.value();
    let mut err = pref.norm() * (tail + 4.0 * f64::EPSILON * abs_sum);

    let mut head = CompensatedSum::new();
    let mut head_abs = 0.0;
    for j in 0..shifts as usize {
        let t = pow_neg(Complex64::new(a0 + j as f64, 0.0), s);
        head_abs += t.norm();
        head.add(t);
    }
    value -= head.value();
    err += 4.0 * f64::EPSILON * head_abs;
    Ok(EvalResult::new(value, err, Method::HurwitzFourier, k + shifts as usize))
}

fn validate(s: Complex64, a: Complex64) -> Result<()> {
    ensure_finite(s, "s")?;
    ensure_finite(a, "a")?;
    if s == Complex64::new(1.0, 0.0) {
        return Err(Error::Pole("s=1".into()));
    }
    if !(a.re > 0.0) {
        return Err(Error::domain(format!("Hurwitz zeta needs Re(a) > 0, got a={a}")));
    }
    Ok(())
}

/// ζ(s, a) for complex s ≠ 1 and Re(a) > 0.
pub fn hurwitz_zeta(s: Complex64, a: Complex64, cfg: &SeriesConfig) -> Result<EvalResult> {
    validate(s, a)?;
    cfg.validate()?;
    if s.re < FOURIER_BELOW && a.im == 0.0 {
        hurwitz_fourier(s, a.re, cfg)
    } else {
        hurwitz_em(s, a, cfg)
    }
}

/// ζ(s, a) - ζ(s, b), which stays finite at s = 1 where the poles cancel.
pub fn hurwitz_zeta_diff(s: Complex64, a: Complex64, b: Complex64, cfg: &SeriesConfig) -> Result<EvalResult> {
    ensure_finite(s, "s")?;
    if (s - 1.0).norm() > 0.125 {
        let za = hurwitz_zeta(s, a, cfg)?;
        let zb = hurwitz_zeta(s, b, cfg)?;
        let strategy = if za.strategy == zb.strategy { za.strategy } else { Method::HurwitzDifference };
        return Ok(EvalResult::new(
            za.value - zb.value,
            za.err_estimate + zb.err_estimate,
            strategy,
            za.work + zb.work,
        ));
    }
    for v in [a, b] {
        ensure_finite(v, "a")?;
        if !(v.re > 0.0) {
            return Err(Error::domain(format!("Hurwitz zeta needs Re(a) > 0, got a={v}")));
        }
    }
    cfg.validate()?;
    // Shared Euler-Maclaurin shift; the two pole terms are combined as
    // [w_a^{1-s} - w_b^{1-s}]/(s-1) = -w_b^{1-s} (ln w_a - ln w_b) exprel((1-s)(ln w_a - ln w_b)).
    let n = cfg.em_shift.max(12);
    let tol = cfg.rel_tol;
    let (da, ta) = em_parts(s, a, n, MAX_CORRECTIONS, tol);
    let (db, tb) = em_parts(s, b, n, MAX_CORRECTIONS, tol);
    let wa = a + n as f64;
    let wb = b + n as f64;
    let d = wa.ln() - wb.ln();
    let u = 1.0 - s;
    let pole = -(u * wb.ln()).exp() * d * exprel(u * d);
    let value = da.value() - db.value() + pole + ta.corrections - tb.corrections;
    let err = ta.last_term + tb.last_term + 4.0 * f64::EPSILON * (ta.abs_direct + tb.abs_direct + pole.norm());
    Ok(EvalResult::new(value, err, Method::HurwitzDifference, 2 * n + ta.terms + tb.terms))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::types::{c64, real};

    fn cfg() -> SeriesConfig {
        SeriesConfig::default()
    }

    fn rel(a: Complex64, b: Complex64) -> f64 {
        (a - b).norm() / b.norm()
    }

    /// Oracle for ζ(2): direct partial sum to 10^6 plus the integral tail 1/N
    /// and its trapezoid correction, accurate to ~1e-18.
    fn zeta2_oracle() -> f64 {
        let n = 1_000_000u64;
        let mut s = 0.0f64;
        for k in (1..n).rev() {
            s += 1.0 / (k as f64 * k as f64);
        }
        let nf = n as f64;
        s + 1.0 / nf + 0.5 / (nf * nf) + 1.0 / (6.0 * nf * nf * nf)
    }

    #[test]
    fn zeta_two_at_a_one() {
        let r = hurwitz_zeta(real(2.0), real(1.0), &cfg()).unwrap();
        let oracle = zeta2_oracle();
        assert!((r.value.re - oracle).abs() / oracle < 1e-13);
        assert!((r.value.re - 1.644_934_066_8).abs() < 1e-10);
        assert_eq!(r.strategy, Method::EulerMaclaurin);
    }

    #[test]
    fn zeta_two_at_half() {
        // (2^2 - 1) ζ(2) with the independent ζ(2) oracle
        let r = hurwitz_zeta(real(2.0), real(0.5), &cfg()).unwrap();
        assert!(rel(r.value, real(3.0 * zeta2_oracle())) < 1e-13);
    }

    #[test]
    fn negative_integers_match_bernoulli() {
        // ζ(-1, 1) = -B_2(1)/2 = -1/12
        let r = hurwitz_zeta(real(-1.0), real(1.0), &cfg()).unwrap();
        assert!((r.value.re + 1.0 / 12.0).abs() < 1e-15);
        // ζ(0, a) = 1/2 - a
        for a in [0.3, 1.0, 2.7] {
            let r = hurwitz_zeta(real(0.0), real(a), &cfg()).unwrap();
            assert!((r.value.re - (0.5 - a)).abs() < 1e-14, "a={a}");
        }
    }

    #[test]
    fn fourier_and_em_agree_across_threshold() {
        for a in [0.25, 1.0, 1.6, 3.3] {
            for sr in [-3.0, -3.4, -4.0] {
                let s = c64(sr, 0.7);
                let em = hurwitz_em(s, real(a), &cfg()).unwrap();
                let fo = hurwitz_fourier(s, a, &cfg()).unwrap();
                assert!(rel(em.value, fo.value) < 1e-10, "a={a} s={s}: {} vs {}", em.value, fo.value);
            }
        }
    }

    #[test]
    fn deep_negative_uses_fourier() {
        // ζ(-9) = -B_10/10 = -1/132
        let r = hurwitz_zeta(real(-9.0), real(1.0), &cfg()).unwrap();
        assert_eq!(r.strategy, Method::HurwitzFourier);
        assert!((r.value.re + 1.0 / 132.0).abs() < 1e-15);
    }

    #[test]
    fn pole_and_domain() {
        assert!(matches!(hurwitz_zeta(real(1.0), real(1.0), &cfg()), Err(Error::Pole(_))));
        assert!(matches!(hurwitz_zeta(real(2.0), real(0.0), &cfg()), Err(Error::Domain(_))));
        assert!(matches!(hurwitz_zeta(real(2.0), real(-1.5), &cfg()), Err(Error::Domain(_))));
    }

    #[test]
    fn difference_is_finite_at_one() {
        // ζ(1, a) - ζ(1, b) = ψ(b) - ψ(a); ψ(1) - ψ(1/2) = 2 ln 2
        let r = hurwitz_zeta_diff(real(1.0), real(0.5), real(1.0), &cfg()).unwrap();
        assert!((r.value.re - 2.0 * std::f64::consts::LN_2).abs() < 1e-14, "{}", r.value);
        // continuity across s = 1
        let near = hurwitz_zeta_diff(real(1.0 + 1e-7), real(0.5), real(1.0), &cfg()).unwrap();
        assert!((near.value - r.value).norm() < 1e-6);
        // agrees with the plain difference away from s = 1
        let s = c64(1.1, 0.05);
        let d = hurwitz_zeta_diff(s, real(0.7), real(1.2), &cfg()).unwrap();
        let plain = hurwitz_zeta(s, real(0.7), &cfg()).unwrap().value - hurwitz_zeta(s, real(1.2), &cfg()).unwrap().value;
        assert!(rel(d.value, plain) < 1e-12);
    }
}
