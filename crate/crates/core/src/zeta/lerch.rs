//! Lerch transcendent Φ(z, s, a) = Σ_{n≥0} z^n (n+a)^{-s} and the polylogarithm.

use std::f64::consts::PI;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::hurwitz::{hurwitz_zeta, pow_neg};
use crate::error::{Error, Result};
use crate::numeric::{euler_transform, CompensatedSum};
use crate::types::{as_nonpositive_integer, ensure_finite, EvalResult, Method, SeriesConfig};

/// Distance from 1 below which z is treated as exactly 1.
pub const UNIT_SNAP: f64 = 1e-12;
const CIRCLE_TOL: f64 = 1e-14;
const MAX_ROTATION: usize = 4096;
const EULER_MAX_ORDER: usize = 3072;

/// Arguments of the Lerch transcendent.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct LerchParams {
    #[serde(with = "crate::types::complex_serde")]
    pub z: Complex64,
    #[serde(with = "crate::types::complex_serde")]
    pub s: Complex64,
    #[serde(with = "crate::types::complex_serde")]
    pub a: Complex64,
}

impl LerchParams {
    pub fn new(z: Complex64, s: Complex64, a: Complex64) -> Self {
        Self { z, s, a }
    }
}

/// Φ(z, s, a) for |z| ≤ 1, a not a non-positive integer; on |z| = 1 with
/// z ≠ 1 it needs Re(s) > 0, and at z = 1 it reduces to ζ(s, a).
pub fn lerch_phi(p: LerchParams, cfg: &SeriesConfig) -> Result<EvalResult> {
    let LerchParams { z, s, a } = p;
    ensure_finite(z, "z")?;
    ensure_finite(s, "s")?;
    ensure_finite(a, "a")?;
    cfg.validate()?;
    if as_nonpositive_integer(a).is_some() {
        return Err(Error::domain(format!("a={a} is a non-positive integer")));
    }
    let r = z.norm();
    if r > 1.0 + CIRCLE_TOL {
        return Err(Error::domain(format!("|z| = {r} exceeds 1")));
    }
    if z == Complex64::new(0.0, 0.0) {
        return Ok(EvalResult::new(pow_neg(a, s), 0.0, Method::ClosedForm, 1));
    }
    if (z - 1.0).norm() < UNIT_SNAP {
        return Ok(hurwitz_zeta(s, a, cfg)?.with_strategy(Method::HurwitzDelegate));
    }
    if r >= 1.0 - CIRCLE_TOL {
        if !(s.re > 0.0) {
            return Err(Error::domain(format!("on |z| = 1 the series needs Re(s) > 0, got s={s}")));
        }
        let z = z / r;
        return if z.re < 0.5 { accelerated(z, s, a, cfg) } else { rotated(z, s, a, cfg) };
    }
    let q = r * growth(s, a, 0);
    let needed = if q < 1.0 { (cfg.rel_tol.ln() / q.ln()).abs() } else { f64::INFINITY };
    if needed > 400.0 && z.re < 0.5 {
        accelerated(z, s, a, cfg)
    } else {
        direct(z, s, a, cfg)
    }
}

/// Bound on |(n+1+a)^{-s}| / |(n+a)^{-s}| for the terms beyond n.
fn growth(s: Complex64, a: Complex64, n: usize) -> f64 {
    let base = (a + n as f64).norm().max(1e-300);
    if s.re >= 0.0 {
        1.0
    } else {
        (1.0 + 1.0 / base).powf(-s.re)
    }
}

fn direct(z: Complex64, s: Complex64, a: Complex64, cfg: &SeriesConfig) -> Result<EvalResult> {
    let r = z.norm();
    let mut acc = CompensatedSum::new();
    let mut abs_sum = 0.0;
    let mut power = Complex64::new(1.0, 0.0);
    for n in 0..cfg.max_terms {
        let t = power * pow_neg(a + n as f64, s);
        let mag = t.norm();
        abs_sum += mag;
        acc.add(t);
        let q = r * growth(s, a, n + 1);
        if q < 1.0 && n >= 2 {
            let tail = mag * q / (1.0 - q);
            if tail <= cfg.rel_tol * acc.value().norm() || tail == 0.0 {
                let err = tail + 2.0 * f64::EPSILON * (n as f64).sqrt().max(1.0) * abs_sum;
                return Ok(EvalResult::new(acc.value(), err, Method::DirectSeries, n + 1));
            }
        }
        power *= z;
    }
    Err(Error::convergence(format!(
        "Lerch series at z={z}, s={s} not converged in {} terms",
        cfg.max_terms
    )))
}

/// Direct head until the terms decrease monotonically, then Euler's
/// transformation for the tail.
fn accelerated(z: Complex64, s: Complex64, a: Complex64, cfg: &SeriesConfig) -> Result<EvalResult> {
    let mut head = CompensatedSum::new();
    let mut abs_sum = 0.0;
    let mut power = Complex64::new(1.0, 0.0);
    let mut prev = f64::INFINITY;
    let mut decreasing = 0;
    let mut n = 0usize;
    loop {
        if n >= cfg.max_terms {
            return Err(Error::convergence(format!("Lerch head at z={z}, s={s} never became monotone")));
        }
        let b = pow_neg(a + n as f64, s);
        let mag = b.norm();
        decreasing = if mag < prev { decreasing + 1 } else { 0 };
        prev = mag;
        if decreasing >= 3 && n >= 8 && (a + n as f64).re > 0.0 {
            break;
        }
        let t = power * b;
        abs_sum += t.norm();
        head.add(t);
        power *= z;
        n += 1;
    }
    let start = n;
    let tail = euler_transform(z, |k| pow_neg(a + (start + k) as f64, s), cfg.rel_tol, EULER_MAX_ORDER)?;
    let value = head.value() + power * tail.value;
    let err = power.norm() * tail.err + 2.0 * f64::EPSILON * abs_sum;
    Ok(EvalResult::new(value, err, Method::EulerTransform, start + tail.terms))
}

/// For unit |z| near 1: Φ(z,s,a) = q^{-s} Σ_{j=0}^{q-1} z^j Φ(z^q, s, (a+j)/q)
/// with q chosen so z^q lies near -1.
fn rotated(z: Complex64, s: Complex64, a: Complex64, cfg: &SeriesConfig) -> Result<EvalResult> {
    let theta = z.arg();
    let q = (PI / theta.abs()).round().max(1.0) as usize;
    if q > MAX_ROTATION {
        return Err(Error::convergence(format!("z={z} too close to 1 for rotation (q={q})")));
    }
    let zq = Complex64::from_polar(1.0, q as f64 * theta);
    let qf = q as f64;
    let mut acc = CompensatedSum::new();
    let mut err = 0.0;
    let mut work = 0;
    for j in 0..q {
        let zj = Complex64::from_polar(1.0, j as f64 * theta);
        let inner = accelerated(zq, s, (a + j as f64) / qf, cfg)?;
        acc.add(zj * inner.value);
        err += inner.err_estimate;
        work += inner.work;
    }
    let scale = pow_neg(Complex64::new(qf, 0.0), s);
    Ok(EvalResult::new(scale * acc.value(), scale.norm() * err, Method::Rotation, work))
}

/// Li_s(z) = z Φ(z, s, 1) for |z| ≤ 1 (Re(s) > 1 at z = 1).
pub fn polylog(z: Complex64, s: Complex64, cfg: &SeriesConfig) -> Result<EvalResult> {
    ensure_finite(z, "z")?;
    ensure_finite(s, "s")?;
    if z == Complex64::new(0.0, 0.0) {
        return Ok(EvalResult::exact(Complex64::new(0.0, 0.0), Method::ClosedForm));
    }
    if (z - 1.0).norm() < UNIT_SNAP && !(s.re > 1.0) {
        return Err(Error::domain(format!("Li_s(1) diverges for Re(s) <= 1, got s={s}")));
    }
    let phi = lerch_phi(LerchParams::new(z, s, Complex64::new(1.0, 0.0)), cfg)?;
    Ok(phi.scaled(z))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::types::{c64, real};

    fn cfg() -> SeriesConfig {
        SeriesConfig::default()
    }

    /// Brute-force oracle: plain summation with an explicit term count.
    fn brute(z: Complex64, s: Complex64, a: Complex64, n: usize) -> Complex64 {
        let mut acc = CompensatedSum::new();
        let mut p = Complex64::new(1.0, 0.0);
        for k in 0..n {
            acc.add(p * pow_neg(a + k as f64, s));
            p *= z;
        }
        acc.value()
    }

    #[test]
    fn dilog_at_inverse_e() {
        let z = real((-1.0f64).exp());
        let r = polylog(z, real(2.0), &cfg()).unwrap();
        let oracle = z * brute(z, real(2.0), real(1.0), 200);
        assert!((r.value - oracle).norm() < 1e-15);
        assert!((r.value.re - 0.408_754_287_348_896_3).abs() < 1e-15);
    }

    #[test]
    fn li1_is_minus_log() {
        for z in [c64(0.3, 0.4), real(-0.9), c64(-0.5, 0.8)] {
            let r = polylog(z, real(1.0), &cfg()).unwrap();
            let expected = -(1.0 - z).ln();
            assert!((r.value - expected).norm() < 1e-13, "z={z}: {} vs {expected}", r.value);
        }
    }

    #[test]
    fn unit_circle_alternating() {
        // Φ(-1, 1, 1) = ln 2, Φ(-1, 2, 1) = π²/12
        let r = lerch_phi(LerchParams::new(real(-1.0), real(1.0), real(1.0)), &cfg()).unwrap();
        assert!((r.value.re - std::f64::consts::LN_2).abs() < 1e-14);
        let r = lerch_phi(LerchParams::new(real(-1.0), real(2.0), real(1.0)), &cfg()).unwrap();
        assert!((r.value.re - PI * PI / 12.0).abs() < 1e-14);
    }

    #[test]
    fn unit_circle_near_one_rotates() {
        // Li_1(e^{iθ}) = -ln(1 - e^{iθ})
        for theta in [0.3, -0.05, 1.0] {
            let z = Complex64::from_polar(1.0, theta);
            let r = polylog(z, real(1.0), &cfg()).unwrap();
            assert_eq!(r.strategy, Method::Rotation);
            let expected = -(1.0 - z).ln();
            assert!((r.value - expected).norm() < 1e-12, "θ={theta}: {} vs {expected}", r.value);
        }
    }

    #[test]
    fn z_one_delegates() {
        let r = lerch_phi(LerchParams::new(real(1.0), real(2.0), real(1.5)), &cfg()).unwrap();
        assert_eq!(r.strategy, Method::HurwitzDelegate);
        assert!((r.value.re - (PI * PI / 2.0 - 4.0)).abs() < 1e-14);
    }

    #[test]
    fn domain_errors() {
        let c = cfg();
        assert!(lerch_phi(LerchParams::new(real(1.1), real(2.0), real(1.0)), &c).is_err());
        assert!(lerch_phi(LerchParams::new(real(0.5), real(2.0), real(-2.0)), &c).is_err());
        assert!(lerch_phi(LerchParams::new(real(-1.0), real(-0.5), real(1.0)), &c).is_err());
        assert!(polylog(real(1.0), real(1.0), &c).is_err());
    }

    #[test]
    fn negative_order_inside_disk() {
        // Φ(z, -1, 1) = Σ (n+1) z^n = 1/(1-z)²
        let z = c64(0.6, -0.2);
        let r = lerch_phi(LerchParams::new(z, real(-1.0), real(1.0)), &cfg()).unwrap();
        assert!((r.value - 1.0 / ((1.0 - z) * (1.0 - z))).norm() < 1e-13);
    }
}
