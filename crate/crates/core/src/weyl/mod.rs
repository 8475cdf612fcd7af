//! Weyl fractional transform
//! Ω(s; x) = W^{-s}[ω](x) = (1/Γ(s)) ∫_0^∞ ω(t + x) t^{s-1} dt
//! for kernels in a decay class, extended to s = 0 by Ω(0; x) = ω(x) and to
//! Re(s) < 0 by differentiation under the integral.

mod kernel;
mod quad;

use num_complex::Complex64;

pub use kernel::{audit_decay, Decay, DecayAudit, DerivativeFn, KernelSpec, ValueFn};
pub use quad::{gauss_kronrod, QuadOutput};

pub(crate) use kernel::fermi;

use crate::error::{Error, Result};
use crate::numeric::recip_gamma;
use crate::types::{as_nonpositive_integer, ensure_finite, ensure_finite_real, EvalResult, Method, QuadratureConfig};

const MAX_TAIL_END: f64 = 1e8;
const FIRST_TAIL_END: f64 = 32.0;

/// ∫_0^∞ ω(t + x) t^{s-1} dt without the 1/Γ(s) factor.
pub(crate) fn mellin_integral(kernel: &KernelSpec, s: Complex64, x: f64, cfg: &QuadratureConfig) -> Result<EvalResult> {
    let c = cfg.endpoint_split;
    let sigma = s.re;
    let mut err = 0.0;
    let mut evals = 0;

    // [0, c]; for σ < 1 substitute t = c·u^{1/σ}, which removes the t^{σ-1} singularity
    let head = if sigma < 1.0 {
        let pref = Complex64::new(c, 0.0).powc(s) / sigma;
        let expo = Complex64::new(0.0, s.im / sigma);
        let out = gauss_kronrod(
            |u: f64| {
                if u == 0.0 {
                    return Complex64::new(0.0, 0.0);
                }
                let t = c * u.powf(1.0 / sigma);
                Complex64::new(u, 0.0).powc(expo) * kernel.eval(t + x)
            },
            0.0,
            1.0,
            cfg.abs_tol / (4.0 * pref.norm().max(1e-300)),
            cfg.rel_tol,
            cfg.max_subdivisions,
        )?;
        evals += out.evals;
        err += out.err * pref.norm();
        out.value * pref
    } else {
        let out = gauss_kronrod(
            |t: f64| power(t, s - 1.0) * kernel.eval(t + x),
            0.0,
            c,
            cfg.abs_tol / 4.0,
            cfg.rel_tol,
            cfg.max_subdivisions,
        )?;
        evals += out.evals;
        err += out.err;
        out.value
    };

    let body = |t: f64| power(t, s - 1.0) * kernel.eval(t + x);
    let mut total = head;
    let mut lo = c;
    let mut hi = FIRST_TAIL_END.max(2.0 * c);
    loop {
        let budget = cfg.abs_tol.max(cfg.rel_tol * total.norm());
        let out = gauss_kronrod(body, lo, hi, budget / 4.0, cfg.rel_tol, cfg.max_subdivisions)?;
        evals += out.evals;
        err += out.err;
        total += out.value;
        let tail = tail_bound(kernel, s, x, hi);
        let budget = cfg.abs_tol.max(cfg.rel_tol * total.norm());
        if tail <= 0.5 * budget {
            err += tail;
            break;
        }
        if hi >= MAX_TAIL_END {
            return Err(Error::convergence(format!(
                "{}: tail beyond t={hi:.0} still {tail:.3e} for s={s}",
                kernel.name
            )));
        }
        lo = hi;
        hi *= 2.0;
    }
    Ok(EvalResult::new(total, err, Method::Quadrature, evals))
}

#[inline]
fn power(t: f64, e: Complex64) -> Complex64 {
    if t == 0.0 {
        return if e.re > 0.0 { Complex64::new(0.0, 0.0) } else { Complex64::new(f64::INFINITY, 0.0) };
    }
    let lt = t.ln();
    Complex64::from_polar((e.re * lt).exp(), e.im * lt)
}

/// Estimate of |∫_T^∞ ω(t + x) t^{s-1} dt|.
fn tail_bound(kernel: &KernelSpec, s: Complex64, x: f64, t: f64) -> f64 {
    let w0 = kernel.eval(t + x).norm();
    if w0 == 0.0 {
        return 0.0;
    }
    let growth = (s.re - 1.0).max(0.0);
    match kernel.decay {
        Decay::Rapid => {
            let w1 = kernel.eval(t + x + 1.0).norm();
            let rate = (w0 / w1).ln();
            let net = rate - growth / t;
            if w1 == 0.0 {
                return 0.0;
            }
            if !(net > 1e-3) {
                return f64::INFINITY;
            }
            w0 * t.powf(s.re - 1.0) / net
        }
        Decay::Power(b) => {
            let scale = w0 * (t + x).powf(b);
            let gap = b - s.re;
            scale * t.powf(-gap) / gap
        }
    }
}

fn check_order(kernel: &KernelSpec, s: Complex64) -> Result<()> {
    let b = kernel.decay.exponent();
    if !(s.re < b) {
        return Err(Error::domain(format!("{}: Re(s) = {} must be below the decay exponent {b}", kernel.name, s.re)));
    }
    Ok(())
}

/// W^{-s}[ω](x) for Re(s) > 0 and x ≥ 0.
pub fn weyl_transform(kernel: &KernelSpec, s: Complex64, x: f64, cfg: &QuadratureConfig) -> Result<EvalResult> {
    ensure_finite(s, "s")?;
    ensure_finite_real(x, "x")?;
    cfg.validate()?;
    if !(s.re > 0.0) {
        return Err(Error::domain(format!("weyl_transform needs Re(s) > 0, got s={s}")));
    }
    if x < 0.0 {
        return Err(Error::domain(format!("weyl_transform needs x >= 0, got x={x}")));
    }
    check_order(kernel, s)?;
    let r = recip_gamma(s)?;
    Ok(mellin_integral(kernel, s, x, cfg)?.scaled(r))
}

/// Ω(0; x) = ω(x).
pub fn weyl_at_zero_order(kernel: &KernelSpec, x: f64) -> Complex64 {
    kernel.eval(x)
}

/// W^{-s}[ω](x) for Re(s) ≤ 0: (-1)^m ω^{(m)}(x) at s = -m, otherwise
/// (-1)^n W^{-(n+s)}[ω^{(n)}](x) with n = ⌈-Re s⌉ (n + 1 when that leaves
/// a purely imaginary order).
pub fn weyl_negative_order(kernel: &KernelSpec, s: Complex64, x: f64, cfg: &QuadratureConfig) -> Result<EvalResult> {
    ensure_finite(s, "s")?;
    ensure_finite_real(x, "x")?;
    if s.re > 0.0 {
        return Err(Error::domain(format!("weyl_negative_order needs Re(s) <= 0, got s={s}")));
    }
    if x < 0.0 {
        return Err(Error::domain(format!("weyl_negative_order needs x >= 0, got x={x}")));
    }
    if let Some(m) = as_nonpositive_integer(s) {
        if m == 0 {
            return Ok(EvalResult::exact(weyl_at_zero_order(kernel, x), Method::Derivative));
        }
        let d = kernel
            .derivative
            .as_ref()
            .ok_or_else(|| Error::domain(format!("{}: order s={s} needs derivatives", kernel.name)))?;
        let sign = if m % 2 == 0 { 1.0 } else { -1.0 };
        let v = sign * d(m as usize, x);
        ensure_finite(v, "derivative")?;
        return Ok(EvalResult::new(v, 8.0 * f64::EPSILON * v.norm(), Method::Derivative, 1));
    }
    let d = kernel
        .derivative
        .clone()
        .ok_or_else(|| Error::domain(format!("{}: order s={s} needs derivatives", kernel.name)))?;
    let mut n = (-s.re).ceil() as usize;
    if (n as f64 + s.re) <= 0.0 {
        n += 1;
    }
    let order = s + n as f64;
    check_order(kernel, order)?;
    let derived = KernelSpec {
        name: format!("{}^({n})", kernel.name),
        value: std::sync::Arc::new(move |t| d(n, t)),
        derivative: None,
        decay: kernel.decay,
    };
    let r = weyl_transform(&derived, order, x, cfg)?;
    let sign = if n.is_multiple_of(2) { 1.0 } else { -1.0 };
    Ok(r.scaled(Complex64::new(sign, 0.0)).with_strategy(Method::Derivative))
}

/// Σ_{n=0}^{N} (-1)^n c_n x^n / n! for coefficients c_n = Ω(s-n; 0).
/// The error estimate is the first omitted term (extrapolated from the last
/// two terms when only N+1 coefficients are given).
pub fn taylor_representation(coeffs: &[Complex64], x: f64, truncation: usize) -> Result<EvalResult> {
    ensure_finite_real(x, "x")?;
    if coeffs.len() < truncation + 1 {
        return Err(Error::Range { what: "Taylor coefficients", value: coeffs.len(), max: truncation + 1 });
    }
    let mut acc = crate::numeric::CompensatedSum::new();
    let mut factor = 1.0; // (-x)^n / n!
    let mut mags = Vec::with_capacity(truncation + 1);
    for (n, c) in coeffs.iter().take(truncation + 1).enumerate() {
        if n > 0 {
            factor *= -x / n as f64;
        }
        let term = *c * factor;
        ensure_finite(term, "Taylor term")?;
        mags.push(term.norm());
        acc.add(term);
    }
    let value = acc.value();
    let next = if let Some(c) = coeffs.get(truncation + 1) {
        (*c * factor * (-x / (truncation + 1) as f64)).norm()
    } else if truncation >= 1 && mags[truncation - 1] > 0.0 {
        mags[truncation] * mags[truncation] / mags[truncation - 1]
    } else {
        mags[truncation]
    };
    if truncation >= 2 && x != 0.0 {
        let last = mags[truncation];
        let prev = mags[truncation - 1];
        if last >= prev && last > f64::EPSILON * value.norm() {
            return Err(Error::convergence(format!("Taylor terms still growing at n={truncation} for x={x}")));
        }
    }
    Ok(EvalResult::new(value, next + f64::EPSILON * value.norm(), Method::TaylorSeries, truncation + 1))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::types::{c64, real};
    use std::f64::consts::LN_2;

    fn cfg() -> QuadratureConfig {
        QuadratureConfig::default()
    }

    #[test]
    fn exponential_kernel_reproduces_itself() {
        let k = KernelSpec::exponential(real(1.0));
        for s in [real(0.3), real(1.0), real(2.5), c64(0.7, 1.5), c64(1.5, -2.0)] {
            let r = weyl_transform(&k, s, 2.0, &cfg()).unwrap();
            let expected = (-2.0f64).exp();
            assert!((r.value - expected).norm() < 1e-11, "s={s}: {}", r.value);
            assert!(r.err_estimate < 1e-9);
        }
    }

    #[test]
    fn fermi_kernel_order_one() {
        let r = weyl_transform(&KernelSpec::fermi_dirac(real(0.0)), real(1.0), 0.0, &cfg()).unwrap();
        assert!((r.value.re - LN_2).abs() < 1e-13);
    }

    #[test]
    fn scaled_exponential() {
        let r = weyl_transform(&KernelSpec::exponential(real(3.0)), real(2.0), 0.0, &cfg()).unwrap();
        assert!((r.value.re - 1.0 / 9.0).abs() < 1e-14);
    }

    #[test]
    fn zero_order() {
        assert_eq!(weyl_at_zero_order(&KernelSpec::exponential(real(1.0)), 0.0), real(1.0));
        assert_eq!(weyl_at_zero_order(&KernelSpec::fermi_dirac(real(0.0)), 0.0), real(0.5));
    }

    #[test]
    fn negative_orders() {
        let e1 = KernelSpec::exponential(real(1.0));
        let r = weyl_negative_order(&e1, real(-1.0), 0.0, &cfg()).unwrap();
        assert!((r.value.re - 1.0).abs() < 1e-15);
        let r = weyl_negative_order(&e1, real(-2.0), 1.0, &cfg()).unwrap();
        assert!((r.value.re - (-1.0f64).exp()).abs() < 1e-15);
        let e3 = KernelSpec::exponential(real(3.0));
        let r = weyl_negative_order(&e3, real(-1.0), 0.0, &cfg()).unwrap();
        assert!((r.value.re - 3.0).abs() < 1e-14);
        // non-integer: ν^{-s} e^{-νx}
        for s in [real(-0.5), c64(-1.3, 0.4), c64(0.0, 1.0)] {
            let r = weyl_negative_order(&e3, s, 0.5, &cfg()).unwrap();
            let expected = Complex64::new(3.0, 0.0).powc(-s) * (-1.5f64).exp();
            assert!((r.value - expected).norm() < 1e-10 * expected.norm(), "s={s}: {} vs {expected}", r.value);
        }
    }

    #[test]
    fn domain_errors() {
        let k = KernelSpec::exponential(real(1.0));
        assert!(weyl_transform(&k, real(0.0), 0.0, &cfg()).is_err());
        assert!(weyl_transform(&k, real(1.0), -1.0, &cfg()).is_err());
        let p = KernelSpec::from_fn("1/(1+t)^2", Decay::Power(2.0), |t| real(1.0 / ((1.0 + t) * (1.0 + t))));
        assert!(matches!(weyl_transform(&p, real(2.0), 0.0, &cfg()), Err(Error::Domain(_))));
        let bare = KernelSpec::from_fn("bare", Decay::Rapid, |t| real((-t).exp()));
        assert!(matches!(weyl_negative_order(&bare, real(-0.5), 0.0, &cfg()), Err(Error::Domain(_))));
    }

    #[test]
    fn power_law_kernel() {
        // W^{-1/2}[(1+t)^{-2}](0) = Γ(3/2)/(Γ(2)Γ(1/2)) · B-function = (1/Γ(1/2))·∫ t^{-1/2}(1+t)^{-2} = (π/2)/√π
        let p = KernelSpec::from_fn("1/(1+t)^2", Decay::Power(2.0), |t| real(1.0 / ((1.0 + t) * (1.0 + t))));
        let loose = QuadratureConfig { abs_tol: 1e-9, rel_tol: 1e-9, ..cfg() };
        let r = weyl_transform(&p, real(0.5), 0.0, &loose).unwrap();
        let expected = std::f64::consts::PI.sqrt() / 2.0;
        assert!((r.value.re - expected).abs() < 1e-8, "{}", r.value);
    }

    #[test]
    fn taylor_exponential() {
        let coeffs = vec![real(1.0); 40];
        let r = taylor_representation(&coeffs, 1.0, 30).unwrap();
        assert!((r.value.re - (-1.0f64).exp()).abs() < 1e-15);
        let r = taylor_representation(&coeffs, 0.5, 30).unwrap();
        assert!((r.value.re - (-0.5f64).exp()).abs() < 1e-12);
        let r = taylor_representation(&[real(0.7), real(3.0)], 0.0, 1).unwrap();
        assert_eq!(r.value, real(0.7));
        // diverging coefficients
        let wild: Vec<Complex64> = (0..20).map(|n| real(10f64.powi(n * 2))).collect();
        assert!(taylor_representation(&wild, 1.0, 15).is_err());
    }
}
