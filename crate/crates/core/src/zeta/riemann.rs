use std::f64::consts::{LN_2, PI};

use num_complex::Complex64;

use super::hurwitz::hurwitz_zeta;
use crate::error::{Error, Result};
use crate::numeric::{expm1, ln_gamma};
use crate::types::{as_integer, ensure_finite, EvalResult, Method, SeriesConfig};

const ETA_PRIME_AT_ONE: f64 = 0.159_868_903_742_430_97;

/// Riemann ζ(s), s ≠ 1.
pub fn riemann_zeta(s: Complex64, cfg: &SeriesConfig) -> Result<EvalResult> {
    hurwitz_zeta(s, Complex64::new(1.0, 0.0), cfg)
}

/// χ(s) = π^{s-1/2} Γ((1-s)/2) / Γ(s/2), so that ζ(s) = χ(s) ζ(1-s).
///
/// Poles at s = 1, 3, 5, ...; exact zeros at s = 0, -2, -4, ....
pub fn chi_ratio(s: Complex64) -> Result<EvalResult> {
    ensure_finite(s, "s")?;
    if let Some(k) = as_integer(s) {
        if k >= 1 && k % 2 == 1 {
            return Err(Error::Pole(format!("s={k}")));
        }
        if k <= 0 && k % 2 == 0 {
            return Ok(EvalResult::exact(Complex64::new(0.0, 0.0), Method::Zero));
        }
    }
    let log = (s - 0.5) * PI.ln() + ln_gamma((1.0 - s) / 2.0)? - ln_gamma(s / 2.0)?;
    let value = log.exp();
    let err = 8.0 * f64::EPSILON * (1.0 + log.norm()) * value.norm();
    Ok(EvalResult::new(value, err, Method::LogGamma, 1))
}

/// ζ(s) through the functional equation χ(s) ζ(1-s). Undefined where one
/// factor has a pole and the other a zero (s = 0 and s = 3, 5, 7, ...).
pub fn riemann_zeta_functional(s: Complex64, cfg: &SeriesConfig) -> Result<EvalResult> {
    ensure_finite(s, "s")?;
    if s == Complex64::new(1.0, 0.0) {
        return Err(Error::Pole("s=1".into()));
    }
    if let Some(k) = as_integer(s) {
        if k == 0 || (k >= 3 && k % 2 == 1) {
            return Err(Error::domain(format!(
                "functional equation is indeterminate at s={k}; use the direct path"
            )));
        }
    }
    let chi = chi_ratio(s)?;
    let reflected = riemann_zeta(1.0 - s, cfg)?;
    let value = chi.value * reflected.value;
    let err = chi.value.norm() * reflected.err_estimate + chi.err_estimate * reflected.value.norm();
    Ok(EvalResult::new(value, err, Method::FunctionalEquation, reflected.work + 1))
}

/// Dirichlet η(s) = (1 - 2^{1-s}) ζ(s), entire; η(1) = ln 2.
pub fn dirichlet_eta(s: Complex64, cfg: &SeriesConfig) -> Result<EvalResult> {
    ensure_finite(s, "s")?;
    let h = s - 1.0;
    if h.norm() < 1e-8 {
        // η(1 + h) = ln 2 + (γ ln 2 - ln² 2 / 2) h + O(h²)
        let value = LN_2 + ETA_PRIME_AT_ONE * h;
        return Ok(EvalResult::new(value, h.norm_sqr() + f64::EPSILON * LN_2, Method::Limit, 1));
    }
    let factor = -expm1((1.0 - s) * LN_2);
    Ok(riemann_zeta(s, cfg)?.scaled(factor))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::types::{c64, real};

    fn cfg() -> SeriesConfig {
        SeriesConfig::default()
    }

    #[test]
    fn chi_two() {
        // χ(2) = ζ(2)/ζ(-1) = -2π²
        let r = chi_ratio(real(2.0)).unwrap();
        assert!((r.value.re + 2.0 * PI * PI).abs() < 1e-13);
        assert!(matches!(chi_ratio(real(3.0)), Err(Error::Pole(_))));
        assert_eq!(chi_ratio(real(-2.0)).unwrap().strategy, Method::Zero);
    }

    #[test]
    fn functional_matches_direct() {
        for s in [c64(0.5, 14.0), real(-2.5), c64(2.5, 2.0), real(0.3)] {
            let d = riemann_zeta(s, &cfg()).unwrap();
            let f = riemann_zeta_functional(s, &cfg()).unwrap();
            let rel = (d.value - f.value).norm() / d.value.norm();
            assert!(rel < 1e-10, "s={s}: {} vs {}", d.value, f.value);
        }
    }

    #[test]
    fn eta_values() {
        let r = dirichlet_eta(real(1.0), &cfg()).unwrap();
        assert_eq!(r.strategy, Method::Limit);
        let r = dirichlet_eta(real(2.0), &cfg()).unwrap();
        assert!((r.value.re - PI * PI / 12.0).abs() < 1e-15);
        // continuity through s = 1
        let r = dirichlet_eta(real(1.0 + 1e-6), &cfg()).unwrap();
        assert!((r.value.re - LN_2).abs() < 1e-6);
    }
}
