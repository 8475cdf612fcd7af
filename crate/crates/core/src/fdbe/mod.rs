//! Extended Fermi-Dirac Φ_ν(s;x) = W^{-s}[e^{-νt}/(e^t+1)](x) and extended
//! Bose-Einstein Ψ_ν(s;x) = W^{-s}[e^{-νt}/(e^t-1)](x), each with several
//! independent evaluation strategies, plus the classical F_{s-1} and B_{s-1}.

mod series;

use std::f64::consts::PI;
use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

pub use series::{
    ext_be_negint, ext_be_nu_series, ext_be_power_series, ext_fd_negint, ext_fd_negint_at_pi_i, ext_fd_nu_series,
    ext_fd_xseries, fd_at_zero, MAX_POWER_TERMS,
};

use crate::error::{Error, Result};
use crate::types::{as_nonpositive_integer, ensure_finite, ensure_finite_real, EvalConfig, EvalResult, Method};
use crate::weyl::{self, Decay, KernelSpec};
use crate::zeta::{hurwitz_zeta, lerch_phi, LerchParams, UNIT_SNAP};

/// Real part of x above which the plain x-series is used.
pub const DIRECT_X: f64 = 0.05;

/// Parameters (ν, s, x) of the extended functions.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ExtParams {
    #[serde(with = "crate::types::complex_serde")]
    pub nu: Complex64,
    #[serde(with = "crate::types::complex_serde")]
    pub s: Complex64,
    #[serde(with = "crate::types::complex_serde")]
    pub x: Complex64,
}

impl ExtParams {
    pub fn new(nu: Complex64, s: Complex64, x: Complex64) -> Self {
        Self { nu, s, x }
    }

    /// Real-valued convenience constructor.
    pub fn real(nu: f64, s: f64, x: f64) -> Self {
        Self::new(Complex64::new(nu, 0.0), Complex64::new(s, 0.0), Complex64::new(x, 0.0))
    }

    fn validate(&self) -> Result<()> {
        ensure_finite(self.nu, "nu")?;
        ensure_finite(self.s, "s")?;
        ensure_finite(self.x, "x")?;
        if self.nu.re < 0.0 {
            return Err(Error::domain(format!("Re(nu) must be >= 0, got nu={}", self.nu)));
        }
        if self.x.re < 0.0 {
            return Err(Error::domain(format!("Re(x) must be >= 0, got x={}", self.x)));
        }
        Ok(())
    }

    fn a(&self) -> Complex64 {
        self.nu + 1.0
    }

    fn real_x(&self) -> Option<f64> {
        (self.x.im == 0.0).then_some(self.x.re)
    }
}

/// Evaluation strategy for the extended functions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Strategy {
    /// Σ e^{-(n+ν+1)x}(±1)^n (n+ν+1)^{-s} through the Lerch transcendent.
    XSeries,
    /// Adaptive quadrature of the Weyl integral (real x).
    WeylQuad,
    /// Power series in x around x = 0.
    PowerSeriesX,
    /// Series in ν at x = 0 (0 ≤ ν < 1).
    NuSeries,
    /// Bernoulli/Euler closed forms at non-positive integer s.
    NegIntBernoulli,
    Auto,
}

impl Strategy {
    pub const ALL: [Strategy; 6] = [
        Strategy::XSeries,
        Strategy::WeylQuad,
        Strategy::PowerSeriesX,
        Strategy::NuSeries,
        Strategy::NegIntBernoulli,
        Strategy::Auto,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Strategy::XSeries => "xseries",
            Strategy::WeylQuad => "weyl_quad",
            Strategy::PowerSeriesX => "power_series_x",
            Strategy::NuSeries => "nu_series",
            Strategy::NegIntBernoulli => "neg_int_bernoulli",
            Strategy::Auto => "auto",
        }
    }
}

impl fmt::Display for Strategy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Strategy {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let key = s.trim().to_ascii_lowercase().replace('-', "_");
        Strategy::ALL
            .into_iter()
            .find(|st| st.name() == key || st.name().replace('_', "") == key)
            .ok_or_else(|| Error::domain(format!("unknown strategy '{s}'")))
    }
}

/// Which of the two extended functions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Family {
    FermiDirac,
    BoseEinstein,
}

fn is_pi_i(x: Complex64) -> bool {
    (x - Complex64::new(0.0, PI)).norm() <= UNIT_SNAP
}

fn is_zero(x: Complex64) -> bool {
    x == Complex64::new(0.0, 0.0)
}

fn real_nu_below_one(nu: Complex64) -> Option<f64> {
    (nu.im == 0.0 && (0.0..1.0).contains(&nu.re)).then_some(nu.re)
}

/// e^{-(ν+1)x} Φ(∓e^{-x}, s, ν+1); the sign is - for FD and + for BE.
fn xseries(family: Family, p: &ExtParams, cfg: &EvalConfig) -> Result<EvalResult> {
    let a = p.a();
    let mut z = (-p.x).exp();
    if family == Family::FermiDirac {
        z = -z;
    }
    if (z - 1.0).norm() < UNIT_SNAP {
        z = Complex64::new(1.0, 0.0);
    }
    let r = lerch_phi(LerchParams::new(z, p.s, a), &cfg.series)?;
    let tag = if r.strategy == Method::DirectSeries { Method::XSeries } else { r.strategy };
    Ok(r.scaled((-a * p.x).exp()).with_strategy(tag))
}

fn weyl_quad(family: Family, p: &ExtParams, cfg: &EvalConfig) -> Result<EvalResult> {
    let x = p
        .real_x()
        .ok_or_else(|| Error::domain(format!("quadrature needs real x, got x={}", p.x)))?;
    if !(p.s.re > 0.0) {
        return Err(Error::domain(format!("quadrature needs Re(s) > 0, got s={}", p.s)));
    }
    match family {
        Family::FermiDirac => weyl::weyl_transform(&KernelSpec::fermi_dirac(p.nu), p.s, x, &cfg.quad),
        Family::BoseEinstein if x > 0.0 => weyl::weyl_transform(&KernelSpec::bose_einstein(p.nu), p.s, x, &cfg.quad),
        Family::BoseEinstein => {
            // Γ(s) = (s-1)Γ(s-1): integrate the regular kernel t e^{-νt}/(e^t-1) at order s-1
            let s1 = p.s - 1.0;
            if !(s1.re > 0.0) {
                return Err(Error::domain(format!("quadrature at x=0 needs Re(s) > 1, got s={}", p.s)));
            }
            let nu = p.nu;
            let kernel = KernelSpec::from_fn("t exp(-nu t)/(e^t-1)", Decay::Rapid, move |t| {
                let ratio = if t == 0.0 { 1.0 } else { t / t.exp_m1() };
                (-nu * t).exp() * ratio
            });
            Ok(weyl::weyl_transform(&kernel, s1, 0.0, &cfg.quad)?.scaled(1.0 / s1))
        }
    }
}

/// Extended Fermi-Dirac function Φ_ν(s;x).
pub fn ext_fd(p: ExtParams, strat: Strategy, cfg: &EvalConfig) -> Result<EvalResult> {
    p.validate()?;
    match strat {
        Strategy::XSeries => xseries(Family::FermiDirac, &p, cfg),
        Strategy::WeylQuad => weyl_quad(Family::FermiDirac, &p, cfg),
        Strategy::PowerSeriesX => ext_fd_xseries(p, MAX_POWER_TERMS, cfg),
        Strategy::NuSeries => {
            require_zero_x(&p)?;
            let nu = real_nu_below_one(p.nu)
                .ok_or_else(|| Error::domain(format!("nu-series needs real 0 <= nu < 1, got nu={}", p.nu)))?;
            ext_fd_nu_series(nu, p.s, cfg.series.max_terms.min(100_000), cfg)
        }
        Strategy::NegIntBernoulli => {
            let n = as_nonpositive_integer(p.s)
                .ok_or_else(|| Error::domain(format!("closed form needs s in {{0, -1, ...}}, got s={}", p.s)))?;
            let value = if is_zero(p.x) {
                ext_fd_negint(p.nu, n as usize)?
            } else if is_pi_i(p.x) {
                ext_fd_negint_at_pi_i(p.nu, n as usize)?
            } else {
                return Err(Error::domain(format!("closed form needs x = 0 or x = pi i, got x={}", p.x)));
            };
            Ok(EvalResult::new(value, 4.0 * f64::EPSILON * value.norm(), Method::NegIntBernoulli, n as usize + 2))
        }
        Strategy::Auto => {
            if as_nonpositive_integer(p.s).is_some() && (is_zero(p.x) || is_pi_i(p.x)) {
                return ext_fd(p, Strategy::NegIntBernoulli, cfg);
            }
            if is_zero(p.x) && p.s.re <= 0.0 {
                return fd_at_zero(p.nu, p.s, cfg);
            }
            if p.x.re <= DIRECT_X && p.s.re <= 0.0 && p.x.norm() < 1.0 {
                return ext_fd_xseries(p, MAX_POWER_TERMS, cfg);
            }
            xseries(Family::FermiDirac, &p, cfg)
        }
    }
}

/// Extended Bose-Einstein function Ψ_ν(s;x).
pub fn ext_be(p: ExtParams, strat: Strategy, cfg: &EvalConfig) -> Result<EvalResult> {
    p.validate()?;
    match strat {
        Strategy::XSeries => xseries(Family::BoseEinstein, &p, cfg),
        Strategy::WeylQuad => weyl_quad(Family::BoseEinstein, &p, cfg),
        Strategy::PowerSeriesX => ext_be_power_series(p, MAX_POWER_TERMS, cfg),
        Strategy::NuSeries => {
            require_zero_x(&p)?;
            let nu = real_nu_below_one(p.nu)
                .ok_or_else(|| Error::domain(format!("nu-series needs real 0 <= nu < 1, got nu={}", p.nu)))?;
            ext_be_nu_series(nu, p.s, cfg.series.max_terms.min(100_000), cfg)
        }
        Strategy::NegIntBernoulli => {
            require_zero_x(&p)?;
            let n = as_nonpositive_integer(p.s)
                .ok_or_else(|| Error::domain(format!("closed form needs s in {{0, -1, ...}}, got s={}", p.s)))?;
            let value = ext_be_negint(p.nu, n as usize)?;
            Ok(EvalResult::new(value, 4.0 * f64::EPSILON * value.norm(), Method::NegIntBernoulli, n as usize + 2))
        }
        Strategy::Auto => {
            if is_zero(p.x) {
                if as_nonpositive_integer(p.s).is_some() {
                    return ext_be(p, Strategy::NegIntBernoulli, cfg);
                }
                return Ok(hurwitz_zeta(p.s, p.a(), &cfg.series)?.with_strategy(Method::HurwitzDelegate));
            }
            if p.x.re >= DIRECT_X {
                return xseries(Family::BoseEinstein, &p, cfg);
            }
            let integer_s = p.s.im == 0.0 && p.s.re.fract() == 0.0;
            if !integer_s && p.x.norm() < 1.0 {
                return ext_be_power_series(p, MAX_POWER_TERMS, cfg);
            }
            if p.real_x().is_some() && p.s.re > 0.0 {
                return weyl_quad(Family::BoseEinstein, &p, cfg);
            }
            xseries(Family::BoseEinstein, &p, cfg)
        }
    }
}

fn require_zero_x(p: &ExtParams) -> Result<()> {
    if !is_zero(p.x) {
        return Err(Error::domain(format!("this strategy needs x = 0, got x={}", p.x)));
    }
    Ok(())
}

/// Strategies whose preconditions hold at `p` (Auto excluded).
pub fn applicable_strategies(family: Family, p: &ExtParams) -> Vec<Strategy> {
    let mut out = Vec::new();
    let s = p.s;
    let x = p.x;
    let integer_s = s.im == 0.0 && s.re.fract() == 0.0;
    let nonpos = as_nonpositive_integer(s).is_some();
    match family {
        Family::FermiDirac => {
            if x.re > 0.0 || s.re > 0.0 || is_pi_i(x) {
                out.push(Strategy::XSeries);
            }
            if x.im == 0.0 && s.re > 0.0 {
                out.push(Strategy::WeylQuad);
            }
            if x.norm() <= 1.0 {
                out.push(Strategy::PowerSeriesX);
            }
            if is_zero(x) && real_nu_below_one(p.nu).is_some() && s.re > 0.0 {
                out.push(Strategy::NuSeries);
            }
            if nonpos && (is_zero(x) || is_pi_i(x)) {
                out.push(Strategy::NegIntBernoulli);
            }
        }
        Family::BoseEinstein => {
            let at_one = s == Complex64::new(1.0, 0.0);
            if (x.re > 0.0 || (is_zero(x) && !at_one) || s.re > 0.0) && !(is_zero(x) && at_one) {
                out.push(Strategy::XSeries);
            }
            if x.im == 0.0 && (s.re > 1.0 || (x.re > 0.0 && s.re > 0.0)) {
                out.push(Strategy::WeylQuad);
            }
            if !integer_s && !is_zero(x) && x.norm() <= 2.0 {
                out.push(Strategy::PowerSeriesX);
            }
            if is_zero(x) && real_nu_below_one(p.nu).is_some() && s.re > 0.0 && !at_one {
                out.push(Strategy::NuSeries);
            }
            if nonpos && is_zero(x) {
                out.push(Strategy::NegIntBernoulli);
            }
        }
    }
    out
}

/// Classical Fermi-Dirac integral F_{s-1}(x) = (1/Γ(s)) ∫_0^∞ t^{s-1}/(e^{t-x}+1) dt.
pub fn fd_classical(order_s: Complex64, x: f64, cfg: &EvalConfig) -> Result<EvalResult> {
    ensure_finite(order_s, "s")?;
    ensure_finite_real(x, "x")?;
    if !(order_s.re > 0.0) {
        return Err(Error::domain(format!("F_(s-1) needs Re(s) > 0, got s={order_s}")));
    }
    if x <= 0.0 {
        let p = ExtParams::new(Complex64::new(0.0, 0.0), order_s, Complex64::new(-x, 0.0));
        return ext_fd(p, Strategy::Auto, cfg);
    }
    let kernel = KernelSpec::from_fn("1/(e^(t-x)+1)", Decay::Rapid, move |t| Complex64::new(weyl::fermi(t - x), 0.0));
    weyl::weyl_transform(&kernel, order_s, 0.0, &cfg.quad)
}

/// Classical Bose-Einstein integral B_{s-1}(x) for x ≤ 0.
pub fn be_classical(order_s: Complex64, x: f64, cfg: &EvalConfig) -> Result<EvalResult> {
    ensure_finite(order_s, "s")?;
    ensure_finite_real(x, "x")?;
    if x > 0.0 {
        return Err(Error::domain(format!("B_(s-1)(x) is not defined here for x > 0, got x={x}")));
    }
    if x == 0.0 && !(order_s.re > 1.0) {
        if order_s == Complex64::new(1.0, 0.0) {
            return Err(Error::Pole("s=1".into()));
        }
        return Err(Error::domain(format!("B_(s-1)(0) needs Re(s) > 1, got s={order_s}")));
    }
    if x < 0.0 && !(order_s.re > 0.0) {
        return Err(Error::domain(format!("B_(s-1)(x) needs Re(s) > 0, got s={order_s}")));
    }
    let p = ExtParams::new(Complex64::new(0.0, 0.0), order_s, Complex64::new(-x, 0.0));
    ext_be(p, Strategy::Auto, cfg)
}
