use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::fdbe::{self, ExtParams, Strategy};
use crate::types::EvalConfig;
use crate::weyl::{self, KernelSpec};
use crate::zeta::{self, LerchParams};

/// Relative size of an injected fault.
pub const FAULT_SIZE: f64 = 1e-6;

/// Function whose output can be perturbed to test the suite's sensitivity.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FaultTarget {
    HurwitzZeta,
    LerchPhi,
    ExtFd,
    ExtBe,
    ChiRatio,
}

impl FaultTarget {
    pub const ALL: [FaultTarget; 5] = [
        FaultTarget::HurwitzZeta,
        FaultTarget::LerchPhi,
        FaultTarget::ExtFd,
        FaultTarget::ExtBe,
        FaultTarget::ChiRatio,
    ];

    pub fn name(self) -> &'static str {
        match self {
            FaultTarget::HurwitzZeta => "hurwitz_zeta",
            FaultTarget::LerchPhi => "lerch_phi",
            FaultTarget::ExtFd => "ext_fd",
            FaultTarget::ExtBe => "ext_be",
            FaultTarget::ChiRatio => "chi_ratio",
        }
    }
}

impl fmt::Display for FaultTarget {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for FaultTarget {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let key = s.trim().to_ascii_lowercase().replace('-', "_");
        FaultTarget::ALL
            .into_iter()
            .find(|t| t.name() == key)
            .ok_or_else(|| Error::domain(format!("unknown fault target '{s}'")))
    }
}

/// Evaluation context for identity checks: configuration plus an optional
/// injected fault. Every catalog evaluator goes through these methods.
#[derive(Debug, Clone, Copy, Default, PartialEq)]
pub struct Backend {
    pub cfg: EvalConfig,
    pub fault: Option<FaultTarget>,
}

impl Backend {
    pub fn new(cfg: EvalConfig) -> Self {
        Self { cfg, fault: None }
    }

    pub fn with_fault(mut self, fault: Option<FaultTarget>) -> Self {
        self.fault = fault;
        self
    }

    fn perturb(&self, target: FaultTarget, v: Complex64) -> Complex64 {
        if self.fault == Some(target) {
            v * (1.0 + FAULT_SIZE)
        } else {
            v
        }
    }

    pub fn hurwitz(&self, s: Complex64, a: Complex64) -> Result<Complex64> {
        let v = zeta::hurwitz_zeta(s, a, &self.cfg.series)?.value;
        Ok(self.perturb(FaultTarget::HurwitzZeta, v))
    }

    pub fn riemann(&self, s: Complex64) -> Result<Complex64> {
        self.hurwitz(s, Complex64::new(1.0, 0.0))
    }

    /// χ(s) ζ(1-s); a fault in χ scales the product.
    pub fn riemann_functional(&self, s: Complex64) -> Result<Complex64> {
        let v = zeta::riemann_zeta_functional(s, &self.cfg.series)?.value;
        Ok(self.perturb(FaultTarget::ChiRatio, v))
    }

    pub fn chi(&self, s: Complex64) -> Result<Complex64> {
        Ok(self.perturb(FaultTarget::ChiRatio, zeta::chi_ratio(s)?.value))
    }

    pub fn eta(&self, s: Complex64) -> Result<Complex64> {
        Ok(zeta::dirichlet_eta(s, &self.cfg.series)?.value)
    }

    pub fn lerch(&self, z: Complex64, s: Complex64, a: Complex64) -> Result<Complex64> {
        let v = zeta::lerch_phi(LerchParams::new(z, s, a), &self.cfg.series)?.value;
        Ok(self.perturb(FaultTarget::LerchPhi, v))
    }

    pub fn polylog(&self, z: Complex64, s: Complex64) -> Result<Complex64> {
        Ok(zeta::polylog(z, s, &self.cfg.series)?.value)
    }

    pub fn ext_fd(&self, nu: Complex64, s: Complex64, x: Complex64, strat: Strategy) -> Result<Complex64> {
        let v = fdbe::ext_fd(ExtParams::new(nu, s, x), strat, &self.cfg)?.value;
        Ok(self.perturb(FaultTarget::ExtFd, v))
    }

    pub fn ext_be(&self, nu: Complex64, s: Complex64, x: Complex64, strat: Strategy) -> Result<Complex64> {
        let v = fdbe::ext_be(ExtParams::new(nu, s, x), strat, &self.cfg)?.value;
        Ok(self.perturb(FaultTarget::ExtBe, v))
    }

    pub fn fd_at_zero(&self, nu: Complex64, s: Complex64) -> Result<Complex64> {
        Ok(fdbe::fd_at_zero(nu, s, &self.cfg)?.value)
    }

    pub fn fd_classical(&self, s: Complex64, x: f64) -> Result<Complex64> {
        Ok(fdbe::fd_classical(s, x, &self.cfg)?.value)
    }

    pub fn be_classical(&self, s: Complex64, x: f64) -> Result<Complex64> {
        Ok(fdbe::be_classical(s, x, &self.cfg)?.value)
    }

    pub fn fd_nu_series(&self, nu: f64, s: Complex64) -> Result<Complex64> {
        Ok(fdbe::ext_fd_nu_series(nu, s, self.cfg.series.max_terms, &self.cfg)?.value)
    }

    pub fn be_nu_series(&self, nu: f64, s: Complex64) -> Result<Complex64> {
        Ok(fdbe::ext_be_nu_series(nu, s, self.cfg.series.max_terms, &self.cfg)?.value)
    }

    pub fn weyl(&self, kernel: &KernelSpec, s: Complex64, x: f64) -> Result<Complex64> {
        Ok(weyl::weyl_transform(kernel, s, x, &self.cfg.quad)?.value)
    }
}
