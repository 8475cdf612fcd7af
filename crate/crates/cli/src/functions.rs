//! Name-based dispatch onto the library evaluators.

use std::collections::BTreeMap;

use num_complex::Complex64;
use zetakit::fdbe::{self, ExtParams, Strategy};
use zetakit::numeric::ln_gamma;
use zetakit::zeta::{self, LerchParams};
use zetakit::{EvalConfig, EvalResult, Method};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Function {
    Zeta,
    ZetaFunctional,
    Eta,
    Chi,
    LnGamma,
    HurwitzZeta,
    LerchPhi,
    Polylog,
    ExtFd,
    ExtBe,
    FdAtZero,
    FdClassical,
    BeClassical,
}

pub const FUNCTIONS: [(&str, Function); 13] = [
    ("zeta", Function::Zeta),
    ("zeta_functional", Function::ZetaFunctional),
    ("eta", Function::Eta),
    ("chi", Function::Chi),
    ("ln_gamma", Function::LnGamma),
    ("hurwitz_zeta", Function::HurwitzZeta),
    ("lerch_phi", Function::LerchPhi),
    ("polylog", Function::Polylog),
    ("ext_fd", Function::ExtFd),
    ("ext_be", Function::ExtBe),
    ("fd_at_zero", Function::FdAtZero),
    ("fd_classical", Function::FdClassical),
    ("be_classical", Function::BeClassical),
];

const ALIASES: [(&str, Function); 3] = [
    ("riemann_zeta", Function::Zeta),
    ("dirichlet_eta", Function::Eta),
    ("chi_ratio", Function::Chi),
];

impl Function {
    pub fn lookup(name: &str) -> Option<Function> {
        let key = name.trim().to_ascii_lowercase().replace('-', "_");
        FUNCTIONS.iter().chain(ALIASES.iter()).find(|(n, _)| *n == key).map(|&(_, f)| f)
    }

    pub fn name(self) -> &'static str {
        FUNCTIONS.iter().find(|(_, f)| *f == self).map(|(n, _)| *n).unwrap_or("?")
    }

    /// Parameter names in display order.
    pub fn params(self) -> &'static [&'static str] {
        match self {
            Function::Zeta | Function::ZetaFunctional | Function::Eta | Function::Chi | Function::LnGamma => &["s"],
            Function::HurwitzZeta => &["s", "a"],
            Function::LerchPhi => &["z", "s", "a"],
            Function::Polylog => &["z", "s"],
            Function::ExtFd | Function::ExtBe => &["nu", "s", "x"],
            Function::FdAtZero => &["nu", "s"],
            Function::FdClassical | Function::BeClassical => &["s", "x"],
        }
    }

    pub fn takes_strategy(self) -> bool {
        matches!(self, Function::ExtFd | Function::ExtBe)
    }

    /// Parameters that must be real.
    fn real_params(self) -> &'static [&'static str] {
        match self {
            Function::FdClassical | Function::BeClassical => &["x"],
            _ => &[],
        }
    }

    pub fn check_point(self, point: &BTreeMap<String, Complex64>) -> Result<(), String> {
        for name in self.real_params() {
            if point.get(*name).is_some_and(|v| v.im != 0.0) {
                return Err(format!("parameter --{name} of {} must be real", self.name()));
            }
        }
        Ok(())
    }

    pub fn evaluate(
        self,
        point: &BTreeMap<String, Complex64>,
        strategy: Strategy,
        cfg: &EvalConfig,
    ) -> zetakit::Result<EvalResult> {
        let p = |name: &str| point[name];
        let ser = &cfg.series;
        match self {
            Function::Zeta => zeta::riemann_zeta(p("s"), ser),
            Function::ZetaFunctional => zeta::riemann_zeta_functional(p("s"), ser),
            Function::Eta => zeta::dirichlet_eta(p("s"), ser),
            Function::Chi => zeta::chi_ratio(p("s")),
            Function::LnGamma => Ok(EvalResult::exact(ln_gamma(p("s"))?, Method::LogGamma)),
            Function::HurwitzZeta => zeta::hurwitz_zeta(p("s"), p("a"), ser),
            Function::LerchPhi => zeta::lerch_phi(LerchParams::new(p("z"), p("s"), p("a")), ser),
            Function::Polylog => zeta::polylog(p("z"), p("s"), ser),
            Function::ExtFd => fdbe::ext_fd(ExtParams::new(p("nu"), p("s"), p("x")), strategy, cfg),
            Function::ExtBe => fdbe::ext_be(ExtParams::new(p("nu"), p("s"), p("x")), strategy, cfg),
            Function::FdAtZero => fdbe::fd_at_zero(p("nu"), p("s"), cfg),
            Function::FdClassical => fdbe::fd_classical(p("s"), p("x").re, cfg),
            Function::BeClassical => fdbe::be_classical(p("s"), p("x").re, cfg),
        }
    }
}

pub fn function_list() -> String {
    FUNCTIONS
        .iter()
        .map(|(n, f)| format!("{n}({})", f.params().join(",")))
        .collect::<Vec<_>>()
        .join(", ")
}
