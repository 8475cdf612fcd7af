//! Numerical evaluation of the extended Fermi-Dirac function Φ_ν(s;x) and the
//! extended Bose-Einstein function Ψ_ν(s;x), together with the Hurwitz-Lerch
//! zeta family they are built on, a generic Weyl fractional transform, and a
//! catalog of numerical identity checks.
//!
//! Every evaluator returns an [`EvalResult`] carrying the value, an absolute
//! error estimate, the code path used, and the amount of work spent.

#![allow(clippy::neg_cmp_op_on_partial_ord, clippy::excessive_precision)]

pub mod error;
pub mod fdbe;
pub mod identity;
pub mod numeric;
pub mod selftest;
pub mod types;
pub mod weyl;
pub mod zeta;

pub use error::{Error, Result};
pub use types::{c64, real, ComplexValue, EvalConfig, EvalResult, Method, QuadratureConfig, SeriesConfig};
pub use fdbe::{ext_be, ext_fd, ExtParams, Family, Strategy};
pub use identity::{run_catalog, Backend, FaultTarget, GridSize, IdentityReport, IdentitySpec};
pub use selftest::{run_selftest, SelftestOptions, SelftestReport};
pub use weyl::{weyl_transform, KernelSpec};
pub use zeta::{dirichlet_eta, hurwitz_zeta, lerch_phi, polylog, riemann_zeta, LerchParams};
