//! The zeta family: Hurwitz, Riemann, Dirichlet η, Lerch Φ and Li_s.

mod hurwitz;
mod lerch;
mod riemann;

pub use hurwitz::{hurwitz_zeta, hurwitz_zeta_diff, FOURIER_BELOW};
pub use lerch::{lerch_phi, polylog, LerchParams, UNIT_SNAP};
pub use riemann::{chi_ratio, dirichlet_eta, riemann_zeta, riemann_zeta_functional};

