use std::f64::consts::PI;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::types::{as_nonpositive_integer, ensure_finite};

// Lanczos approximation, g = 7, nine coefficients (the set used by GSL and
// most textbook implementations). Relative error in Gamma is ~1e-15 on the
// right half plane.
const LANCZOS_G: f64 = 7.0;
const LANCZOS_COEFFS: [f64; 9] = [
    0.999_999_999_999_809_9,
    676.520_368_121_885_1,
    -1_259.139_216_722_402_8,
    771.323_428_777_653_1,
    -176.615_029_162_140_6,
    12.507_343_278_686_905,
    -0.138_571_095_265_720_12,
    9.984_369_578_019_572e-6,
    1.505_632_735_149_311_6e-7,
];

const HALF_LN_2PI: f64 = 0.918_938_533_204_672_8;

fn ln_gamma_right(z: Complex64) -> Complex64 {
    let zm1 = z - 1.0;
    let mut acc = Complex64::new(LANCZOS_COEFFS[0], 0.0);
    for (i, &c) in LANCZOS_COEFFS.iter().enumerate().skip(1) {
        acc += c / (zm1 + i as f64);
    }
    let t = zm1 + LANCZOS_G + 0.5;
    HALF_LN_2PI + (zm1 + 0.5) * t.ln() - t + acc.ln()
}

/// ln(sin(pi z)), stable for large |Im z| where sin itself would overflow.
fn ln_sin_pi(z: Complex64) -> Complex64 {
    if z.im.abs() < 20.0 {
        return (z * PI).sin().ln();
    }
    if z.im < 0.0 {
        return ln_sin_pi(z.conj()).conj();
    }
    let i = Complex64::i();
    let e = (2.0 * PI * i * z).exp();
    -i * PI * z + (0.5 * i * (1.0 - e)).ln()
}

/// Logarithm of the Gamma function.
///
/// On Re(s) >= 1/2 this is the branch that is real on the positive axis and
/// continuous in between; left of that line the reflection formula is used,
/// so `exp(ln_gamma(s))` is always Gamma(s) but the imaginary part may differ
/// from the continuous log-gamma by a multiple of 2*pi.
pub fn ln_gamma(s: Complex64) -> Result<Complex64> {
    ensure_finite(s, "s")?;
    if let Some(m) = as_nonpositive_integer(s) {
        return Err(Error::Pole(format!("s=-{m} (Gamma)")));
    }
    if s.re >= 0.5 {
        Ok(ln_gamma_right(s))
    } else {
        Ok(PI.ln() - ln_sin_pi(s) - ln_gamma_right(1.0 - s))
    }
}

pub fn gamma(s: Complex64) -> Result<Complex64> {
    Ok(ln_gamma(s)?.exp())
}

/// 1/Gamma(s), which is entire: zero at the poles of Gamma.
pub fn recip_gamma(s: Complex64) -> Result<Complex64> {
    ensure_finite(s, "s")?;
    if as_nonpositive_integer(s).is_some() {
        return Ok(Complex64::new(0.0, 0.0));
    }
    Ok((-ln_gamma(s)?).exp())
}

/// Rising factorial (s)_n = s(s+1)...(s+n-1), with (s)_0 = 1.
pub fn pochhammer(s: Complex64, n: usize) -> Complex64 {
    (0..n).fold(Complex64::new(1.0, 0.0), |acc, k| acc * (s + k as f64))
}
