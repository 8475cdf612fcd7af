//! Globally adaptive 15-point Gauss-Kronrod quadrature for complex integrands.

use std::cmp::Ordering;
use std::collections::BinaryHeap;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::numeric::CompensatedSum;

const XGK: [f64; 8] = [
    0.991_455_371_120_812_6,
    0.949_107_912_342_758_5,
    0.864_864_423_359_769_1,
    0.741_531_185_599_394_4,
    0.586_087_235_467_691_1,
    0.405_845_151_377_397_2,
    0.207_784_955_007_898_5,
    0.0,
];
const WGK: [f64; 8] = [
    0.022_935_322_010_529_22,
    0.063_092_092_629_978_55,
    0.104_790_010_322_250_2,
    0.140_653_259_715_525_9,
    0.169_004_726_639_267_9,
    0.190_350_578_064_785_4,
    0.204_432_940_075_298_9,
    0.209_482_141_084_727_8,
];
const WG: [f64; 4] = [
    0.129_484_966_168_869_7,
    0.279_705_391_489_276_7,
    0.381_830_050_505_118_9,
    0.417_959_183_673_469_4,
];

/// Result of an adaptive integration.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadOutput {
    pub value: Complex64,
    pub err: f64,
    pub evals: usize,
    pub intervals: usize,
}

#[derive(Debug, Clone, Copy)]
struct Panel {
    a: f64,
    b: f64,
    value: Complex64,
    err: f64,
    /// error estimate is the roundoff floor; bisecting cannot help
    at_floor: bool,
}

impl PartialEq for Panel {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}
impl Eq for Panel {}
impl PartialOrd for Panel {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
impl Ord for Panel {
    fn cmp(&self, other: &Self) -> Ordering {
        self.err
            .total_cmp(&other.err)
            .then_with(|| other.a.total_cmp(&self.a))
    }
}

fn kronrod<F: Fn(f64) -> Complex64>(f: &F, a: f64, b: f64) -> Panel {
    let center = 0.5 * (a + b);
    let half = 0.5 * (b - a);
    let mut fv = [Complex64::new(0.0, 0.0); 15];
    fv[7] = f(center);
    for j in 0..7 {
        let dx = half * XGK[j];
        fv[j] = f(center - dx);
        fv[14 - j] = f(center + dx);
    }
    let mut k = fv[7] * WGK[7];
    let mut g = fv[7] * WG[3];
    let mut resabs = fv[7].norm() * WGK[7];
    for j in 0..7 {
        let pair = fv[j] + fv[14 - j];
        k += pair * WGK[j];
        resabs += (fv[j].norm() + fv[14 - j].norm()) * WGK[j];
        if j % 2 == 1 {
            g += pair * WG[j / 2];
        }
    }
    let mean = k * 0.5;
    let mut resasc = WGK[7] * (fv[7] - mean).norm();
    for j in 0..7 {
        resasc += WGK[j] * ((fv[j] - mean).norm() + (fv[14 - j] - mean).norm());
    }
    let scale = half.abs();
    let value = k * half;
    resabs *= scale;
    resasc *= scale;
    let mut err = ((k - g) * half).norm();
    if resasc != 0.0 && err != 0.0 {
        err = resasc * (200.0 * err / resasc).powf(1.5).min(1.0);
    }
    let mut at_floor = false;
    if resabs > f64::MIN_POSITIVE / (50.0 * f64::EPSILON) {
        let floor = 50.0 * f64::EPSILON * resabs;
        if floor >= err {
            err = floor;
            at_floor = true;
        }
    }
    Panel { a, b, value, err, at_floor }
}

/// ∫_a^b f(t) dt, bisecting the worst panel until the summed error estimate
/// is below max(abs_tol, rel_tol·|I|) or `max_subdivisions` panels exist.
/// Panels at the roundoff floor are frozen; their error is reported but only
/// the error of the remaining panels is held to the target.
pub fn gauss_kronrod<F>(f: F, a: f64, b: f64, abs_tol: f64, rel_tol: f64, max_subdivisions: usize) -> Result<QuadOutput>
where
    F: Fn(f64) -> Complex64,
{
    if !(a.is_finite() && b.is_finite()) {
        return Err(Error::domain("integration limits must be finite"));
    }
    if a == b {
        return Ok(QuadOutput { value: Complex64::new(0.0, 0.0), err: 0.0, evals: 0, intervals: 0 });
    }
    let first = kronrod(&f, a, b);
    let mut evals = 15;
    let mut heap = BinaryHeap::new();
    heap.push(first);
    let mut frozen: Vec<Panel> = Vec::new();
    let mut total = first.value;
    let mut err = first.err;
    let mut frozen_err = 0.0;
    loop {
        if !(total.re.is_finite() && total.im.is_finite()) {
            return Err(Error::NonFinite("integrand"));
        }
        let target = abs_tol.max(rel_tol * total.norm());
        if err - frozen_err <= target {
            break;
        }
        if heap.len() + frozen.len() >= max_subdivisions {
            return Err(Error::convergence(format!(
                "quadrature on [{a}, {b}] reached {max_subdivisions} panels with error {err:.3e} > {target:.3e}"
            )));
        }
        let worst = heap.pop().expect("heap is never empty");
        let mid = 0.5 * (worst.a + worst.b);
        if worst.at_floor || !(mid > worst.a && mid < worst.b) {
            frozen_err += worst.err;
            frozen.push(worst);
            if heap.is_empty() {
                break;
            }
            continue;
        }
        let left = kronrod(&f, worst.a, mid);
        let right = kronrod(&f, mid, worst.b);
        evals += 30;
        total += left.value + right.value - worst.value;
        err += left.err + right.err - worst.err;
        heap.push(left);
        heap.push(right);
    }
    // final sum in a fixed order, independent of the heap layout
    let mut panels: Vec<&Panel> = heap.iter().chain(frozen.iter()).collect();
    panels.sort_by(|p, q| p.a.total_cmp(&q.a));
    let mut acc = CompensatedSum::new();
    for p in &panels {
        acc.add(p.value);
    }
    let total = acc.value();
    let err: f64 = panels.iter().map(|p| p.err).sum();
    Ok(QuadOutput { value: total, err, evals, intervals: panels.len() })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn polynomial_exact() {
        let r = gauss_kronrod(|t| Complex64::new(t * t * t, 0.0), 0.0, 2.0, 1e-14, 1e-14, 10).unwrap();
        assert!((r.value.re - 4.0).abs() < 1e-14);
        assert_eq!(r.intervals, 1);
    }

    #[test]
    fn sqrt_singularity() {
        let r = gauss_kronrod(|t: f64| Complex64::new(1.0 / t.sqrt(), 0.0), 0.0, 1.0, 1e-12, 1e-12, 500).unwrap();
        assert!((r.value.re - 2.0).abs() < 1e-11, "{}", r.value);
    }

    #[test]
    fn roundoff_limited_log_oscillation() {
        // ∫_0^1 u^{29i} du = 1/(1+29i); tolerance below roundoff of ∫|f| = 1
        let r = gauss_kronrod(|u: f64| Complex64::new(u, 0.0).powc(Complex64::new(0.0, 29.0)), 0.0, 1.0, 1e-18, 1e-15, 4000)
            .unwrap();
        let exact = Complex64::new(1.0, 0.0) / Complex64::new(1.0, 29.0);
        assert!((r.value - exact).norm() < 1e-13);
        assert!(r.err >= (r.value - exact).norm());
    }

    #[test]
    fn complex_oscillation() {
        // ∫_0^π e^{it} dt = 2i
        let r = gauss_kronrod(|t: f64| Complex64::new(0.0, t).exp(), 0.0, std::f64::consts::PI, 1e-14, 1e-14, 50).unwrap();
        assert!((r.value - Complex64::new(0.0, 2.0)).norm() < 1e-14);
    }

    #[test]
    fn budget_exhaustion() {
        let r = gauss_kronrod(|t: f64| Complex64::new((1.0 / t).sin() / t, 0.0), 1e-6, 1.0, 1e-15, 1e-15, 3);
        assert!(matches!(r, Err(Error::Convergence(_))));
    }
}
