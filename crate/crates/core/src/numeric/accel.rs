use num_complex::Complex64;

use super::sum::CompensatedSum;
use crate::error::{Error, Result};

/// e^z - 1 without cancellation for small |z|.
pub fn expm1(z: Complex64) -> Complex64 {
    if z.norm() < 0.5 {
        z * exprel(z)
    } else {
        z.exp() - 1.0
    }
}

/// (e^z - 1)/z, continuous through z = 0.
pub fn exprel(z: Complex64) -> Complex64 {
    if z.norm() >= 0.5 {
        return (z.exp() - 1.0) / z;
    }
    // Taylor series sum z^k/(k+1)!; |z| < 1/2 so 20 terms reach eps.
    let mut term = Complex64::new(1.0, 0.0);
    let mut acc = term;
    for k in 1..24 {
        term *= z / (k + 1) as f64;
        acc += term;
        if term.norm() < 1e-17 * acc.norm() {
            break;
        }
    }
    acc
}

/// Output of an accelerated series evaluation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AccelSum {
    pub value: Complex64,
    pub err: f64,
    pub terms: usize,
}

/// Sums `sum_{k>=0} z^k b_k` by Euler's transformation
/// `sum_j z^j / (1-z)^{j+1} * Delta^j b_0`, where `Delta` is the forward
/// difference. Needs `|z / (1 - z)| < 1`; for `|z| = 1` that is `Re z < 1/2`.
/// Works best when `b_k` is smooth and slowly varying.
pub fn euler_transform<F>(z: Complex64, b: F, rel_tol: f64, max_order: usize) -> Result<AccelSum>
where
    F: Fn(usize) -> Complex64,
{
    let one_minus = 1.0 - z;
    let ratio = z / one_minus;
    if !(ratio.norm() < 1.0) {
        return Err(Error::domain(format!(
            "Euler transform needs |z/(1-z)| < 1, got {:.3} for z={z}",
            ratio.norm()
        )));
    }

    let mut order = 24.min(max_order.max(2));
    loop {
        let mut diffs: Vec<Complex64> = (0..=order).map(&b).collect();
        let mut acc = CompensatedSum::new();
        let mut weight = 1.0 / one_minus;
        let mut small_run = 0;
        let mut last = f64::INFINITY;
        for j in 0..=order {
            let term = weight * diffs[0];
            acc.add(term);
            last = term.norm();
            let total = acc.value().norm();
            if last <= rel_tol * total || (total == 0.0 && last == 0.0) {
                small_run += 1;
                if small_run >= 2 {
                    return Ok(AccelSum {
                        value: acc.value(),
                        err: 2.0 * last + f64::EPSILON * total,
                        terms: order + 1,
                    });
                }
            } else {
                small_run = 0;
            }
            for i in 0..order - j {
                diffs[i] = diffs[i + 1] - diffs[i];
            }
            weight *= ratio;
        }
        if order >= max_order {
            return Err(Error::convergence(format!(
                "Euler transform did not settle within {max_order} differences (last term {last:.3e})"
            )));
        }
        order = (order * 2).min(max_order);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exprel_continuity() {
        assert_eq!(exprel(Complex64::new(0.0, 0.0)), Complex64::new(1.0, 0.0));
        for z in [Complex64::new(1e-9, 0.0), Complex64::new(0.3, -0.2), Complex64::new(0.49, 0.0)] {
            let direct = (z.exp() - 1.0) / z;
            assert!((exprel(z) - direct).norm() < 1e-7_f64.max(1e-15 / z.norm()));
        }
        let tiny = Complex64::new(1e-12, 1e-12);
        assert!((expm1(tiny) - tiny).norm() < 1e-23);
    }

    #[test]
    fn alternating_harmonic() {
        // sum (-1)^k / (k+1) = ln 2
        let r = euler_transform(Complex64::new(-1.0, 0.0), |k| Complex64::new(1.0 / (k as f64 + 1.0), 0.0), 1e-16, 200).unwrap();
        assert!((r.value.re - std::f64::consts::LN_2).abs() < 1e-15, "{}", r.value);
    }

    #[test]
    fn unit_circle_point() {
        // sum z^k / (k+1)^2 at z = e^{2i}: compare to a long direct sum with
        // the Euler-Maclaurin-free bound |tail| <= 2/(N |1-z|) after summation by parts.
        let z = Complex64::from_polar(1.0, 2.0);
        let r = euler_transform(z, |k| Complex64::new(1.0 / ((k + 1) as f64).powi(2), 0.0), 1e-15, 200).unwrap();
        let mut direct = CompensatedSum::new();
        let mut p = Complex64::new(1.0, 0.0);
        for k in 0..2_000_000usize {
            direct.add(p / ((k + 1) as f64).powi(2));
            p *= z;
        }
        assert!((r.value - direct.value()).norm() < 1e-11);
    }

    #[test]
    fn rejects_divergent_ratio() {
        assert!(euler_transform(Complex64::new(0.9, 0.0), |_| Complex64::new(1.0, 0.0), 1e-12, 50).is_err());
    }
}
