use std::fmt;
use std::sync::Arc;

use num_complex::Complex64;

/// t ↦ ω(t).
pub type ValueFn = Arc<dyn Fn(f64) -> Complex64 + Send + Sync>;
/// (m, t) ↦ ω^{(m)}(t).
pub type DerivativeFn = Arc<dyn Fn(usize, f64) -> Complex64 + Send + Sync>;

/// Decay class of a kernel: |ω(t)| = O(t^{-b}) or faster than any power.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Decay {
    Power(f64),
    Rapid,
}

impl Decay {
    /// Exponent b, infinite for rapid decay.
    pub fn exponent(self) -> f64 {
        match self {
            Decay::Power(b) => b,
            Decay::Rapid => f64::INFINITY,
        }
    }
}

/// A good function on [0, ∞) together with its decay class and optional
/// analytic derivatives. Callables must be safe to call from several threads.
#[derive(Clone)]
pub struct KernelSpec {
    pub name: String,
    pub value: ValueFn,
    pub derivative: Option<DerivativeFn>,
    pub decay: Decay,
}

impl fmt::Debug for KernelSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("KernelSpec")
            .field("name", &self.name)
            .field("decay", &self.decay)
            .field("has_derivative", &self.derivative.is_some())
            .finish()
    }
}

impl KernelSpec {
    pub fn from_fn<F>(name: impl Into<String>, decay: Decay, f: F) -> Self
    where
        F: Fn(f64) -> Complex64 + Send + Sync + 'static,
    {
        Self { name: name.into(), value: Arc::new(f), derivative: None, decay }
    }

    pub fn with_derivative<D>(mut self, d: D) -> Self
    where
        D: Fn(usize, f64) -> Complex64 + Send + Sync + 'static,
    {
        self.derivative = Some(Arc::new(d));
        self
    }

    #[inline]
    pub fn eval(&self, t: f64) -> Complex64 {
        (self.value)(t)
    }

    /// t ↦ ω(t + shift), derivatives included.
    pub fn shifted(&self, shift: f64) -> Self {
        let value = Arc::clone(&self.value);
        let derivative = self.derivative.as_ref().map(|d| {
            let d = Arc::clone(d);
            Arc::new(move |m: usize, t: f64| d(m, t + shift)) as DerivativeFn
        });
        Self {
            name: format!("{}(t+{shift})", self.name),
            value: Arc::new(move |t| value(t + shift)),
            derivative,
            decay: self.decay,
        }
    }

    /// ω(t) = e^{-νt}.
    pub fn exponential(nu: Complex64) -> Self {
        Self::from_fn(format!("exp(-{nu} t)"), Decay::Rapid, move |t| (-nu * t).exp())
            .with_derivative(move |m, t| (-nu).powu(m as u32) * (-nu * t).exp())
    }

    /// ω(t) = e^{-νt}/(e^t + 1).
    pub fn fermi_dirac(nu: Complex64) -> Self {
        let table = logistic_derivative_table(1.0);
        Self::from_fn(format!("exp(-{nu} t)/(e^t+1)"), Decay::Rapid, move |t| (-nu * t).exp() * fermi(t))
            .with_derivative(move |m, t| leibniz(nu, m, t, fermi(t), &table))
    }

    /// ω(t) = e^{-νt}/(e^t - 1), singular like 1/t at the origin.
    pub fn bose_einstein(nu: Complex64) -> Self {
        let table = logistic_derivative_table(-1.0);
        Self::from_fn(format!("exp(-{nu} t)/(e^t-1)"), Decay::Rapid, move |t| (-nu * t).exp() * bose(t))
            .with_derivative(move |m, t| leibniz(nu, m, t, bose(t), &table))
    }
}

/// 1/(e^t + 1) without overflow.
#[inline]
pub(crate) fn fermi(t: f64) -> f64 {
    if t > 0.0 {
        let e = (-t).exp();
        e / (1.0 + e)
    } else {
        1.0 / (t.exp() + 1.0)
    }
}

/// 1/(e^t - 1) without overflow or cancellation near 0.
#[inline]
pub(crate) fn bose(t: f64) -> f64 {
    if t > 0.0 {
        let e = (-t).exp();
        e / -(-t).exp_m1()
    } else {
        1.0 / t.exp_m1()
    }
}

const MAX_DERIVATIVE: usize = 24;

/// h = 1/(e^t + σ) with σ = ±1 satisfies h' = σh² - h, so h^{(m)} is a
/// polynomial P_m(h); returns the coefficient lists of P_0 ... P_MAX.
fn logistic_derivative_table(sigma: f64) -> Arc<Vec<Vec<f64>>> {
    let mut table = vec![vec![0.0, 1.0]];
    for m in 0..MAX_DERIVATIVE {
        let p = &table[m];
        let mut next = vec![0.0; p.len() + 1];
        // P' (h) * (σh² - h)
        for (k, &c) in p.iter().enumerate().skip(1) {
            let d = c * k as f64;
            next[k] -= d;
            next[k + 1] += sigma * d;
        }
        table.push(next);
    }
    Arc::new(table)
}

fn leibniz(nu: Complex64, m: usize, t: f64, h: f64, table: &[Vec<f64>]) -> Complex64 {
    assert!(m <= MAX_DERIVATIVE, "derivative order {m} above {MAX_DERIVATIVE}");
    let mut acc = Complex64::new(0.0, 0.0);
    let mut binom = 1.0;
    let minus_nu = -nu;
    for (k, poly) in table.iter().enumerate().take(m + 1) {
        let hk = poly.iter().rev().fold(0.0, |acc, &c| acc * h + c);
        acc += binom * minus_nu.powu((m - k) as u32) * hk;
        binom = binom * (m - k) as f64 / (k + 1) as f64;
    }
    acc * (minus_nu * t).exp()
}

/// Outcome of sampling |ω(t)|·t^b over [10, 10^4].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DecayAudit {
    pub exponent: f64,
    pub max_early: f64,
    pub max_late: f64,
    pub bounded: bool,
}

/// Checks that |ω(t)|·t^b does not grow over [10, 10^4], using b = 20 for
/// rapidly decaying kernels. A sanity check only.
pub fn audit_decay(kernel: &KernelSpec) -> DecayAudit {
    let b = match kernel.decay {
        Decay::Power(b) => b,
        Decay::Rapid => 20.0,
    };
    let samples = 64;
    let mut max_early: f64 = 0.0;
    let mut max_late: f64 = 0.0;
    for i in 0..samples {
        let t = 10.0 * 1000f64.powf(i as f64 / (samples - 1) as f64);
        let v = kernel.eval(t).norm() * t.powf(b);
        if i < samples / 2 {
            max_early = max_early.max(v);
        } else {
            max_late = max_late.max(v);
        }
    }
    let bounded = max_late.is_finite() && max_late <= 10.0 * max_early.max(f64::MIN_POSITIVE);
    DecayAudit { exponent: b, max_early, max_late, bounded }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::types::{c64, real};

    fn finite_difference(k: &KernelSpec, m: usize, t: f64) -> Complex64 {
        // central difference of the (m-1)-th analytic derivative
        let h = 1e-5;
        let d = k.derivative.as_ref().unwrap();
        (d(m - 1, t + h) - d(m - 1, t - h)) / (2.0 * h)
    }

    #[test]
    fn derivative_zero_is_value() {
        for k in [KernelSpec::fermi_dirac(c64(0.5, 0.2)), KernelSpec::bose_einstein(real(1.3))] {
            let d = k.derivative.clone().unwrap();
            for t in [0.3, 1.0, 7.0] {
                assert!((d(0, t) - k.eval(t)).norm() < 1e-15 * k.eval(t).norm().max(1.0));
            }
        }
    }

    #[test]
    fn derivatives_match_differences() {
        for k in [
            KernelSpec::fermi_dirac(real(0.0)),
            KernelSpec::fermi_dirac(c64(1.5, -0.5)),
            KernelSpec::bose_einstein(real(0.5)),
            KernelSpec::exponential(real(3.0)),
        ] {
            let d = k.derivative.clone().unwrap();
            for m in 1..=5 {
                for t in [0.4, 1.0, 2.5] {
                    let exact = d(m, t);
                    let fd = finite_difference(&k, m, t);
                    assert!((exact - fd).norm() < 1e-7 * exact.norm().max(1.0), "{} m={m} t={t}", k.name);
                }
            }
        }
    }

    #[test]
    fn fermi_first_derivative_closed_form() {
        // d/dt 1/(e^t+1) = -e^t/(e^t+1)²
        let k = KernelSpec::fermi_dirac(real(0.0));
        let d = k.derivative.unwrap();
        for t in [0.0, 0.7, 3.0] {
            let e = f64::exp(t);
            assert!((d(1, t).re + e / ((e + 1.0) * (e + 1.0))).abs() < 1e-16);
        }
    }

    #[test]
    fn shifted_kernel() {
        let k = KernelSpec::fermi_dirac(real(0.5));
        let s = k.shifted(2.0);
        assert_eq!(s.eval(1.0), k.eval(3.0));
        assert_eq!(s.derivative.unwrap()(2, 1.0), k.derivative.unwrap()(2, 3.0));
    }

    #[test]
    fn audit_flags_misdeclared_decay() {
        assert!(audit_decay(&KernelSpec::fermi_dirac(real(0.0))).bounded);
        let honest = KernelSpec::from_fn("1/(1+t)^2", Decay::Power(2.0), |t| real(1.0 / ((1.0 + t) * (1.0 + t))));
        assert!(audit_decay(&honest).bounded);
        let liar = KernelSpec::from_fn("1/(1+t)", Decay::Power(2.0), |t| real(1.0 / (1.0 + t)));
        assert!(!audit_decay(&liar).bounded);
    }
}
