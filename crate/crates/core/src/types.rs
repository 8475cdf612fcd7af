use std::fmt;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Complex scalar used for orders, arguments and results.
pub type ComplexValue = Complex64;

/// Shorthand constructor.
#[inline]
pub fn c64(re: f64, im: f64) -> ComplexValue {
    Complex64::new(re, im)
}

/// Real number lifted to the complex plane.
#[inline]
pub fn real(re: f64) -> ComplexValue {
    Complex64::new(re, 0.0)
}

pub(crate) fn ensure_finite(z: ComplexValue, what: &'static str) -> Result<ComplexValue> {
    if z.re.is_finite() && z.im.is_finite() {
        Ok(z)
    } else {
        Err(Error::NonFinite(what))
    }
}

pub(crate) fn ensure_finite_real(x: f64, what: &'static str) -> Result<f64> {
    if x.is_finite() {
        Ok(x)
    } else {
        Err(Error::NonFinite(what))
    }
}

/// Returns `Some(m)` when `z == -m` for a non-negative integer `m`.
pub(crate) fn as_nonpositive_integer(z: ComplexValue) -> Option<u64> {
    if z.im == 0.0 && z.re <= 0.0 && z.re == z.re.round() && z.re > -1e15 {
        Some((-z.re) as u64)
    } else {
        None
    }
}

/// Returns `Some(m)` when `z` is exactly the real integer `m`.
pub(crate) fn as_integer(z: ComplexValue) -> Option<i64> {
    if z.im == 0.0 && z.re == z.re.round() && z.re.abs() < 1e15 {
        Some(z.re as i64)
    } else {
        None
    }
}

/// Code path that produced a value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    /// Closed form or table lookup.
    ClosedForm,
    /// Limit value at a removable singularity.
    Limit,
    /// Exact zero of the function (e.g. a Gamma pole in a denominator).
    Zero,
    EulerMaclaurin,
    /// Hurwitz's Fourier series for negative real part of s.
    HurwitzFourier,
    /// Plain summation with a geometric tail bound.
    DirectSeries,
    /// Direct head plus Euler-transformed tail.
    EulerTransform,
    /// Unit-circle argument rotated through the multiplication formula.
    Rotation,
    /// Delegated to the Hurwitz zeta function.
    HurwitzDelegate,
    /// Difference of two Hurwitz zeta values (continuation in s).
    HurwitzDifference,
    FunctionalEquation,
    LogGamma,
    Quadrature,
    XSeries,
    PowerSeriesX,
    NuSeries,
    NegIntBernoulli,
    TaylorSeries,
    /// Derivative pushed under the integral.
    Derivative,
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = serde_json::to_value(self)
            .ok()
            .and_then(|v| v.as_str().map(str::to_owned))
            .unwrap_or_default();
        f.write_str(&s)
    }
}

/// A computed value with its error estimate and provenance.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct EvalResult {
    #[serde(with = "complex_serde")]
    pub value: ComplexValue,
    /// Absolute error estimate (not a guarantee).
    pub err_estimate: f64,
    pub strategy: Method,
    /// Terms summed or integrand evaluations spent.
    pub work: usize,
}

impl EvalResult {
    pub fn new(value: ComplexValue, err_estimate: f64, strategy: Method, work: usize) -> Self {
        EvalResult {
            value,
            err_estimate: err_estimate.abs(),
            strategy,
            work,
        }
    }

    pub fn exact(value: ComplexValue, strategy: Method) -> Self {
        EvalResult::new(value, 0.0, strategy, 1)
    }

    /// Multiplies value and error estimate by a constant factor.
    pub fn scaled(self, factor: ComplexValue) -> Self {
        EvalResult {
            value: self.value * factor,
            err_estimate: self.err_estimate * factor.norm(),
            ..self
        }
    }

    pub fn with_strategy(self, strategy: Method) -> Self {
        EvalResult { strategy, ..self }
    }
}

/// Truncation and tolerance settings for series evaluators.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SeriesConfig {
    pub rel_tol: f64,
    pub max_terms: usize,
    /// Euler-Maclaurin direct-sum cutoff N.
    pub em_shift: usize,
    /// Number of Euler-Maclaurin correction terms 2M (even).
    pub em_order: usize,
}

impl Default for SeriesConfig {
    fn default() -> Self {
        SeriesConfig {
            rel_tol: 1e-15,
            max_terms: 200_000,
            em_shift: 10,
            em_order: 12,
        }
    }
}

impl SeriesConfig {
    pub fn validate(&self) -> Result<()> {
        if !(self.rel_tol > 0.0) || self.max_terms == 0 || self.em_shift == 0 {
            return Err(Error::domain("series config values must be positive"));
        }
        if self.em_order == 0 || !self.em_order.is_multiple_of(2) {
            return Err(Error::domain("em_order must be a positive even integer"));
        }
        if self.em_order > 2 * crate::numeric::MAX_DEGREE {
            return Err(Error::Range {
                what: "em_order",
                value: self.em_order,
                max: 2 * crate::numeric::MAX_DEGREE,
            });
        }
        Ok(())
    }
}

/// Settings for the adaptive quadrature behind the Weyl transform.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct QuadratureConfig {
    pub abs_tol: f64,
    pub rel_tol: f64,
    pub max_subdivisions: usize,
    /// Right end of the near-zero region handled by the endpoint substitution.
    pub endpoint_split: f64,
}

impl Default for QuadratureConfig {
    fn default() -> Self {
        QuadratureConfig {
            abs_tol: 1e-14,
            rel_tol: 1e-12,
            max_subdivisions: 4000,
            endpoint_split: 1.0,
        }
    }
}

impl QuadratureConfig {
    pub fn validate(&self) -> Result<()> {
        if !(self.abs_tol > 0.0 && self.rel_tol > 0.0) {
            return Err(Error::domain("quadrature tolerances must be positive"));
        }
        if self.max_subdivisions == 0 {
            return Err(Error::domain("max_subdivisions must be at least 1"));
        }
        if !(self.endpoint_split > 0.0 && self.endpoint_split <= 1.0) {
            return Err(Error::domain("endpoint_split must lie in (0, 1]"));
        }
        Ok(())
    }
}

/// Everything the extended-function evaluators need.
#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
pub struct EvalConfig {
    pub series: SeriesConfig,
    pub quad: QuadratureConfig,
}

pub(crate) mod complex_serde {
    use num_complex::Complex64;
    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    #[derive(Serialize, Deserialize)]
    struct Parts {
        re: f64,
        im: f64,
    }

    pub fn serialize<S: Serializer>(z: &Complex64, ser: S) -> Result<S::Ok, S::Error> {
        Parts { re: z.re, im: z.im }.serialize(ser)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(de: D) -> Result<Complex64, D::Error> {
        let p = Parts::deserialize(de)?;
        Ok(Complex64::new(p.re, p.im))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn integer_detection() {
        assert_eq!(as_nonpositive_integer(real(0.0)), Some(0));
        assert_eq!(as_nonpositive_integer(real(-3.0)), Some(3));
        assert_eq!(as_nonpositive_integer(real(-3.5)), None);
        assert_eq!(as_nonpositive_integer(c64(-3.0, 1e-300)), None);
        assert_eq!(as_integer(real(4.0)), Some(4));
    }

    #[test]
    fn eval_result_json_field_names() {
        let r = EvalResult::new(c64(1.5, -2.0), 1e-12, Method::EulerMaclaurin, 7);
        let v = serde_json::to_value(r).unwrap();
        assert_eq!(v["value"]["re"], 1.5);
        assert_eq!(v["value"]["im"], -2.0);
        assert_eq!(v["strategy"], "euler_maclaurin");
        assert_eq!(v["work"], 7);
        assert_eq!(Method::PowerSeriesX.to_string(), "power_series_x");
    }

    #[test]
    fn config_validation() {
        assert!(SeriesConfig::default().validate().is_ok());
        let bad = SeriesConfig {
            em_order: 7,
            ..Default::default()
        };
        assert!(bad.validate().is_err());
        assert!(QuadratureConfig::default().validate().is_ok());
        let bad = QuadratureConfig {
            endpoint_split: 0.0,
            ..Default::default()
        };
        assert!(bad.validate().is_err());
    }
}
