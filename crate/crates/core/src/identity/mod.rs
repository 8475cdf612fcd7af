//! Grid-driven numerical identity checks with machine-readable reports.

mod backend;
mod catalog;
mod exact;

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use num_complex::Complex64;
use num_traits::{Signed, ToPrimitive, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

pub use backend::{Backend, FaultTarget, FAULT_SIZE};
pub use catalog::{catalog, catalog_names, printed_form_notes, PrintedFormNote};
pub use exact::{euler_poly_generating, small_rational};

use crate::error::Result;
use crate::numeric::Rational;

/// Both sides below this magnitude are compared absolutely.
pub const NEAR_ZERO: f64 = 1e-12;
/// Denominator floor for relative residuals.
pub const REL_FLOOR: f64 = 1e-30;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
struct Coord {
    re: f64,
    im: f64,
}

/// A named parameter point, serialized as `{"name": {"re": .., "im": ..}}`.
#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct GridPoint(BTreeMap<String, Coord>);

impl GridPoint {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with(mut self, name: &str, v: impl Into<Complex64>) -> Self {
        let v = v.into();
        self.0.insert(name.to_owned(), Coord { re: v.re, im: v.im });
        self
    }

    /// Complex parameter `name`; panics if the catalog entry did not define it.
    pub fn c(&self, name: &str) -> Complex64 {
        let c = self.0.get(name).unwrap_or_else(|| panic!("grid point has no parameter '{name}'"));
        Complex64::new(c.re, c.im)
    }

    /// Real part of parameter `name`.
    pub fn r(&self, name: &str) -> f64 {
        self.c(name).re
    }

    pub fn names(&self) -> impl Iterator<Item = &str> {
        self.0.keys().map(String::as_str)
    }
}

impl fmt::Display for GridPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in &self.0 {
            if !first {
                f.write_str(", ")?;
            }
            first = false;
            if c.im == 0.0 {
                write!(f, "{k}={}", c.re)?;
            } else {
                write!(f, "{k}={}{:+}i", c.re, c.im)?;
            }
        }
        Ok(())
    }
}

pub type Evaluator = Arc<dyn Fn(&Backend, &GridPoint) -> Result<Complex64> + Send + Sync>;
pub type ExactEvaluator = Arc<dyn Fn(&GridPoint) -> Result<Rational> + Send + Sync>;
pub type Guard = Arc<dyn Fn(&GridPoint) -> bool + Send + Sync>;

/// The two sides of an identity.
#[derive(Clone)]
pub enum Sides {
    Numeric { lhs: Evaluator, rhs: Evaluator },
    Exact { lhs: ExactEvaluator, rhs: ExactEvaluator },
}

/// A named identity with its grid and tolerance.
#[derive(Clone)]
pub struct IdentitySpec {
    pub name: String,
    pub description: String,
    pub tol: f64,
    pub grid: Vec<GridPoint>,
    pub guard: Guard,
    pub sides: Sides,
}

impl fmt::Debug for IdentitySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("IdentitySpec")
            .field("name", &self.name)
            .field("tol", &self.tol)
            .field("points", &self.grid.len())
            .finish()
    }
}

impl IdentitySpec {
    pub fn numeric<L, R>(name: &str, description: &str, tol: f64, grid: Vec<GridPoint>, lhs: L, rhs: R) -> Self
    where
        L: Fn(&Backend, &GridPoint) -> Result<Complex64> + Send + Sync + 'static,
        R: Fn(&Backend, &GridPoint) -> Result<Complex64> + Send + Sync + 'static,
    {
        Self {
            name: name.to_owned(),
            description: description.to_owned(),
            tol,
            grid,
            guard: Arc::new(|_| true),
            sides: Sides::Numeric { lhs: Arc::new(lhs), rhs: Arc::new(rhs) },
        }
    }

    pub fn exact<L, R>(name: &str, description: &str, grid: Vec<GridPoint>, lhs: L, rhs: R) -> Self
    where
        L: Fn(&GridPoint) -> Result<Rational> + Send + Sync + 'static,
        R: Fn(&GridPoint) -> Result<Rational> + Send + Sync + 'static,
    {
        Self {
            name: name.to_owned(),
            description: description.to_owned(),
            tol: 0.0,
            grid,
            guard: Arc::new(|_| true),
            sides: Sides::Exact { lhs: Arc::new(lhs), rhs: Arc::new(rhs) },
        }
    }

    pub fn guarded<G>(mut self, guard: G) -> Self
    where
        G: Fn(&GridPoint) -> bool + Send + Sync + 'static,
    {
        self.guard = Arc::new(guard);
        self
    }

    /// Whether `filter` (a comma-separated list) selects this entry: an exact
    /// name or a prefix ending at a '-' boundary.
    pub fn matches(&self, filter: &str) -> bool {
        filter.split(',').map(str::trim).filter(|f| !f.is_empty()).any(|f| {
            self.name == f || self.name.strip_prefix(f).is_some_and(|rest| rest.starts_with('-'))
        })
    }
}

/// Residual statistics for one identity.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct IdentityReport {
    pub name: String,
    pub points_tested: usize,
    /// Infinite (serialized as null) when an evaluation failed.
    pub max_rel_err: f64,
    pub mean_rel_err: f64,
    pub worst_point: Option<GridPoint>,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

fn residual(l: Complex64, r: Complex64, tol: f64) -> f64 {
    let (ml, mr) = (l.norm(), r.norm());
    let diff = (l - r).norm();
    if ml < NEAR_ZERO && mr < NEAR_ZERO {
        // scaled so that the tolerance corresponds to an absolute gap of NEAR_ZERO
        return diff * tol / NEAR_ZERO;
    }
    diff / ml.max(mr).max(REL_FLOOR)
}

fn exact_residual(l: &Rational, r: &Rational) -> f64 {
    if l == r {
        return 0.0;
    }
    let diff = (l - r).abs();
    let scale = if l.abs() > r.abs() { l.abs() } else { r.abs() };
    if scale.is_zero() {
        return f64::INFINITY;
    }
    (diff / scale).to_f64().unwrap_or(f64::INFINITY)
}

/// Evaluates both sides at every grid point passing the guard.
pub fn check(spec: &IdentitySpec, backend: &Backend) -> IdentityReport {
    let mut tested = 0;
    let mut max_err: f64 = 0.0;
    let mut sum = 0.0;
    let mut worst: Option<GridPoint> = None;
    for p in spec.grid.iter().filter(|p| (spec.guard)(p)) {
        let res = match &spec.sides {
            Sides::Numeric { lhs, rhs } => lhs(backend, p).and_then(|l| Ok(residual(l, rhs(backend, p)?, spec.tol))),
            Sides::Exact { lhs, rhs } => lhs(p).and_then(|l| Ok(exact_residual(&l, &rhs(p)?))),
        };
        tested += 1;
        match res {
            Ok(e) => {
                sum += e;
                if worst.is_none() || e > max_err || e.is_nan() {
                    max_err = if e.is_nan() { f64::INFINITY } else { e };
                    worst = Some(p.clone());
                }
            }
            Err(err) => {
                return IdentityReport {
                    name: spec.name.clone(),
                    points_tested: tested,
                    max_rel_err: f64::INFINITY,
                    mean_rel_err: f64::INFINITY,
                    worst_point: Some(p.clone()),
                    pass: false,
                    error: Some(format!("{} at {p}: {err}", err.kind())),
                };
            }
        }
    }
    IdentityReport {
        name: spec.name.clone(),
        points_tested: tested,
        max_rel_err: max_err,
        mean_rel_err: if tested > 0 { sum / tested as f64 } else { 0.0 },
        worst_point: worst,
        pass: tested > 0 && max_err <= spec.tol,
        error: None,
    }
}

/// Grid density for catalog runs.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum GridSize {
    Full,
    Reduced,
    Quick,
}

impl GridSize {
    fn limit(self) -> Option<usize> {
        match self {
            GridSize::Full => None,
            GridSize::Reduced => Some(12),
            GridSize::Quick => Some(3),
        }
    }
}

/// Runs every catalog entry selected by `filter`, in name order.
pub fn run_catalog(filter: Option<&str>, backend: &Backend, size: GridSize) -> Vec<IdentityReport> {
    let specs: Vec<IdentitySpec> = catalog(size)
        .into_iter()
        .filter(|s| filter.is_none_or(|f| s.matches(f)))
        .collect();
    specs.par_iter().map(|s| check(s, backend)).collect()
}

/// Keeps at most `size.limit()` guard-passing points, evenly spaced.
pub(crate) fn thin(grid: Vec<GridPoint>, guard: &Guard, size: GridSize) -> Vec<GridPoint> {
    let kept: Vec<GridPoint> = grid.into_iter().filter(|p| guard(p)).collect();
    match size.limit() {
        Some(k) if kept.len() > k => {
            let n = kept.len();
            (0..k).map(|i| kept[i * n / k].clone()).collect()
        }
        _ => kept,
    }
}
