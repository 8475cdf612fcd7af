//! Exact Bernoulli and Euler numbers and polynomials.
//!
//! Values are held as reduced big-integer rationals and converted to `f64`
//! only at evaluation time. The table is built once on first use.

use std::sync::atomic::{AtomicBool, Ordering};
use std::sync::OnceLock;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::types::ensure_finite;

pub type Rational = BigRational;

/// Largest polynomial degree (and Bernoulli index) served by the public API.
pub const MAX_DEGREE: usize = 64;

// Euler polynomials of degree n need B_{n+1}.
const TABLE_LEN: usize = MAX_DEGREE + 2;

static CORRUPT: AtomicBool = AtomicBool::new(false);
static TABLE: OnceLock<Table> = OnceLock::new();

struct Table {
    binom: Vec<Vec<BigInt>>,
    numbers: Vec<Rational>,
    numbers_f64: Vec<f64>,
    bernoulli: Vec<PolyCoeffs>,
    euler: Vec<PolyCoeffs>,
}

fn to_f64(q: &Rational) -> f64 {
    q.to_f64().unwrap_or(f64::NAN)
}

impl Table {
    fn build(corrupt: bool) -> Table {
        let mut binom: Vec<Vec<BigInt>> = Vec::with_capacity(TABLE_LEN + 1);
        for n in 0..=TABLE_LEN {
            let mut row = vec![BigInt::one(); n + 1];
            for k in 1..n {
                row[k] = &binom[n - 1][k - 1] + &binom[n - 1][k];
            }
            binom.push(row);
        }

        let mut numbers: Vec<Rational> = Vec::with_capacity(TABLE_LEN);
        numbers.push(Rational::one());
        for n in 1..TABLE_LEN {
            let acc = (0..n).fold(Rational::zero(), |acc, k| {
                acc + Rational::from_integer(binom[n + 1][k].clone()) * &numbers[k]
            });
            numbers.push(-acc / Rational::from_integer(BigInt::from(n + 1)));
        }
        if corrupt {
            numbers[2] = &numbers[2] * Rational::new(BigInt::from(1001), BigInt::from(1000));
        }

        let numbers_f64 = numbers.iter().map(to_f64).collect();
        let mut table = Table {
            binom,
            numbers,
            numbers_f64,
            bernoulli: Vec::new(),
            euler: Vec::new(),
        };
        table.bernoulli = (0..TABLE_LEN).map(|n| table.bernoulli_coeffs(n)).collect();
        table.euler = (0..=MAX_DEGREE).map(|n| table.euler_coeffs(n)).collect();
        table
    }

    fn bernoulli_coeffs(&self, n: usize) -> PolyCoeffs {
        let coeffs = (0..=n)
            .map(|j| Rational::from_integer(self.binom[n][j].clone()) * &self.numbers[n - j])
            .collect();
        PolyCoeffs { coeffs }
    }

    fn euler_coeffs(&self, n: usize) -> PolyCoeffs {
        // E_n(x) = 2/(n+1) [B_{n+1}(x) - 2^{n+1} B_{n+1}(x/2)]
        let m = n + 1;
        let scale = Rational::new(BigInt::from(2), BigInt::from(m));
        let coeffs = (0..=n)
            .map(|j| {
                let factor = BigInt::one() - (BigInt::one() << (m - j));
                Rational::from_integer(&self.binom[m][j] * factor) * &self.numbers[m - j] * &scale
            })
            .collect();
        PolyCoeffs { coeffs }
    }
}

fn table() -> &'static Table {
    TABLE.get_or_init(|| Table::build(CORRUPT.load(Ordering::SeqCst)))
}

/// Debug hook: perturbs B_2 by one part in a thousand in the table that is
/// about to be built. Returns false if the table already exists, in which
/// case nothing changes.
#[doc(hidden)]
pub fn debug_corrupt_bernoulli_table() -> bool {
    CORRUPT.store(true, Ordering::SeqCst);
    TABLE.get().is_none()
}

fn check_degree(what: &'static str, n: usize) -> Result<()> {
    if n > MAX_DEGREE {
        Err(Error::Range {
            what,
            value: n,
            max: MAX_DEGREE,
        })
    } else {
        Ok(())
    }
}

/// Exact binomial coefficient C(n, k) from the Pascal table (n <= 66).
pub fn binomial(n: usize, k: usize) -> Result<BigInt> {
    let t = table();
    if n >= t.binom.len() {
        return Err(Error::Range {
            what: "binomial n",
            value: n,
            max: t.binom.len() - 1,
        });
    }
    Ok(if k > n { BigInt::zero() } else { t.binom[n][k].clone() })
}

/// Exact B_n = B_n(0).
pub fn bernoulli_number(n: usize) -> Result<Rational> {
    check_degree("bernoulli index", n)?;
    Ok(table().numbers[n].clone())
}

/// B_n as a float, for Euler-Maclaurin style corrections.
pub(crate) fn bernoulli_number_f64_unchecked(n: usize) -> f64 {
    table().numbers_f64[n]
}

pub fn bernoulli_number_f64(n: usize) -> Result<f64> {
    check_degree("bernoulli index", n)?;
    Ok(bernoulli_number_f64_unchecked(n))
}

/// Polynomial with exact rational coefficients in ascending powers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolyCoeffs {
    pub coeffs: Vec<Rational>,
}

impl PolyCoeffs {
    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn leading(&self) -> &Rational {
        self.coeffs.last().expect("polynomial has at least one coefficient")
    }

    pub fn eval_exact(&self, x: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * x + c)
    }

    /// Evaluates at a float argument. The argument is an exact dyadic
    /// rational, so the polynomial is evaluated exactly and rounded once.
    pub fn eval(&self, x: Complex64) -> Complex64 {
        let xr = Rational::from_float(x.re).unwrap_or_else(Rational::zero);
        if x.im == 0.0 {
            return Complex64::new(to_f64(&self.eval_exact(&xr)), 0.0);
        }
        let xi = Rational::from_float(x.im).unwrap_or_else(Rational::zero);
        let (mut ar, mut ai) = (Rational::zero(), Rational::zero());
        for c in self.coeffs.iter().rev() {
            let nr = &ar * &xr - &ai * &xi + c;
            let ni = &ar * &xi + &ai * &xr;
            ar = nr;
            ai = ni;
        }
        Complex64::new(to_f64(&ar), to_f64(&ai))
    }
}

pub fn bernoulli_poly_coeffs(n: usize) -> Result<PolyCoeffs> {
    check_degree("bernoulli degree", n)?;
    Ok(table().bernoulli[n].clone())
}

pub fn euler_poly_coeffs(n: usize) -> Result<PolyCoeffs> {
    check_degree("euler degree", n)?;
    Ok(table().euler[n].clone())
}

/// B_n(x) by Horner's rule on the exact coefficients.
pub fn bernoulli_poly(n: usize, x: Complex64) -> Result<Complex64> {
    check_degree("bernoulli degree", n)?;
    ensure_finite(x, "x")?;
    Ok(table().bernoulli[n].eval(x))
}

pub fn bernoulli_poly_exact(n: usize, x: &Rational) -> Result<Rational> {
    Ok(bernoulli_poly_coeffs(n)?.eval_exact(x))
}

/// E_n(x) through E_n(x) = 2/(n+1) [B_{n+1}(x) - 2^{n+1} B_{n+1}(x/2)],
/// with the combination carried out on exact coefficients.
pub fn euler_poly(n: usize, x: Complex64) -> Result<Complex64> {
    check_degree("euler degree", n)?;
    ensure_finite(x, "x")?;
    Ok(table().euler[n].eval(x))
}

pub fn euler_poly_exact(n: usize, x: &Rational) -> Result<Rational> {
    Ok(euler_poly_coeffs(n)?.eval_exact(x))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::types::real;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn small_numbers() {
        assert_eq!(bernoulli_number(0).unwrap(), q(1, 1));
        assert_eq!(bernoulli_number(1).unwrap(), q(-1, 2));
        assert_eq!(bernoulli_number(2).unwrap(), q(1, 6));
        assert_eq!(bernoulli_number(4).unwrap(), q(-1, 30));
        assert_eq!(bernoulli_number(12).unwrap(), q(-691, 2730));
        assert!(matches!(bernoulli_number(65), Err(Error::Range { .. })));
    }

    #[test]
    fn recurrence_holds_exactly() {
        for n in 1..=40usize {
            let s = (0..=n).fold(Rational::zero(), |acc, k| {
                acc + Rational::from_integer(binomial(n + 1, k).unwrap()) * bernoulli_number(k).unwrap()
            });
            assert!(s.is_zero(), "n={n}");
        }
    }

    #[test]
    fn odd_numbers_vanish() {
        for k in 1..=20 {
            assert!(bernoulli_number(2 * k + 1).unwrap().is_zero());
        }
    }

    #[test]
    fn monic_polynomials() {
        for n in 0..=MAX_DEGREE {
            let p = bernoulli_poly_coeffs(n).unwrap();
            assert_eq!(p.degree(), n);
            assert!(p.leading().is_one());
            let e = euler_poly_coeffs(n).unwrap();
            assert_eq!(e.degree(), n);
            assert!(e.leading().is_one());
        }
    }

    #[test]
    fn polynomial_examples() {
        assert_eq!(bernoulli_poly(0, real(123.4)).unwrap(), real(1.0));
        assert!(bernoulli_poly(1, real(0.5)).unwrap().norm() < 1e-16);
        assert!((bernoulli_poly(2, real(1.0)).unwrap() - 1.0 / 6.0).norm() < 1e-16);
        assert_eq!(euler_poly(0, real(-7.0)).unwrap(), real(1.0));
        assert_eq!(euler_poly_exact(1, &q(0, 1)).unwrap(), q(-1, 2));
        assert_eq!(euler_poly_exact(2, &q(1, 2)).unwrap(), q(-1, 4));
    }

    #[test]
    fn difference_equation_exact() {
        for n in 1..=20usize {
            for x in [q(0, 1), q(1, 3), q(1, 2), q(2, 1), q(5, 1)] {
                let lhs = bernoulli_poly_exact(n, &(&x + q(1, 1))).unwrap() - bernoulli_poly_exact(n, &x).unwrap();
                let rhs = Rational::from_integer(BigInt::from(n)) * num_traits::pow(x.clone(), n - 1);
                assert_eq!(lhs, rhs, "n={n} x={x}");
            }
        }
    }

    #[test]
    fn difference_equation_float() {
        for n in 1..=20usize {
            for x in [0.0, 1.0 / 3.0, 0.5, 2.0, 5.0] {
                let lhs = bernoulli_poly(n, real(x + 1.0)).unwrap() - bernoulli_poly(n, real(x)).unwrap();
                let rhs = n as f64 * x.powi(n as i32 - 1);
                let scale = rhs.abs().max(1.0);
                assert!((lhs.re - rhs).abs() <= 1e-12 * scale, "n={n} x={x}: {lhs} vs {rhs}");
            }
        }
    }
}
