use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::numeric::Rational;

/// E_n(x) from the generating function 2e^{xt}/(e^t + 1) = Σ E_n(x) t^n/n!,
/// by exact power-series division.
pub fn euler_poly_generating(n: usize, x: &Rational) -> Rational {
    // numerator 2 x^k/k!, denominator 2 + Σ_{k≥1} 1/k!
    let mut fact = vec![Rational::one()];
    for k in 1..=n {
        fact.push(&fact[k - 1] * Rational::from_integer(BigInt::from(k)));
    }
    let two = Rational::from_integer(BigInt::from(2));
    let mut xpow = Rational::one();
    let mut num = Vec::with_capacity(n + 1);
    for f in fact.iter().take(n + 1) {
        num.push(&two * &xpow / f);
        xpow *= x;
    }
    let den = |k: usize| if k == 0 { two.clone() } else { Rational::one() / &fact[k] };
    let mut q: Vec<Rational> = Vec::with_capacity(n + 1);
    for m in 0..=n {
        let mut acc = num[m].clone();
        for k in 1..=m {
            acc -= den(k) * &q[m - k];
        }
        q.push(acc / den(0));
    }
    &q[n] * &fact[n]
}

/// The rational p/q with q ≤ 1000 whose nearest double is `x`, if any.
pub fn small_rational(x: f64) -> Option<Rational> {
    if !x.is_finite() {
        return None;
    }
    for q in 1..=1000i64 {
        let p = (x * q as f64).round();
        if p.abs() > 1e15 {
            return None;
        }
        if p / q as f64 == x {
            return Some(Rational::new(BigInt::from(p as i64), BigInt::from(q)));
        }
    }
    if x.is_zero() {
        return Some(Rational::zero());
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::euler_poly_exact;

    fn r(p: i64, q: i64) -> Rational {
        Rational::new(BigInt::from(p), BigInt::from(q))
    }

    #[test]
    fn low_order_euler_polynomials() {
        // E_0 = 1, E_1(x) = x - 1/2, E_2(x) = x² - x
        assert_eq!(euler_poly_generating(0, &r(3, 7)), r(1, 1));
        assert_eq!(euler_poly_generating(1, &r(0, 1)), r(-1, 2));
        assert_eq!(euler_poly_generating(2, &r(1, 2)), r(-1, 4));
    }

    #[test]
    fn agrees_with_table() {
        for n in 0..=12 {
            for x in [r(0, 1), r(1, 2), r(1, 1), r(2, 1), r(-5, 3)] {
                assert_eq!(euler_poly_generating(n, &x), euler_poly_exact(n, &x).unwrap(), "n={n} x={x}");
            }
        }
    }

    #[test]
    fn recovers_small_rationals() {
        assert_eq!(small_rational(1.0 / 3.0), Some(r(1, 3)));
        assert_eq!(small_rational(2.3), Some(r(23, 10)));
        assert_eq!(small_rational(0.0), Some(r(0, 1)));
        assert_eq!(small_rational(std::f64::consts::PI), None);
    }
}
