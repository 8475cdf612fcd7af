use std::iter::Sum;
use std::ops::AddAssign;

use num_complex::Complex64;

/// Neumaier (improved Kahan-Babuska) accumulator over complex terms.
///
/// Each component carries its own running compensation, so the rounding
/// error of the final sum stays O(eps) in the term magnitudes regardless of
/// how many terms are added.
#[derive(Debug, Clone, Copy, Default, PartialEq)]
pub struct CompensatedSum {
    sum: Complex64,
    comp: Complex64,
}

#[inline]
fn two_sum_step(sum: &mut f64, comp: &mut f64, x: f64) {
    let t = *sum + x;
    if sum.abs() >= x.abs() {
        *comp += (*sum - t) + x;
    } else {
        *comp += (x - t) + *sum;
    }
    *sum = t;
}

impl CompensatedSum {
    pub fn new() -> Self {
        Self::default()
    }

    #[inline]
    pub fn add(&mut self, x: Complex64) {
        two_sum_step(&mut self.sum.re, &mut self.comp.re, x.re);
        two_sum_step(&mut self.sum.im, &mut self.comp.im, x.im);
    }

    #[inline]
    pub fn value(&self) -> Complex64 {
        self.sum + self.comp
    }
}

impl AddAssign<Complex64> for CompensatedSum {
    fn add_assign(&mut self, rhs: Complex64) {
        self.add(rhs);
    }
}

impl Sum<Complex64> for CompensatedSum {
    fn sum<I: Iterator<Item = Complex64>>(iter: I) -> Self {
        let mut acc = CompensatedSum::new();
        for x in iter {
            acc.add(x);
        }
        acc
    }
}

/// Compensated sum of a sequence of complex terms; the empty sum is 0.
pub fn compensated_sum<I>(terms: I) -> Complex64
where
    I: IntoIterator<Item = Complex64>,
{
    terms.into_iter().sum::<CompensatedSum>().value()
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;
    use num_rational::BigRational;
    use num_traits::ToPrimitive;

    #[test]
    fn empty_and_cancelling() {
        assert_eq!(compensated_sum(std::iter::empty()), Complex64::new(0.0, 0.0));
        let s = compensated_sum([Complex64::new(1.0, 0.0), Complex64::new(-1.0, 0.0)]);
        assert_eq!(s, Complex64::new(0.0, 0.0));
    }

    #[test]
    fn million_tenths() {
        // Oracle: the exact rational value of 10^6 copies of fl(0.1).
        let tenth = 0.1f64;
        let exact = BigRational::from_float(tenth).unwrap() * BigRational::from_integer(BigInt::from(1_000_000));
        let exact = exact.to_f64().unwrap();
        let s = compensated_sum(std::iter::repeat_n(Complex64::new(tenth, 0.0), 1_000_000));
        assert!((s.re - exact).abs() <= 2f64.powi(-40));
        assert!((s.re - 1e5).abs() <= 2f64.powi(-40));
        assert_eq!(s.im, 0.0);
    }

    #[test]
    fn beats_naive_on_ill_conditioned_input() {
        let terms = [1e16, 1.0, -1e16, 1.0].map(|x| Complex64::new(x, -x));
        let s = compensated_sum(terms);
        assert_eq!(s, Complex64::new(2.0, -2.0));
    }
}
