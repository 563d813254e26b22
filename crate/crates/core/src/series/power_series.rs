use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::{fmt_terms, Polynomial, Rational};
use crate::error::{Error, Result};

/// Formal power series known exactly up to (but excluding) `x^order`.
///
/// The truncation order is always at least one. Binary operations return a
/// series whose order is the smaller of the two operands' orders, and reading
/// a coefficient at or beyond the order is an error rather than a silent zero.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PowerSeries {
    coeffs: Vec<Rational>,
}

impl PowerSeries {
    /// Panics if `coeffs` is empty: a series with no known coefficient has no meaning here.
    pub fn new(coeffs: Vec<Rational>) -> Self {
        assert!(
            !coeffs.is_empty(),
            "power series needs a positive truncation order"
        );
        PowerSeries { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| super::rat(c)).collect())
    }

    pub fn zero(order: usize) -> Self {
        Self::new(vec![Rational::zero(); order])
    }

    pub fn one(order: usize) -> Self {
        Self::from_polynomial(&Polynomial::one(), order)
    }

    pub fn from_polynomial(p: &Polynomial, order: usize) -> Self {
        Self::new((0..order).map(|i| p.coeff(i)).collect())
    }

    pub fn order(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, index: usize) -> Result<&Rational> {
        self.coeffs.get(index).ok_or(Error::TruncationExceeded {
            index,
            order: self.order(),
        })
    }

    pub fn constant_term(&self) -> &Rational {
        &self.coeffs[0]
    }

    pub fn truncate(&self, order: usize) -> Self {
        assert!(
            order >= 1 && order <= self.order(),
            "cannot truncate order {} to {order}",
            self.order()
        );
        Self::new(self.coeffs[..order].to_vec())
    }

    /// Polynomial made of the known coefficients.
    pub fn to_polynomial(&self) -> Polynomial {
        Polynomial::new(self.coeffs.clone())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// Index of the first nonzero coefficient. An all-zero truncation cannot be
    /// told apart from the zero series, so it is reported as an error.
    pub fn valuation(&self) -> Result<usize> {
        self.coeffs
            .iter()
            .position(|c| !c.is_zero())
            .ok_or(Error::IndeterminateValuation {
                order: self.order(),
            })
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Multiplies by `x^k`, keeping the truncation order.
    pub fn shift(&self, k: usize) -> Self {
        let order = self.order();
        Self::new(
            (0..order)
                .map(|i| {
                    if i < k {
                        Rational::zero()
                    } else {
                        self.coeffs[i - k].clone()
                    }
                })
                .collect(),
        )
    }

    /// Multiplicative inverse; the order is preserved.
    pub fn inverse(&self) -> Result<Self> {
        let f0 = self.constant_term();
        if f0.is_zero() {
            return Err(Error::ZeroConstantTerm);
        }
        let inv0 = f0.recip();
        let mut out: Vec<Rational> = Vec::with_capacity(self.order());
        out.push(inv0.clone());
        for n in 1..self.order() {
            let mut acc = Rational::zero();
            for i in 1..=n {
                let fi = &self.coeffs[i];
                if !fi.is_zero() {
                    acc += fi * &out[n - i];
                }
            }
            out.push(-acc * &inv0);
        }
        Ok(Self::new(out))
    }

    /// `self^k` by binary exponentiation; `k = 0` gives the unit series.
    pub fn pow(&self, mut k: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one(self.order());
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        acc
    }
}

impl fmt::Display for PowerSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_terms(f, &self.coeffs, "x")?;
        write!(f, " + O(x^{})", self.order())
    }
}

impl Mul for &PowerSeries {
    type Output = PowerSeries;

    fn mul(self, rhs: &PowerSeries) -> PowerSeries {
        let order = self.order().min(rhs.order());
        let mut coeffs = vec![Rational::zero(); order];
        for (i, a) in self.coeffs.iter().take(order).enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().take(order - i).enumerate() {
                if !b.is_zero() {
                    coeffs[i + j] += a * b;
                }
            }
        }
        PowerSeries::new(coeffs)
    }
}

impl Add for &PowerSeries {
    type Output = PowerSeries;

    fn add(self, rhs: &PowerSeries) -> PowerSeries {
        PowerSeries::new(
            self.coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        )
    }
}

impl Sub for &PowerSeries {
    type Output = PowerSeries;

    fn sub(self, rhs: &PowerSeries) -> PowerSeries {
        PowerSeries::new(
            self.coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(a, b)| a - b)
                .collect(),
        )
    }
}

impl Neg for &PowerSeries {
    type Output = PowerSeries;

    fn neg(self) -> PowerSeries {
        PowerSeries::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl PowerSeries {
    pub fn is_one(&self) -> bool {
        self.coeffs[0].is_one() && self.coeffs[1..].iter().all(Zero::is_zero)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn square_of_one_plus_x() {
        let f = PowerSeries::from_ints(&[1, 1, 0, 0]);
        assert_eq!(&f * &f, PowerSeries::from_ints(&[1, 2, 1, 0]));
        assert_eq!(&f * &PowerSeries::one(4), f);
    }

    #[test]
    fn catalan_square() {
        let c = PowerSeries::from_ints(&[1, 1, 2, 5, 14, 42]);
        assert_eq!(&c * &c, PowerSeries::from_ints(&[1, 2, 5, 14, 42, 132]));
    }

    #[test]
    fn truncation_is_minimum() {
        let a = PowerSeries::from_ints(&[1, 1, 1, 1, 1]);
        let b = PowerSeries::from_ints(&[1, 2, 3]);
        assert_eq!((&a * &b).order(), 3);
        assert_eq!((&a + &b).order(), 3);
    }

    #[test]
    fn inverses() {
        assert_eq!(
            PowerSeries::from_ints(&[1, -1, 0, 0, 0]).inverse().unwrap(),
            PowerSeries::from_ints(&[1, 1, 1, 1, 1])
        );
        assert_eq!(
            PowerSeries::from_ints(&[1, 1, 0, 0, 0]).inverse().unwrap(),
            PowerSeries::from_ints(&[1, -1, 1, -1, 1])
        );
        assert_eq!(
            PowerSeries::from_ints(&[1, 1, 2, 5, 14]).inverse().unwrap(),
            PowerSeries::from_ints(&[1, -1, -1, -2, -5])
        );
        assert_eq!(
            PowerSeries::from_ints(&[0, 1]).inverse(),
            Err(Error::ZeroConstantTerm)
        );
    }

    #[test]
    fn out_of_range_coefficient_is_an_error() {
        let f = PowerSeries::from_ints(&[1, 2]);
        assert_eq!(f.coeff(1), Ok(&super::super::rat(2)));
        assert_eq!(
            f.coeff(2),
            Err(Error::TruncationExceeded { index: 2, order: 2 })
        );
    }

    #[test]
    fn valuation_of_zero_truncation() {
        assert_eq!(PowerSeries::from_ints(&[0, 0, 3]).valuation(), Ok(2));
        assert_eq!(
            PowerSeries::zero(3).valuation(),
            Err(Error::IndeterminateValuation { order: 3 })
        );
    }

    #[test]
    fn pow_identity() {
        let f = PowerSeries::from_ints(&[1, 1, 2, 4, 9, 21, 51]);
        assert_eq!(f.pow(1), f);
        assert_eq!(
            f.pow(3),
            PowerSeries::from_ints(&[1, 3, 9, 25, 69, 189, 518])
        );
    }
}
