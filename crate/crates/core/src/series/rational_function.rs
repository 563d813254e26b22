use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::Zero;

use super::{Polynomial, PowerSeries, Rational, Valuation};
use crate::error::{Error, Result};

/// Quotient of two polynomials that is regular at `x = 0`.
///
/// Stored in lowest terms with the denominator's constant term equal to one,
/// so two equal rational functions are structurally equal.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RationalFunction {
    num: Polynomial,
    den: Polynomial,
}

impl RationalFunction {
    /// Reduces `num / den`; fails if the reduced denominator vanishes at zero.
    pub fn new(num: Polynomial, den: Polynomial) -> Result<Self> {
        assert!(!den.is_zero(), "rational function with zero denominator");
        if num.is_zero() {
            return Ok(Self::zero());
        }
        let g = Polynomial::gcd(&num, &den);
        let (num, den) = if g.degree() == Some(0) {
            (num, den)
        } else {
            (num.div_rem(&g).0, den.div_rem(&g).0)
        };
        let d0 = den.constant_term();
        if d0.is_zero() {
            return Err(Error::PoleAtZero);
        }
        let s = d0.recip();
        Ok(RationalFunction {
            num: num.scale(&s),
            den: den.scale(&s),
        })
    }

    pub fn zero() -> Self {
        RationalFunction {
            num: Polynomial::zero(),
            den: Polynomial::one(),
        }
    }

    pub fn one() -> Self {
        Self::from(Polynomial::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::from(Polynomial::constant(c))
    }

    pub fn num(&self) -> &Polynomial {
        &self.num
    }

    pub fn den(&self) -> &Polynomial {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    /// Value at `x = 0`.
    pub fn at_zero(&self) -> Rational {
        self.num.constant_term()
    }

    pub fn valuation(&self) -> Valuation {
        self.num.valuation()
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        RationalFunction {
            num: self.num.scale(c),
            den: self.den.clone(),
        }
    }

    /// Multiplies by `x^k`.
    pub fn shift(&self, k: usize) -> Self {
        RationalFunction {
            num: self.num.shift(k),
            den: self.den.clone(),
        }
    }

    /// Divides by `x^k`; the numerator must be divisible.
    pub fn unshift(&self, k: usize) -> Result<Self> {
        Ok(RationalFunction {
            num: self.num.unshift(k)?,
            den: self.den.clone(),
        })
    }

    pub fn checked_div(&self, rhs: &RationalFunction) -> Result<Self> {
        if rhs.is_zero() {
            return Err(Error::PoleAtZero);
        }
        Self::new(&self.num * &rhs.den, &self.den * &rhs.num)
    }

    pub fn to_series(&self, order: usize) -> PowerSeries {
        rational_to_series(self, order)
    }
}

/// Expands `num / den` to `order` coefficients by long division of power series.
pub fn rational_to_series(r: &RationalFunction, order: usize) -> PowerSeries {
    let den = r.den();
    let mut out: Vec<Rational> = Vec::with_capacity(order);
    // den(0) == 1 by construction
    for n in 0..order {
        let mut c = r.num().coeff(n);
        for (i, d) in den
            .coeffs()
            .iter()
            .enumerate()
            .skip(1)
            .take_while(|(i, _)| *i <= n)
        {
            if !d.is_zero() {
                c -= d * &out[n - i];
            }
        }
        out.push(c);
    }
    PowerSeries::new(out)
}

impl From<Polynomial> for RationalFunction {
    fn from(p: Polynomial) -> Self {
        RationalFunction {
            num: p,
            den: Polynomial::one(),
        }
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

impl Add for &RationalFunction {
    type Output = RationalFunction;

    fn add(self, rhs: &RationalFunction) -> RationalFunction {
        if self.den == rhs.den {
            return RationalFunction::new(&self.num + &rhs.num, self.den.clone())
                .expect("regular at zero");
        }
        RationalFunction::new(
            &self.num * &rhs.den + &rhs.num * &self.den,
            &self.den * &rhs.den,
        )
        .expect("sum of functions regular at zero")
    }
}

impl Sub for &RationalFunction {
    type Output = RationalFunction;

    fn sub(self, rhs: &RationalFunction) -> RationalFunction {
        self + &(-rhs)
    }
}

impl Mul for &RationalFunction {
    type Output = RationalFunction;

    fn mul(self, rhs: &RationalFunction) -> RationalFunction {
        RationalFunction::new(&self.num * &rhs.num, &self.den * &rhs.den)
            .expect("product of functions regular at zero")
    }
}

impl Neg for &RationalFunction {
    type Output = RationalFunction;

    fn neg(self) -> RationalFunction {
        RationalFunction {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}
