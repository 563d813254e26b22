//! Exact rational arithmetic: dense polynomials, truncated power series,
//! rational functions and the quadratic functional-equation solver.

mod polynomial;
mod power_series;
mod quadratic;
mod rational_function;

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;

pub use polynomial::Polynomial;
pub use power_series::PowerSeries;
pub use quadratic::{solve_quadratic, solve_quadratic_series};
pub use rational_function::{rational_to_series, RationalFunction};

pub type Rational = BigRational;

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Order of vanishing at `x = 0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Valuation {
    Finite(usize),
    Infinite,
}

impl Valuation {
    pub fn finite(self) -> Option<usize> {
        match self {
            Valuation::Finite(v) => Some(v),
            Valuation::Infinite => None,
        }
    }
}

impl fmt::Display for Valuation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Valuation::Finite(v) => write!(f, "{v}"),
            Valuation::Infinite => f.write_str("infinite"),
        }
    }
}

/// Writes `sum c_i x^i` in ascending degree, e.g. `1 - 3*x + 2*x^3`.
pub(crate) fn fmt_terms(f: &mut fmt::Formatter<'_>, coeffs: &[Rational], var: &str) -> fmt::Result {
    use num_traits::{One, Signed, Zero};
    let mut first = true;
    for (i, c) in coeffs.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let mag = c.abs();
        if first {
            if c.is_negative() {
                f.write_str("-")?;
            }
        } else if c.is_negative() {
            f.write_str(" - ")?;
        } else {
            f.write_str(" + ")?;
        }
        first = false;
        match i {
            0 => write!(f, "{mag}")?,
            _ => {
                if !mag.is_one() {
                    write!(f, "{mag}*")?;
                }
                if i == 1 {
                    f.write_str(var)?;
                } else {
                    write!(f, "{var}^{i}")?;
                }
            }
        }
    }
    if first {
        f.write_str("0")?;
    }
    Ok(())
}
