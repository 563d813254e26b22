use std::fmt;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::series::{solve_quadratic_series, Polynomial, PowerSeries, RationalFunction, Valuation};

/// Number of coefficients used when cross-checking a transformation against
/// series expansions.
pub(crate) const CHECK_ORDER: usize = 24;

/// `F = x^d / (u + x^k v F)` with `u(0) != 0`, `v(0) != 0` and `k >= 1`.
///
/// The unique power-series solution has valuation exactly `d`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CanonicalEquation {
    d: usize,
    k: usize,
    u: RationalFunction,
    v: RationalFunction,
}

impl CanonicalEquation {
    pub fn new(d: usize, k: usize, u: RationalFunction, v: RationalFunction) -> Result<Self> {
        if k == 0 {
            return Err(Error::NotCanonicalizable("k must be at least 1".into()));
        }
        if u.at_zero().is_zero() {
            return Err(Error::NotCanonicalizable("u(0) must be nonzero".into()));
        }
        if v.at_zero().is_zero() {
            return Err(Error::NotCanonicalizable("v(0) must be nonzero".into()));
        }
        Ok(CanonicalEquation { d, k, u, v })
    }

    /// Rewrites `a F^2 + b F + c = 0` as `F = x^d / (u + x^k v F)`.
    ///
    /// With `-c = x^d c'` and `c'(0) != 0` this is `u = b / c'` and
    /// `x^k v = a / c'`. Needs `b(0) != 0` so that the power-series solution
    /// is unique, and `a / c'` must vanish at zero so that `k >= 1`.
    pub fn canonicalize(
        a: &RationalFunction,
        b: &RationalFunction,
        c: &RationalFunction,
    ) -> Result<Self> {
        if a.is_zero() {
            return Err(Error::NotCanonicalizable(
                "a = 0, the equation is not quadratic".into(),
            ));
        }
        if c.is_zero() {
            return Err(Error::NotCanonicalizable(
                "c = 0, the solution is the zero series".into(),
            ));
        }
        if b.at_zero().is_zero() {
            return Err(Error::NotCanonicalizable(
                "b(0) = 0, no unique power-series solution".into(),
            ));
        }
        let neg_c = -c;
        let d = neg_c.valuation().finite().expect("c is nonzero");
        let c_unit = neg_c.unshift(d)?;
        let u = b.checked_div(&c_unit)?;
        let av = a.checked_div(&c_unit)?;
        let k = match av.valuation() {
            Valuation::Finite(0) => {
                return Err(Error::NotCanonicalizable(
                    "a(0) != 0 would give k = 0".into(),
                ))
            }
            Valuation::Finite(k) => k,
            Valuation::Infinite => unreachable!("a is nonzero"),
        };
        let v = av.unshift(k)?;
        let eq = CanonicalEquation::new(d, k, u, v)?;

        let f = eq.series(CHECK_ORDER)?;
        let residual = &(&(&a.to_series(CHECK_ORDER) * &(&f * &f))
            + &(&b.to_series(CHECK_ORDER) * &f))
            + &c.to_series(CHECK_ORDER);
        if !residual.is_zero() {
            return Err(Error::Inconsistent(format!(
                "canonical form of {a} F^2 + {b} F + {c} does not solve it"
            )));
        }
        Ok(eq)
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn u(&self) -> &RationalFunction {
        &self.u
    }

    pub fn v(&self) -> &RationalFunction {
        &self.v
    }

    /// `(a, b, c)` with `a F^2 + b F + c = 0`: `a = x^k v`, `b = u`, `c = -x^d`.
    pub fn quadratic(&self) -> (RationalFunction, RationalFunction, RationalFunction) {
        (
            self.v.shift(self.k),
            self.u.clone(),
            RationalFunction::from(-Polynomial::x_pow(self.d)),
        )
    }

    /// The solution `F`, to `order` coefficients.
    pub fn series(&self, order: usize) -> Result<PowerSeries> {
        let (a, b, c) = self.quadratic();
        solve_quadratic_series(
            &c.to_series(order),
            &b.to_series(order),
            &a.to_series(order),
        )
    }
}

impl fmt::Display for CanonicalEquation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "F = x^{} / (({}) + x^{} ({}) F)",
            self.d, self.u, self.k, self.v
        )
    }
}
