use std::fmt;

use num_traits::{One, Zero};

use super::equation::{CanonicalEquation, CHECK_ORDER};
use crate::error::{Error, Result};
use crate::series::{solve_quadratic_series, Polynomial, PowerSeries, Rational, RationalFunction};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TauCase {
    /// `u(0) != 1`: rescale to `u(0) F`.
    I,
    /// `u(0) = 1`, `k = 1`.
    Ii,
    /// `u(0) = 1`, `k >= 2`.
    Iii,
}

impl fmt::Display for TauCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            TauCase::I => "i",
            TauCase::Ii => "ii",
            TauCase::Iii => "iii",
        })
    }
}

/// How one transformation step moves Hankel determinants.
///
/// For `n >= offset`:
/// `det H_{n-offset}(after) = sign * scale_base^n * det H_n(before)`.
/// For `n < offset` the series before the step has valuation `offset - 1`, so
/// `det H_n(before)` is `1` at `n = 0` and `0` otherwise.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DetRelation {
    pub case: TauCase,
    pub offset: usize,
    pub sign: i8,
    pub scale_base: Rational,
}

impl DetRelation {
    /// `det H_n(before)` given a way to evaluate `det H_m(after)`.
    pub fn pull_back(
        &self,
        n: usize,
        after: impl FnOnce(usize) -> Result<Rational>,
    ) -> Result<Rational> {
        if n < self.offset {
            return Ok(if n == 0 {
                Rational::one()
            } else {
                Rational::zero()
            });
        }
        let mut value = after(n - self.offset)?;
        if !self.scale_base.is_one() {
            value /= num_traits::pow(self.scale_base.clone(), n);
        }
        if self.sign < 0 {
            value = -value;
        }
        Ok(value)
    }
}

impl fmt::Display for DetRelation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sign = if self.sign < 0 { "-" } else { "" };
        match self.case {
            TauCase::I => write!(
                f,
                "case i: det H_n(next) = {sign}({})^n det H_n(prev)",
                self.scale_base
            ),
            _ => write!(
                f,
                "case {}: det H_{{n-{}}}(next) = {sign}det H_n(prev)",
                self.case, self.offset
            ),
        }
    }
}

/// `u = u_L + x^(d+2) u_H` with `deg u_L <= d + 1`.
pub fn decompose_u(u: &RationalFunction, d: usize) -> (Polynomial, RationalFunction) {
    let low = u.to_series(d + 2).to_polynomial();
    let high = (u - &RationalFunction::from(low.clone()))
        .unshift(d + 2)
        .expect("u - u_L vanishes to order d + 2");
    (low, high)
}

fn x_pow(k: usize) -> RationalFunction {
    RationalFunction::from(Polynomial::x_pow(k))
}

fn solve(
    a: &RationalFunction,
    b: &RationalFunction,
    c: &RationalFunction,
    order: usize,
) -> Result<PowerSeries> {
    solve_quadratic_series(
        &c.to_series(order),
        &b.to_series(order),
        &a.to_series(order),
    )
}

/// One quadratic transformation step.
pub fn tau_step(eq: &CanonicalEquation) -> Result<(CanonicalEquation, DetRelation)> {
    let (d, k) = (eq.d(), eq.k());
    let u0 = eq.u().at_zero();

    if !u0.is_one() {
        let next = CanonicalEquation::new(
            d,
            k,
            eq.u().scale(&u0.recip()),
            eq.v().scale(&(&u0 * &u0).recip()),
        )?;
        let expected = eq.series(CHECK_ORDER)?.scale(&u0);
        ensure_series(&next, &expected, "case i")?;
        let relation = DetRelation {
            case: TauCase::I,
            offset: 0,
            sign: 1,
            scale_base: u0,
        };
        return Ok((next, relation));
    }

    let (u_low, u_high) = decompose_u(eq.u(), d);
    let u_low = RationalFunction::from(u_low);
    let low_high = &u_low * &u_high;
    let b = &u_low - &u_high.shift(d + 2);
    let sign = if ((d + 1) * d / 2) % 2 == 0 { 1 } else { -1 };

    if k >= 2 {
        let a = -&x_pow(d + 2);
        let c = &eq.v().shift(k - 2) + &low_high;
        let next = CanonicalEquation::canonicalize(&a, &b, &c)?;
        ensure_series(&next, &solve(&a, &b, &c, CHECK_ORDER)?, "case iii")?;
        let relation = DetRelation {
            case: TauCase::Iii,
            offset: d + 1,
            sign,
            scale_base: Rational::one(),
        };
        return Ok((next, relation));
    }

    // k = 1: G solves a G^2 + b G + c = 0 and the next series is (G - G(0)) / x
    let a = -&x_pow(d + 1);
    let c = eq.v() + &low_high.shift(1);
    let g = solve(&a, &b, &c, CHECK_ORDER + 1)?;
    let g0 = g.constant_term().clone();
    // substitute G = x H + g0 and divide by x
    let a_next = -&x_pow(d + 2);
    let b_next = &b - &x_pow(d + 1).scale(&(&g0 + &g0));
    let c_shifted = &(&c + &b.scale(&g0)) - &x_pow(d + 1).scale(&(&g0 * &g0));
    let c_next = c_shifted.unshift(1).map_err(|_| {
        Error::NotCanonicalizable("G(0) substitution left a nonzero constant".into())
    })?;
    let next = CanonicalEquation::canonicalize(&a_next, &b_next, &c_next)?;
    let expected = PowerSeries::new(g.coeffs()[1..].to_vec());
    ensure_series(&next, &expected, "case ii")?;
    let relation = DetRelation {
        case: TauCase::Ii,
        offset: d + 1,
        sign,
        scale_base: Rational::one(),
    };
    Ok((next, relation))
}

fn ensure_series(next: &CanonicalEquation, expected: &PowerSeries, what: &str) -> Result<()> {
    if &next.series(expected.order())? != expected {
        return Err(Error::Inconsistent(format!(
            "{what}: transformed equation does not expand to the expected series"
        )));
    }
    Ok(())
}
