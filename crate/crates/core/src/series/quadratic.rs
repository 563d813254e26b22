use num_traits::Zero;

use super::{Polynomial, PowerSeries, Rational};
use crate::error::{Error, Result};

/// Unique power series `F` with `w + u F + v F^2 = 0`, to `order` coefficients.
///
/// Requires `v(0) = 0` and `u(0) != 0`. The coefficient of `x^n` in the
/// equation is linear in `a_n` with factor `u(0)` and otherwise involves only
/// `a_0..a_{n-1}`, so the solution is read off one coefficient at a time.
pub fn solve_quadratic(
    w: &Polynomial,
    u: &Polynomial,
    v: &Polynomial,
    order: usize,
) -> Result<PowerSeries> {
    solve_quadratic_series(
        &PowerSeries::from_polynomial(w, order),
        &PowerSeries::from_polynomial(u, order),
        &PowerSeries::from_polynomial(v, order),
    )
}

/// As [`solve_quadratic`] with power-series coefficients; the solution has the
/// smallest truncation order of the three inputs.
pub fn solve_quadratic_series(
    w: &PowerSeries,
    u: &PowerSeries,
    v: &PowerSeries,
) -> Result<PowerSeries> {
    if !v.constant_term().is_zero() {
        return Err(Error::BadEquation("v(0) must be 0".into()));
    }
    let u0 = u.constant_term();
    if u0.is_zero() {
        return Err(Error::BadEquation("u(0) must be nonzero".into()));
    }
    let order = w.order().min(u.order()).min(v.order());
    let (w, u, v) = (
        &w.coeffs()[..order],
        &u.coeffs()[..order],
        &v.coeffs()[..order],
    );
    let inv_u0 = u0.recip();

    let mut a: Vec<Rational> = Vec::with_capacity(order);
    // square[m] = [x^m] F^2, filled as soon as a_0..a_m are known
    let mut square: Vec<Rational> = Vec::with_capacity(order);
    for n in 0..order {
        let mut acc = w[n].clone();
        for i in 1..=n {
            if !u[i].is_zero() {
                acc += &u[i] * &a[n - i];
            }
            if !v[i].is_zero() {
                acc += &v[i] * &square[n - i];
            }
        }
        a.push(-acc * &inv_u0);
        let mut sq = Rational::zero();
        for i in 0..=n / 2 {
            let term = &a[i] * &a[n - i];
            if 2 * i == n {
                sq += term;
            } else {
                sq += &term + &term;
            }
        }
        square.push(sq);
    }

    let f = PowerSeries::new(a);
    let v_series = PowerSeries::new(v.to_vec());
    let u_series = PowerSeries::new(u.to_vec());
    let residual = &(&PowerSeries::new(w.to_vec()) + &(&u_series * &f)) + &(&v_series * &(&f * &f));
    if !residual.is_zero() {
        return Err(Error::Inconsistent(
            "quadratic solution failed its residual check".into(),
        ));
    }
    Ok(f)
}
