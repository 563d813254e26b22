//! Lucas-triangle polynomials `L_k` and checkers for the determinant
//! identities of quadratic power series.
//!
//! For `F` with `w + u F + v F^2 = 0` the polynomial
//! `L_k = sum_i (-1)^(k+i) T(k,i) u^(k-2i) v^i w^i` satisfies
//! `F^k v^k + w^k / F^k = L_k`. When `w = 1` and `v = x^a` this pins down
//! which shifted Hankel determinants of `F^K` vanish and how the remaining
//! ones reflect into each other.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::hankel::{self, coefficient_at};
use crate::series::{solve_quadratic, Polynomial, PowerSeries, Rational};

/// `w + u F + v F^2 = 0` with `v(0) = 0` and `u(0) != 0`.
///
/// `a` is set exactly when `w = 1` and `v = x^a` with `a >= 1`, the form
/// required by [`check_main_theorem`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuadraticFamily {
    w: Polynomial,
    u: Polynomial,
    v: Polynomial,
    a: Option<u32>,
}

impl QuadraticFamily {
    pub fn new(w: Polynomial, u: Polynomial, v: Polynomial) -> Result<Self> {
        if !v.constant_term().is_zero() {
            return Err(Error::BadEquation("v(0) must be 0".into()));
        }
        if u.constant_term().is_zero() {
            return Err(Error::BadEquation("u(0) must be nonzero".into()));
        }
        let a = match (w.is_one(), v.valuation().finite(), v.degree()) {
            (true, Some(val), Some(deg)) if val == deg && v.coeffs()[deg].is_one() => {
                Some(deg as u32)
            }
            _ => None,
        };
        Ok(QuadraticFamily { w, u, v, a })
    }

    /// `1 + u F + x^a F^2 = 0`.
    pub fn with_power(u: Polynomial, a: u32) -> Result<Self> {
        if a == 0 {
            return Err(Error::BadEquation("a must be at least 1".into()));
        }
        Self::new(Polynomial::one(), u, Polynomial::x_pow(a as usize))
    }

    pub fn w(&self) -> &Polynomial {
        &self.w
    }

    pub fn u(&self) -> &Polynomial {
        &self.u
    }

    pub fn v(&self) -> &Polynomial {
        &self.v
    }

    pub fn power_a(&self) -> Option<u32> {
        self.a
    }

    pub fn solve(&self, order: usize) -> Result<PowerSeries> {
        solve_quadratic(&self.w, &self.u, &self.v, order)
    }
}

impl fmt::Display for QuadraticFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}) + ({})F + ({})F^2 = 0", self.w, self.u, self.v)
    }
}

/// `T(k, i) = (k-i-1)! k / (i! (k-2i)!)`, zero outside `0 <= i <= k/2`.
pub fn lucas_t(k: u32, i: u32) -> BigInt {
    if k == 0 || 2 * i > k {
        return BigInt::zero();
    }
    let fact = |n: u32| -> BigInt { (1..=n).fold(BigInt::one(), |acc, m| acc * m) };
    fact(k - i - 1) * k / (fact(i) * fact(k - 2 * i))
}

/// Rows `1..=k_max` of the triangle built from `T(k,i) = T(k-1,i) + T(k-2,i-1)`,
/// `T(k,0) = 1`, with the closed form seeding row 2. Row `k` has `k/2 + 1` entries.
pub fn lucas_triangle(k_max: u32) -> Vec<Vec<BigInt>> {
    let mut rows: Vec<Vec<BigInt>> = vec![Vec::new()];
    for k in 1..=k_max {
        let row: Vec<BigInt> = (0..=k / 2)
            .map(|i| {
                if i == 0 {
                    BigInt::one()
                } else if k <= 2 {
                    lucas_t(k, i)
                } else {
                    let get =
                        |r: &Vec<BigInt>, j: u32| r.get(j as usize).cloned().unwrap_or_default();
                    get(&rows[k as usize - 1], i) + get(&rows[k as usize - 2], i - 1)
                }
            })
            .collect();
        rows.push(row);
    }
    rows.remove(0);
    rows
}

/// `L_k` for the family.
pub fn lucas_l(fam: &QuadraticFamily, k: u32) -> Polynomial {
    let vw = fam.v() * fam.w();
    let mut out = Polynomial::zero();
    for i in 0..=k / 2 {
        let sign = if (k + i).is_multiple_of(2) { 1 } else { -1 };
        let c = Rational::from_integer(lucas_t(k, i) * sign);
        out = out + (&fam.u().pow(k - 2 * i) * &vw.pow(i)).scale(&c);
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Outcome {
    Holds,
    /// Nothing to check, e.g. an empty vanishing window.
    Vacuous,
    Fails {
        lhs: Rational,
        rhs: Rational,
    },
}

/// One checked instance: its parameters and what happened.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Instance {
    pub params: Vec<(&'static str, i64)>,
    pub outcome: Outcome,
}

impl Instance {
    pub(crate) fn compare(params: Vec<(&'static str, i64)>, lhs: Rational, rhs: Rational) -> Self {
        let outcome = if lhs == rhs {
            Outcome::Holds
        } else {
            Outcome::Fails { lhs, rhs }
        };
        Instance { params, outcome }
    }

    pub fn holds(&self) -> bool {
        !matches!(self.outcome, Outcome::Fails { .. })
    }
}

impl fmt::Display for Instance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let params: Vec<String> = self
            .params
            .iter()
            .map(|(k, v)| format!("{k}={v}"))
            .collect();
        write!(f, "{}", params.join(" "))?;
        match &self.outcome {
            Outcome::Holds => f.write_str("\tholds"),
            Outcome::Vacuous => f.write_str("\tholds (vacuous)"),
            Outcome::Fails { lhs, rhs } => write!(f, "\tFAILS lhs={lhs} rhs={rhs}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentityReport {
    pub claim: String,
    pub instances: Vec<Instance>,
}

impl IdentityReport {
    pub fn new(claim: impl Into<String>) -> Self {
        IdentityReport {
            claim: claim.into(),
            instances: Vec::new(),
        }
    }

    pub fn holds(&self) -> bool {
        self.instances.iter().all(Instance::holds)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Instance> {
        self.instances.iter().filter(|i| !i.holds())
    }

    pub fn merge(&mut self, other: IdentityReport) {
        self.instances.extend(other.instances);
    }
}

/// Checks `F^k v^k + w^k / F^k = L_k` coefficient-wise below `x^order`.
/// A failing report carries the first mismatching coefficient.
pub fn check_convolution_identity(
    fam: &QuadraticFamily,
    k: u32,
    order: usize,
) -> Result<IdentityReport> {
    let f = fam.solve(order)?;
    if f.constant_term().is_zero() {
        return Err(Error::ZeroConstantTerm);
    }
    let fk = f.pow(k);
    let lhs = &(&fk * &PowerSeries::from_polynomial(&fam.v().pow(k), order))
        + &(&PowerSeries::from_polynomial(&fam.w().pow(k), order) * &fk.inverse()?);
    let rhs = PowerSeries::from_polynomial(&lucas_l(fam, k), order);

    let mut report = IdentityReport::new(format!("F^k v^k + w^k/F^k = L_k for {fam}"));
    let mismatch = (0..order).find(|&n| lhs.coeffs()[n] != rhs.coeffs()[n]);
    let instance = match mismatch {
        None => Instance {
            params: vec![("k", k as i64), ("order", order as i64)],
            outcome: Outcome::Holds,
        },
        Some(n) => Instance::compare(
            vec![("k", k as i64), ("n", n as i64)],
            lhs.coeffs()[n].clone(),
            rhs.coeffs()[n].clone(),
        ),
    };
    report.instances.push(instance);
    Ok(report)
}

fn binom2(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

fn sign_power(e: usize) -> Rational {
    if e.is_multiple_of(2) {
        Rational::one()
    } else {
        -Rational::one()
    }
}

/// `det(s_{i+j-M})_{0..=N+M} = (-1)^(N + C(M+1,2)) det(t_{i+j+M+2})_{0..N}`
/// with `t = 1/s` and `s_0 = 1`.
pub fn check_cigler_st(s: &PowerSeries, m: usize, n: usize) -> Result<IdentityReport> {
    if !s.constant_term().is_one() {
        return Err(Error::BadEquation("s_0 must be 1".into()));
    }
    let top = 2 * n + m;
    if top >= s.order() {
        return Err(Error::TruncationExceeded {
            index: top,
            order: s.order(),
        });
    }
    let t = s.inverse()?;
    let lhs = hankel::shifted_det(s, -(m as i64), n + m + 1)?;
    let rhs = sign_power(n + binom2(m + 1)) * hankel::shifted_det(&t, m as i64 + 2, n)?;
    let mut report = IdentityReport::new("det(s_{i+j-M}) = (-1)^(N+C(M+1,2)) det(t_{i+j+M+2})");
    report.instances.push(Instance::compare(
        vec![("M", m as i64), ("N", n as i64)],
        lhs,
        rhs,
    ));
    Ok(report)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Parity {
    Even,
    Odd,
}

impl fmt::Display for Parity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Parity::Even => "even",
            Parity::Odd => "odd",
        })
    }
}

/// Shifts and bounds of one main-theorem instance.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MainTheoremShape {
    /// Convolution power `K` (`2k` or `2k - 1`).
    pub power: u32,
    /// Shift of the determinants that vanish and then reflect.
    pub shift: i64,
    /// Vanishing window is `N = 1..=window`.
    pub window: usize,
    /// Reflection offset: `D_{K,shift}(n + offset)` is compared with the target.
    pub offset: usize,
    pub target_shift: i64,
    /// `L_index` whose degree is bounded by `bound`.
    pub lucas_index: u32,
    pub bound: usize,
}

impl MainTheoremShape {
    pub fn new(a: u32, k: u32, m: u32, parity: Parity) -> Self {
        assert!(k >= 1 && a >= 1);
        let (a, k, m) = (a as i64, k as i64, m as i64);
        match parity {
            Parity::Even => MainTheoremShape {
                power: (2 * k) as u32,
                shift: 1 - m - a * k,
                window: (m + a * k - 1) as usize,
                offset: (m + a * k) as usize,
                target_shift: m + 1 - a * k,
                lucas_index: (2 * k) as u32,
                bound: (k * a) as usize,
            },
            Parity::Odd => MainTheoremShape {
                power: (2 * k - 1) as u32,
                shift: 2 - m - a * k,
                window: (m + a * k - 2).max(0) as usize,
                offset: (m + a * k - 1) as usize,
                target_shift: m + a - a * k,
                lucas_index: (2 * k - 1) as u32,
                bound: (k * a - 1) as usize,
            },
        }
    }

    fn sign(&self) -> Rational {
        sign_power(binom2(self.offset))
    }

    /// Truncation order needed to check reflections up to `n_max`.
    pub fn required_order(&self, n_max: usize) -> usize {
        let lhs = hankel::required_order(self.shift, n_max + self.offset);
        let rhs = hankel::required_order(self.target_shift, n_max);
        lhs.max(rhs)
            .max(hankel::required_order(self.shift, self.window))
    }
}

/// Degree condition `deg L_index <= bound`; `Err` carries both numbers.
pub fn degree_condition(fam: &QuadraticFamily, shape: &MainTheoremShape) -> Result<()> {
    let degree = lucas_l(fam, shape.lucas_index).degree().unwrap_or(0);
    if degree > shape.bound {
        return Err(Error::DegreeConditionFailed {
            index: shape.lucas_index as usize,
            degree,
            available: shape.bound,
        });
    }
    Ok(())
}

/// Vanishing window and shift-sign reflection for `1 + u F + x^a F^2 = 0`.
///
/// Even parity (`K = 2k`): `D_{K,1-m-ak}(N) = 0` for `N = 1..m+ak-1` and
/// `D_{K,1-m-ak}(n+m+ak) = (-1)^C(m+ak,2) D_{K,m+1-ak}(n)`. Odd parity
/// (`K = 2k-1`): `D_{K,2-m-ak}(N) = 0` for `N = 1..m+ak-2` and
/// `D_{K,2-m-ak}(n+m+ak-1) = (-1)^C(m+ak-1,2) D_{K,m+a-ak}(n)`.
///
/// Fails with [`Error::DegreeConditionFailed`] when `deg L_{2k} > ka`
/// (even) or `deg L_{2k-1} > ka - 1` (odd), and with [`Error::BadEquation`]
/// unless `F(0)^K = 1`. Without that normalization the reflection can fail,
/// e.g. `u = 1, a = 2, k = 1, m = 2` (odd) gives `1` against `-1`.
pub fn check_main_theorem(
    fam: &QuadraticFamily,
    k: u32,
    m: u32,
    parity: Parity,
    n_max: usize,
) -> Result<IdentityReport> {
    let a = fam.power_a().ok_or_else(|| {
        Error::BadEquation("family is not of the form 1 + uF + x^a F^2 = 0".into())
    })?;
    let shape = MainTheoremShape::new(a, k, m, parity);
    // F(0) = -1/u(0); the reflection rests on F(0)^K = 1
    let f0 = -fam.u().constant_term().recip();
    if !num_traits::pow(f0, shape.power as usize).is_one() {
        return Err(Error::BadEquation(format!(
            "F(0)^{} must be 1, i.e. u(0) = -1 (or u(0) = 1 with even power)",
            shape.power
        )));
    }
    degree_condition(fam, &shape)?;
    evaluate_main_theorem(fam, k, m, parity, n_max)
}

/// Evaluates both sides of every main-theorem instance without checking the
/// degree condition. Useful to explore families where the condition fails.
pub fn evaluate_main_theorem(
    fam: &QuadraticFamily,
    k: u32,
    m: u32,
    parity: Parity,
    n_max: usize,
) -> Result<IdentityReport> {
    let a = fam.power_a().ok_or_else(|| {
        Error::BadEquation("family is not of the form 1 + uF + x^a F^2 = 0".into())
    })?;
    let shape = MainTheoremShape::new(a, k, m, parity);
    let f = fam.solve(shape.required_order(n_max))?;
    let seq = f.pow(shape.power);
    let base = vec![("k", k as i64), ("m", m as i64), ("K", shape.power as i64)];
    let mut report = IdentityReport::new(format!(
        "{parity} identities: D_{{{K},{s}}}(N)=0 for N=1..{w}, D_{{{K},{s}}}(n+{o}) = (-1)^C({o},2) D_{{{K},{t}}}(n)",
        K = shape.power,
        s = shape.shift,
        w = shape.window,
        o = shape.offset,
        t = shape.target_shift,
    ));

    if shape.window == 0 {
        let mut params = base.clone();
        params.push(("N", 0));
        report.instances.push(Instance {
            params,
            outcome: Outcome::Vacuous,
        });
    }
    let window: Vec<Instance> = (1..=shape.window)
        .into_par_iter()
        .map(|n| -> Result<Instance> {
            let mut params = base.clone();
            params.push(("N", n as i64));
            // the whole first row lies at negative indices
            let first_row = (0..n)
                .map(|j| coefficient_at(&seq, j as i64 + shape.shift))
                .collect::<Result<Vec<_>>>()?;
            if let Some(entry) = first_row.into_iter().find(|c| !c.is_zero()) {
                return Ok(Instance {
                    params,
                    outcome: Outcome::Fails {
                        lhs: entry,
                        rhs: Rational::zero(),
                    },
                });
            }
            let det = hankel::shifted_det(&seq, shape.shift, n)?;
            Ok(Instance::compare(params, det, Rational::zero()))
        })
        .collect::<Result<_>>()?;
    report.instances.extend(window);

    let sign = shape.sign();
    let reflections: Vec<Instance> = (0..=n_max)
        .into_par_iter()
        .map(|n| -> Result<Instance> {
            let lhs = hankel::shifted_det(&seq, shape.shift, n + shape.offset)?;
            let rhs = &sign * hankel::shifted_det(&seq, shape.target_shift, n)?;
            let mut params = base.clone();
            params.push(("n", n as i64));
            Ok(Instance::compare(params, lhs, rhs))
        })
        .collect::<Result<_>>()?;
    report.instances.extend(reflections);
    Ok(report)
}
