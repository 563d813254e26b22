//! Detection of repeating structure in a transformation trace.
//!
//! Two things are looked for. An exact cycle is a pair of identical
//! equations. A parameterized family is a start and a period such that, in
//! every phase of the period, each coefficient of the equation (written as a
//! primitive integer quadratic) is a polynomial in the repetition count `p`.
//! Families are found by exact interpolation and only reported when every
//! coefficient is confirmed on at least two samples beyond those used to fit
//! it. This is a heuristic: a reported family is a conjecture about all `p`.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::equation::CanonicalEquation;
use super::trace::TauTrace;
use crate::series::{fmt_terms, Polynomial, Rational};

/// `A F^2 + B F + C = 0` with coprime integer coefficients, `C` having a
/// positive coefficient at `x^d`. Equal equations give equal forms.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IntegralForm {
    pub d: usize,
    pub k: usize,
    pub a: Vec<BigInt>,
    pub b: Vec<BigInt>,
    pub c: Vec<BigInt>,
}

impl IntegralForm {
    pub fn of(eq: &CanonicalEquation) -> Self {
        let (du, dv) = (eq.u().den(), eq.v().den());
        let g = Polynomial::gcd(du, dv);
        let common = (du * dv).div_rem(&g).0;
        let a = &eq.v().num().shift(eq.k()) * &common.div_rem(dv).0;
        let b = eq.u().num() * &common.div_rem(du).0;
        let c = -&common.shift(eq.d());

        let all = || a.coeffs().iter().chain(b.coeffs()).chain(c.coeffs());
        let den = all().fold(BigInt::one(), |acc, q| acc.lcm(q.denom()));
        let num_gcd = all().fold(BigInt::zero(), |acc, q| {
            acc.gcd(&(q.numer() * (&den / q.denom())))
        });
        let mut scale = Rational::new(den, num_gcd);
        if c.coeff(eq.d()).is_negative() {
            scale = -scale;
        }
        let ints = |p: &Polynomial| -> Vec<BigInt> {
            p.coeffs()
                .iter()
                .map(|q| (q * &scale).to_integer())
                .collect()
        };
        IntegralForm {
            d: eq.d(),
            k: eq.k(),
            a: ints(&a),
            b: ints(&b),
            c: ints(&c),
        }
    }
}

impl fmt::Display for IntegralForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let show = |v: &[BigInt]| {
            Polynomial::new(
                v.iter()
                    .map(|i| Rational::from_integer(i.clone()))
                    .collect(),
            )
        };
        write!(
            f,
            "({}) F^2 + ({}) F + ({}) = 0",
            show(&self.a),
            show(&self.b),
            show(&self.c)
        )
    }
}

/// An [`IntegralForm`] whose coefficients are polynomials in `p`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParametricForm {
    pub d: usize,
    pub k: usize,
    pub a: Vec<Polynomial>,
    pub b: Vec<Polynomial>,
    pub c: Vec<Polynomial>,
}

impl ParametricForm {
    /// Coefficients at a given `p`, trailing zeros dropped.
    pub fn at(&self, p: i64) -> (Polynomial, Polynomial, Polynomial) {
        let p = Rational::from_integer(BigInt::from(p));
        let eval = |cs: &[Polynomial]| Polynomial::new(cs.iter().map(|c| c.eval(&p)).collect());
        (eval(&self.a), eval(&self.b), eval(&self.c))
    }
}

struct InP<'a>(&'a Polynomial);

impl fmt::Display for InP<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_terms(f, self.0.coeffs(), "p")
    }
}

fn fmt_parametric(f: &mut fmt::Formatter<'_>, cs: &[Polynomial]) -> fmt::Result {
    let mut first = true;
    for (i, c) in cs.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        if !first {
            f.write_str(" + ")?;
        }
        first = false;
        match i {
            0 => write!(f, "({})", InP(c))?,
            1 => write!(f, "({})*x", InP(c))?,
            _ => write!(f, "({})*x^{i}", InP(c))?,
        }
    }
    if first {
        f.write_str("0")?;
    }
    Ok(())
}

impl fmt::Display for ParametricForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        fmt_parametric(f, &self.a)?;
        f.write_str("] F^2 + [")?;
        fmt_parametric(f, &self.b)?;
        f.write_str("] F + [")?;
        fmt_parametric(f, &self.c)?;
        f.write_str("] = 0")
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilyFit {
    /// Index of the first equation of the family (`0` is the trace start).
    pub start: usize,
    pub period: usize,
    /// One form per phase; phase `r` at repetition `p` is equation
    /// `start + r + (p - 1) * period`.
    pub phases: Vec<ParametricForm>,
    /// Fewest samples any phase was checked against.
    pub samples: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Periodicity {
    /// Equation `start + period` equals equation `start`.
    Cycle {
        start: usize,
        period: usize,
    },
    Family(FamilyFit),
}

impl fmt::Display for Periodicity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Periodicity::Cycle { start, period } => {
                write!(f, "exact cycle: start {start}, period {period}")
            }
            Periodicity::Family(fit) => {
                writeln!(
                    f,
                    "parameterized family: start {}, period {}, checked on {} repetitions (conjecture)",
                    fit.start, fit.period, fit.samples
                )?;
                for (r, phase) in fit.phases.iter().enumerate() {
                    write!(f, "  phase {r} (d={}, k={}): {phase}", phase.d, phase.k)?;
                    if r + 1 < fit.phases.len() {
                        writeln!(f)?;
                    }
                }
                Ok(())
            }
        }
    }
}

/// Finds an exact cycle or, failing that, a parameterized family.
pub fn detect_periodicity(trace: &TauTrace) -> Option<Periodicity> {
    let eqs: Vec<&CanonicalEquation> = trace.equations().collect();
    for j in 1..eqs.len() {
        if let Some(i) = (0..j).find(|&i| eqs[i] == eqs[j]) {
            return Some(Periodicity::Cycle {
                start: i,
                period: j - i,
            });
        }
    }
    let forms: Vec<IntegralForm> = eqs.iter().map(|e| IntegralForm::of(e)).collect();
    let len = forms.len();
    for period in 1..=len / 3 {
        for start in 0..=len - 3 * period {
            if let Some(fit) = fit_family(&forms, start, period) {
                return Some(Periodicity::Family(fit));
            }
        }
    }
    None
}

fn fit_family(forms: &[IntegralForm], start: usize, period: usize) -> Option<FamilyFit> {
    let mut phases = Vec::with_capacity(period);
    let mut samples = usize::MAX;
    let mut varies = false;
    for r in 0..period {
        let seq: Vec<&IntegralForm> = forms[start + r..].iter().step_by(period).collect();
        if seq.len() < 3 || seq.iter().any(|f| f.d != seq[0].d || f.k != seq[0].k) {
            return None;
        }
        samples = samples.min(seq.len());
        let fit_all = |pick: fn(&IntegralForm) -> &Vec<BigInt>| -> Option<Vec<Polynomial>> {
            let width = seq.iter().map(|f| pick(f).len()).max().unwrap_or(0);
            (0..width)
                .map(|i| {
                    let values: Vec<Rational> = seq
                        .iter()
                        .map(|f| {
                            Rational::from_integer(pick(f).get(i).cloned().unwrap_or_default())
                        })
                        .collect();
                    fit_polynomial(&values)
                })
                .collect()
        };
        let a = fit_all(|f| &f.a)?;
        let b = fit_all(|f| &f.b)?;
        let c = fit_all(|f| &f.c)?;
        varies |= a
            .iter()
            .chain(&b)
            .chain(&c)
            .any(|p| p.degree().unwrap_or(0) > 0);
        phases.push(ParametricForm {
            d: seq[0].d,
            k: seq[0].k,
            a,
            b,
            c,
        });
    }
    varies.then_some(FamilyFit {
        start,
        period,
        phases,
        samples,
    })
}

/// Polynomial `P` with `P(j + 1) = values[j]`, of the lowest degree that fits
/// every value, provided at least two values were not needed to determine it.
pub fn fit_polynomial(values: &[Rational]) -> Option<Polynomial> {
    let n = values.len();
    let mut leading: Vec<Rational> = Vec::new();
    let mut level = values.to_vec();
    loop {
        leading.push(level[0].clone());
        // degree = leading.len() - 1; it fits iff the next differences vanish
        let next: Vec<Rational> = level.windows(2).map(|w| &w[1] - &w[0]).collect();
        let degree = leading.len() - 1;
        if next.iter().all(Zero::is_zero) {
            if degree + 3 > n {
                return None;
            }
            break;
        }
        if degree + 3 >= n {
            return None;
        }
        level = next;
    }
    // Newton form: sum_i leading[i] * C(p - 1, i)
    let mut out = Polynomial::zero();
    let mut basis = Polynomial::one();
    for (i, coeff) in leading.iter().enumerate() {
        if i > 0 {
            // C(p-1, i) = C(p-1, i-1) * (p - i) / i
            basis = (&basis
                * &Polynomial::new(vec![
                    Rational::from_integer(BigInt::from(-(i as i64))),
                    Rational::one(),
                ]))
                .scale(&Rational::new(BigInt::one(), BigInt::from(i)));
        }
        out = out + basis.scale(coeff);
    }
    Some(out)
}
