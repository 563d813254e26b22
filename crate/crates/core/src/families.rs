//! Built-in sequence families and the closed-form determinant sequences of
//! Motzkin convolution powers.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::hankel::{self, det_sequence};
use crate::identities::{lucas_t, IdentityReport, Instance, QuadraticFamily};
use crate::series::{rat, Polynomial, Rational};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum NamedFamily {
    /// `1 - F + x F^2 = 0`
    Catalan,
    /// `1 + (x - 1) F + x^2 F^2 = 0`
    Motzkin,
    /// `1 + (x - 1) F + x^3 F^2 = 0`, OEIS A023431
    GeneralizedCatalan,
    Custom(QuadraticFamily),
}

impl NamedFamily {
    pub fn name(&self) -> &'static str {
        match self {
            NamedFamily::Catalan => "catalan",
            NamedFamily::Motzkin => "motzkin",
            NamedFamily::GeneralizedCatalan => "generalized_catalan",
            NamedFamily::Custom(_) => "custom",
        }
    }

    pub fn builtins() -> [NamedFamily; 3] {
        [
            NamedFamily::Catalan,
            NamedFamily::Motzkin,
            NamedFamily::GeneralizedCatalan,
        ]
    }

    pub fn quadratic(&self) -> QuadraticFamily {
        let built = match self {
            NamedFamily::Catalan => QuadraticFamily::with_power(Polynomial::from_ints(&[-1]), 1),
            NamedFamily::Motzkin => QuadraticFamily::with_power(Polynomial::from_ints(&[-1, 1]), 2),
            NamedFamily::GeneralizedCatalan => {
                QuadraticFamily::with_power(Polynomial::from_ints(&[-1, 1]), 3)
            }
            NamedFamily::Custom(q) => return q.clone(),
        };
        built.expect("built-in families are valid")
    }

    /// Closed form for `[x^n] F`, where one is known.
    pub fn closed_form(&self, n: usize) -> Option<Rational> {
        match self {
            NamedFamily::Catalan => Some(catalan_convolution(1, n)),
            NamedFamily::Motzkin => Some(motzkin_number(n)),
            _ => None,
        }
    }
}

impl fmt::Display for NamedFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for NamedFamily {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().replace('-', "_").as_str() {
            "catalan" => Ok(NamedFamily::Catalan),
            "motzkin" => Ok(NamedFamily::Motzkin),
            "generalized_catalan" | "gencatalan" => Ok(NamedFamily::GeneralizedCatalan),
            _ => Err(Error::UnknownFamilyId(s.to_string())),
        }
    }
}

fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    (0..k).fold(BigInt::one(), |acc, i| acc * (n - i) / (i + 1))
}

/// `[x^n] C(x)^k = k/(n+k) * binom(2n+k-1, n)` for the Catalan series `C`.
pub fn catalan_convolution(k: u32, n: usize) -> Rational {
    assert!(k >= 1);
    let (k, n) = (k as u64, n as u64);
    Rational::new(binomial(2 * n + k - 1, n) * k, BigInt::from(n + k))
}

/// `sum_i binom(n, 2i) binom(2i, i) / (i + 1)`.
pub fn motzkin_number(n: usize) -> Rational {
    let n = n as u64;
    let sum = (0..=n / 2).fold(BigInt::zero(), |acc, i| {
        acc + binomial(n, 2 * i) * binomial(2 * i, i) / (i + 1)
    });
    Rational::from_integer(sum)
}

/// `sum_i (-1)^i T(k, i) x^i`, the `L_k` of the Catalan family.
pub fn catalan_lk(k: u32) -> Polynomial {
    let coeffs = (0..=k / 2)
        .map(|i| {
            let t = Rational::from_integer(lucas_t(k, i));
            if i % 2 == 0 {
                t
            } else {
                -t
            }
        })
        .collect();
    Polynomial::new(coeffs)
}

/// Chebyshev polynomial of the first kind, `T_1 = x`, `T_2 = 2x^2 - 1`.
pub fn chebyshev_t(k: u32) -> Polynomial {
    assert!(k >= 1, "Chebyshev index starts at 1");
    let two_x = Polynomial::from_ints(&[0, 2]);
    let (mut prev, mut cur) = (Polynomial::one(), Polynomial::x_pow(1));
    for _ in 1..k {
        let next = &(&two_x * &cur) - &prev;
        prev = cur;
        cur = next;
    }
    cur
}

/// `2 (-x)^k T_k((x - 1) / (2x))` expanded as a polynomial.
///
/// With `T_k(y) = sum_j c_j y^j`, each term contributes
/// `c_j (x - 1)^j x^(k-j) / 2^j`, so no division by `x` is ever needed.
pub fn motzkin_lk_via_chebyshev(k: u32) -> Polynomial {
    let t = chebyshev_t(k);
    let x_minus_one = Polynomial::from_ints(&[-1, 1]);
    let mut out = Polynomial::zero();
    for (j, c) in t.coeffs().iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let scale = c / Rational::from_integer(BigInt::from(2).pow(j as u32));
        out = out + (&x_minus_one.pow(j as u32) * &Polynomial::x_pow(k as usize - j)).scale(&scale);
    }
    let sign = if k.is_multiple_of(2) { rat(2) } else { rat(-2) };
    out.scale(&sign)
}

/// Closed-form determinant sequences of Motzkin convolution powers.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum DetFamilyId {
    /// `D_{3,-3}`
    D33,
    /// `D_{2,-1}`
    D21,
    /// `D_{2,-2}`
    D22,
    /// `D_{2,-3}`
    D23,
}

impl DetFamilyId {
    pub const ALL: [DetFamilyId; 4] = [
        DetFamilyId::D33,
        DetFamilyId::D21,
        DetFamilyId::D22,
        DetFamilyId::D23,
    ];

    /// `(K, M)` of the determinant `D_{K,M}`.
    pub fn power_and_shift(self) -> (u32, i64) {
        match self {
            DetFamilyId::D33 => (3, -3),
            DetFamilyId::D21 => (2, -1),
            DetFamilyId::D22 => (2, -2),
            DetFamilyId::D23 => (2, -3),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            DetFamilyId::D33 => "d33",
            DetFamilyId::D21 => "d21",
            DetFamilyId::D22 => "d22",
            DetFamilyId::D23 => "d23",
        }
    }
}

impl fmt::Display for DetFamilyId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for DetFamilyId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "d33" => Ok(DetFamilyId::D33),
            "d21" => Ok(DetFamilyId::D21),
            "d22" => Ok(DetFamilyId::D22),
            "d23" => Ok(DetFamilyId::D23),
            _ => Err(Error::UnknownFamilyId(s.to_string())),
        }
    }
}

/// `D_{2,-3}(n)` for `n <= 3`, from direct evaluation (the closed form is
/// stated for `n >= 4` only).
const D23_SMALL: [i64; 4] = [1, 0, 0, 0];

/// Piecewise closed form of the determinant sequence `id` at `n`.
pub fn closed_form_det(id: DetFamilyId, n: usize) -> Rational {
    let n = n as i64;
    let value = match id {
        DetFamilyId::D33 => match n {
            0 => 1,
            1..=3 => 0,
            _ => {
                let k = (n - 1) / 3;
                match (n - 1) % 3 {
                    0 => k,
                    1 => 0,
                    _ => -k,
                }
            }
        },
        DetFamilyId::D21 => match n % 4 {
            0 => 1,
            2 => -1,
            _ => 0,
        },
        DetFamilyId::D22 => match n % 12 {
            0 | 9 | 10 | 11 => 1,
            1 | 2 | 7 | 8 => 0,
            _ => -1,
        },
        DetFamilyId::D23 if n < 4 => D23_SMALL[n as usize],
        DetFamilyId::D23 => {
            let k = n / 12;
            match n % 12 {
                0 | 4 => 1,
                2 | 8 => 0,
                6 | 10 => -1,
                1 => 8 * k,
                3 => -8 * k,
                5 => 8 * k + 2,
                7 => -8 * k - 4,
                9 => 8 * k + 4,
                _ => -8 * k - 6,
            }
        }
    };
    rat(value)
}

/// Compares `closed_form_det(id, n)` with the directly computed Motzkin
/// determinant for `n = 0..=n_max`.
pub fn verify_closed_form(id: DetFamilyId, n_max: usize) -> Result<IdentityReport> {
    let (power, shift) = id.power_and_shift();
    let f = NamedFamily::Motzkin
        .quadratic()
        .solve(hankel::default_truncation(shift, n_max))?;
    let direct = det_sequence(&f, power, shift, n_max)?;
    let mut report = IdentityReport::new(format!(
        "closed form of D_{{{power},{shift}}}(n) for Motzkin"
    ));
    for (n, value) in direct.into_iter().enumerate() {
        report.instances.push(Instance::compare(
            vec![("n", n as i64)],
            value,
            closed_form_det(id, n),
        ));
    }
    Ok(report)
}
