//! Equations shipped for testing and for the command line.

use super::equation::CanonicalEquation;
use crate::error::{Error, Result};
use crate::series::{rat, Polynomial, RationalFunction};

fn poly(c: &[i64]) -> RationalFunction {
    RationalFunction::from(Polynomial::from_ints(c))
}

pub const NAMES: [&str; 4] = ["motzkin-cube", "catalan", "catalan-square", "motzkin-g1"];

/// `G = x^3 M^3` for the Motzkin series `M`.
pub fn motzkin_cube() -> CanonicalEquation {
    CanonicalEquation::new(3, 3, poly(&[1, -3, 0, 2]), poly(&[-1])).expect("valid fixture")
}

/// `C = 1 / (1 - x C)`.
pub fn catalan() -> CanonicalEquation {
    CanonicalEquation::new(0, 1, poly(&[1]), poly(&[-1])).expect("valid fixture")
}

/// `H = 1 / (1 - 2x - x^2 H)`, solved by `C^2`; the transformation maps it to itself.
pub fn catalan_square() -> CanonicalEquation {
    CanonicalEquation::new(0, 2, poly(&[1, -2]), poly(&[-1])).expect("valid fixture")
}

/// The equation `a G^2 + b G + c = 0` with
/// `a = x^5 + 3p(p+1) x^3 - p(p+1) x^2`, `b = 2p x^3 - 3p(p+1) x + p(p+1)`,
/// `c = p^2 x`, which occurs periodically along the Motzkin cube trace.
pub fn motzkin_g1(p: i64) -> Result<CanonicalEquation> {
    if p < 1 {
        return Err(Error::BadEquation(format!(
            "motzkin-g1 needs p >= 1, got {p}"
        )));
    }
    let q = p * (p + 1);
    let a = poly(&[0, 0, -q, 3 * q, 0, 1]);
    let b = poly(&[q, -3 * q, 0, 2 * p]);
    let c = RationalFunction::from(Polynomial::x_pow(1)).scale(&rat(p * p));
    CanonicalEquation::canonicalize(&a, &b, &c)
}

/// Looks up a fixture by name; `motzkin-g1` takes `p = 1`.
pub fn by_name(name: &str) -> Result<CanonicalEquation> {
    match name {
        "motzkin-cube" => Ok(motzkin_cube()),
        "catalan" => Ok(catalan()),
        "catalan-square" => Ok(catalan_square()),
        "motzkin-g1" => motzkin_g1(1),
        _ => Err(Error::UnknownFamilyId(name.to_string())),
    }
}
