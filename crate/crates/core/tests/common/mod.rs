//! Slow, obviously-correct reference implementations.
#![allow(dead_code)]

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

use hankelforge::{PowerSeries, Rational};

/// Laplace expansion along the first row.
pub fn cofactor_det(m: &[Vec<BigInt>]) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut total = BigInt::zero();
    for col in 0..n {
        if m[0][col].is_zero() {
            continue;
        }
        let minor: Vec<Vec<BigInt>> = m[1..]
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|&(j, _)| j != col)
                    .map(|(_, v)| v.clone())
                    .collect()
            })
            .collect();
        let term = &m[0][col] * cofactor_det(&minor);
        if col % 2 == 0 {
            total += term;
        } else {
            total -= term;
        }
    }
    total
}

/// Coefficients of `a * b` below `x^order` by the schoolbook double loop.
pub fn cauchy_product(a: &[Rational], b: &[Rational], order: usize) -> Vec<Rational> {
    let mut out = vec![Rational::zero(); order];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            if i + j < order {
                out[i + j] += x * y;
            }
        }
    }
    out
}

/// `det(c_{i+j+shift})` of size `n` by cofactor expansion; entries at
/// negative indices are zero and the series must be integral.
pub fn hankel_by_cofactors(s: &PowerSeries, shift: i64, n: usize) -> BigInt {
    let m: Vec<Vec<BigInt>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let idx = (i + j) as i64 + shift;
                    if idx < 0 {
                        BigInt::zero()
                    } else {
                        let c = s.coeff(idx as usize).expect("series long enough");
                        assert!(c.is_integer());
                        c.to_integer()
                    }
                })
                .collect()
        })
        .collect();
    cofactor_det(&m)
}

pub fn random_matrix(rng: &mut ChaCha8Rng, n: usize, bound: i64) -> Vec<Vec<BigInt>> {
    (0..n)
        .map(|_| {
            (0..n)
                .map(|_| BigInt::from(rng.gen_range(-bound..=bound)))
                .collect()
        })
        .collect()
}

/// Integer polynomial with constant term 1 and degree at most `max_deg`.
pub fn random_unit_polynomial(rng: &mut ChaCha8Rng, max_deg: usize, bound: i64) -> Vec<i64> {
    let deg = rng.gen_range(0..=max_deg);
    let mut c = vec![1];
    c.extend((0..deg).map(|_| rng.gen_range(-bound..=bound)));
    c
}
