//! Shifted Hankel matrices of convolution powers and their exact determinants.
//!
//! `D_{K,M}(N)` is the determinant of the `N x N` matrix whose `(i, j)` entry
//! is the coefficient of `x^{i+j+M}` in `F^K`. Coefficients at negative
//! indices are zero; coefficients beyond the known truncation are an error.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::series::{PowerSeries, Rational};

/// Square matrix of exact rationals, row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExactMatrix {
    order: usize,
    entries: Vec<Rational>,
}

impl ExactMatrix {
    pub fn from_fn(order: usize, mut f: impl FnMut(usize, usize) -> Rational) -> Self {
        let mut entries = Vec::with_capacity(order * order);
        for i in 0..order {
            for j in 0..order {
                entries.push(f(i, j));
            }
        }
        ExactMatrix { order, entries }
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Self {
        let order = rows.len();
        assert!(
            rows.iter().all(|r| r.len() == order),
            "matrix must be square"
        );
        ExactMatrix {
            order,
            entries: rows.into_iter().flatten().collect(),
        }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.entries[i * self.order + j]
    }

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.entries[i * self.order..(i + 1) * self.order]
    }

    /// Exact determinant; the empty matrix has determinant one.
    ///
    /// Each row is scaled by the lcm of its denominators, the resulting
    /// integer matrix goes through Bareiss elimination, and the scaling is
    /// divided back out at the end.
    pub fn det_exact(&self) -> Rational {
        let mut scale = BigInt::one();
        let rows: Vec<Vec<BigInt>> = (0..self.order)
            .map(|i| {
                let row = self.row(i);
                let l = row.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
                scale *= &l;
                row.iter().map(|c| c.numer() * (&l / c.denom())).collect()
            })
            .collect();
        Rational::new(bareiss_det(rows), scale)
    }
}

/// Fraction-free determinant of a square integer matrix.
///
/// Uses row swaps when a pivot vanishes. Every update
/// `(a_kk a_ij - a_ik a_kj) / previous_pivot` is an exact division; this is
/// checked and a violation panics, since it can only mean a broken kernel.
pub fn bareiss_det(mut m: Vec<Vec<BigInt>>) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut negate = false;
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&r| !m[r][k].is_zero()) {
                Some(r) => {
                    m.swap(k, r);
                    negate = !negate;
                }
                None => return BigInt::zero(),
            }
        }
        let (top, bottom) = m.split_at_mut(k + 1);
        let pivot_row = &top[k];
        let pivot = &pivot_row[k];
        for row in bottom.iter_mut() {
            let lead = row[k].clone();
            for j in k + 1..n {
                let num = pivot * &row[j] - &lead * &pivot_row[j];
                let (q, r) = num.div_rem(&prev);
                assert!(r.is_zero(), "Bareiss divisibility violated at step {k}");
                row[j] = q;
            }
            row[k] = BigInt::zero();
        }
        prev = m[k][k].clone();
    }
    let det = m[n - 1][n - 1].clone();
    if negate {
        -det
    } else {
        det
    }
}

/// `(K, M, N)` of `D_{K,M}(N)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct HankelQuery {
    pub power: u32,
    pub shift: i64,
    pub order: usize,
}

impl HankelQuery {
    pub fn new(power: u32, shift: i64, order: usize) -> Self {
        assert!(power >= 1, "convolution power must be positive");
        HankelQuery {
            power,
            shift,
            order,
        }
    }
}

/// Coefficient at `index`, with zeros at negative indices.
pub fn coefficient_at(seq: &PowerSeries, index: i64) -> Result<Rational> {
    if index < 0 {
        return Ok(Rational::zero());
    }
    seq.coeff(index as usize).cloned()
}

/// Largest coefficient index read by an order-`n` matrix with shift `shift`,
/// or `None` if every index is negative.
fn max_index(shift: i64, n: usize) -> Option<usize> {
    if n == 0 {
        return None;
    }
    let top = 2 * (n as i64 - 1) + shift;
    (top >= 0).then_some(top as usize)
}

/// Smallest truncation order that lets an order-`n` matrix be built.
pub fn required_order(shift: i64, n: usize) -> usize {
    max_index(shift, n).map_or(1, |i| i + 1)
}

/// Default working truncation when driving a determinant sequence up to `n_max`.
pub fn default_truncation(shift: i64, n_max: usize) -> usize {
    2 * n_max + shift.unsigned_abs() as usize + 4
}

pub fn hankel_matrix(seq: &PowerSeries, shift: i64, order: usize) -> Result<ExactMatrix> {
    if let Some(top) = max_index(shift, order) {
        if top >= seq.order() {
            return Err(Error::TruncationExceeded {
                index: top,
                order: seq.order(),
            });
        }
    }
    let mut rows = Vec::with_capacity(order);
    for i in 0..order {
        let mut row = Vec::with_capacity(order);
        for j in 0..order {
            row.push(coefficient_at(seq, (i + j) as i64 + shift)?);
        }
        rows.push(row);
    }
    Ok(ExactMatrix::from_rows(rows))
}

/// Hankel determinant of the sequence itself (no convolution power).
pub fn shifted_det(seq: &PowerSeries, shift: i64, order: usize) -> Result<Rational> {
    Ok(hankel_matrix(seq, shift, order)?.det_exact())
}

/// `det H_n` of a series.
pub fn hankel_det(seq: &PowerSeries, n: usize) -> Result<Rational> {
    shifted_det(seq, 0, n)
}

/// `D_{K,M}(N)` for the series `f`.
pub fn shifted_hankel_det(f: &PowerSeries, q: HankelQuery) -> Result<Rational> {
    if q.order == 0 {
        return Ok(Rational::one());
    }
    check_order(f, q.shift, q.order)?;
    shifted_det(&f.pow(q.power), q.shift, q.order)
}

/// `[D_{K,M}(0), ..., D_{K,M}(n_max)]`, evaluated in parallel.
pub fn det_sequence(
    f: &PowerSeries,
    power: u32,
    shift: i64,
    n_max: usize,
) -> Result<Vec<Rational>> {
    check_order(f, shift, n_max)?;
    let seq = f.pow(power);
    (0..=n_max)
        .into_par_iter()
        .map(|n| shifted_det(&seq, shift, n))
        .collect()
}

fn check_order(f: &PowerSeries, shift: i64, n: usize) -> Result<()> {
    match max_index(shift, n) {
        Some(top) if top >= f.order() => Err(Error::TruncationExceeded {
            index: top,
            order: f.order(),
        }),
        _ => Ok(()),
    }
}
