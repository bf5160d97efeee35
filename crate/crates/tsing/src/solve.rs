//! Exact linear algebra on small integer matrices: leading principal minors
//! via fraction-free (Bareiss) elimination and rational Gaussian solving.
//!
//! Everything is computed over `i128` / `Ratio<i128>` with checked arithmetic,
//! so an out-of-range input fails loudly instead of wrapping.

use num_rational::{Ratio, Rational64};
use num_traits::{CheckedAdd, CheckedDiv, CheckedMul, CheckedSub, Zero};

use crate::error::{domain, Error, Result};

pub(crate) type BigRat = Ratio<i128>;

pub(crate) fn add(a: &BigRat, b: &BigRat) -> Result<BigRat> {
    a.checked_add(b).ok_or(Error::Overflow)
}

pub(crate) fn sub(a: &BigRat, b: &BigRat) -> Result<BigRat> {
    a.checked_sub(b).ok_or(Error::Overflow)
}

pub(crate) fn mul(a: &BigRat, b: &BigRat) -> Result<BigRat> {
    a.checked_mul(b).ok_or(Error::Overflow)
}

pub(crate) fn div(a: &BigRat, b: &BigRat) -> Result<BigRat> {
    a.checked_div(b).ok_or(Error::Overflow)
}

pub(crate) fn widen(q: Rational64) -> BigRat {
    BigRat::new(*q.numer() as i128, *q.denom() as i128)
}

pub(crate) fn narrow(q: &BigRat) -> Result<Rational64> {
    let n = i64::try_from(*q.numer()).map_err(|_| Error::Overflow)?;
    let d = i64::try_from(*q.denom()).map_err(|_| Error::Overflow)?;
    Ok(Rational64::new(n, d))
}

/// Leading principal minors `M_1, ..., M_r` of a square integer matrix,
/// by fraction-free elimination. The pivot entries of the Bareiss sweep are
/// exactly the leading minors; all divisions are exact.
///
/// Fails with `Domain` if a minor vanishes before the last step (the sweep
/// cannot continue without pivoting, and a definite matrix never needs to).
pub(crate) fn leading_principal_minors(g: &[Vec<i64>]) -> Result<Vec<i128>> {
    let r = g.len();
    let mut a: Vec<Vec<i128>> = g
        .iter()
        .map(|row| row.iter().map(|&x| x as i128).collect())
        .collect();
    let mut minors = Vec::with_capacity(r);
    let mut prev: i128 = 1;
    for k in 0..r {
        let pivot = a[k][k];
        minors.push(pivot);
        if k + 1 == r {
            break;
        }
        if pivot == 0 {
            return Err(domain(format!(
                "leading principal minor of order {} vanishes",
                k + 1
            )));
        }
        for i in k + 1..r {
            for j in k + 1..r {
                let num = a[i][j]
                    .checked_mul(pivot)
                    .and_then(|t| a[i][k].checked_mul(a[k][j]).and_then(|u| t.checked_sub(u)))
                    .ok_or(Error::Overflow)?;
                a[i][j] = num / prev;
            }
        }
        prev = pivot;
    }
    Ok(minors)
}

/// Solve `g * x = rhs` exactly over the rationals by Gaussian elimination
/// with partial (nonzero) pivoting.
#[allow(clippy::needless_range_loop)] // rows are cross-indexed
pub(crate) fn solve_linear(g: &[Vec<i64>], rhs: &[i64]) -> Result<Vec<Rational64>> {
    let r = g.len();
    let mut m: Vec<Vec<BigRat>> = g
        .iter()
        .zip(rhs)
        .map(|(row, &b)| {
            row.iter()
                .map(|&x| BigRat::from_integer(x as i128))
                .chain(std::iter::once(BigRat::from_integer(b as i128)))
                .collect()
        })
        .collect();

    for col in 0..r {
        let pivot_row = (col..r)
            .find(|&i| !m[i][col].is_zero())
            .ok_or_else(|| domain("singular Gram matrix".to_string()))?;
        m.swap(col, pivot_row);
        let pivot = m[col][col];
        for cell in m[col][col..=r].iter_mut() {
            *cell = div(cell, &pivot)?;
        }
        for i in 0..r {
            if i != col && !m[i][col].is_zero() {
                let factor = m[i][col];
                for j in col..=r {
                    let t = mul(&factor, &m[col][j])?;
                    m[i][j] = sub(&m[i][j], &t)?;
                }
            }
        }
    }

    m.iter().map(|row| narrow(&row[r])).collect()
}

/// Exact bilinear pairing `u^T g v` of two rational vectors against an
/// integer matrix.
pub(crate) fn pairing(g: &[Vec<i64>], u: &[Rational64], v: &[Rational64]) -> Result<Rational64> {
    let mut acc = BigRat::zero();
    for (i, row) in g.iter().enumerate() {
        for (j, &gij) in row.iter().enumerate() {
            if gij == 0 {
                continue;
            }
            let term = mul(
                &mul(&widen(u[i]), &BigRat::from_integer(gij as i128))?,
                &widen(v[j]),
            )?;
            acc = add(&acc, &term)?;
        }
    }
    narrow(&acc)
}
