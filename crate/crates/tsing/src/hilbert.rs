//! Hilbert series of weighted polynomial rings and complete intersections.
//!
//! A weighted polynomial ring with generator weights `d_1, ..., d_r` has
//! Hilbert series `Π (1 - t^{d_i})^{-1}`; a complete intersection cut out by
//! a regular sequence of degrees `e_1, ..., e_s` multiplies in the factors
//! `Π (1 - t^{e_j})`. [`HilbertSeries`] stores the two degree multisets in a
//! cancelled canonical form and extracts power-series coefficients by exact
//! integer polynomial division.
//!
//! Regularity of the relations is a precondition, not something this module
//! verifies; the canonical-ring formats checked here are regular by
//! construction.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{domain, Error, Result};

/// Degrees above this make dense polynomial arithmetic pointless.
const DEGREE_LIMIT: i64 = 512;
/// Combined factor count limit; keeps cross-multiplication small.
const FACTOR_LIMIT: usize = 24;
/// Coefficient extraction limit.
const ORDER_LIMIT: i64 = 1 << 16;

/// The rational function `Π (1 - t^{e_j}) / Π (1 - t^{d_i})` given by
/// generator weights `d_i` and relation degrees `e_j`, with common factors
/// cancelled.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HilbertSeries {
    weights: Vec<i64>,
    relations: Vec<i64>,
}

/// Build the series of a weighted complete intersection. Weights and
/// relation degrees must be positive; factors `(1 - t^k)` occurring on both
/// sides cancel.
pub fn series(weights: &[i64], relations: &[i64]) -> Result<HilbertSeries> {
    if weights.is_empty() {
        return Err(domain("at least one generator weight is required"));
    }
    if weights.len() + relations.len() > FACTOR_LIMIT {
        return Err(domain("too many generators and relations"));
    }
    for &w in weights.iter().chain(relations) {
        if w < 1 {
            return Err(domain(format!("degrees must be positive, got {w}")));
        }
        if w > DEGREE_LIMIT {
            return Err(domain(format!("degree {w} out of supported range")));
        }
    }
    let mut relation_counts: BTreeMap<i64, usize> = BTreeMap::new();
    for &e in relations {
        *relation_counts.entry(e).or_insert(0) += 1;
    }
    let mut cancelled_weights = Vec::with_capacity(weights.len());
    for &w in weights {
        match relation_counts.get_mut(&w) {
            Some(c) if *c > 0 => *c -= 1,
            _ => cancelled_weights.push(w),
        }
    }
    let mut cancelled_relations = Vec::with_capacity(relations.len());
    for (e, c) in relation_counts {
        cancelled_relations.extend(std::iter::repeat_n(e, c));
    }
    cancelled_weights.sort_unstable();
    Ok(HilbertSeries {
        weights: cancelled_weights,
        relations: cancelled_relations,
    })
}

impl HilbertSeries {
    /// Canonical (cancelled, sorted) generator weights.
    pub fn weights(&self) -> &[i64] {
        &self.weights
    }

    /// Canonical (cancelled, sorted) relation degrees.
    pub fn relations(&self) -> &[i64] {
        &self.relations
    }

    /// The coefficient of `t^m` in the power-series expansion, by exact
    /// polynomial division to order `m`.
    pub fn coefficient(&self, m: i64) -> Result<i64> {
        Ok(*self.coefficients_up_to(m)?.last().expect("nonempty"))
    }

    /// Coefficients of `t^0, ..., t^m`.
    pub fn coefficients_up_to(&self, m: i64) -> Result<Vec<i64>> {
        if m < 0 {
            return Err(domain(format!("order must be nonnegative, got {m}")));
        }
        if m > ORDER_LIMIT {
            return Err(domain(format!("order {m} out of supported range")));
        }
        let len = m as usize + 1;
        let num = product_poly(&self.relations, Some(len))?;
        let den = product_poly(&self.weights, Some(len))?;
        // den[0] == 1, so the recurrence c[k] = num[k] - Σ_{j>=1} den[j] c[k-j]
        // is the exact power-series division.
        let mut c = vec![0i64; len];
        for k in 0..len {
            let mut acc = *num.get(k).unwrap_or(&0);
            for j in 1..=k.min(den.len().saturating_sub(1)) {
                if den[j] != 0 {
                    let t = den[j].checked_mul(c[k - j]).ok_or(Error::Overflow)?;
                    acc = acc.checked_sub(t).ok_or(Error::Overflow)?;
                }
            }
            c[k] = acc;
        }
        Ok(c)
    }

    /// Exact equality of the represented rational functions, decided by
    /// cross-multiplying the numerator and denominator polynomials.
    pub fn equal(&self, other: &HilbertSeries) -> Result<bool> {
        let lhs = poly_mul(
            &product_poly(&self.relations, None)?,
            &product_poly(&other.weights, None)?,
        )?;
        let rhs = poly_mul(
            &product_poly(&other.relations, None)?,
            &product_poly(&self.weights, None)?,
        )?;
        Ok(lhs == rhs)
    }

    /// `true` when the coefficients follow the plurigenus values
    /// `χ + m(m-1)/2 · K²` for all `2 <= m <= m_max`.
    pub fn matches_plurigenera(&self, chi: i64, k2: i64, m_max: i64) -> Result<bool> {
        if m_max < 2 {
            return Err(domain(format!("m_max must be at least 2, got {m_max}")));
        }
        let coeffs = self.coefficients_up_to(m_max)?;
        for m in 2..=m_max {
            let expected = (m * (m - 1) / 2)
                .checked_mul(k2)
                .and_then(|t| t.checked_add(chi))
                .ok_or(Error::Overflow)?;
            if coeffs[m as usize] != expected {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

impl fmt::Display for HilbertSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let num = if self.relations.is_empty() {
            "1".to_string()
        } else {
            factor_string(&self.relations)
        };
        if self.weights.is_empty() {
            write!(f, "{num}")
        } else {
            write!(f, "{num} / ({})", factor_string(&self.weights))
        }
    }
}

/// `[1,1,2,5]` becomes `"(1 - t)^2 (1 - t^2) (1 - t^5)"`.
fn factor_string(degrees: &[i64]) -> String {
    let mut out = String::new();
    let mut i = 0;
    while i < degrees.len() {
        let d = degrees[i];
        let mut mult = 0;
        while i < degrees.len() && degrees[i] == d {
            mult += 1;
            i += 1;
        }
        if !out.is_empty() {
            out.push(' ');
        }
        if d == 1 {
            out.push_str("(1 - t)");
        } else {
            out.push_str(&format!("(1 - t^{d})"));
        }
        if mult > 1 {
            out.push_str(&format!("^{mult}"));
        }
    }
    out
}

/// Expand `Π (1 - t^{k})` as a dense coefficient vector, optionally
/// truncated to `len` coefficients. The constant term is always 1.
fn product_poly(degrees: &[i64], truncate: Option<usize>) -> Result<Vec<i64>> {
    let full_degree: i64 = degrees.iter().sum();
    let len = match truncate {
        Some(l) => l.min(full_degree as usize + 1),
        None => full_degree as usize + 1,
    }
    .max(1);
    let mut p = vec![0i64; len];
    p[0] = 1;
    for &k in degrees {
        let k = k as usize;
        for i in (0..p.len()).rev() {
            if p[i] != 0 && i + k < p.len() {
                p[i + k] = p[i + k].checked_sub(p[i]).ok_or(Error::Overflow)?;
            }
        }
    }
    Ok(p)
}

fn poly_mul(a: &[i64], b: &[i64]) -> Result<Vec<i64>> {
    let mut out = vec![0i64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            if y == 0 {
                continue;
            }
            let t = x.checked_mul(y).ok_or(Error::Overflow)?;
            out[i + j] = out[i + j].checked_add(t).ok_or(Error::Overflow)?;
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn h(w: &[i64], r: &[i64]) -> HilbertSeries {
        series(w, r).unwrap()
    }

    #[test]
    fn canonical_form_cancels() {
        let a = h(&[1, 1, 2, 3, 5], &[3, 10]);
        assert_eq!(a.weights(), &[1, 1, 2, 5]);
        assert_eq!(a.relations(), &[10]);
        let b = h(&[1, 1, 2], &[]);
        let padded = h(&[1, 1, 2, 3], &[3]);
        assert_eq!(b, padded);
    }

    #[test]
    fn degree_ten_hypersurface_coefficients() {
        let hr = h(&[1, 1, 2, 5], &[10]);
        assert_eq!(hr.coefficients_up_to(5).unwrap(), vec![1, 2, 4, 6, 9, 13]);
        assert_eq!(hr.coefficient(0).unwrap(), 1);
        assert_eq!(hr.coefficient(2).unwrap(), 4);
        assert_eq!(hr.coefficient(5).unwrap(), 13);
    }

    #[test]
    fn degree_three_subring_coefficients() {
        let hs = h(&[1, 1, 2], &[]);
        assert_eq!(hs.coefficient(4).unwrap(), 9);
        assert_eq!(hs.coefficient(5).unwrap(), 12);
    }

    #[test]
    fn the_two_canonical_ring_formats_agree() {
        let hypersurface = h(&[1, 1, 2, 5], &[10]);
        let complete_intersection = h(&[1, 1, 2, 3, 5], &[3, 10]);
        assert!(hypersurface.equal(&complete_intersection).unwrap());
        // equality of the rational functions forces coefficient agreement
        assert_eq!(
            hypersurface.coefficients_up_to(50).unwrap(),
            complete_intersection.coefficients_up_to(50).unwrap()
        );
        let wrong = h(&[1, 1, 2, 5], &[9]);
        assert!(!hypersurface.equal(&wrong).unwrap());
        // distinct coefficients appear at degree 9
        assert_ne!(
            hypersurface.coefficient(9).unwrap(),
            wrong.coefficient(9).unwrap()
        );
    }

    #[test]
    fn plurigenera_matching() {
        let hr = h(&[1, 1, 2, 5], &[10]);
        assert!(hr.matches_plurigenera(3, 1, 20).unwrap());
        let hs = h(&[1, 1, 2], &[]);
        assert!(!hs.matches_plurigenera(3, 1, 20).unwrap());
        assert!(hs.matches_plurigenera(3, 1, 4).unwrap()); // fails only from m = 5
        let line = h(&[1], &[]);
        assert!(line.matches_plurigenera(1, 0, 20).unwrap());
    }

    #[test]
    fn complete_intersection_additivity() {
        // Adding a relation of degree k subtracts the k-shifted series.
        let base = h(&[1, 1, 2, 5], &[10]);
        for k in [2i64, 3, 5, 7] {
            let cut = h(&[1, 1, 2, 5], &[10, k]);
            for m in k..=50 {
                assert_eq!(
                    cut.coefficient(m).unwrap(),
                    base.coefficient(m).unwrap() - base.coefficient(m - k).unwrap(),
                    "k={k}, m={m}"
                );
            }
        }
    }

    #[test]
    fn equality_is_symmetric_and_transitive_on_formats() {
        let hs_padded = h(&[1, 1, 2, 3], &[3]);
        let hs = h(&[1, 1, 2], &[]);
        let hs_double_padded = h(&[1, 1, 2, 3, 7], &[3, 7]);
        assert!(hs.equal(&hs_padded).unwrap());
        assert!(hs_padded.equal(&hs).unwrap());
        assert!(hs_padded.equal(&hs_double_padded).unwrap());
        assert!(hs.equal(&hs_double_padded).unwrap());
    }

    #[test]
    fn rejects_bad_degrees() {
        assert!(series(&[], &[]).is_err());
        assert!(series(&[0], &[]).is_err());
        assert!(series(&[1], &[-2]).is_err());
        assert!(h(&[1], &[]).coefficient(-1).is_err());
    }

    #[test]
    fn display_format() {
        let hr = h(&[1, 1, 2, 5], &[10]);
        assert_eq!(
            hr.to_string(),
            "(1 - t^10) / ((1 - t)^2 (1 - t^2) (1 - t^5))"
        );
        let hs = h(&[1, 1, 2], &[]);
        assert_eq!(hs.to_string(), "1 / ((1 - t)^2 (1 - t^2))");
    }
}
