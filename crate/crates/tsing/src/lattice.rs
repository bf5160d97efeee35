//! Exact intersection theory on a configured resolution.
//!
//! An [`ExceptionalConfig`] records a basis of exceptional curves with its
//! integer Gram matrix, the canonical degrees `K·E_i`, the holomorphic Euler
//! characteristic of the contracted surface and the self-intersection of the
//! canonical class upstairs. On top of it this module computes, always in
//! exact rational arithmetic:
//!
//! - [`discrepancies`]: the divisor `Δ = Σ a_i E_i` with
//!   `f*K_X = K + Δ`, i.e. the unique solution of `(K + Δ)·E_i = 0`;
//! - [`cartier_index`]: the least `m > 0` with `mΔ` integral, which for a
//!   T-singularity equals `n`;
//! - [`kx_squared`]: `(K + Δ)^2`, the self-intersection of the canonical
//!   class downstairs;
//! - [`k2_resolution`]: Lee's formula `K²_resolution = K²_X - (r - d + 1)`
//!   for a contracted T-string;
//! - [`riemann_roch`]: `χ(L) = χ(O) + (L² - K·L)/2` on a normal surface;
//! - [`correction_term`] and [`plurigenus`]: the plurigenus formula for
//!   log-terminal surfaces,
//!
//! ```text
//! h^0(mK_X) = χ(O_X) + m(m-1)/2 · K²_X + 1/2 {mΔ}({mΔ} - {Δ}),
//! ```
//!
//! where `{·}` is the componentwise fractional part and the product of the
//! two fractional divisors is taken with the Gram pairing.
//!
//! No floating point is used anywhere.

use num_rational::Rational64;
use num_traits::Zero;
use std::fmt;

use crate::error::{domain, Error, Result};
use crate::hj::TString;
use crate::solve;

/// A finite configuration of exceptional curves: names, Gram matrix,
/// canonical degrees `K·E_i`, and the ambient invariants `χ(O)` and `K²` of
/// the resolution.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExceptionalConfig {
    curve_names: Vec<String>,
    gram: Vec<Vec<i64>>,
    k_degrees: Vec<i64>,
    chi: i64,
    k_self: i64,
}

impl ExceptionalConfig {
    /// Build a configuration, checking shape, symmetry and negative diagonal.
    #[allow(clippy::needless_range_loop)] // symmetry check cross-indexes
    pub fn new(
        curve_names: Vec<String>,
        gram: Vec<Vec<i64>>,
        k_degrees: Vec<i64>,
        chi: i64,
        k_self: i64,
    ) -> Result<Self> {
        let r = curve_names.len();
        if r == 0 {
            return Err(domain("a configuration needs at least one curve"));
        }
        if gram.len() != r || gram.iter().any(|row| row.len() != r) {
            return Err(domain("Gram matrix shape does not match the curve basis"));
        }
        if k_degrees.len() != r {
            return Err(domain(
                "canonical degree vector length does not match the curve basis",
            ));
        }
        for i in 0..r {
            if gram[i][i] >= 0 {
                return Err(domain(format!(
                    "diagonal Gram entry for {} must be negative",
                    curve_names[i]
                )));
            }
            for j in 0..i {
                if gram[i][j] != gram[j][i] {
                    return Err(domain("Gram matrix is not symmetric"));
                }
            }
        }
        Ok(ExceptionalConfig {
            curve_names,
            gram,
            k_degrees,
            chi,
            k_self,
        })
    }

    pub fn curve_names(&self) -> &[String] {
        &self.curve_names
    }

    pub fn gram(&self) -> &[Vec<i64>] {
        &self.gram
    }

    pub fn k_degrees(&self) -> &[i64] {
        &self.k_degrees
    }

    pub fn chi(&self) -> i64 {
        self.chi
    }

    pub fn k_self(&self) -> i64 {
        self.k_self
    }

    pub fn len(&self) -> usize {
        self.curve_names.len()
    }

    pub fn is_empty(&self) -> bool {
        false // at least one curve by construction
    }

    /// `true` when the Gram matrix is negative definite, decided exactly by
    /// the signs of the leading principal minors.
    pub fn is_negative_definite(&self) -> Result<bool> {
        match solve::leading_principal_minors(&self.gram) {
            Ok(minors) => Ok(minors
                .iter()
                .enumerate()
                .all(|(k, &m)| if k % 2 == 0 { m < 0 } else { m > 0 })),
            // A vanishing intermediate minor already rules definiteness out.
            Err(Error::Domain(_)) => Ok(false),
            Err(e) => Err(e),
        }
    }

    /// The Gram pairing `u · v` of two rational divisors on this basis.
    pub fn pairing(&self, u: &QDivisor, v: &QDivisor) -> Result<Rational64> {
        if u.len() != self.len() || v.len() != self.len() {
            return Err(domain("divisor length does not match the curve basis"));
        }
        solve::pairing(&self.gram, u.coeffs(), v.coeffs())
    }
}

/// A divisor with exact rational coefficients over the curve basis of a
/// configuration.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QDivisor {
    coeffs: Vec<Rational64>,
}

impl QDivisor {
    pub fn new(coeffs: Vec<Rational64>) -> Self {
        QDivisor { coeffs }
    }

    pub fn coeffs(&self) -> &[Rational64] {
        &self.coeffs
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Componentwise fractional part.
    pub fn fractional_part(&self) -> QDivisor {
        QDivisor::new(self.coeffs.iter().map(|c| c - c.floor()).collect())
    }

    /// Componentwise difference; both divisors must live on the same basis.
    pub fn minus(&self, other: &QDivisor) -> Result<QDivisor> {
        if self.len() != other.len() {
            return Err(domain("divisor lengths differ"));
        }
        Ok(QDivisor::new(
            self.coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a - b)
                .collect(),
        ))
    }

    /// Scalar multiple `m·D`.
    pub fn scaled(&self, m: i64) -> QDivisor {
        let m = Rational64::from_integer(m);
        QDivisor::new(self.coeffs.iter().map(|c| c * m).collect())
    }
}

impl fmt::Display for QDivisor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

/// Configuration of a contracted chain with self-intersections
/// `-b_1, ..., -b_r`: tridiagonal Gram matrix with `1` between neighbours,
/// canonical degrees `b_i - 2` by adjunction on rational curves.
///
/// Curves are named `A, B, C, ...` in chain order.
pub fn chain_config(s: &TString, chi: i64, k_self: i64) -> ExceptionalConfig {
    let r = s.len();
    let names = (0..r)
        .map(|i| {
            if r <= 26 {
                char::from(b'A' + i as u8).to_string()
            } else {
                format!("E{}", i + 1)
            }
        })
        .collect();
    let mut gram = vec![vec![0i64; r]; r];
    for (i, &b) in s.entries().iter().enumerate() {
        gram[i][i] = -b;
        if i + 1 < r {
            gram[i][i + 1] = 1;
            gram[i + 1][i] = 1;
        }
    }
    let k_degrees = s.entries().iter().map(|&b| b - 2).collect();
    ExceptionalConfig {
        curve_names: names,
        gram,
        k_degrees,
        chi,
        k_self,
    }
}

/// The discrepancy divisor: the unique exact solution `Δ` of
/// `(K + Δ)·E_i = 0`, i.e. `gram · a = -k_degrees`.
///
/// Requires a negative definite Gram matrix; the residual of the returned
/// solution is exactly zero.
pub fn discrepancies(cfg: &ExceptionalConfig) -> Result<QDivisor> {
    if !cfg.is_negative_definite()? {
        return Err(domain("Gram matrix is not negative definite"));
    }
    let rhs: Vec<i64> = cfg.k_degrees.iter().map(|&k| -k).collect();
    let a = solve::solve_linear(&cfg.gram, &rhs)?;
    let delta = QDivisor::new(a);
    debug_assert!(discrepancy_residual_is_zero(cfg, &delta).unwrap_or(false));
    Ok(delta)
}

/// Check `gram·a + k_degrees = 0` exactly.
pub fn discrepancy_residual_is_zero(cfg: &ExceptionalConfig, delta: &QDivisor) -> Result<bool> {
    if delta.len() != cfg.len() {
        return Err(domain("divisor length does not match the curve basis"));
    }
    for i in 0..cfg.len() {
        let mut acc = Rational64::zero();
        for j in 0..cfg.len() {
            acc += Rational64::from_integer(cfg.gram[i][j]) * delta.coeffs[j];
        }
        if acc + Rational64::from_integer(cfg.k_degrees[i]) != Rational64::zero() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Least `m > 0` such that `mΔ` has integer coefficients: the lcm of the
/// reduced denominators. Equals `n` for the discrepancy divisor of a
/// T-singularity of type `1/dn^2(1, dna-1)`, and 1 for a rational double
/// point (`Δ = 0`).
pub fn cartier_index(delta: &QDivisor) -> i64 {
    delta
        .coeffs()
        .iter()
        .map(|c| *c.denom())
        .fold(1i64, num_integer::lcm)
}

/// `(K + Δ)^2`. Since `(K + Δ)·Δ = 0`, this equals `K² + K·Δ`, computed here
/// as `k_self + k_degrees · a`.
///
/// `delta` must solve the discrepancy system of `cfg`.
pub fn kx_squared(cfg: &ExceptionalConfig, delta: &QDivisor) -> Result<Rational64> {
    if delta.len() != cfg.len() {
        return Err(domain("divisor length does not match the curve basis"));
    }
    let mut acc = Rational64::from_integer(cfg.k_self);
    for (k, a) in cfg.k_degrees.iter().zip(delta.coeffs()) {
        acc += Rational64::from_integer(*k) * a;
    }
    Ok(acc)
}

/// Lee's formula: the canonical self-intersection of the minimal resolution
/// of a T-singular surface, `K²_X - (r - d + 1)` for a contracted chain of
/// length `r` and parameter `d`.
pub fn k2_resolution(k2_x: Rational64, r: usize, d: i64) -> Rational64 {
    k2_x - Rational64::from_integer(r as i64 - d + 1)
}

/// Riemann-Roch on a normal surface: `χ(L) = χ(O) + (L² - K·L)/2`.
pub fn riemann_roch(chi: i64, l_self: Rational64, k_dot_l: Rational64) -> Rational64 {
    Rational64::from_integer(chi) + (l_self - k_dot_l) / Rational64::from_integer(2)
}

/// The correction term `1/2 {mΔ}({mΔ} - {Δ})` of the plurigenus formula,
/// the product being the Gram pairing. Requires `m >= 1`.
pub fn correction_term(cfg: &ExceptionalConfig, delta: &QDivisor, m: i64) -> Result<Rational64> {
    if m < 1 {
        return Err(domain(format!("m must be at least 1, got {m}")));
    }
    let frac_m = delta.scaled(m).fractional_part();
    let diff = frac_m.minus(&delta.fractional_part())?;
    let pairing = cfg.pairing(&frac_m, &diff)?;
    Ok(pairing / Rational64::from_integer(2))
}

/// The plurigenus formula for a log-terminal surface:
/// `χ + m(m-1)/2 · K²_X + correction`. Only valid for `m >= 2`; at `m = 1`
/// the right side is `χ`, not `p_g`, so smaller `m` is rejected.
pub fn plurigenus(
    chi: i64,
    k2_x: Rational64,
    cfg: &ExceptionalConfig,
    delta: &QDivisor,
    m: i64,
) -> Result<Rational64> {
    if m < 2 {
        return Err(domain(format!(
            "the plurigenus formula applies for m >= 2, got {m}"
        )));
    }
    let binom = Rational64::new(m * (m - 1), 2);
    Ok(Rational64::from_integer(chi) + binom * k2_x + correction_term(cfg, delta, m)?)
}
