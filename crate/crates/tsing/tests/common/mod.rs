//! Independent oracles shared by the integration suites: brute-force
//! enumerations and exact rank computations that never touch the code paths
//! they check.
#![allow(dead_code)] // not every suite uses every oracle

use std::collections::BTreeSet;

use tsing::hj::{self, StringClass, TString};

/// All T-strings with group order `N <= bound`, found by scanning every
/// coprime pair `(N, Q)` and classifying its expansion.
pub fn brute_force_t_strings(bound: i64) -> BTreeSet<TString> {
    let mut out = BTreeSet::new();
    for n in 2..=bound {
        for q in 1..n {
            if gcd(n, q) != 1 {
                continue;
            }
            let s = hj::expand(n, q).expect("valid input");
            if matches!(
                hj::classify_string(&s).expect("small string"),
                StringClass::NonCanonicalT(_)
            ) {
                out.insert(s);
            }
        }
    }
    out
}

/// All T-strings with group order `N <= bound` produced by the generative
/// enumeration. A string at iteration level `k` has `n >= k + 2`, so
/// `d <= bound / (k+2)^2` bounds the seeds that can still matter; the levels
/// are exhausted once that bound drops below 1.
pub fn generated_t_strings(bound: i64) -> BTreeSet<TString> {
    let mut out = BTreeSet::new();
    let mut level = 0u32;
    loop {
        let d_max = bound / (level as i64 + 2).pow(2);
        if d_max < 1 {
            break;
        }
        for s in hj::generate(level, d_max).expect("valid arguments") {
            let (n, _) = hj::evaluate(&s).expect("bounded string");
            if n <= bound {
                out.insert(s);
            }
        }
        level += 1;
    }
    out
}

pub fn gcd(a: i64, b: i64) -> i64 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        let t = b;
        b = a % b;
        a = t;
    }
    a
}

/// Lattice-point count of the polygon `{(i, j) : 0 <= j <= b, 0 <= i <= a - jn}`,
/// the section polytope of `aΓ + bσ∞` on `F_n`.
pub fn h0_lattice_count(n: i64, a: i64, b: i64) -> i64 {
    if b < 0 {
        return 0;
    }
    let mut count = 0;
    for j in 0..=b {
        for i in 0.. {
            if i > a - j * n {
                break;
            }
            count += 1;
        }
    }
    count
}

/// Exponent tuples of the weighted monomials of total degree `m`.
pub fn weighted_monomials(weights: &[i64], m: i64) -> Vec<Vec<i64>> {
    fn rec(weights: &[i64], m: i64, acc: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        if weights.is_empty() {
            if m == 0 {
                out.push(acc.clone());
            }
            return;
        }
        let w = weights[0];
        let mut e = 0;
        while e * w <= m {
            acc.push(e);
            rec(&weights[1..], m - e * w, acc, out);
            acc.pop();
            e += 1;
        }
    }
    let mut out = Vec::new();
    rec(weights, m, &mut Vec::new(), &mut out);
    out
}

/// Rank of an integer matrix, by exact Gaussian elimination over arbitrary
/// precision rationals.
#[allow(clippy::needless_range_loop)] // rows are cross-indexed
pub fn rank_exact(m: Vec<Vec<i128>>) -> usize {
    use num_bigint::BigInt;
    use num_rational::BigRational;
    use num_traits::Zero;

    let mut m: Vec<Vec<BigRational>> = m
        .into_iter()
        .map(|row| {
            row.into_iter()
                .map(|x| BigRational::from_integer(BigInt::from(x)))
                .collect()
        })
        .collect();
    let rows = m.len();
    if rows == 0 {
        return 0;
    }
    let cols = m[0].len();
    let mut rank = 0;
    let mut row = 0;
    for col in 0..cols {
        let Some(p) = (row..rows).find(|&i| !m[i][col].is_zero()) else {
            continue;
        };
        m.swap(row, p);
        let pivot = m[row][col].clone();
        for i in row + 1..rows {
            if !m[i][col].is_zero() {
                let factor = &m[i][col] / &pivot;
                for j in col..cols {
                    let t = &factor * &m[row][j];
                    m[i][j] = &m[i][j] - t;
                }
            }
        }
        row += 1;
        rank += 1;
        if row == rows {
            break;
        }
    }
    rank
}

/// Dimension of the degree-`m` piece of the quotient of the weighted
/// polynomial ring by relations with the given degrees and deterministic
/// pseudo-random coefficients: monomial count minus the exact rank of the
/// ideal's degree-`m` span.
pub fn quotient_dimension(weights: &[i64], relation_degrees: &[i64], m: i64, seed: u64) -> i64 {
    let basis = weighted_monomials(weights, m);
    if basis.is_empty() {
        return 0;
    }
    let index: std::collections::BTreeMap<Vec<i64>, usize> = basis
        .iter()
        .cloned()
        .enumerate()
        .map(|(i, mono)| (mono, i))
        .collect();

    let mut rng = seed.max(1);
    let mut next = move || {
        // xorshift; coefficients in -4..=4, never 0
        rng ^= rng << 13;
        rng ^= rng >> 7;
        rng ^= rng << 17;
        let c = (rng % 9) as i128 - 4;
        if c == 0 {
            1
        } else {
            c
        }
    };

    // deterministic generic relations f_j of the prescribed degrees
    let relations: Vec<Vec<(Vec<i64>, i128)>> = relation_degrees
        .iter()
        .map(|&e| {
            weighted_monomials(weights, e)
                .into_iter()
                .map(|mono| (mono, next()))
                .collect()
        })
        .collect();

    // the degree-m piece of the ideal is spanned by g * f_j over monomials g
    // of degree m - e_j
    let mut rows: Vec<Vec<i128>> = Vec::new();
    for (f, &e) in relations.iter().zip(relation_degrees) {
        if m < e {
            continue;
        }
        for g in weighted_monomials(weights, m - e) {
            let mut row = vec![0i128; basis.len()];
            for (mono, c) in f {
                let product: Vec<i64> = g.iter().zip(mono).map(|(x, y)| x + y).collect();
                row[index[&product]] += c;
            }
            rows.push(row);
        }
    }
    basis.len() as i64 - rank_exact(rows) as i64
}
