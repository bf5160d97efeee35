//! Hirzebruch-Jung continued fractions and T-strings.
//!
//! A cyclic quotient surface singularity `1/N(1,Q)` is resolved by a chain of
//! smooth rational curves whose negated self-intersections `[b_1,...,b_r]`
//! form the Hirzebruch-Jung continued fraction expansion of `N/Q`:
//!
//! ```text
//! N/Q = b_1 - 1/(b_2 - 1/( ... - 1/b_r)),    all b_i >= 2.
//! ```
//!
//! The quotient singularities admitting a Q-Gorenstein smoothing are, by
//! Kollár--Shepherd-Barron, the rational double points together with the
//! quotients of type `1/dn^2(1, dna-1)` with `n >= 2`, `gcd(a, n) = 1`. We
//! call the chains of the latter T-strings. This module provides:
//!
//! - [`expand`] / [`evaluate`]: the expansion and its inverse;
//! - [`classify_string`]: the rational double point / T-string / other
//!   trichotomy, returning the parameters `(d, n, a)` in the T case;
//! - [`iterate_left`] / [`iterate_right`]: the index-raising moves
//!   `[b_1,...,b_r] -> [2, b_1, ..., b_r + 1]` and
//!   `[b_1 + 1, ..., b_r, 2]`, which preserve `d` and increase `n`;
//! - [`seeds_index2`] / [`generate`]: enumeration of all T-strings of bounded
//!   `d` by iterating from the index-2 chains `[4]` and `[3,2,...,2,3]`.

use num_integer::Integer;
use std::collections::BTreeSet;
use std::fmt;

use crate::error::{domain, Error, Result};

fn ck_add(a: i64, b: i64) -> Result<i64> {
    a.checked_add(b).ok_or(Error::Overflow)
}

fn ck_sub(a: i64, b: i64) -> Result<i64> {
    a.checked_sub(b).ok_or(Error::Overflow)
}

fn ck_mul(a: i64, b: i64) -> Result<i64> {
    a.checked_mul(b).ok_or(Error::Overflow)
}

/// The chain `[b_1,...,b_r]` of negated self-intersections of a
/// Hirzebruch-Jung resolution; nonempty, every entry at least 2.
///
/// A string and its mirror are distinct values: chains are read with a chosen
/// orientation, and set-valued operations deduplicate exact sequences only.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TString {
    entries: Vec<i64>,
}

impl TString {
    /// Build a string, checking that it is nonempty with all entries `>= 2`.
    pub fn new(entries: Vec<i64>) -> Result<Self> {
        if entries.is_empty() {
            return Err(domain("a string must have at least one entry"));
        }
        if let Some(&b) = entries.iter().find(|&&b| b < 2) {
            return Err(domain(format!("string entry {b} is smaller than 2")));
        }
        Ok(TString { entries })
    }

    pub fn entries(&self) -> &[i64] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        false // by construction
    }

    /// The same chain read from the other end.
    pub fn mirror(&self) -> TString {
        let mut entries = self.entries.clone();
        entries.reverse();
        TString { entries }
    }
}

impl fmt::Display for TString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, b) in self.entries.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{b}")?;
        }
        write!(f, "]")
    }
}

/// The parameters `(d, n, a)` of a T-singularity of type `1/dn^2(1, dna-1)`:
/// `d >= 1`, `n >= 2`, `0 < a < n` with `gcd(a, n) = 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct QuotientType {
    d: i64,
    n: i64,
    a: i64,
}

impl QuotientType {
    pub fn new(d: i64, n: i64, a: i64) -> Result<Self> {
        if d < 1 {
            return Err(domain(format!("d must be positive, got {d}")));
        }
        if n < 2 {
            return Err(domain(format!("n must be at least 2, got {n}")));
        }
        if a < 1 || a >= n {
            return Err(domain(format!(
                "a must satisfy 0 < a < n, got a={a}, n={n}"
            )));
        }
        if a.gcd(&n) != 1 {
            return Err(domain(format!("a={a} and n={n} are not coprime")));
        }
        // N and Q are automatically coprime: a prime dividing dn^2 and
        // dna - 1 would divide 1.
        let q = QuotientType { d, n, a };
        q.order()?;
        Ok(q)
    }

    pub fn d(&self) -> i64 {
        self.d
    }

    pub fn n(&self) -> i64 {
        self.n
    }

    pub fn a(&self) -> i64 {
        self.a
    }

    /// The group order `N = d n^2`.
    pub fn order(&self) -> Result<i64> {
        ck_mul(self.d, ck_mul(self.n, self.n)?)
    }

    /// The rotation weight `Q = d n a - 1`, so the singularity is `1/N(1,Q)`.
    pub fn weight(&self) -> Result<i64> {
        ck_sub(ck_mul(self.d, ck_mul(self.n, self.a)?)?, 1)
    }

    /// The Cartier index of a surface whose unique singularity has this type.
    pub fn index(&self) -> i64 {
        self.n
    }
}

impl fmt::Display for QuotientType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.order(), self.weight()) {
            (Ok(n), Ok(q)) => write!(f, "1/{n}(1,{q})"),
            _ => write!(f, "1/{}*{}^2(1,...)", self.d, self.n),
        }
    }
}

/// Outcome of [`classify_string`]: a chain is a rational double point chain
/// exactly when every entry equals 2, a non-canonical T-string when its
/// fraction has the form `dn^2/(dna-1)`, and otherwise not a T-string.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StringClass {
    RationalDoublePoint,
    NonCanonicalT(QuotientType),
    NotT,
}

/// Hirzebruch-Jung continued fraction expansion of `N/Q`.
///
/// Requires `N > 1`, `0 < Q < N` and `gcd(N, Q) = 1`; the output satisfies
/// `evaluate(expand(N, Q)) == (N, Q)`.
pub fn expand(n: i64, q: i64) -> Result<TString> {
    if n <= 1 {
        return Err(domain(format!("N must be greater than 1, got {n}")));
    }
    if q <= 0 || q >= n {
        return Err(domain(format!(
            "Q out of range: need 0 < Q < N, got Q={q}, N={n}"
        )));
    }
    if n.gcd(&q) != 1 {
        return Err(domain(format!("N={n} and Q={q} are not coprime")));
    }
    let (mut n, mut q) = (n, q);
    let mut entries = Vec::new();
    while n > 1 {
        // ceil(n/q); the remainder step mirrors the Euclidean algorithm with
        // negative remainders.
        let b = ck_add(n, q - 1)? / q;
        entries.push(b);
        let next_q = ck_sub(ck_mul(b, q)?, n)?;
        n = q;
        q = next_q;
    }
    TString::new(entries)
}

/// Value `(N, Q)` of the continued fraction of a string, in lowest terms.
///
/// Inverse of [`expand`]. Fails only on overflow (the value of a long chain
/// grows like the product of its entries).
pub fn evaluate(s: &TString) -> Result<(i64, i64)> {
    let mut n: i64 = 1;
    let mut q: i64 = 0;
    for &b in s.entries().iter().rev() {
        let next_n = ck_sub(ck_mul(b, n)?, q)?;
        q = n;
        n = next_n;
    }
    debug_assert_eq!(n.gcd(&q), 1);
    Ok((n, q))
}

/// Recognize a chain as a T-string by the structural reduction: peel a `2`
/// off one end while lowering the opposite end until an index-2 chain `[4]`
/// or `[3,2,...,2,3]` remains. Returns `d` on success.
///
/// A T-string of index `n > 2` has exactly one end equal to 2, so the
/// reduction never branches.
fn reduce_to_seed(entries: &[i64]) -> Option<i64> {
    let mut v: Vec<i64> = entries.to_vec();
    loop {
        let (first, last) = (v[0], *v.last().unwrap());
        if v.len() >= 2 && first == 2 && last != 2 {
            v.remove(0);
            *v.last_mut().unwrap() -= 1;
            if *v.last().unwrap() < 2 {
                return None;
            }
        } else if v.len() >= 2 && last == 2 && first != 2 {
            v.pop();
            v[0] -= 1;
            if v[0] < 2 {
                return None;
            }
        } else {
            break;
        }
    }
    // Base cases: [4] has d = 1; [3,2,...,2,3] with d-2 twos has d >= 2.
    if v == [4] {
        return Some(1);
    }
    let r = v.len();
    if r >= 2 && v[0] == 3 && v[r - 1] == 3 && v[1..r - 1].iter().all(|&b| b == 2) {
        return Some(r as i64);
    }
    None
}

/// Classify a chain as a rational double point chain, a non-canonical
/// T-string (with its parameters), or neither.
///
/// The parameters are found by scanning candidates `n` with `n^2 | N`;
/// uniqueness of the admissible triple is asserted, not assumed.
pub fn classify_string(s: &TString) -> Result<StringClass> {
    if s.entries().iter().all(|&b| b == 2) {
        return Ok(StringClass::RationalDoublePoint);
    }
    let (big_n, big_q) = evaluate(s)?;
    let mut found: Option<QuotientType> = None;
    let mut n: i64 = 2;
    while ck_mul(n, n)? <= big_n {
        let n2 = n * n;
        if big_n % n2 == 0 {
            let d = big_n / n2;
            let dn = d * n;
            if (big_q + 1) % dn == 0 {
                let a = (big_q + 1) / dn;
                if a > 0 && a < n && a.gcd(&n) == 1 {
                    let qt = QuotientType::new(d, n, a)?;
                    if let Some(prev) = found {
                        return Err(Error::Internal(format!(
                            "two admissible parameter triples for {s}: {prev} and {qt}"
                        )));
                    }
                    found = Some(qt);
                }
            }
        }
        n += 1;
    }
    debug_assert_eq!(found.is_some(), reduce_to_seed(s.entries()).is_some());
    Ok(match found {
        Some(qt) => StringClass::NonCanonicalT(qt),
        None => StringClass::NotT,
    })
}

fn require_t_string(s: &TString) -> Result<()> {
    if s.entries().iter().all(|&b| b == 2) || reduce_to_seed(s.entries()).is_none() {
        return Err(domain(format!(
            "{s} is not the string of a non-canonical T-singularity"
        )));
    }
    Ok(())
}

/// `[b_1,...,b_r] -> [2, b_1, ..., b_{r-1}, b_r + 1]`. Preserves `d`,
/// increases `n`. Rejects chains that are not non-canonical T-strings.
pub fn iterate_left(s: &TString) -> Result<TString> {
    require_t_string(s)?;
    let mut entries = Vec::with_capacity(s.len() + 1);
    entries.push(2);
    entries.extend_from_slice(s.entries());
    let last = entries.last_mut().unwrap();
    *last = ck_add(*last, 1)?;
    TString::new(entries)
}

/// `[b_1,...,b_r] -> [b_1 + 1, b_2, ..., b_r, 2]`. Mirror move of
/// [`iterate_left`].
pub fn iterate_right(s: &TString) -> Result<TString> {
    require_t_string(s)?;
    let mut entries = s.entries().to_vec();
    entries[0] = ck_add(entries[0], 1)?;
    entries.push(2);
    TString::new(entries)
}

/// The index-2 T-strings with `d <= d_max`: `[4]` for `d = 1`, `[3,3]` for
/// `d = 2`, and `[3,2,...,2,3]` with `d - 2` twos for larger `d`.
pub fn seeds_index2(d_max: i64) -> Result<Vec<TString>> {
    if d_max < 1 {
        return Err(domain(format!("d_max must be positive, got {d_max}")));
    }
    let mut seeds = Vec::with_capacity(d_max as usize);
    for d in 1..=d_max {
        let entries = match d {
            1 => vec![4],
            _ => {
                let mut v = vec![3];
                v.extend(std::iter::repeat_n(2, (d - 2) as usize));
                v.push(3);
                v
            }
        };
        seeds.push(TString::new(entries)?);
    }
    Ok(seeds)
}

/// All T-strings reached from the index-2 seeds with `d <= d_max` by exactly
/// `level` applications of [`iterate_left`] / [`iterate_right`], deduplicated
/// as exact sequences and returned in lexicographic order.
///
/// Every output satisfies `length - d == level`.
pub fn generate(level: u32, d_max: i64) -> Result<Vec<TString>> {
    let mut current: BTreeSet<TString> = seeds_index2(d_max)?.into_iter().collect();
    for _ in 0..level {
        let mut next = BTreeSet::new();
        for s in &current {
            next.insert(iterate_left(s)?);
            next.insert(iterate_right(s)?);
        }
        current = next;
    }
    Ok(current.into_iter().collect())
}
