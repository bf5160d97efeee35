//! Exact intersection theory and cohomology on Hirzebruch surfaces.
//!
//! On the ruled surface `F_n` we work in the basis of a ruling `Γ` and the
//! negative section `σ∞`, with pairing `Γ² = 0`, `Γ·σ∞ = 1`, `σ∞² = -n`. The
//! section `σ0 = σ∞ + nΓ` disjoint from `σ∞` satisfies `σ0² = n`. Beyond the
//! pairing this module computes section spaces, arithmetic genera, invariants
//! of double covers, the bound on the branch-point parameter `d`, the
//! enumeration of reducible branch divisors, and the moduli-dimension counts
//! attached to them.

use std::fmt;

use crate::error::{domain, Result};

/// Divisor classes outside this box risk overflowing 64-bit intersection
/// numbers; anything geometric stays far below it.
const COEFF_LIMIT: i64 = 1 << 20;

/// A divisor class `aΓ + bσ∞` on the Hirzebruch surface `F_n`. The surface
/// parameter is part of the value; classes on different surfaces never
/// combine.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct FnClass {
    n: i64,
    gamma: i64,
    sigma_inf: i64,
}

impl FnClass {
    /// Class `aΓ + bσ∞` on `F_n`.
    pub fn new(n: i64, gamma: i64, sigma_inf: i64) -> Result<Self> {
        if n < 0 {
            return Err(domain(format!(
                "Hirzebruch parameter must be >= 0, got {n}"
            )));
        }
        if n > COEFF_LIMIT || gamma.abs() > COEFF_LIMIT || sigma_inf.abs() > COEFF_LIMIT {
            return Err(domain("class coefficients out of supported range"));
        }
        Ok(FnClass {
            n,
            gamma,
            sigma_inf,
        })
    }

    /// Class `xσ0 + yΓ` on `F_n`, i.e. `(nx + y)Γ + xσ∞`.
    pub fn in_section_basis(n: i64, x: i64, y: i64) -> Result<Self> {
        if n < 0 {
            return Err(domain(format!(
                "Hirzebruch parameter must be >= 0, got {n}"
            )));
        }
        let gamma = n
            .checked_mul(x)
            .and_then(|t| t.checked_add(y))
            .ok_or_else(|| domain("class coefficients out of supported range"))?;
        FnClass::new(n, gamma, x)
    }

    /// The ruling `Γ`.
    pub fn ruling(n: i64) -> Result<Self> {
        FnClass::new(n, 1, 0)
    }

    /// The negative section `σ∞`.
    pub fn section_infinity(n: i64) -> Result<Self> {
        FnClass::new(n, 0, 1)
    }

    /// The section `σ0 = σ∞ + nΓ` disjoint from `σ∞`.
    pub fn section_zero(n: i64) -> Result<Self> {
        FnClass::new(n, n, 1)
    }

    pub fn n(&self) -> i64 {
        self.n
    }

    /// Coefficient of `Γ`.
    pub fn gamma_coeff(&self) -> i64 {
        self.gamma
    }

    /// Coefficient of `σ∞`.
    pub fn sigma_inf_coeff(&self) -> i64 {
        self.sigma_inf
    }

    /// Coefficients `(x, y)` in the basis `σ0, Γ`.
    pub fn section_basis(&self) -> (i64, i64) {
        (self.sigma_inf, self.gamma - self.n * self.sigma_inf)
    }

    /// Effective classes are the nonnegative span of `Γ` and `σ∞`.
    pub fn is_effective(&self) -> bool {
        self.gamma >= 0 && self.sigma_inf >= 0
    }

    pub fn plus(&self, other: &FnClass) -> Result<FnClass> {
        self.combine(other, 1)
    }

    pub fn minus(&self, other: &FnClass) -> Result<FnClass> {
        self.combine(other, -1)
    }

    fn combine(&self, other: &FnClass, sign: i64) -> Result<FnClass> {
        if self.n != other.n {
            return Err(domain(format!(
                "classes live on different surfaces: F_{} and F_{}",
                self.n, other.n
            )));
        }
        FnClass::new(
            self.n,
            self.gamma + sign * other.gamma,
            self.sigma_inf + sign * other.sigma_inf,
        )
    }

    /// Self-intersection.
    pub fn square(&self) -> i64 {
        intersect(self, self).expect("same surface")
    }
}

impl fmt::Display for FnClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (x, y) = self.section_basis();
        let mut terms: Vec<String> = Vec::new();
        match x {
            0 => {}
            1 => terms.push("σ0".into()),
            -1 => terms.push("-σ0".into()),
            _ => terms.push(format!("{x}σ0")),
        }
        match y {
            0 => {}
            1 => terms.push("Γ".into()),
            -1 => terms.push("-Γ".into()),
            _ => terms.push(format!("{y}Γ")),
        }
        if terms.is_empty() {
            return write!(f, "0");
        }
        let mut out = terms[0].clone();
        for t in &terms[1..] {
            if let Some(rest) = t.strip_prefix('-') {
                out.push_str(" - ");
                out.push_str(rest);
            } else {
                out.push_str(" + ");
                out.push_str(t);
            }
        }
        write!(f, "{out}")
    }
}

/// Intersection number `a1 b2 + a2 b1 - n b1 b2`, from `Γ² = 0`,
/// `Γ·σ∞ = 1`, `σ∞² = -n`. Classes must live on the same surface.
pub fn intersect(c1: &FnClass, c2: &FnClass) -> Result<i64> {
    if c1.n != c2.n {
        return Err(domain(format!(
            "classes live on different surfaces: F_{} and F_{}",
            c1.n, c2.n
        )));
    }
    // Bounded coefficients keep every product within i128.
    let v = c1.gamma as i128 * c2.sigma_inf as i128 + c2.gamma as i128 * c1.sigma_inf as i128
        - c1.n as i128 * c1.sigma_inf as i128 * c2.sigma_inf as i128;
    i64::try_from(v).map_err(|_| crate::error::Error::Overflow)
}

/// The canonical class `K = -2σ∞ - (n+2)Γ`; its self-intersection is 8 on
/// every `F_n`.
pub fn canonical_class(n: i64) -> Result<FnClass> {
    FnClass::new(n, -(n + 2), -2)
}

/// Dimension of the space of global sections of `aΓ + bσ∞`:
/// `Σ_{j=0}^{b} max(0, a - jn + 1)` for `b >= 0`, and `0` for `b < 0`
/// (push forward to the base and sum the line bundle pieces).
pub fn h0(c: &FnClass) -> i64 {
    let (a, b, n) = (c.gamma, c.sigma_inf, c.n);
    if b < 0 {
        return 0;
    }
    let mut sum: i128 = 0;
    for j in 0..=b {
        let t = a as i128 - j as i128 * n as i128 + 1;
        if t > 0 {
            sum += t;
        } else if n > 0 {
            break; // terms only decrease from here on
        }
    }
    i64::try_from(sum).expect("bounded coefficients")
}

/// Dimension of the automorphism group of `F_n`, `n >= 1`: `n + 5`.
pub fn aut_dim(n: i64) -> Result<i64> {
    if n < 1 {
        return Err(domain(format!("aut_dim needs n >= 1, got {n}")));
    }
    Ok(n + 5)
}

/// Arithmetic genus `1 + (c² + K·c)/2` of a divisor class.
pub fn arithmetic_genus(c: &FnClass) -> i64 {
    let k = canonical_class(c.n).expect("valid surface");
    let val = c.square() + intersect(&k, c).expect("same surface");
    debug_assert_eq!(val % 2, 0);
    1 + val / 2
}

/// The largest `d` such that a member of `branch` with a double point of
/// type `A_{d-2}` can still normalize to a curve of nonnegative genus: the
/// genus drop of the singular point is `floor((d-1)/2)`, so the bound is the
/// largest `d` with `p_a - floor((d-1)/2) >= 0`. Returns 0 when the class
/// has negative arithmetic genus.
pub fn d_bound(branch: &FnClass) -> i64 {
    let p = arithmetic_genus(branch);
    if p < 0 {
        return 0;
    }
    2 * p + 2
}

/// Numerical invariants of a double cover.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CoverInvariants {
    pub chi: i64,
    pub k_self: i64,
    pub p_g: i64,
    pub q: i64,
}

/// Invariants of the double cover of `F_n` branched on `branch = 2L`:
///
/// ```text
/// χ(O)  = 2 + L(L + K)/2,
/// K²    = 2(K + L)²,
/// p_g   = h⁰(K) + h⁰(K + L),
/// q     = 1 + p_g - χ.
/// ```
///
/// The last line is the Euler-characteristic bookkeeping for `h¹` of the
/// inverse of `L`; it vanishes for every branch class used in the
/// constructions here, matching the Leray argument for rational base.
/// Requires `branch` to be `2L` for a nonzero effective `L`.
pub fn double_cover(branch: &FnClass) -> Result<CoverInvariants> {
    if branch.gamma % 2 != 0 || branch.sigma_inf % 2 != 0 {
        return Err(domain(format!(
            "branch class {branch} is not divisible by 2"
        )));
    }
    let l = FnClass::new(branch.n, branch.gamma / 2, branch.sigma_inf / 2)?;
    if !l.is_effective() || (l.gamma == 0 && l.sigma_inf == 0) {
        return Err(domain(format!(
            "half-branch class {l} must be effective and nonzero"
        )));
    }
    let k = canonical_class(branch.n)?;
    let k_plus_l = k.plus(&l)?;
    let l_dot = intersect(&l, &k_plus_l)?;
    debug_assert_eq!(l_dot % 2, 0);
    let chi = 2 + l_dot / 2;
    let k_self = 2 * k_plus_l.square();
    let p_g = h0(&k) + h0(&k_plus_l);
    let q = 1 + p_g - chi;
    Ok(CoverInvariants {
        chi,
        k_self,
        p_g,
        q,
    })
}

/// A decomposition of a branch class into two effective pieces meeting at a
/// single point: `m = D1·D2` and the branch-point parameter `d = 2m + 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Splitting {
    pub d1: FnClass,
    pub d2: FnClass,
    pub m: i64,
    pub d: i64,
}

/// A class `xσ0 + yΓ` with nonnegative section-basis coordinates admits an
/// irreducible member exactly when it is a single ruling or has `x >= 1`:
/// multiples of `Γ` split into rulings.
fn has_irreducible_member(x: i64, y: i64) -> bool {
    (x == 0 && y == 1) || (x >= 1 && y >= 0)
}

/// All unordered decompositions `total = D1 + D2` into nonzero effective
/// classes such that both parts meet `σ∞` positively and both admit an
/// irreducible member, each recorded with `m = D1·D2 >= 1` and `d = 2m + 1`.
pub fn enumerate_splittings(total: &FnClass) -> Vec<Splitting> {
    let (x, y) = total.section_basis();
    let mut out = Vec::new();
    if x < 0 || y < 2 {
        // Both parts must meet σ∞, i.e. have y_i >= 1.
        return out;
    }
    for x1 in 0..=x {
        for y1 in 1..y {
            let (x2, y2) = (x - x1, y - y1);
            if (x1, y1) > (x2, y2) {
                continue; // unordered pairs
            }
            if !has_irreducible_member(x1, y1) || !has_irreducible_member(x2, y2) {
                continue;
            }
            let d1 = FnClass::in_section_basis(total.n, x1, y1).expect("small coefficients");
            let d2 = FnClass::in_section_basis(total.n, x2, y2).expect("small coefficients");
            let m = intersect(&d1, &d2).expect("same surface");
            if m < 1 {
                continue;
            }
            out.push(Splitting {
                d1,
                d2,
                m,
                d: 2 * m + 1,
            });
        }
    }
    out.sort_by_key(|s| (s.m, s.d1.section_basis()));
    out
}

/// The moduli-count cases for branch divisors of the index-2 construction on
/// `F_2`: the irreducible family with an `A_{d-2}` point for `d <= 3`, and
/// the three reducible families.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ModuliCase {
    /// Irreducible branch divisor with parameter `d` (supported for
    /// `d = 1, 2, 3`).
    Generic {
        d: i64,
    },
    R1,
    R2,
    R3,
}

/// Number of moduli of the corresponding family of index-2 surfaces.
///
/// `Generic{d}` is `(h⁰(4σ0 + 2Γ) - 1) - dim Aut(F_2) - (d - 1)`; the
/// reducible cases R1 and R2 count parameters as
/// `h⁰(D2 - D1) + (h⁰(D1) - 1)` before dividing by the automorphisms; R3 is
/// recorded from the Weierstrass-point count: a 3-parameter family of first
/// components plus a pencil for the second.
pub fn moduli_count(case: ModuliCase) -> Result<i64> {
    let total = FnClass::in_section_basis(2, 4, 2)?;
    let aut = aut_dim(2)?;
    match case {
        ModuliCase::Generic { d } => {
            if !(1..=3).contains(&d) {
                return Err(domain(format!(
                    "the irreducible-branch count is only established for d = 1, 2, 3, got {d}"
                )));
            }
            Ok((h0(&total) - 1) - aut - (d - 1))
        }
        ModuliCase::R1 | ModuliCase::R2 => {
            let (x1, y1, x2, y2) = match case {
                ModuliCase::R1 => (0, 1, 4, 1),
                _ => (1, 1, 3, 1),
            };
            let d1 = FnClass::in_section_basis(2, x1, y1)?;
            let d2 = FnClass::in_section_basis(2, x2, y2)?;
            let diff = d2.minus(&d1)?;
            Ok(h0(&diff) + (h0(&d1) - 1) - aut)
        }
        ModuliCase::R3 => Ok(3 + 1),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cls(n: i64, x: i64, y: i64) -> FnClass {
        FnClass::in_section_basis(n, x, y).unwrap()
    }

    #[test]
    fn pairing_conventions() {
        let s0 = FnClass::section_zero(2).unwrap();
        let si = FnClass::section_infinity(2).unwrap();
        let g = FnClass::ruling(2).unwrap();
        assert_eq!(intersect(&s0, &si).unwrap(), 0);
        assert_eq!(intersect(&g, &si).unwrap(), 1);
        assert_eq!(si.square(), -2);
        assert_eq!(FnClass::section_zero(6).unwrap().square(), 6);
        assert_eq!(intersect(&cls(2, 4, 2), &si).unwrap(), 2);
        assert!(intersect(&s0, &FnClass::ruling(3).unwrap()).is_err());
    }

    #[test]
    fn canonical_class_checks() {
        for n in 0..=20 {
            let k = canonical_class(n).unwrap();
            assert_eq!(k.square(), 8, "K² on F_{n}");
        }
        let k2 = canonical_class(2).unwrap();
        assert_eq!((k2.gamma_coeff(), k2.sigma_inf_coeff()), (-4, -2));
        // Adjoint of the half branch class is a ruling on both surfaces used
        // in the double-cover constructions.
        for (n, a, b) in [(6i64, 9i64, 2i64), (2, 5, 2)] {
            let l = FnClass::new(n, a, b).unwrap();
            let adj = canonical_class(n).unwrap().plus(&l).unwrap();
            assert_eq!(adj, FnClass::ruling(n).unwrap());
        }
    }

    #[test]
    fn section_space_dimensions() {
        assert_eq!(h0(&cls(6, 3, 0)), 40);
        assert_eq!(h0(&cls(2, 4, 2)), 35);
        assert_eq!(h0(&cls(6, 1, 0)), 8);
        assert_eq!(h0(&cls(2, 2, 0)), 9);
        assert_eq!(h0(&FnClass::ruling(4).unwrap()), 2);
        assert_eq!(h0(&canonical_class(3).unwrap()), 0);
    }

    #[test]
    fn aut_dims() {
        assert_eq!(aut_dim(2).unwrap(), 7);
        assert_eq!(aut_dim(6).unwrap(), 11);
        assert_eq!(aut_dim(1).unwrap(), 6);
        assert!(aut_dim(0).is_err());
    }

    #[test]
    fn genus_values() {
        assert_eq!(arithmetic_genus(&cls(2, 4, 2)), 15);
        for n in 0..=8 {
            assert_eq!(arithmetic_genus(&FnClass::ruling(n).unwrap()), 0);
            assert_eq!(arithmetic_genus(&FnClass::section_infinity(n).unwrap()), 0);
        }
    }

    #[test]
    fn branch_point_bound() {
        assert_eq!(d_bound(&cls(2, 4, 2)), 32);
        // A class of genus zero leaves no genus to spend beyond a smooth
        // tangency (d = 2), genus one allows up to an A_2 point (d = 4).
        assert_eq!(d_bound(&FnClass::ruling(2).unwrap()), 2);
        let genus_one = cls(0, 2, 2); // bidegree (2,2) on F_0 has p_a = 1
        assert_eq!(arithmetic_genus(&genus_one), 1);
        assert_eq!(d_bound(&genus_one), 4);
    }

    #[test]
    fn double_cover_invariants() {
        let c = double_cover(&cls(2, 4, 2)).unwrap();
        assert_eq!(
            c,
            CoverInvariants {
                chi: 3,
                k_self: 0,
                p_g: 2,
                q: 0
            }
        );
        let c = double_cover(
            &cls(6, 3, 0)
                .plus(&FnClass::section_infinity(6).unwrap())
                .unwrap(),
        )
        .unwrap();
        assert_eq!(
            c,
            CoverInvariants {
                chi: 3,
                k_self: 0,
                p_g: 2,
                q: 0
            }
        );
        assert!(double_cover(&cls(2, 3, 1)).is_err());
    }

    #[test]
    fn splittings_of_the_branch_class() {
        let got = enumerate_splittings(&cls(2, 4, 2));
        let expected = [
            ((0, 1), (4, 1), 4, 9),
            ((1, 1), (3, 1), 10, 21),
            ((2, 1), (2, 1), 12, 25),
        ];
        assert_eq!(got.len(), 3);
        for (s, (p1, p2, m, d)) in got.iter().zip(expected) {
            assert_eq!(s.d1.section_basis(), p1);
            assert_eq!(s.d2.section_basis(), p2);
            assert_eq!(s.m, m);
            assert_eq!(s.d, d);
        }
        assert!(enumerate_splittings(&cls(2, 0, 2)).is_empty());
        assert!(enumerate_splittings(&cls(2, 3, 0)).is_empty());
    }

    #[test]
    fn moduli_counts() {
        assert_eq!(moduli_count(ModuliCase::Generic { d: 1 }).unwrap(), 27);
        assert_eq!(moduli_count(ModuliCase::Generic { d: 2 }).unwrap(), 26);
        assert_eq!(moduli_count(ModuliCase::Generic { d: 3 }).unwrap(), 25);
        assert_eq!(moduli_count(ModuliCase::R1).unwrap(), 19);
        assert_eq!(moduli_count(ModuliCase::R2).unwrap(), 7);
        assert_eq!(moduli_count(ModuliCase::R3).unwrap(), 4);
        assert!(moduli_count(ModuliCase::Generic { d: 4 }).is_err());
    }

    #[test]
    fn pairing_symmetry_and_bilinearity() {
        // Small deterministic sweep instead of random classes.
        let vals = [-50i64, -17, -3, 0, 1, 4, 50];
        for n in [0i64, 2, 6] {
            for &a1 in &vals {
                for &b1 in &vals {
                    let c1 = FnClass::new(n, a1, b1).unwrap();
                    for &a2 in &vals {
                        for &b2 in &vals {
                            let c2 = FnClass::new(n, a2, b2).unwrap();
                            assert_eq!(intersect(&c1, &c2).unwrap(), intersect(&c2, &c1).unwrap());
                            let sum = c1.plus(&c2).unwrap();
                            let probe = FnClass::new(n, 3, -2).unwrap();
                            assert_eq!(
                                intersect(&sum, &probe).unwrap(),
                                intersect(&c1, &probe).unwrap() + intersect(&c2, &probe).unwrap()
                            );
                        }
                    }
                }
            }
        }
    }
}
