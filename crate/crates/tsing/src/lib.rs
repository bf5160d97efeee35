//! Exact arithmetic for T-singular I-surfaces.
//!
//! An I-surface is a stable surface with `K² = 1`, `p_g = 2`, `q = 0`; a
//! T-singularity is a cyclic quotient singularity `1/dn²(1, dna-1)` (or a
//! rational double point), exactly the quotients admitting a Q-Gorenstein
//! smoothing. This crate mechanizes the computations behind the
//! classification of I-surfaces whose unique singular point is a
//! non-canonical T-singularity, all in exact integer and rational
//! arithmetic:
//!
//! - [`hj`]: Hirzebruch-Jung continued fractions, recognition of T-strings,
//!   and their generative enumeration from the index-2 seeds;
//! - [`lattice`]: Gram matrices of exceptional chains, discrepancies,
//!   Cartier index, `K²` bookkeeping, Riemann-Roch, and the plurigenus
//!   formula with its fractional-part correction term;
//! - [`hirzebruch`]: intersection theory and cohomology on the Hirzebruch
//!   surfaces `F_n`, double-cover invariants, the `d <= 32` bound, the
//!   reducible-branch-divisor enumeration, and moduli counts;
//! - [`hilbert`]: Hilbert series of weighted complete intersections and the
//!   canonical-ring formats of I-surfaces;
//! - [`census`]: the classification engine that enumerates candidates,
//!   applies the arithmetic filters and the documented geometric
//!   exclusions, and reproduces the classification and moduli tables.
//!
//! Everything is a pure function over immutable values; there is no global
//! state and no floating point.
//!
//! ```
//! use tsing::hj;
//!
//! let s = hj::expand(18, 5)?;
//! assert_eq!(s.to_string(), "[4,3,2]");
//! assert_eq!(hj::evaluate(&s)?, (18, 5));
//! # Ok::<(), tsing::Error>(())
//! ```

pub mod census;
mod error;
pub mod hilbert;
pub mod hirzebruch;
pub mod hj;
pub mod lattice;
mod solve;

pub use error::{Error, Result};

/// The exact rational number type used throughout the crate.
pub type Rational = num_rational::Rational64;
