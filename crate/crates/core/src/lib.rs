//! Distribution polynomials of quadrant marked mesh patterns over
//! 132-avoiding permutations.
//!
//! For a pattern `MMP(a,b,c,d)` and a length `n` the crate computes
//!
//! ```text
//! Q_n(x) = sum over sigma in S_n(132) of x^(number of matches in sigma)
//! ```
//!
//! by two independent routes:
//!
//! - [`oracle`]: brute-force enumeration of `S_n(132)`;
//! - [`gf`] / [`recursion`]: the generating-function theorems and the
//!   position-of-`n` recursions, evaluated as exact truncated power series
//!   in `t` with polynomial-in-`x` coefficients.
//!
//! [`closed_forms`] and [`catalog`] carry the explicit coefficient formulas
//! and the rational `x = 0` generating functions these routes are checked
//! against.
//!
//! The crate is `no_std` and only needs `alloc`; file formats, caching,
//! OEIS access and the command line live in the `mmp132` companion crate.

#![no_std]

extern crate alloc;
#[cfg(any(feature = "std", test))]
extern crate std;

pub mod catalog;
pub mod closed_forms;
pub mod combinat;
pub mod enumerate;
pub mod error;
pub mod gf;
pub mod oracle;
pub mod pattern;
pub mod perm;
pub mod poly;
pub mod rational;
pub mod recursion;
pub mod ring;
pub mod series;

pub use combinat::{binomial, catalan};
pub use enumerate::{avoiders, Avoiders, DEFAULT_ENUMERATION_CAP};
pub use error::{Error, Result};
pub use gf::{GfEngine, GfKey, Shape};
pub use oracle::{brute_force_coeff, brute_force_q, build_table, DistTable};
pub use pattern::{Coord, PatternSpec};
pub use perm::{Permutation, QuadrantCounts};
pub use poly::XPoly;
pub use rational::{IntPoly, RationalGF};
pub use ring::Coeff;
pub use series::{IntSeries, TSeries, XSeries};

/// Truncation order used by the verification suites unless overridden.
pub const DEFAULT_ORDER: usize = 20;
