//! Ground truth by enumeration of `S_n(132)`.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use num_bigint::BigInt;

use crate::enumerate::{avoiders, avoiders_with_max_at, Avoiders};
use crate::error::Result;
use crate::pattern::PatternSpec;
use crate::perm::Permutation;
use crate::poly::XPoly;

fn accumulate(perms: Avoiders, patterns: &[PatternSpec]) -> Vec<XPoly> {
    let mut out = alloc::vec![XPoly::zero(); patterns.len()];
    for sigma in perms {
        tally(&sigma, patterns, &mut out);
    }
    out
}

fn tally(sigma: &Permutation, patterns: &[PatternSpec], out: &mut [XPoly]) {
    let profile = sigma.quadrant_profile();
    for (p, poly) in patterns.iter().zip(out.iter_mut()) {
        let r = profile.iter().filter(|q| q.satisfies(p)).count();
        poly.bump(r);
    }
}

/// `Q_n(x) = sum_{sigma in S_n(132)} x^{mmp^p(sigma)}`.
pub fn brute_force_q(n: usize, p: &PatternSpec, cap: usize) -> Result<XPoly> {
    Ok(accumulate(avoiders(n, cap)?, core::slice::from_ref(p))
        .pop()
        .expect("one pattern"))
}

/// `Q_n(x)` for several patterns from a single pass over `S_n(132)`.
pub fn brute_force_batch(n: usize, patterns: &[PatternSpec], cap: usize) -> Result<Vec<XPoly>> {
    Ok(accumulate(avoiders(n, cap)?, patterns))
}

/// The contribution of the avoiders with `n` at position `i`; summing over
/// `i = 1..=n` gives [`brute_force_batch`].
pub fn brute_force_partition(
    n: usize,
    i: usize,
    patterns: &[PatternSpec],
    cap: usize,
) -> Result<Vec<XPoly>> {
    Ok(accumulate(avoiders_with_max_at(n, i, cap)?, patterns))
}

/// `Q_n(x)|_{x^r}`.
pub fn brute_force_coeff(n: usize, p: &PatternSpec, r: usize, cap: usize) -> Result<BigInt> {
    Ok(brute_force_q(n, p, cap)?.coeff(r))
}

/// Rows `Q_0(x), ..., Q_{n_max}(x)` for one pattern.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistTable {
    pub pattern: PatternSpec,
    pub rows: BTreeMap<usize, XPoly>,
}

impl DistTable {
    pub fn new(pattern: PatternSpec) -> Self {
        DistTable {
            pattern,
            rows: BTreeMap::new(),
        }
    }

    pub fn row(&self, n: usize) -> Option<&XPoly> {
        self.rows.get(&n)
    }

    pub fn max_n(&self) -> Option<usize> {
        self.rows.keys().next_back().copied()
    }
}

pub fn build_table(p: &PatternSpec, n_max: usize, cap: usize) -> Result<DistTable> {
    let mut table = DistTable::new(*p);
    for n in 0..=n_max {
        table.rows.insert(n, brute_force_q(n, p, cap)?);
    }
    Ok(table)
}
