//! Rows `Q_n(x)` from recursions over `n` by the position `i` of `n`.
//!
//! Entries left of `n` exceed every entry right of it, so a point left of
//! `n` sees `n` in quadrant I and the whole right block in quadrant IV, and
//! a point right of `n` sees `n` and the left block in quadrant II. Each row
//! is therefore a sum of products of shorter rows.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::string::ToString;

use crate::combinat::catalan;
use crate::error::Result;
use crate::gf::{GfEngine, GfKey, Shape};
use crate::oracle::brute_force_q;
use crate::pattern::PatternSpec;
use crate::poly::XPoly;
use crate::ring::Coeff;

/// Memoizing evaluator of the row recursions.
#[derive(Debug, Clone, Default)]
pub struct RowEngine {
    memo: BTreeMap<(GfKey, usize), XPoly>,
}

fn cat(n: usize) -> XPoly {
    XPoly::constant(catalan(n as u64))
}

fn pos(v: i64) -> u32 {
    v.max(0) as u32
}

impl RowEngine {
    pub fn new() -> Self {
        RowEngine::default()
    }

    /// `Q_n(x)` for a pattern with at most two nonzero coordinates.
    pub fn row(&mut self, p: &PatternSpec, n: usize) -> Result<XPoly> {
        let key = GfKey::for_pattern(p)?;
        Ok(self.shape_row(key.0, n))
    }

    fn q(&mut self, a: u32, b: u32, c: u32, d: u32, n: usize) -> XPoly {
        let shape =
            Shape::classify(&PatternSpec::nat(a, b, c, d)).expect("two nonzero coordinates");
        self.shape_row(shape, n)
    }

    fn shape_row(&mut self, shape: Shape, n: usize) -> XPoly {
        let key = (GfKey(shape.normalize()), n);
        if let Some(r) = self.memo.get(&key) {
            return r.clone();
        }
        let r = if n == 0 {
            XPoly::constant(1)
        } else {
            self.compute(key.0 .0, n)
        };
        self.memo.insert(key, r.clone());
        r
    }

    fn compute(&mut self, shape: Shape, n: usize) -> XPoly {
        match shape {
            Shape::Zero => XPoly::monomial(catalan(n as u64), n),
            Shape::K000(k) => self.k000(k, n),
            Shape::ZeroK00(k) => self.zk00(k, n),
            Shape::ZeroZeroK0(k) => self.zzk0(k, n),
            Shape::K0L0(k, l) => self.k0l0(k, l, n),
            Shape::K00L(k, l) => self.k00l(k, l, n),
            Shape::ZeroKL0(k, l) => self.zkl0(k, l, n),
            Shape::ZeroK0L(k, l) => self.zk0l(k, l, n),
            Shape::ZeroZeroZeroK(_) | Shape::KL00(..) | Shape::ZeroZeroLK(..) => {
                unreachable!("shape is normalized before compute")
            }
        }
    }

    /// `sum_i Q^{(k-1,0,0,0)}_{i-1} Q^{(k,0,0,0)}_{n-i}`.
    fn k000(&mut self, k: u32, n: usize) -> XPoly {
        let mut acc = XPoly::zero();
        for i in 1..=n {
            let term = self
                .q(k - 1, 0, 0, 0, i - 1)
                .mul(&self.q(k, 0, 0, 0, n - i));
            acc.add_assign(&term);
        }
        acc
    }

    /// `sum_i Q^{(0,k,0,0)}_{i-1} Q^{(0,(k-i)^+,0,0)}_{n-i}`.
    fn zk00(&mut self, k: u32, n: usize) -> XPoly {
        let mut acc = XPoly::zero();
        for i in 1..=n {
            let right = self.q(0, pos(k as i64 - i as i64), 0, 0, n - i);
            acc.add_assign(&self.q(0, k, 0, 0, i - 1).mul(&right));
        }
        acc
    }

    /// `sum_i x^{[i-1 >= k]} Q^{(0,0,k,0)}_{i-1} Q^{(0,0,k,0)}_{n-i}`.
    fn zzk0(&mut self, k: u32, n: usize) -> XPoly {
        let mut acc = XPoly::zero();
        for i in 1..=n {
            let term = self.q(0, 0, k, 0, i - 1).mul(&self.q(0, 0, k, 0, n - i));
            acc.add_assign(&if i > k as usize { term.shift(1) } else { term });
        }
        acc
    }

    /// `sum_{i=1}^n Q^{(k-1,0,l,0)}_{i-1} Q^{(k,0,l,0)}_{n-i}`.
    fn k0l0(&mut self, k: u32, l: u32, n: usize) -> XPoly {
        let mut acc = XPoly::zero();
        for i in 1..=n {
            let term = self
                .q(k - 1, 0, l, 0, i - 1)
                .mul(&self.q(k, 0, l, 0, n - i));
            acc.add_assign(&term);
        }
        acc
    }

    /// `C_n` for `n <= l`, otherwise
    /// `sum_{i=1}^{n-l} Q^{(k-1,0,0,0)}_{i-1} Q^{(k,0,0,l)}_{n-i} + sum_{j=0}^{l-1} C_j Q^{(k-1,0,0,l-j)}_{n-j-1}`.
    fn k00l(&mut self, k: u32, l: u32, n: usize) -> XPoly {
        let l_us = l as usize;
        if n <= l_us {
            return cat(n);
        }
        let mut acc = XPoly::zero();
        for i in 1..=n - l_us {
            let term = self
                .q(k - 1, 0, 0, 0, i - 1)
                .mul(&self.q(k, 0, 0, l, n - i));
            acc.add_assign(&term);
        }
        for j in 0..l_us {
            let term = cat(j).mul(&self.q(k - 1, 0, 0, l - j as u32, n - j - 1));
            acc.add_assign(&term);
        }
        acc
    }

    /// `C_n` for `n < k`, otherwise
    /// `sum_{i=k}^n Q^{(0,k,l,0)}_{i-1} Q^{(0,0,l,0)}_{n-i} + sum_{i=1}^{k-1} C_{i-1} Q^{(0,k-i,l,0)}_{n-i}`.
    fn zkl0(&mut self, k: u32, l: u32, n: usize) -> XPoly {
        let k_us = k as usize;
        if n < k_us {
            return cat(n);
        }
        let mut acc = XPoly::zero();
        for i in k_us..=n {
            let term = self.q(0, k, l, 0, i - 1).mul(&self.q(0, 0, l, 0, n - i));
            acc.add_assign(&term);
        }
        for i in 1..k_us {
            let term = cat(i - 1).mul(&self.q(0, k - i as u32, l, 0, n - i));
            acc.add_assign(&term);
        }
        acc
    }

    /// `C_n` for `n <= k + l`, otherwise
    /// `sum_{i=1}^{k-1} C_{i-1} Q^{(0,k-i,0,l)}_{n-i} + sum_{i=k}^{n-l} Q^{(0,k,0,0)}_{i-1} Q^{(0,0,0,l)}_{n-i}
    ///  + sum_{j=0}^{l-1} C_j Q^{(0,k,0,l-j)}_{n-j-1}`.
    fn zk0l(&mut self, k: u32, l: u32, n: usize) -> XPoly {
        let (k_us, l_us) = (k as usize, l as usize);
        if n <= k_us + l_us {
            return cat(n);
        }
        let mut acc = XPoly::zero();
        for i in 1..k_us {
            let term = cat(i - 1).mul(&self.q(0, k - i as u32, 0, l, n - i));
            acc.add_assign(&term);
        }
        for i in k_us..=n - l_us {
            let term = self.q(0, k, 0, 0, i - 1).mul(&self.q(0, 0, 0, l, n - i));
            acc.add_assign(&term);
        }
        for j in 0..l_us {
            let term = cat(j).mul(&self.q(0, k, 0, l - j as u32, n - j - 1));
            acc.add_assign(&term);
        }
        acc
    }
}

/// The route that produced a row.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Route {
    Oracle,
    Series,
    Recursion,
}

impl Route {
    pub fn as_str(self) -> &'static str {
        match self {
            Route::Oracle => "oracle",
            Route::Series => "series",
            Route::Recursion => "recursion",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RouteRow {
    pub route: Route,
    pub row: XPoly,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mismatch {
    pub n: usize,
    pub route_a: RouteRow,
    pub route_b: RouteRow,
}

/// Three-way comparison of recursion, series and oracle rows.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RecursionReport {
    pub pattern: String,
    pub n_max: usize,
    pub agree: bool,
    pub first_mismatch: Option<Mismatch>,
}

/// Compare recursion rows against the series route and the oracle for
/// `n <= n_max`; the oracle is consulted only up to `cap`.
pub fn recursion_check(p: &PatternSpec, n_max: usize, cap: usize) -> Result<RecursionReport> {
    GfKey::for_pattern(p)?;
    let mut rows = RowEngine::new();
    let mut gf = GfEngine::new(n_max);
    let series = gf.dispatch(p)?;
    let mut first_mismatch = None;
    'rows: for n in 0..=n_max {
        let rec = RouteRow {
            route: Route::Recursion,
            row: rows.row(p, n)?,
        };
        let mut others = alloc::vec![RouteRow {
            route: Route::Series,
            row: series.coeff(n)?.clone()
        }];
        if n <= cap {
            others.push(RouteRow {
                route: Route::Oracle,
                row: brute_force_q(n, p, cap)?,
            });
        }
        for other in others {
            if other.row != rec.row {
                first_mismatch = Some(Mismatch {
                    n,
                    route_a: rec,
                    route_b: other,
                });
                break 'rows;
            }
        }
    }
    Ok(RecursionReport {
        pattern: p.to_string(),
        n_max,
        agree: first_mismatch.is_none(),
        first_mismatch,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumerate::DEFAULT_ENUMERATION_CAP as CAP;

    #[test]
    fn three_way_agreement() {
        for s in [
            "1,0,1,0", "2,0,0,2", "0,2,0,2", "0,2,1,0", "0,3,2,0", "3,0,0,1", "1,2,0,0", "0,0,2,3",
            "0,1,0,3",
        ] {
            let report = recursion_check(&s.parse().unwrap(), 8, CAP).unwrap();
            assert!(report.agree, "{s}: {:?}", report.first_mismatch);
        }
    }

    #[test]
    fn leaves_agree_with_series() {
        let mut rows = RowEngine::new();
        let mut gf = GfEngine::new(12);
        for s in ["0,0,0,0", "3,0,0,0", "0,2,0,0", "0,0,0,3", "0,0,2,0"] {
            let p: PatternSpec = s.parse().unwrap();
            for n in 0..=12 {
                assert_eq!(
                    rows.row(&p, n).unwrap(),
                    gf.row(&p, n).unwrap(),
                    "{s} n = {n}"
                );
            }
        }
    }

    #[test]
    fn boundary_rows_are_catalan() {
        let mut rows = RowEngine::new();
        let p = PatternSpec::nat(2, 0, 0, 2);
        for n in 0..=2 {
            assert_eq!(rows.row(&p, n).unwrap(), cat(n));
        }
    }

    #[test]
    fn unsupported_shape_is_rejected() {
        let report = recursion_check(&PatternSpec::nat(1, 1, 1, 0), 4, CAP);
        assert!(report.is_err());
    }
}
