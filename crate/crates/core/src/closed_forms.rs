//! Explicit coefficient formulas for `Q_n(x)`, registered declaratively.
//!
//! Each [`CoeffFormula`] names the pattern family it applies to, the least
//! `n` for which it is claimed, and an evaluator returning the exponent of
//! `x` it speaks about together with the predicted coefficient. Patterns are
//! compared after folding the inverse symmetry, so a formula for
//! `(k,0,0,l)` also answers `(k,l,0,0)`.

use alloc::string::ToString;
use alloc::vec::Vec;

use num_bigint::BigInt;

use crate::combinat::{binomial, catalan};
use crate::error::{Error, Result};
use crate::gf::GfKey;
use crate::oracle::brute_force_q;
use crate::pattern::PatternSpec;
use crate::poly::XPoly;

/// Which coefficient of `Q_n(x)` a formula predicts.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum FormulaKind {
    /// The leading coefficient; the exponent is also the degree.
    Highest,
    /// The coefficient just below the leading one.
    Second,
    /// A fixed low power of `x`.
    Low,
}

type Params = [u32; 4];

#[derive(Debug, Clone, Copy)]
pub struct CoeffFormula {
    pub id: &'static str,
    pub statement: &'static str,
    pub kind: FormulaKind,
    /// Empirical observation rather than a stated result.
    pub conjecture: bool,
    applies: fn(Params) -> bool,
    min_n: fn(Params) -> usize,
    /// Threshold as originally stated, when it is one lower than `min_n`.
    stated_min_n: Option<fn(Params) -> usize>,
    eval: fn(Params, usize) -> (usize, BigInt),
}

impl CoeffFormula {
    /// Whether the formula speaks about `p` (after symmetry folding).
    pub fn applies_to(&self, p: &PatternSpec) -> bool {
        normalized(p).is_some_and(self.applies)
    }

    pub fn min_n(&self, p: &PatternSpec) -> Option<usize> {
        normalized(p).filter(|&q| (self.applies)(q)).map(self.min_n)
    }

    /// The originally stated threshold; differs from [`CoeffFormula::min_n`]
    /// where the formula fails at the stated boundary.
    pub fn stated_min_n(&self, p: &PatternSpec) -> Option<usize> {
        let q = normalized(p).filter(|&q| (self.applies)(q))?;
        Some(self.stated_min_n.map_or((self.min_n)(q), |f| f(q)))
    }

    /// `(exponent, coefficient)` for `n` at or above the threshold.
    pub fn evaluate(&self, p: &PatternSpec, n: usize) -> Result<(usize, BigInt)> {
        let q = normalized(p)
            .filter(|&q| (self.applies)(q))
            .ok_or_else(|| Error::NotCovered(p.to_string()))?;
        let min_n = (self.min_n)(q);
        if n < min_n {
            return Err(Error::BelowThreshold {
                id: self.id,
                n,
                min_n,
            });
        }
        Ok((self.eval)(q, n))
    }

    /// Like [`CoeffFormula::evaluate`] but ignoring the threshold, for
    /// probing where a formula starts to hold.
    pub fn evaluate_any_n(&self, p: &PatternSpec, n: usize) -> Option<(usize, BigInt)> {
        normalized(p)
            .filter(|&q| (self.applies)(q))
            .map(|q| (self.eval)(q, n))
    }
}

fn normalized(p: &PatternSpec) -> Option<Params> {
    GfKey::for_pattern(p).ok()?.0.pattern().as_nat()
}

fn c(n: usize) -> BigInt {
    catalan(n as u64)
}

fn b(n: usize, k: u64) -> BigInt {
    binomial(n as u64, k)
}

fn u(v: u32) -> usize {
    v as usize
}

fn big(v: usize) -> BigInt {
    BigInt::from(v)
}

/// The registered formulas.
pub fn registry() -> &'static [CoeffFormula] {
    REGISTRY
}

static REGISTRY: &[CoeffFormula] = &[
    CoeffFormula {
        id: "q1010-x0",
        statement: "Q^(1,0,1,0)_n(0) = 2^(n-1)",
        kind: FormulaKind::Low,
        conjecture: false,
        applies: |p| p == [1, 0, 1, 0],
        stated_min_n: None,
        min_n: |_| 1,
        eval: |_, n| (0, BigInt::from(1) << (n - 1)),
    },
    CoeffFormula {
        id: "q1010-x1",
        statement: "Q^(1,0,1,0)_n(x)|x = (n-3) 2^(n-2) + 1",
        kind: FormulaKind::Low,
        conjecture: false,
        applies: |p| p == [1, 0, 1, 0],
        stated_min_n: None,
        min_n: |_| 3,
        eval: |_, n| (1, big(n - 3) * (BigInt::from(1) << (n - 2)) + 1),
    },
    CoeffFormula {
        id: "qk0l0-top",
        statement: "Q^(k,0,l,0)_n(x) has top term C_l x^(n-k-l)",
        kind: FormulaKind::Highest,
        conjecture: false,
        applies: |[k, b, l, d]| k >= 1 && b == 0 && l >= 1 && d == 0,
        stated_min_n: None,
        min_n: |[k, _, l, _]| u(k + l) + 1,
        eval: |[k, _, l, _], n| (n - u(k + l), c(u(l))),
    },
    CoeffFormula {
        id: "qk010-second",
        statement: "Q^(k,0,1,0)_n(x)|x^(n-2-k) = 2k + binom(n-k, 2)",
        kind: FormulaKind::Second,
        conjecture: false,
        applies: |[k, b, l, d]| k >= 1 && b == 0 && l == 1 && d == 0,
        stated_min_n: None,
        min_n: |[k, ..]| u(k) + 3,
        eval: |[k, ..], n| (n - 2 - u(k), big(2 * u(k)) + b(n - u(k), 2)),
    },
    CoeffFormula {
        id: "qk0m0-second",
        statement: "Q^(k,0,m,0)_n(x)|x^(n-m-k-1) = C_(m+1) + (2k+1) C_m + 2 C_m (n-k-m-2), m >= 2",
        kind: FormulaKind::Second,
        conjecture: false,
        applies: |[k, b, m, d]| k >= 1 && b == 0 && m >= 2 && d == 0,
        stated_min_n: None,
        min_n: |[k, _, m, _]| u(k + m) + 2,
        eval: |[k, _, m, _], n| {
            let (k, m) = (u(k), u(m));
            let cm = c(m);
            (
                n - m - k - 1,
                c(m + 1) + big(2 * k + 1) * &cm + 2 * cm * big(n - k - m - 2),
            )
        },
    },
    CoeffFormula {
        id: "qk001-top",
        statement: "Q^(k,0,0,1)_n(x) has top term (k+1) C_(n-k-1) x^(n-k-1)",
        kind: FormulaKind::Highest,
        conjecture: false,
        applies: |[k, b, c, l]| k >= 1 && b == 0 && c == 0 && l == 1,
        stated_min_n: Some(|[k, ..]| u(k) + 1),
        min_n: |[k, ..]| u(k) + 2,
        eval: |[k, ..], n| (n - u(k) - 1, big(u(k) + 1) * c(n - u(k) - 1)),
    },
    CoeffFormula {
        id: "q1002-top",
        statement: "Q^(1,0,0,2)_n(x) has top term 5 C_(n-3) x^(n-3)",
        kind: FormulaKind::Highest,
        conjecture: false,
        applies: |p| p == [1, 0, 0, 2],
        stated_min_n: None,
        min_n: |_| 3,
        eval: |_, n| (n - 3, 5 * c(n - 3)),
    },
    CoeffFormula {
        id: "q2002-top",
        statement: "Q^(2,0,0,2)_n(x) has top term 9 C_(n-4) x^(n-4)",
        kind: FormulaKind::Highest,
        conjecture: false,
        applies: |p| p == [2, 0, 0, 2],
        stated_min_n: None,
        min_n: |_| 5,
        eval: |_, n| (n - 4, 9 * c(n - 4)),
    },
    CoeffFormula {
        id: "q3002-top",
        statement: "Q^(3,0,0,2)_n(x) has top term 14 C_(n-5) x^(n-5)",
        kind: FormulaKind::Highest,
        conjecture: false,
        applies: |p| p == [3, 0, 0, 2],
        stated_min_n: None,
        min_n: |_| 6,
        eval: |_, n| (n - 5, 14 * c(n - 5)),
    },
    CoeffFormula {
        id: "qk002-top-conjecture",
        statement: "Q^(k,0,0,2)_n(x) has top term (binom(k+3,2) - 1) C_(n-k-2) x^(n-k-2)",
        kind: FormulaKind::Highest,
        conjecture: true,
        applies: |[k, b, c, l]| k >= 1 && b == 0 && c == 0 && l == 2,
        stated_min_n: None,
        min_n: |[k, ..]| u(k) + 3,
        eval: |[k, ..], n| (n - u(k) - 2, (b(u(k) + 3, 2) - 1) * c(n - u(k) - 2)),
    },
    CoeffFormula {
        id: "q1001-x0",
        statement: "Q^(1,0,0,1)_n(0) = n",
        kind: FormulaKind::Low,
        conjecture: false,
        applies: |p| p == [1, 0, 0, 1],
        stated_min_n: None,
        min_n: |_| 1,
        eval: |_, n| (0, big(n)),
    },
    CoeffFormula {
        id: "q1001-x1",
        statement: "Q^(1,0,0,1)_n(x)|x = (n-1)(n-2)",
        kind: FormulaKind::Low,
        conjecture: false,
        applies: |p| p == [1, 0, 0, 1],
        stated_min_n: None,
        min_n: |_| 3,
        eval: |_, n| (1, big((n - 1) * (n - 2))),
    },
    CoeffFormula {
        id: "q1001-second",
        statement: "Q^(1,0,0,1)_n(x)|x^(n-3) = 3 C_(n-2)",
        kind: FormulaKind::Second,
        conjecture: false,
        applies: |p| p == [1, 0, 0, 1],
        stated_min_n: None,
        min_n: |_| 3,
        eval: |_, n| (n - 3, 3 * c(n - 2)),
    },
    CoeffFormula {
        id: "q01l0-top",
        statement: "Q^(0,1,l,0)_n(x) has top term C_l x^(n-l-1)",
        kind: FormulaKind::Highest,
        conjecture: false,
        applies: |[a, k, l, d]| a == 0 && k == 1 && l >= 1 && d == 0,
        stated_min_n: Some(|[_, _, l, _]| u(l) + 1),
        min_n: |[_, _, l, _]| u(l) + 2,
        eval: |[_, _, l, _], n| (n - u(l) - 1, c(u(l))),
    },
    CoeffFormula {
        id: "q0110-second",
        statement: "Q^(0,1,1,0)_n(x)|x^(n-3) = 2 + binom(n-1, 2)",
        kind: FormulaKind::Second,
        conjecture: false,
        applies: |p| p == [0, 1, 1, 0],
        stated_min_n: None,
        min_n: |_| 4,
        eval: |_, n| (n - 3, 2 + b(n - 1, 2)),
    },
    CoeffFormula {
        id: "q01l0-second",
        statement: "Q^(0,1,l,0)_n(x)|x^(n-l-2) = C_(l+1) + C_l + 2 C_l (n-2-l), l >= 2",
        kind: FormulaKind::Second,
        conjecture: false,
        applies: |[a, k, l, d]| a == 0 && k == 1 && l >= 2 && d == 0,
        stated_min_n: None,
        min_n: |[_, _, l, _]| u(l) + 3,
        eval: |[_, _, l, _], n| {
            let l = u(l);
            (n - l - 2, c(l + 1) + c(l) + 2 * c(l) * big(n - 2 - l))
        },
    },
    CoeffFormula {
        id: "q02l0-top",
        statement: "Q^(0,2,l,0)_n(x) has top term 2 C_l x^(n-2-l)",
        kind: FormulaKind::Highest,
        conjecture: false,
        applies: |[a, k, l, d]| a == 0 && k == 2 && l >= 1 && d == 0,
        stated_min_n: None,
        min_n: |[_, _, l, _]| u(l) + 3,
        eval: |[_, _, l, _], n| (n - 2 - u(l), 2 * c(u(l))),
    },
    CoeffFormula {
        id: "q0210-second",
        statement: "Q^(0,2,1,0)_n(x)|x^(n-4) = 6 + 2 binom(n-2, 2)",
        kind: FormulaKind::Second,
        conjecture: false,
        applies: |p| p == [0, 2, 1, 0],
        stated_min_n: None,
        min_n: |_| 5,
        eval: |_, n| (n - 4, 6 + 2 * b(n - 2, 2)),
    },
    CoeffFormula {
        id: "q02l0-second",
        statement: "Q^(0,2,l,0)_n(x)|x^(n-3-l) = 2 C_(l+1) + 8 C_l + 4 C_l (n-4-l), l >= 2",
        kind: FormulaKind::Second,
        conjecture: false,
        applies: |[a, k, l, d]| a == 0 && k == 2 && l >= 2 && d == 0,
        stated_min_n: None,
        min_n: |[_, _, l, _]| u(l) + 4,
        eval: |[_, _, l, _], n| {
            let l = u(l);
            (
                n - 3 - l,
                2 * c(l + 1) + 8 * c(l) + 4 * c(l) * big(n - 4 - l),
            )
        },
    },
    CoeffFormula {
        id: "q0k0l-top",
        statement: "Q^(0,k,0,l)_n(x) has top term C_k C_l C_(n-k-l) x^(n-k-l)",
        kind: FormulaKind::Highest,
        conjecture: false,
        applies: |[a, k, c, l]| a == 0 && k >= 1 && c == 0 && l >= 1,
        stated_min_n: None,
        min_n: |[_, k, _, l]| u(k + l) + 1,
        eval: |[_, k, _, l], n| {
            let (k, l) = (u(k), u(l));
            (n - k - l, c(k) * c(l) * c(n - k - l))
        },
    },
    CoeffFormula {
        id: "q0101-second",
        statement: "Q^(0,1,0,1)_n(x)|x^(n-3) = 2 C_(n-2) + C_(n-3)",
        kind: FormulaKind::Second,
        conjecture: false,
        applies: |p| p == [0, 1, 0, 1],
        stated_min_n: None,
        min_n: |_| 4,
        eval: |_, n| (n - 3, 2 * c(n - 2) + c(n - 3)),
    },
    CoeffFormula {
        id: "q0101-x0",
        statement: "Q^(0,1,0,1)_n(0) = 1 + binom(n, 2)",
        kind: FormulaKind::Low,
        conjecture: false,
        applies: |p| p == [0, 1, 0, 1],
        stated_min_n: None,
        min_n: |_| 2,
        eval: |_, n| (0, 1 + b(n, 2)),
    },
];

pub fn formula(id: &str) -> Option<&'static CoeffFormula> {
    REGISTRY.iter().find(|f| f.id == id)
}

fn lookup(p: &PatternSpec, n: usize, kind: FormulaKind) -> Result<(usize, BigInt)> {
    let mut below = None;
    for f in REGISTRY
        .iter()
        .filter(|f| f.kind == kind && !f.conjecture && f.applies_to(p))
    {
        match f.evaluate(p, n) {
            Ok(v) => return Ok(v),
            Err(e @ Error::BelowThreshold { .. }) => below = Some(e),
            Err(e) => return Err(e),
        }
    }
    Err(below.unwrap_or_else(|| Error::NotCovered(p.to_string())))
}

/// Predicted top exponent and coefficient.
pub fn highest_coeff(p: &PatternSpec, n: usize) -> Result<(usize, BigInt)> {
    lookup(p, n, FormulaKind::Highest)
}

/// Predicted second-highest exponent and coefficient.
pub fn second_coeff(p: &PatternSpec, n: usize) -> Result<(usize, BigInt)> {
    lookup(p, n, FormulaKind::Second)
}

/// Predicted coefficient of `x^r` for the low-order count formulas.
pub fn special_counts(p: &PatternSpec, n: usize, r: usize) -> Result<BigInt> {
    for f in REGISTRY
        .iter()
        .filter(|f| f.kind == FormulaKind::Low && f.applies_to(p))
    {
        let min_n = f.min_n(p).expect("formula applies");
        let (exp, _) = f.evaluate(p, min_n)?;
        if exp != r {
            continue;
        }
        return f.evaluate(p, n).map(|(_, v)| v);
    }
    Err(Error::NotCovered(p.to_string()))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Status {
    Match,
    Mismatch,
    BelowThreshold,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Match => "match",
            Status::Mismatch => "mismatch",
            Status::BelowThreshold => "below-threshold",
        }
    }
}

/// One formula evaluated at one `(pattern, n)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FormulaCheck {
    pub formula_id: &'static str,
    pub pattern: PatternSpec,
    pub n: usize,
    pub exponent: Option<usize>,
    pub predicted: Option<BigInt>,
    pub observed: Option<BigInt>,
    pub status: Status,
}

/// Compare one formula against an observed row. For top-term formulas the
/// degree of the row must equal the predicted exponent as well.
pub fn check_formula(f: &CoeffFormula, p: &PatternSpec, n: usize, row: &XPoly) -> FormulaCheck {
    let mut out = FormulaCheck {
        formula_id: f.id,
        pattern: *p,
        n,
        exponent: None,
        predicted: None,
        observed: None,
        status: Status::BelowThreshold,
    };
    let Ok((exp, predicted)) = f.evaluate(p, n) else {
        return out;
    };
    let observed = row.coeff(exp);
    let degree_ok = f.kind != FormulaKind::Highest || row.degree() == Some(exp);
    out.status = if degree_ok && observed == predicted {
        Status::Match
    } else {
        Status::Mismatch
    };
    out.exponent = Some(exp);
    out.predicted = Some(predicted);
    out.observed = Some(observed);
    out
}

/// Every registered pattern with coordinates `<= params_max`, one per
/// symmetry class, in ascending order.
pub fn instances(f: &CoeffFormula, params_max: u32) -> Vec<PatternSpec> {
    let mut out = Vec::new();
    for a in 0..=params_max {
        for b in 0..=params_max {
            for c in 0..=params_max {
                for d in 0..=params_max {
                    let p = [a, b, c, d];
                    if normalized(&PatternSpec::from(p)) == Some(p) && (f.applies)(p) {
                        out.push(PatternSpec::from(p));
                    }
                }
            }
        }
    }
    out
}

/// Check every registered formula on every instance with parameters up to
/// `params_max` and every `n <= n_max`, reading rows from `rows`.
pub fn verify_with<F>(n_max: usize, params_max: u32, mut rows: F) -> Result<Vec<FormulaCheck>>
where
    F: FnMut(&PatternSpec, usize) -> Result<XPoly>,
{
    let mut out = Vec::new();
    for f in REGISTRY {
        for p in instances(f, params_max) {
            for n in 0..=n_max {
                let row = rows(&p, n)?;
                out.push(check_formula(f, &p, n, &row));
            }
        }
    }
    Ok(out)
}

/// [`verify_with`] against the enumeration oracle.
pub fn verify_against_oracle(
    n_max: usize,
    params_max: u32,
    cap: usize,
) -> Result<Vec<FormulaCheck>> {
    verify_with(n_max, params_max, |p, n| brute_force_q(n, p, cap))
}
