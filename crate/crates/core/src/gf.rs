//! Generating functions `Q(t, x)` for patterns with at most two nonzero
//! coordinates, assembled as truncated series.
//!
//! Every shape reduces, through the position of the maximum, to series for
//! shapes with smaller parameters; the leaves are `C(tx)` and the quadratic
//! for `(0,0,k,0)`. Results are memoized per [`GfKey`] after folding the
//! inverse symmetry `(a,b,c,d) -> (a,d,c,b)`.

use alloc::collections::BTreeMap;
use alloc::string::ToString;

use num_bigint::BigInt;

use crate::combinat::catalan;
use crate::error::{Error, Result};
use crate::pattern::PatternSpec;
use crate::poly::XPoly;
use crate::series::{catalan_of_tx, catalan_partial_sum, XSeries};

/// Pattern shapes by which coordinates are nonzero; `K` and `L` are the
/// nonzero values in reading order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Shape {
    Zero,
    K000(u32),
    ZeroK00(u32),
    ZeroZeroK0(u32),
    ZeroZeroZeroK(u32),
    K0L0(u32, u32),
    K00L(u32, u32),
    KL00(u32, u32),
    ZeroKL0(u32, u32),
    ZeroZeroLK(u32, u32),
    ZeroK0L(u32, u32),
}

impl Shape {
    /// Classify a pattern; `None` for empty coordinates or three or more
    /// nonzero coordinates.
    pub fn classify(p: &PatternSpec) -> Option<Shape> {
        let [a, b, c, d] = p.as_nat()?;
        Some(match (a, b, c, d) {
            (0, 0, 0, 0) => Shape::Zero,
            (k, 0, 0, 0) => Shape::K000(k),
            (0, k, 0, 0) => Shape::ZeroK00(k),
            (0, 0, k, 0) => Shape::ZeroZeroK0(k),
            (0, 0, 0, k) => Shape::ZeroZeroZeroK(k),
            (k, 0, l, 0) => Shape::K0L0(k, l),
            (k, 0, 0, l) => Shape::K00L(k, l),
            (k, l, 0, 0) => Shape::KL00(k, l),
            (0, k, l, 0) => Shape::ZeroKL0(k, l),
            (0, 0, l, k) => Shape::ZeroZeroLK(k, l),
            (0, k, 0, l) => Shape::ZeroK0L(k, l),
            _ => return None,
        })
    }

    /// Fold the inverse symmetry: `(0,0,0,k) -> (0,k,0,0)`,
    /// `(k,l,0,0) -> (k,0,0,l)` and `(0,0,l,k) -> (0,k,l,0)`.
    pub fn normalize(self) -> Shape {
        match self {
            Shape::ZeroZeroZeroK(k) => Shape::ZeroK00(k),
            Shape::KL00(k, l) => Shape::K00L(k, l),
            Shape::ZeroZeroLK(k, l) => Shape::ZeroKL0(k, l),
            s => s,
        }
    }

    pub fn pattern(self) -> PatternSpec {
        match self {
            Shape::Zero => PatternSpec::nat(0, 0, 0, 0),
            Shape::K000(k) => PatternSpec::nat(k, 0, 0, 0),
            Shape::ZeroK00(k) => PatternSpec::nat(0, k, 0, 0),
            Shape::ZeroZeroK0(k) => PatternSpec::nat(0, 0, k, 0),
            Shape::ZeroZeroZeroK(k) => PatternSpec::nat(0, 0, 0, k),
            Shape::K0L0(k, l) => PatternSpec::nat(k, 0, l, 0),
            Shape::K00L(k, l) => PatternSpec::nat(k, 0, 0, l),
            Shape::KL00(k, l) => PatternSpec::nat(k, l, 0, 0),
            Shape::ZeroKL0(k, l) => PatternSpec::nat(0, k, l, 0),
            Shape::ZeroZeroLK(k, l) => PatternSpec::nat(0, 0, l, k),
            Shape::ZeroK0L(k, l) => PatternSpec::nat(0, k, 0, l),
        }
    }
}

/// Memo key: a normalized shape.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GfKey(pub Shape);

impl GfKey {
    pub fn for_pattern(p: &PatternSpec) -> Result<GfKey> {
        if p.has_empty() {
            return Err(Error::UnsupportedPattern {
                pattern: p.to_string(),
                reason: "patterns with an empty coordinate are only available from the oracle",
            });
        }
        if p.nonzero_count() > 2 {
            return Err(Error::UnsupportedPattern {
                pattern: p.to_string(),
                reason: "generating functions cover at most two nonzero coordinates",
            });
        }
        let shape = Shape::classify(p).expect("at most two nonzero natural coordinates");
        Ok(GfKey(shape.normalize()))
    }
}

/// Memoizing evaluator of the generating functions to a fixed order.
#[derive(Debug, Clone)]
pub struct GfEngine {
    order: usize,
    memo: BTreeMap<GfKey, XSeries>,
}

impl GfEngine {
    pub fn new(order: usize) -> Self {
        GfEngine {
            order,
            memo: BTreeMap::new(),
        }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// `Q(t, x)` for any supported pattern.
    pub fn dispatch(&mut self, p: &PatternSpec) -> Result<XSeries> {
        let key = GfKey::for_pattern(p)?;
        Ok(self.series(key.0))
    }

    /// `Q_n(x)` through the series route.
    pub fn row(&mut self, p: &PatternSpec, n: usize) -> Result<XPoly> {
        Ok(self.dispatch(p)?.coeff(n)?.clone())
    }

    /// The memoized series for `p`, without computing anything.
    pub fn cached(&self, p: &PatternSpec) -> Option<&XSeries> {
        self.memo.get(&GfKey::for_pattern(p).ok()?)
    }

    pub fn memo_len(&self) -> usize {
        self.memo.len()
    }

    fn series(&mut self, shape: Shape) -> XSeries {
        let key = GfKey(shape.normalize());
        if let Some(s) = self.memo.get(&key) {
            return s.clone();
        }
        let s = self.compute(key.0);
        self.memo.insert(key, s.clone());
        s
    }

    fn q(&mut self, a: u32, b: u32, c: u32, d: u32) -> XSeries {
        let p = PatternSpec::nat(a, b, c, d);
        self.series(Shape::classify(&p).expect("sub-pattern with two nonzero coordinates"))
    }

    fn compute(&mut self, shape: Shape) -> XSeries {
        match shape {
            Shape::Zero => self.q0000(),
            Shape::K000(k) => self.qk000(k),
            Shape::ZeroK00(k) => self.q0k00(k),
            Shape::ZeroZeroK0(k) => self.q00k0(k),
            Shape::K0L0(k, l) => self.qk0l0(k, l),
            Shape::K00L(k, l) => self.qk00l(k, l),
            Shape::ZeroKL0(k, l) => self.q0kl0(k, l),
            Shape::ZeroK0L(k, l) => self.q0k0l(k, l),
            Shape::ZeroZeroZeroK(_) | Shape::KL00(..) | Shape::ZeroZeroLK(..) => {
                unreachable!("shape is normalized before compute")
            }
        }
    }

    fn t(&self) -> XSeries {
        XSeries::t(self.order)
    }

    fn one(&self) -> XSeries {
        XSeries::one(self.order)
    }

    fn cat_sum(&self, upto_exclusive: usize) -> XSeries {
        catalan_partial_sum(upto_exclusive, self.order)
    }

    fn cat_monomial(&self, j: usize) -> XSeries {
        XSeries::monomial(XPoly::constant(catalan(j as u64)), j, self.order)
    }

    /// `1 / (1 - t F)`.
    fn one_over_one_minus_t(&self, f: &XSeries) -> XSeries {
        self.one()
            .sub(&f.mul_t_pow(1))
            .reciprocal()
            .expect("constant term 1")
    }

    /// `Q^{(0,0,0,0)} = C(tx)`.
    pub fn q0000(&mut self) -> XSeries {
        catalan_of_tx(self.order)
    }

    /// `Q^{(k,0,0,0)} = 1 / (1 - t Q^{(k-1,0,0,0)})`.
    pub fn qk000(&mut self, k: u32) -> XSeries {
        assert!(k >= 1);
        let prev = self.q(k - 1, 0, 0, 0);
        self.one_over_one_minus_t(&prev)
    }

    /// `Q^{(0,0,k,0)}`: the root with constant term 1 of
    /// `tx Q^2 - A Q + 1 = 0`, `A = 1 + (tx - t) sum_{j<k} C_j t^j`.
    pub fn q00k0(&mut self, k: u32) -> XSeries {
        let (a, u) = self.q00k0_quadratic(k);
        XSeries::solve_quadratic_fixed_point(&a, &u).expect("A(0) = 1 and u(0) = 0")
    }

    /// `(A, u)` for [`GfEngine::q00k0`].
    pub fn q00k0_quadratic(&self, k: u32) -> (XSeries, XSeries) {
        assert!(k >= 1);
        let tx = XSeries::monomial(XPoly::x(), 1, self.order);
        let a = self
            .one()
            .add(&tx.sub(&self.t()).mul(&self.cat_sum(k as usize)));
        (a, tx)
    }

    /// `Q^{(0,0,k,0)}` through `2 / (A + sqrt(A^2 - 4tx))`.
    pub fn q00k0_radical(&self, k: u32) -> Result<XSeries> {
        let (a, u) = self.q00k0_quadratic(k);
        XSeries::quadratic_root_radical(&a, &u)
    }

    /// `Q^{(0,1,0,0)} = 1 / (1 - t C(tx))`, and for `k > 1`
    /// `(1 + t sum_{j=0}^{k-2} C_j t^j (Q^{(0,k-1-j,0,0)} - C(tx))) / (1 - t C(tx))`.
    pub fn q0k00(&mut self, k: u32) -> XSeries {
        assert!(k >= 1);
        let ctx = catalan_of_tx(self.order);
        let den = self.one().sub(&ctx.mul_t_pow(1));
        let mut num = self.one();
        for j in 0..=(k as usize).saturating_sub(2) {
            if k < 2 {
                break;
            }
            let inner = self.q(0, k - 1 - j as u32, 0, 0).sub(&ctx);
            num = num.add(&self.cat_monomial(j).mul(&inner).mul_t_pow(1));
        }
        num.div(&den).expect("constant term 1")
    }

    /// `Q^{(k,0,l,0)} = 1 / (1 - t Q^{(k-1,0,l,0)})`.
    pub fn qk0l0(&mut self, k: u32, l: u32) -> XSeries {
        assert!(k >= 1 && l >= 1);
        let prev = self.q(k - 1, 0, l, 0);
        self.one_over_one_minus_t(&prev)
    }

    /// `Q^{(k,0,0,l)}` with numerator
    /// `C_l t^l + sum_{j<l} C_j t^j (1 - t Q^{(k-1,0,0,0)} + t (Q^{(k-1,0,0,l-j)} - sum_{s<l-j} C_s t^s))`
    /// over `1 - t Q^{(k-1,0,0,0)}`.
    pub fn qk00l(&mut self, k: u32, l: u32) -> XSeries {
        assert!(k >= 1 && l >= 1);
        let den = self.one().sub(&self.q(k - 1, 0, 0, 0).mul_t_pow(1));
        let mut num = self.cat_monomial(l as usize);
        for j in 0..l as usize {
            let tail = self
                .q(k - 1, 0, 0, l - j as u32)
                .sub(&self.cat_sum(l as usize - j))
                .mul_t_pow(1);
            num = num.add(&self.cat_monomial(j).mul(&den.add(&tail)));
        }
        num.div(&den).expect("constant term 1")
    }

    /// `(1 - t Q^{(k-1,0,0,0)} + t Q^{(k-1,0,0,1)}) / (1 - t Q^{(k-1,0,0,0)})`,
    /// the simplified `l = 1` case of [`GfEngine::qk00l`].
    pub fn qk001_simplified(&mut self, k: u32) -> XSeries {
        assert!(k >= 1);
        let den = self.one().sub(&self.q(k - 1, 0, 0, 0).mul_t_pow(1));
        let num = den.add(&self.q(k - 1, 0, 0, 1).mul_t_pow(1));
        num.div(&den).expect("constant term 1")
    }

    /// `(1 - (t + t^2) Q^{(k-1,0,0,0)} + t Q^{(k-1,0,0,2)} + t^2 Q^{(k-1,0,0,1)}) / (1 - t Q^{(k-1,0,0,0)})`.
    pub fn qk002_simplified(&mut self, k: u32) -> XSeries {
        assert!(k >= 1);
        let base = self.q(k - 1, 0, 0, 0);
        let den = self.one().sub(&base.mul_t_pow(1));
        let num = self
            .one()
            .sub(&base.mul_t_pow(1))
            .sub(&base.mul_t_pow(2))
            .add(&self.q(k - 1, 0, 0, 2).mul_t_pow(1))
            .add(&self.q(k - 1, 0, 0, 1).mul_t_pow(2));
        num.div(&den).expect("constant term 1")
    }

    /// `Q^{(0,k,l,0)}` with numerator
    /// `C_{k-1} t^{k-1} + sum_{j<=k-2} C_j t^j (1 - t Q^{(0,0,l,0)} + t (Q^{(0,k-j-1,l,0)} - sum_{s<=k-j-2} C_s t^s))`
    /// over `1 - t Q^{(0,0,l,0)}`.
    pub fn q0kl0(&mut self, k: u32, l: u32) -> XSeries {
        assert!(k >= 1 && l >= 1);
        let den = self.one().sub(&self.q(0, 0, l, 0).mul_t_pow(1));
        let mut num = self.cat_monomial(k as usize - 1);
        for j in 0..(k as usize).saturating_sub(1) {
            let tail = self
                .q(0, k - j as u32 - 1, l, 0)
                .sub(&self.cat_sum(k as usize - j - 1))
                .mul_t_pow(1);
            num = num.add(&self.cat_monomial(j).mul(&den.add(&tail)));
        }
        num.div(&den).expect("constant term 1")
    }

    /// `1 + t Q^{(0,1,l,0)} / (1 - t Q^{(0,0,l,0)})`, the `k = 2` case of
    /// [`GfEngine::q0kl0`].
    pub fn q02l0_simplified(&mut self, l: u32) -> XSeries {
        let den = self.one().sub(&self.q(0, 0, l, 0).mul_t_pow(1));
        let frac = self
            .q(0, 1, l, 0)
            .mul_t_pow(1)
            .div(&den)
            .expect("constant term 1");
        self.one().add(&frac)
    }

    /// `Q^{(0,k,0,l)} = Phi_{k,l} / (1 - t)` where
    ///
    /// ```text
    /// Phi = 1 - t sum_{m<=k-2} C_m t^m
    ///     + t sum_{j=0}^{k-2} C_j t^j Q^{(0,k-1-j,0,l)}
    ///     + t (Q^{(0,k,0,0)} - sum_{u<=k-2} C_u t^u) (Q^{(0,0,0,l)} - sum_{v<=l-1} C_v t^v)
    ///     + t sum_{j=1}^{l-1} C_j t^j (Q^{(0,k,0,l-j)} - sum_{m<=k-2} C_m t^m)
    /// ```
    ///
    /// The terms come from `n` at position `i < k`, from `i >= k` with at
    /// least `l` entries after `n`, and from `i >= k` with `j < l` entries
    /// after `n`; the `j = 0` part of the last family is `t Q^{(0,k,0,l)}`,
    /// moved to the left as the factor `1 - t`.
    pub fn q0k0l(&mut self, k: u32, l: u32) -> XSeries {
        assert!(k >= 1 && l >= 1);
        let head = self.cat_sum(k as usize - 1);
        let mut phi = self.one().sub(&head.mul_t_pow(1));
        for j in 0..(k as usize).saturating_sub(1) {
            let sub = self.q(0, k - 1 - j as u32, 0, l);
            phi = phi.add(&self.cat_monomial(j).mul(&sub).mul_t_pow(1));
        }
        let left = self.q(0, k, 0, 0).sub(&head);
        let right = self.q(0, 0, 0, l).sub(&self.cat_sum(l as usize));
        phi = phi.add(&left.mul(&right).mul_t_pow(1));
        for j in 1..l as usize {
            let sub = self.q(0, k, 0, l - j as u32).sub(&head);
            phi = phi.add(&self.cat_monomial(j).mul(&sub).mul_t_pow(1));
        }
        let one_minus_t = XSeries::from_ints(&[1, -1], self.order);
        phi.div(&one_minus_t).expect("constant term 1")
    }

    /// `(1 + t Q^{(0,1,0,0)} (Q^{(0,0,0,1)} - 1)) / (1 - t)`.
    pub fn q0101_simplified(&mut self) -> XSeries {
        let one = self.one();
        let inner = self.q(0, 1, 0, 0).mul(&self.q(0, 0, 0, 1).sub(&one));
        self.over_one_minus_t(one.add(&inner.mul_t_pow(1)))
    }

    /// `(1 + t Q^{(0,1,0,1)} + t Q^{(0,2,0,0)} Q^{(0,0,0,1)} - t Q^{(0,2,0,0)} - t Q^{(0,0,0,1)}) / (1 - t)`.
    pub fn q0201_simplified(&mut self) -> XSeries {
        let q0101 = self.q(0, 1, 0, 1);
        let q0200 = self.q(0, 2, 0, 0);
        let q0001 = self.q(0, 0, 0, 1);
        let body = q0101.add(&q0200.mul(&q0001)).sub(&q0200).sub(&q0001);
        let num = self.one().add(&body.mul_t_pow(1));
        self.over_one_minus_t(num)
    }

    /// `(1 + (t + t^2) Q^{(0,2,0,1)} + t (Q^{(0,2,0,0)})^2 - (2t + t^2) Q^{(0,2,0,0)}) / (1 - t)`.
    pub fn q0202_simplified(&mut self) -> XSeries {
        let q0201 = self.q(0, 2, 0, 1);
        let q0200 = self.q(0, 2, 0, 0);
        let t_plus_t2 = XSeries::from_ints(&[0, 1, 1], self.order);
        let two_t_plus_t2 = XSeries::from_ints(&[0, 2, 1], self.order);
        let num = self
            .one()
            .add(&t_plus_t2.mul(&q0201))
            .add(&q0200.mul(&q0200).mul_t_pow(1))
            .sub(&two_t_plus_t2.mul(&q0200));
        self.over_one_minus_t(num)
    }

    fn over_one_minus_t(&self, num: XSeries) -> XSeries {
        num.div(&XSeries::from_ints(&[1, -1], self.order))
            .expect("constant term 1")
    }
}

/// `Q_n(x)` for `n <= order` through the series route.
pub fn gf_row(p: &PatternSpec, n: usize, order: usize) -> Result<XPoly> {
    GfEngine::new(order.max(n)).row(p, n)
}

/// Coefficient of `x^r t^n` through the series route.
pub fn gf_coeff(p: &PatternSpec, n: usize, r: usize) -> Result<BigInt> {
    Ok(gf_row(p, n, n)?.coeff(r))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumerate::DEFAULT_ENUMERATION_CAP as CAP;
    use crate::oracle::brute_force_batch;
    use crate::rational::RationalGF;
    use crate::series::IntSeries;
    use alloc::vec::Vec;

    fn x0(s: &XSeries) -> IntSeries {
        s.specialize_x0()
    }

    fn rat(num: &[i64], den: &[i64], order: usize) -> IntSeries {
        RationalGF::from_i64s(num, den).expand(order).unwrap()
    }

    #[test]
    fn classification_and_normalization() {
        let key = |s: &str| GfKey::for_pattern(&s.parse().unwrap());
        assert_eq!(key("0,0,2,1").unwrap(), GfKey(Shape::ZeroKL0(1, 2)));
        assert_eq!(key("2,1,0,0").unwrap(), GfKey(Shape::K00L(2, 1)));
        assert_eq!(key("0,0,0,3").unwrap(), GfKey(Shape::ZeroK00(3)));
        assert_eq!(key("0,1,0,2").unwrap(), GfKey(Shape::ZeroK0L(1, 2)));
        assert!(matches!(
            key("1,1,1,0"),
            Err(Error::UnsupportedPattern { .. })
        ));
        assert!(matches!(
            key("1,e,0,0"),
            Err(Error::UnsupportedPattern { .. })
        ));
    }

    #[test]
    fn zero_pattern_is_catalan_of_tx() {
        let mut e = GfEngine::new(10);
        let s = e.dispatch(&PatternSpec::nat(0, 0, 0, 0)).unwrap();
        assert_eq!(s.coeff(3).unwrap(), &XPoly::monomial(5, 3));
        assert_eq!(s.specialize_x1(), crate::series::catalan_series(10));
    }

    #[test]
    fn base_shapes_at_x0() {
        let n = 20;
        let mut e = GfEngine::new(n);
        assert_eq!(x0(&e.qk000(1)), rat(&[1], &[1, -1], n));
        assert_eq!(x0(&e.qk000(2)), rat(&[1, -1], &[1, -2], n));
        assert_eq!(x0(&e.q00k0(2)), rat(&[1], &[1, -1, -1], n));
        assert_eq!(x0(&e.q00k0(3)), rat(&[1], &[1, -1, -1, -2], n));
        assert_eq!(x0(&e.q0k00(1)), rat(&[1], &[1, -1], n));
        assert_eq!(x0(&e.q0k00(2)), rat(&[1, -1, 1], &[1, -2, 1], n));
    }

    #[test]
    fn radical_and_fixed_point_agree() {
        let mut e = GfEngine::new(20);
        for k in 1..=4 {
            assert_eq!(e.q00k0(k), e.q00k0_radical(k).unwrap());
        }
    }

    #[test]
    fn printed_simplifications_agree() {
        let mut e = GfEngine::new(20);
        for k in 1..=4 {
            assert_eq!(e.qk00l(k, 1), e.qk001_simplified(k), "k = {k}");
            assert_eq!(e.qk00l(k, 2), e.qk002_simplified(k), "k = {k}");
        }
        for l in 1..=4 {
            assert_eq!(e.q0kl0(2, l), e.q02l0_simplified(l));
        }
        assert_eq!(e.q0k0l(1, 1), e.q0101_simplified());
        assert_eq!(e.q0k0l(2, 1), e.q0201_simplified());
        assert_eq!(e.q0k0l(2, 2), e.q0202_simplified());
        assert_eq!(e.q0k0l(2, 1), e.q0k0l(1, 2));
    }

    #[test]
    fn series_match_oracle_small() {
        let order = 7;
        let mut e = GfEngine::new(order);
        let mut patterns = Vec::new();
        for k in 1..=2 {
            patterns.push(PatternSpec::nat(k, 0, 0, 0));
            patterns.push(PatternSpec::nat(0, k, 0, 0));
            patterns.push(PatternSpec::nat(0, 0, k, 0));
            patterns.push(PatternSpec::nat(0, 0, 0, k));
            for l in 1..=2 {
                patterns.push(PatternSpec::nat(k, 0, l, 0));
                patterns.push(PatternSpec::nat(k, 0, 0, l));
                patterns.push(PatternSpec::nat(k, l, 0, 0));
                patterns.push(PatternSpec::nat(0, k, l, 0));
                patterns.push(PatternSpec::nat(0, 0, l, k));
                patterns.push(PatternSpec::nat(0, k, 0, l));
            }
        }
        for n in 0..=order {
            let rows = brute_force_batch(n, &patterns, CAP).unwrap();
            for (p, row) in patterns.iter().zip(rows) {
                assert_eq!(e.row(p, n).unwrap(), row, "{p} at n = {n}");
            }
        }
    }

    #[test]
    fn memo_reuses_symmetric_classes() {
        let mut e = GfEngine::new(6);
        e.dispatch(&PatternSpec::nat(2, 0, 0, 1)).unwrap();
        let before = e.memo_len();
        e.dispatch(&PatternSpec::nat(2, 1, 0, 0)).unwrap();
        assert_eq!(e.memo_len(), before);
    }

    #[test]
    fn one_shot_helpers() {
        let p = PatternSpec::nat(1, 0, 1, 0);
        assert_eq!(gf_coeff(&p, 9, 7).unwrap(), BigInt::from(1));
        assert_eq!(gf_row(&p, 3, 3).unwrap(), XPoly::from_i64s(&[4, 1]));
    }
}
