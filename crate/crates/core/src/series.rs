//! Truncated power series in `t` over an exact coefficient ring.
//!
//! A series of order `N` stores the coefficients of `t^0 ..= t^N`. Binary
//! operations truncate to the smaller order. Nothing is ever rounded.

use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;

use crate::combinat::catalan;
use crate::error::{Error, Result};
use crate::poly::XPoly;
use crate::ring::Coeff;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct TSeries<C> {
    coeffs: Vec<C>,
}

/// Series with polynomial-in-`x` coefficients, e.g. `Q(t, x)`.
pub type XSeries = TSeries<XPoly>;
/// Series with integer coefficients, e.g. `Q(t, 0)`.
pub type IntSeries = TSeries<BigInt>;

impl<C: Coeff> TSeries<C> {
    /// Pads with zeros or truncates so that exactly `t^0..=t^order` is stored.
    pub fn from_coeffs(mut coeffs: Vec<C>, order: usize) -> Self {
        coeffs.resize(order + 1, C::zero());
        TSeries { coeffs }
    }

    pub fn zero(order: usize) -> Self {
        TSeries::from_coeffs(Vec::new(), order)
    }

    pub fn one(order: usize) -> Self {
        TSeries::constant(C::one(), order)
    }

    pub fn constant(c: C, order: usize) -> Self {
        TSeries::from_coeffs(alloc::vec![c], order)
    }

    /// `c * t^k`.
    pub fn monomial(c: C, k: usize, order: usize) -> Self {
        let mut s = TSeries::zero(order);
        if k <= order {
            s.coeffs[k] = c;
        }
        s
    }

    /// `t`.
    pub fn t(order: usize) -> Self {
        TSeries::monomial(C::one(), 1, order)
    }

    /// Polynomial in `t` with integer coefficients, ascending.
    pub fn from_ints(cs: &[i64], order: usize) -> Self {
        TSeries::from_coeffs(
            cs.iter().map(|&c| C::from_int(BigInt::from(c))).collect(),
            order,
        )
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<C> {
        self.coeffs
    }

    /// Coefficient of `t^n`.
    pub fn coeff(&self, n: usize) -> Result<&C> {
        self.coeffs.get(n).ok_or(Error::OrderExceeded {
            n,
            order: self.order(),
        })
    }

    pub fn truncate(&self, order: usize) -> Self {
        TSeries::from_coeffs(self.coeffs[..=order.min(self.order())].to_vec(), order)
    }

    pub fn add(&self, other: &Self) -> Self {
        let order = self.order().min(other.order());
        let coeffs = (0..=order)
            .map(|n| self.coeffs[n].add(&other.coeffs[n]))
            .collect();
        TSeries { coeffs }
    }

    pub fn sub(&self, other: &Self) -> Self {
        let order = self.order().min(other.order());
        let coeffs = (0..=order)
            .map(|n| self.coeffs[n].sub(&other.coeffs[n]))
            .collect();
        TSeries { coeffs }
    }

    pub fn neg(&self) -> Self {
        TSeries {
            coeffs: self.coeffs.iter().map(Coeff::neg).collect(),
        }
    }

    /// Cauchy product truncated to the smaller order.
    pub fn mul(&self, other: &Self) -> Self {
        let order = self.order().min(other.order());
        let mut out = alloc::vec![C::zero(); order + 1];
        for (i, a) in self.coeffs.iter().enumerate().take(order + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate().take(order + 1 - i) {
                if !b.is_zero() {
                    out[i + j].add_assign(&a.mul(b));
                }
            }
        }
        TSeries { coeffs: out }
    }

    pub fn scale(&self, c: &C) -> Self {
        TSeries {
            coeffs: self.coeffs.iter().map(|a| a.mul(c)).collect(),
        }
    }

    /// Multiply by `t^k`, keeping the order.
    pub fn mul_t_pow(&self, k: usize) -> Self {
        let order = self.order();
        let mut coeffs = alloc::vec![C::zero(); order + 1];
        if k <= order {
            coeffs[k..].clone_from_slice(&self.coeffs[..=order - k]);
        }
        TSeries { coeffs }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = TSeries::one(self.order());
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }

    /// Multiplicative inverse; the constant term must be a unit.
    pub fn reciprocal(&self) -> Result<Self> {
        let inv0 = self.coeffs[0]
            .unit_inverse()
            .ok_or(Error::NonUnitConstant)?;
        let order = self.order();
        let mut out: Vec<C> = Vec::with_capacity(order + 1);
        out.push(inv0.clone());
        for n in 1..=order {
            let mut acc = C::zero();
            for i in 1..=n {
                if !self.coeffs[i].is_zero() {
                    acc.add_assign(&self.coeffs[i].mul(&out[n - i]));
                }
            }
            out.push(acc.mul(&inv0).neg());
        }
        Ok(TSeries { coeffs: out })
    }

    /// `self / other`; `other` must have a unit constant term.
    pub fn div(&self, other: &Self) -> Result<Self> {
        Ok(self.mul(&other.reciprocal()?))
    }

    /// The square root with constant term 1, by the coefficient recurrence
    /// `2 s_n = a_n - sum_{0<i<n} s_i s_{n-i}`.
    pub fn sqrt_unit(&self) -> Result<Self> {
        if self.coeffs[0] != C::one() {
            return Err(Error::ConstantNotOne);
        }
        let order = self.order();
        let mut out: Vec<C> = Vec::with_capacity(order + 1);
        out.push(C::one());
        for n in 1..=order {
            let mut acc = self.coeffs[n].clone();
            for i in 1..n {
                acc = acc.sub(&out[i].mul(&out[n - i]));
            }
            out.push(acc.div_exact(2).ok_or(Error::InexactDivision(2))?);
        }
        Ok(TSeries { coeffs: out })
    }

    /// The series root `Q` with `Q(0) = 1` of `u Q^2 - A Q + 1 = 0`, built
    /// order by order from `Q = (1 + u Q^2) / A`.
    ///
    /// `A` must have constant term 1 and `u` constant term 0, so the
    /// coefficient of `t^n` on the right only involves `Q_0 .. Q_{n-1}`.
    pub fn solve_quadratic_fixed_point(a: &Self, u: &Self) -> Result<Self> {
        if a.coeffs[0] != C::one() {
            return Err(Error::SeriesPrecondition("A must have constant term 1"));
        }
        if !u.coeffs[0].is_zero() {
            return Err(Error::SeriesPrecondition("u must have zero constant term"));
        }
        let order = a.order().min(u.order());
        let mut q: Vec<C> = Vec::with_capacity(order + 1);
        let mut q_sq: Vec<C> = Vec::with_capacity(order + 1);
        for n in 0..=order {
            let mut rhs = if n == 0 { C::one() } else { C::zero() };
            for i in 1..=n {
                if !u.coeffs[i].is_zero() {
                    rhs.add_assign(&u.coeffs[i].mul(&q_sq[n - i]));
                }
            }
            for i in 1..=n {
                if !a.coeffs[i].is_zero() {
                    rhs = rhs.sub(&a.coeffs[i].mul(&q[n - i]));
                }
            }
            q.push(rhs);
            let mut sq = C::zero();
            for i in 0..=n {
                sq.add_assign(&q[i].mul(&q[n - i]));
            }
            q_sq.push(sq);
        }
        Ok(TSeries { coeffs: q })
    }

    /// The same root through the radical form `Q = 2 / (A + sqrt(A^2 - 4u))`.
    pub fn quadratic_root_radical(a: &Self, u: &Self) -> Result<Self> {
        if a.coeffs[0] != C::one() {
            return Err(Error::SeriesPrecondition("A must have constant term 1"));
        }
        if !u.coeffs[0].is_zero() {
            return Err(Error::SeriesPrecondition("u must have zero constant term"));
        }
        let disc = a.mul(a).sub(&u.scale(&C::from_int(BigInt::from(4))));
        let half = a.add(&disc.sqrt_unit()?).div_exact(2)?;
        half.reciprocal()
    }

    pub fn div_exact(&self, d: i64) -> Result<Self> {
        let coeffs = self
            .coeffs
            .iter()
            .map(|c| c.div_exact(d))
            .collect::<Option<Vec<_>>>()
            .ok_or(Error::InexactDivision(d))?;
        Ok(TSeries { coeffs })
    }

    pub fn map<D: Coeff>(&self, f: impl Fn(&C) -> D) -> TSeries<D> {
        TSeries {
            coeffs: self.coeffs.iter().map(f).collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Coeff::is_zero)
    }

    /// Compare up to the smaller order.
    pub fn agrees_with(&self, other: &Self) -> bool {
        let order = self.order().min(other.order());
        self.coeffs[..=order] == other.coeffs[..=order]
    }

    /// First index where the two series differ, up to the smaller order.
    pub fn first_difference(&self, other: &Self) -> Option<usize> {
        let order = self.order().min(other.order());
        (0..=order).find(|&n| self.coeffs[n] != other.coeffs[n])
    }
}

/// `sum_{j<k} C_j t^j`.
pub fn catalan_partial_sum<C: Coeff>(k: usize, order: usize) -> TSeries<C> {
    let coeffs = (0..k.min(order + 1))
        .map(|j| C::from_int(catalan(j as u64)))
        .collect();
    TSeries::from_coeffs(coeffs, order)
}

/// `C(t) = sum C_n t^n` to order `n`.
pub fn catalan_series<C: Coeff>(order: usize) -> TSeries<C> {
    catalan_partial_sum(order + 1, order)
}

/// `C(tx)`: coefficient of `t^n` is `C_n x^n`.
pub fn catalan_of_tx(order: usize) -> XSeries {
    catalan_series::<XPoly>(order).substitute_tx()
}

impl XSeries {
    /// Substitute `t -> t x`.
    pub fn substitute_tx(&self) -> XSeries {
        TSeries {
            coeffs: self
                .coeffs
                .iter()
                .enumerate()
                .map(|(n, p)| p.shift(n))
                .collect(),
        }
    }

    /// Coefficient of `x^r t^n`.
    pub fn coeff_xt(&self, n: usize, r: usize) -> Result<BigInt> {
        Ok(self.coeff(n)?.coeff(r))
    }

    /// `x = 0` specialization.
    pub fn specialize_x0(&self) -> IntSeries {
        TSeries {
            coeffs: self.coeffs.iter().map(XPoly::constant_term).collect(),
        }
    }

    /// `x = 1` specialization.
    pub fn specialize_x1(&self) -> IntSeries {
        TSeries {
            coeffs: self.coeffs.iter().map(XPoly::eval_at_one).collect(),
        }
    }
}

impl IntSeries {
    /// View an integer series as constant-in-`x`.
    pub fn lift(&self) -> XSeries {
        TSeries {
            coeffs: self
                .coeffs
                .iter()
                .map(|c| XPoly::constant(c.clone()))
                .collect(),
        }
    }
}

impl<C: Coeff + fmt::Display> fmt::Display for TSeries<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (n, c) in self.coeffs.iter().enumerate() {
            if n > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "({c})t^{n}")?;
        }
        write!(f, " + O(t^{})", self.order() + 1)
    }
}

impl<C: Coeff> fmt::Debug for TSeries<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.coeffs.iter()).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn ints(s: &IntSeries) -> Vec<i64> {
        s.coeffs()
            .iter()
            .map(|c| i64::try_from(c).unwrap())
            .collect()
    }

    #[test]
    fn catalan_prefixes() {
        assert_eq!(ints(&catalan_series(4)), [1, 1, 2, 5, 14]);
        assert_eq!(ints(&catalan_series(0)), [1]);
        let c: IntSeries = catalan_series(20);
        // C = 1 + t C^2
        let rhs = IntSeries::one(20).add(&c.mul(&c).mul_t_pow(1));
        assert_eq!(c, rhs);
        // C^2 = (C - 1) / t
        let sq = c.mul(&c).truncate(19);
        let shifted = IntSeries::from_coeffs(c.coeffs()[1..].to_vec(), 19);
        assert_eq!(sq, shifted);
    }

    #[test]
    fn catalan_of_tx_values() {
        let s = catalan_of_tx(2);
        assert_eq!(
            s.coeffs(),
            &[
                XPoly::constant(1),
                XPoly::monomial(1, 1),
                XPoly::monomial(2, 2)
            ]
        );
        assert_eq!(
            ints(&catalan_of_tx(10).specialize_x0()),
            [1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0]
        );
    }

    #[test]
    fn product_and_truncation() {
        let geo = IntSeries::from_ints(&[1; 11], 10);
        let one_minus_t = IntSeries::from_ints(&[1, -1], 10);
        assert_eq!(geo.mul(&one_minus_t), IntSeries::one(10));
        let short = IntSeries::from_ints(&[1, 2], 3);
        assert_eq!(geo.mul(&short).order(), 3);
        assert_eq!(geo.add(&short).order(), 3);
    }

    #[test]
    fn reciprocal_examples() {
        let r = IntSeries::from_ints(&[1, -1], 6).reciprocal().unwrap();
        assert_eq!(ints(&r), [1; 7]);
        let c: IntSeries = catalan_series(8);
        let one_minus_tc = IntSeries::one(8).sub(&c.mul_t_pow(1));
        assert_eq!(one_minus_tc.reciprocal().unwrap(), c);
        let pell = IntSeries::from_ints(&[1, -2, -1], 4).reciprocal().unwrap();
        assert_eq!(ints(&pell), [1, 2, 5, 12, 29]);
        assert_eq!(
            IntSeries::from_ints(&[2, 1], 3).reciprocal(),
            Err(Error::NonUnitConstant)
        );
        assert!(IntSeries::from_ints(&[-1, 1], 3).reciprocal().is_ok());
    }

    #[test]
    fn sqrt_examples() {
        let s = IntSeries::from_ints(&[1, -4], 6).sqrt_unit().unwrap();
        assert_eq!(ints(&s), [1, -2, -2, -4, -10, -28, -84]);
        assert_eq!(s.mul(&s), IntSeries::from_ints(&[1, -4], 6));
        assert_eq!(IntSeries::one(5).sqrt_unit().unwrap(), IntSeries::one(5));
        assert_eq!(
            IntSeries::from_ints(&[4, 1], 3).sqrt_unit(),
            Err(Error::ConstantNotOne)
        );
        assert_eq!(
            IntSeries::from_ints(&[1, 1], 3).sqrt_unit(),
            Err(Error::InexactDivision(2))
        );
        // C(t) = (1 - sqrt(1 - 4t)) / (2t)
        let order = 15;
        let root = IntSeries::from_ints(&[1, -4], order + 1)
            .sqrt_unit()
            .unwrap();
        let num = IntSeries::one(order + 1).sub(&root);
        let c = IntSeries::from_coeffs(num.coeffs()[1..].to_vec(), order)
            .div_exact(2)
            .unwrap();
        assert_eq!(c, catalan_series(order));
    }

    #[test]
    fn quadratic_catalan() {
        let order = 12;
        let q =
            IntSeries::solve_quadratic_fixed_point(&IntSeries::one(order), &IntSeries::t(order))
                .unwrap();
        assert_eq!(q, catalan_series(order));
        let r = IntSeries::quadratic_root_radical(&IntSeries::one(order), &IntSeries::t(order))
            .unwrap();
        assert_eq!(r, q);
        assert!(IntSeries::solve_quadratic_fixed_point(
            &IntSeries::from_ints(&[2], 3),
            &IntSeries::t(3)
        )
        .is_err());
        assert!(
            IntSeries::solve_quadratic_fixed_point(&IntSeries::one(3), &IntSeries::one(3)).is_err()
        );
    }

    #[test]
    fn quadratic_routes_agree_over_x() {
        // A = 1 + (tx - t) sum_{j<k} C_j t^j, u = tx; both routes to order 20.
        let order = 20;
        for k in 1..=4 {
            let tx = XSeries::monomial(XPoly::x(), 1, order);
            let tx_minus_t = tx.sub(&XSeries::t(order));
            let a = XSeries::one(order).add(&tx_minus_t.mul(&catalan_partial_sum(k, order)));
            let fixed = XSeries::solve_quadratic_fixed_point(&a, &tx).unwrap();
            let radical = XSeries::quadratic_root_radical(&a, &tx).unwrap();
            assert_eq!(fixed, radical, "k = {k}");
            let residual = tx
                .mul(&fixed.mul(&fixed))
                .sub(&a.mul(&fixed))
                .add(&XSeries::one(order));
            assert!(residual.is_zero());
        }
    }

    #[test]
    fn coefficient_access() {
        let s = catalan_of_tx(5);
        assert_eq!(s.coeff_xt(3, 3).unwrap(), BigInt::from(5));
        assert_eq!(s.coeff_xt(3, 7).unwrap(), BigInt::from(0));
        assert_eq!(s.coeff(6), Err(Error::OrderExceeded { n: 6, order: 5 }));
    }

    fn small_series(order: usize) -> impl Strategy<Value = IntSeries> {
        (prop::bool::ANY, prop::collection::vec(-5i64..=5, order)).prop_map(move |(neg, rest)| {
            let mut cs = alloc::vec![if neg { -1 } else { 1 }];
            cs.extend(rest);
            IntSeries::from_ints(&cs, order)
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(100))]

        #[test]
        fn reciprocal_is_inverse(a in small_series(12)) {
            let r = a.reciprocal().unwrap();
            prop_assert_eq!(a.mul(&r), IntSeries::one(12));
        }

        #[test]
        fn sqrt_of_square(b in small_series(12)) {
            let b = if b.coeffs()[0] == BigInt::from(-1) { b.neg() } else { b };
            let a = b.mul(&b);
            let s = a.sqrt_unit().unwrap();
            prop_assert_eq!(s.mul(&s), a);
            prop_assert_eq!(s, b);
        }

        #[test]
        fn quadratic_residual_vanishes(a in small_series(10), u in small_series(10)) {
            let a = if a.coeffs()[0] == BigInt::from(-1) { a.neg() } else { a };
            let u = u.mul_t_pow(1);
            let q = IntSeries::solve_quadratic_fixed_point(&a, &u).unwrap();
            let residual = u.mul(&q.mul(&q)).sub(&a.mul(&q)).add(&IntSeries::one(10));
            prop_assert!(residual.is_zero());
        }
    }
}
