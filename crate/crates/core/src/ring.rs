use core::fmt::Debug;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Exact commutative coefficient ring for [`TSeries`](crate::series::TSeries).
///
/// Implemented for big integers (series at `x = 0`) and for [`XPoly`]
/// (series in `t` with polynomial-in-`x` coefficients), so both use one
/// arithmetic kernel.
///
/// [`XPoly`]: crate::poly::XPoly
pub trait Coeff: Clone + Debug + PartialEq {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    fn from_int(v: BigInt) -> Self;

    fn add_assign(&mut self, other: &Self) {
        *self = Coeff::add(self, other);
    }

    /// Inverse of a unit (`1` or `-1`), `None` otherwise.
    fn unit_inverse(&self) -> Option<Self>;

    /// Exact division by a small integer, `None` if some coefficient is not divisible.
    fn div_exact(&self, d: i64) -> Option<Self>;

    fn scale(&self, k: i64) -> Self {
        Coeff::mul(self, &Self::from_int(BigInt::from(k)))
    }
}

impl Coeff for BigInt {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn from_int(v: BigInt) -> Self {
        v
    }
    fn add_assign(&mut self, other: &Self) {
        *self += other;
    }
    fn unit_inverse(&self) -> Option<Self> {
        if self.abs().is_one() {
            Some(self.clone())
        } else {
            None
        }
    }
    fn div_exact(&self, d: i64) -> Option<Self> {
        let (q, r) = self.div_rem(&BigInt::from(d));
        Zero::is_zero(&r).then_some(q)
    }
}
