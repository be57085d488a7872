use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::ring::Coeff;
use crate::series::IntSeries;

/// Polynomial in `t` with integer coefficients, ascending and trimmed.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn from_coeffs(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    pub fn from_i64s(cs: &[i64]) -> Self {
        IntPoly::from_coeffs(cs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn one() -> Self {
        IntPoly::from_i64s(&[1])
    }

    /// `t`.
    pub fn t() -> Self {
        IntPoly::from_i64s(&[0, 1])
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, n: usize) -> BigInt {
        self.coeffs.get(n).cloned().unwrap_or_default()
    }

    pub fn add(&self, other: &Self) -> Self {
        let len = self.coeffs.len().max(other.coeffs.len());
        IntPoly::from_coeffs((0..len).map(|i| self.coeff(i) + other.coeff(i)).collect())
    }

    pub fn sub(&self, other: &Self) -> Self {
        let len = self.coeffs.len().max(other.coeffs.len());
        IntPoly::from_coeffs((0..len).map(|i| self.coeff(i) - other.coeff(i)).collect())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.coeffs.is_empty() || other.coeffs.is_empty() {
            return IntPoly::default();
        }
        let mut out =
            alloc::vec![<BigInt as Zero>::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPoly::from_coeffs(out)
    }

    pub fn pow(&self, k: u32) -> Self {
        (0..k).fold(IntPoly::one(), |acc, _| acc.mul(self))
    }

    pub fn to_series(&self, order: usize) -> IntSeries {
        IntSeries::from_coeffs(self.coeffs.clone(), order)
    }
}

impl fmt::Debug for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return f.write_str("0");
        }
        let mut first = true;
        for (n, c) in self.coeffs.iter().enumerate() {
            if Zero::is_zero(c) {
                continue;
            }
            let sign = if c.is_negative() {
                "-"
            } else if first {
                ""
            } else {
                "+"
            };
            let m = c.abs();
            f.write_str(sign)?;
            match n {
                0 => write!(f, "{m}")?,
                _ if m.is_one() => f.write_str("t")?,
                _ => write!(f, "{m}t")?,
            }
            if n > 1 {
                write!(f, "^{n}")?;
            }
            first = false;
        }
        Ok(())
    }
}

/// `num(t) / den(t)` with `den(0) = ±1`, so the expansion has integer coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RationalGF {
    pub num: IntPoly,
    pub den: IntPoly,
}

impl RationalGF {
    pub fn new(num: IntPoly, den: IntPoly) -> Self {
        RationalGF { num, den }
    }

    pub fn from_i64s(num: &[i64], den: &[i64]) -> Self {
        RationalGF::new(IntPoly::from_i64s(num), IntPoly::from_i64s(den))
    }

    /// Power series expansion through `t^order`.
    pub fn expand(&self, order: usize) -> Result<IntSeries> {
        if self.den.coeff(0).unit_inverse().is_none() {
            return Err(Error::NonUnitConstant);
        }
        self.num.to_series(order).div(&self.den.to_series(order))
    }

    /// `den * series == num` through `t^order`.
    pub fn annihilates(&self, series: &IntSeries) -> bool {
        let order = series.order();
        self.den.to_series(order).mul(series) == self.num.to_series(order)
    }
}

impl fmt::Display for RationalGF {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}) / ({})", self.num, self.den)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    fn ints(s: &IntSeries) -> Vec<i64> {
        s.coeffs()
            .iter()
            .map(|c| i64::try_from(c).unwrap())
            .collect()
    }

    #[test]
    fn expansions() {
        let powers = RationalGF::from_i64s(&[1, -1], &[1, -2]).expand(5).unwrap();
        assert_eq!(ints(&powers), [1, 1, 2, 4, 8, 16]);
        let fib = RationalGF::from_i64s(&[1], &[1, -1, -1]).expand(7).unwrap();
        assert_eq!(ints(&fib), [1, 1, 2, 3, 5, 8, 13, 21]);
        let cube = IntPoly::from_i64s(&[1, -1]).pow(3);
        let quad = RationalGF::new(IntPoly::from_i64s(&[1, -2, 2]), cube)
            .expand(6)
            .unwrap();
        assert_eq!(ints(&quad), [1, 1, 2, 4, 7, 11, 16]);
    }

    #[test]
    fn singular_denominator() {
        assert_eq!(
            RationalGF::from_i64s(&[1], &[0, 1]).expand(3),
            Err(Error::NonUnitConstant)
        );
        assert_eq!(
            RationalGF::from_i64s(&[1], &[2, 1]).expand(3),
            Err(Error::NonUnitConstant)
        );
    }

    #[test]
    fn annihilation() {
        let r = RationalGF::from_i64s(&[1, -2, -1], &[1, -3, 0, 1]);
        let s = r.expand(20).unwrap();
        assert!(r.annihilates(&s));
        assert!(!RationalGF::from_i64s(&[1], &[1, -3, 0, 1]).annihilates(&s));
    }

    #[test]
    fn display() {
        assert_eq!(
            RationalGF::from_i64s(&[1, -1, -1], &[1, -2, -1]).to_string(),
            "(1-t-t^2) / (1-2t-t^2)"
        );
    }
}
