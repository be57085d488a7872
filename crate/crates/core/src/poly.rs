use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// Dense polynomial in `x` with big-integer coefficients; index is the exponent.
///
/// Stored trimmed: the last coefficient is nonzero, and zero is the empty vector.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct XPoly {
    coeffs: Vec<BigInt>,
}

impl XPoly {
    pub fn zero() -> Self {
        XPoly { coeffs: Vec::new() }
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        XPoly::from_coeffs(alloc::vec![c.into()])
    }

    /// `c * x^k`.
    pub fn monomial(c: impl Into<BigInt>, k: usize) -> Self {
        let mut coeffs = alloc::vec![<BigInt as Zero>::zero(); k];
        coeffs.push(c.into());
        XPoly::from_coeffs(coeffs)
    }

    pub fn x() -> Self {
        XPoly::monomial(1, 1)
    }

    pub fn from_coeffs(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        XPoly { coeffs }
    }

    pub fn from_i64s(cs: &[i64]) -> Self {
        XPoly::from_coeffs(cs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<BigInt> {
        self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Coefficient of `x^r`; zero past the degree.
    pub fn coeff(&self, r: usize) -> BigInt {
        self.coeffs.get(r).cloned().unwrap_or_default()
    }

    /// Highest exponent with its coefficient.
    pub fn leading(&self) -> Option<(usize, &BigInt)> {
        self.coeffs.last().map(|c| (self.coeffs.len() - 1, c))
    }

    pub fn eval_at_one(&self) -> BigInt {
        self.coeffs.iter().sum()
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(<BigInt as Zero>::zero(), |acc, c| acc * x + c)
    }

    pub fn constant_term(&self) -> BigInt {
        self.coeff(0)
    }

    /// Multiply by `x^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return XPoly::zero();
        }
        let mut coeffs = alloc::vec![<BigInt as Zero>::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        XPoly { coeffs }
    }

    /// Sum of `coeff(r) * r`: total number of matches over the class.
    pub fn weighted_total(&self) -> BigInt {
        self.coeffs
            .iter()
            .enumerate()
            .map(|(r, c)| c * BigInt::from(r))
            .sum()
    }

    /// Increment the coefficient of `x^r` by one.
    pub fn bump(&mut self, r: usize) {
        if self.coeffs.len() <= r {
            self.coeffs.resize(r + 1, <BigInt as Zero>::zero());
        }
        self.coeffs[r] += 1;
    }

    fn zip_with(&self, other: &Self, f: impl Fn(&BigInt, &BigInt) -> BigInt) -> Self {
        let len = self.coeffs.len().max(other.coeffs.len());
        let zero = <BigInt as Zero>::zero();
        let coeffs = (0..len)
            .map(|i| {
                f(
                    self.coeffs.get(i).unwrap_or(&zero),
                    other.coeffs.get(i).unwrap_or(&zero),
                )
            })
            .collect();
        XPoly::from_coeffs(coeffs)
    }
}

impl crate::ring::Coeff for XPoly {
    fn zero() -> Self {
        XPoly::zero()
    }
    fn one() -> Self {
        XPoly::constant(1)
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
    fn add(&self, other: &Self) -> Self {
        self.zip_with(other, |a, b| a + b)
    }
    fn sub(&self, other: &Self) -> Self {
        self.zip_with(other, |a, b| a - b)
    }
    fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return XPoly::zero();
        }
        let mut out =
            alloc::vec![<BigInt as Zero>::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if Zero::is_zero(a) {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        XPoly::from_coeffs(out)
    }
    fn neg(&self) -> Self {
        XPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
    fn from_int(v: BigInt) -> Self {
        XPoly::constant(v)
    }
    fn add_assign(&mut self, other: &Self) {
        if self.coeffs.len() < other.coeffs.len() {
            self.coeffs
                .resize(other.coeffs.len(), <BigInt as Zero>::zero());
        }
        for (a, b) in self.coeffs.iter_mut().zip(&other.coeffs) {
            *a += b;
        }
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }
    fn unit_inverse(&self) -> Option<Self> {
        match self.coeffs.as_slice() {
            [c] if c.abs().is_one() => Some(self.clone()),
            _ => None,
        }
    }
    fn div_exact(&self, d: i64) -> Option<Self> {
        let coeffs = self
            .coeffs
            .iter()
            .map(|c| crate::ring::Coeff::div_exact(c, d))
            .collect::<Option<Vec<_>>>()?;
        Some(XPoly::from_coeffs(coeffs))
    }
}

impl fmt::Debug for XPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "XPoly({self})")
    }
}

/// Ascending form, e.g. `7+5x+2x^2`.
impl fmt::Display for XPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (r, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                f.write_str(if c.is_negative() { "-" } else { "+" })?;
            } else if c.is_negative() {
                f.write_str("-")?;
            }
            first = false;
            let m = c.abs();
            match r {
                0 => write!(f, "{m}")?,
                _ if m.is_one() => f.write_str("x")?,
                _ => write!(f, "{m}x")?,
            }
            if r > 1 {
                write!(f, "^{r}")?;
            }
        }
        Ok(())
    }
}
