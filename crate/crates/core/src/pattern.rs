use alloc::string::{String, ToString};
use core::fmt;
use core::str::FromStr;

use crate::error::{Error, Result};

/// One coordinate of `MMP(a,b,c,d)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Coord {
    /// At least this many points in the quadrant.
    Nat(u32),
    /// The quadrant must be empty.
    Empty,
}

impl Coord {
    /// Whether a quadrant holding `count` points satisfies this coordinate.
    #[inline]
    pub fn admits(self, count: u32) -> bool {
        match self {
            Coord::Nat(m) => count >= m,
            Coord::Empty => count == 0,
        }
    }

    pub fn nat(self) -> Option<u32> {
        match self {
            Coord::Nat(m) => Some(m),
            Coord::Empty => None,
        }
    }
}

impl fmt::Display for Coord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Coord::Nat(m) => write!(f, "{m}"),
            Coord::Empty => f.write_str("e"),
        }
    }
}

/// The quadrant marked mesh pattern `MMP(a,b,c,d)`; coordinates refer to
/// quadrants I, II, III and IV in that order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PatternSpec {
    pub a: Coord,
    pub b: Coord,
    pub c: Coord,
    pub d: Coord,
}

impl PatternSpec {
    pub const fn new(a: Coord, b: Coord, c: Coord, d: Coord) -> Self {
        PatternSpec { a, b, c, d }
    }

    /// A pattern with no empty coordinates.
    pub const fn nat(a: u32, b: u32, c: u32, d: u32) -> Self {
        PatternSpec {
            a: Coord::Nat(a),
            b: Coord::Nat(b),
            c: Coord::Nat(c),
            d: Coord::Nat(d),
        }
    }

    pub fn coords(&self) -> [Coord; 4] {
        [self.a, self.b, self.c, self.d]
    }

    /// Number of coordinates that are `Nat(m)` with `m >= 1`.
    pub fn nonzero_count(&self) -> usize {
        self.coords()
            .iter()
            .filter(|c| matches!(c, Coord::Nat(m) if *m >= 1))
            .count()
    }

    pub fn has_empty(&self) -> bool {
        self.coords().contains(&Coord::Empty)
    }

    /// `[a, b, c, d]` when no coordinate is empty.
    pub fn as_nat(&self) -> Option<[u32; 4]> {
        Some([self.a.nat()?, self.b.nat()?, self.c.nat()?, self.d.nat()?])
    }

    /// The pattern `(a,d,c,b)`, which has the same distribution over
    /// `S_n(132)` because inversion preserves 132-avoidance.
    pub fn inverse_symmetric(&self) -> Self {
        PatternSpec::new(self.a, self.d, self.c, self.b)
    }
}

impl fmt::Display for PatternSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{},{},{}", self.a, self.b, self.c, self.d)
    }
}

impl FromStr for PatternSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidPattern(s.to_string());
        let mut out = [Coord::Empty; 4];
        let mut parts = s.trim().split(',');
        for slot in out.iter_mut() {
            let part = parts.next().ok_or_else(bad)?.trim();
            *slot = match part {
                "e" | "E" | "∅" => Coord::Empty,
                digits => Coord::Nat(digits.parse().map_err(|_| bad())?),
            };
        }
        if parts.next().is_some() {
            return Err(bad());
        }
        Ok(PatternSpec::new(out[0], out[1], out[2], out[3]))
    }
}

impl From<[u32; 4]> for PatternSpec {
    fn from(v: [u32; 4]) -> Self {
        PatternSpec::nat(v[0], v[1], v[2], v[3])
    }
}

/// Canonical text form, e.g. `"4,2,e,e"`.
pub fn pattern_string(p: &PatternSpec) -> String {
    p.to_string()
}
