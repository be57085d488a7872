//! Permutations in one-line notation and their quadrant statistics.
//!
//! Positions and values are 1-based at the API surface.

use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::error::{Error, Result};
use crate::pattern::PatternSpec;

/// Points of the graph of a permutation in each quadrant around one point.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct QuadrantCounts {
    pub q1: u32,
    pub q2: u32,
    pub q3: u32,
    pub q4: u32,
}

impl QuadrantCounts {
    pub fn total(&self) -> u32 {
        self.q1 + self.q2 + self.q3 + self.q4
    }

    pub fn satisfies(&self, p: &PatternSpec) -> bool {
        p.a.admits(self.q1) && p.b.admits(self.q2) && p.c.admits(self.q3) && p.d.admits(self.q4)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Permutation {
    values: Vec<u32>,
}

impl Permutation {
    /// Validates that `values` is a permutation of `1..=n`.
    pub fn new(values: Vec<u32>) -> Result<Self> {
        let n = values.len();
        let mut seen = alloc::vec![false; n + 1];
        for &v in &values {
            let v = v as usize;
            if v == 0 || v > n || seen[v] {
                return Err(Error::InvalidPermutation(render(&values)));
            }
            seen[v] = true;
        }
        Ok(Permutation { values })
    }

    /// Caller guarantees `values` is a permutation of `1..=n`.
    pub(crate) fn from_values_unchecked(values: Vec<u32>) -> Self {
        debug_assert!(Permutation::new(values.clone()).is_ok());
        Permutation { values }
    }

    pub fn identity(n: usize) -> Self {
        Permutation {
            values: (1..=n as u32).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn values(&self) -> &[u32] {
        &self.values
    }

    pub fn into_values(self) -> Vec<u32> {
        self.values
    }

    /// `sigma_i` for 1-based `i`.
    pub fn at(&self, i: usize) -> Result<u32> {
        self.check_position(i)?;
        Ok(self.values[i - 1])
    }

    fn check_position(&self, i: usize) -> Result<()> {
        if i == 0 || i > self.len() {
            return Err(Error::InvalidPosition {
                index: i,
                len: self.len(),
            });
        }
        Ok(())
    }

    /// Quadrant counts relative to the point `(i, sigma_i)`.
    pub fn quadrant_counts(&self, i: usize) -> Result<QuadrantCounts> {
        self.check_position(i)?;
        let pivot = self.values[i - 1];
        let mut q = QuadrantCounts::default();
        for (j, &v) in self.values.iter().enumerate() {
            let j = j + 1;
            match (j > i, v > pivot) {
                _ if j == i => {}
                (true, true) => q.q1 += 1,
                (false, true) => q.q2 += 1,
                (false, false) => q.q3 += 1,
                (true, false) => q.q4 += 1,
            }
        }
        Ok(q)
    }

    /// Quadrant counts at every position, in position order.
    ///
    /// Only the number of smaller entries to the left needs a scan; the other
    /// three counts follow from the position and the value.
    pub fn quadrant_profile(&self) -> Vec<QuadrantCounts> {
        let n = self.len() as u32;
        let mut out = Vec::with_capacity(self.len());
        if n <= 128 {
            let mut seen: u128 = 0;
            for (idx, &v) in self.values.iter().enumerate() {
                let below = if v == 1 { 0 } else { u128::MAX >> (129 - v) };
                let q3 = (seen & below).count_ones();
                seen |= 1u128 << (v - 1);
                out.push(derive_counts(n, idx as u32, v, q3));
            }
        } else {
            for (idx, &v) in self.values.iter().enumerate() {
                let q3 = self.values[..idx].iter().filter(|&&w| w < v).count() as u32;
                out.push(derive_counts(n, idx as u32, v, q3));
            }
        }
        out
    }

    /// Whether `sigma_i` matches `MMP(a,b,c,d)`.
    pub fn matches(&self, i: usize, p: &PatternSpec) -> Result<bool> {
        Ok(self.quadrant_counts(i)?.satisfies(p))
    }

    /// `mmp^{(a,b,c,d)}(sigma)`: the number of positions matching `p`.
    pub fn mmp_count(&self, p: &PatternSpec) -> usize {
        self.quadrant_profile()
            .iter()
            .filter(|q| q.satisfies(p))
            .count()
    }

    /// No `i1 < i2 < i3` with `sigma_i1 < sigma_i3 < sigma_i2`.
    pub fn is_132_avoiding(&self) -> bool {
        // For each candidate '3', the best '1' is the prefix minimum.
        let mut prefix_min = u32::MAX;
        for (j, &mid) in self.values.iter().enumerate() {
            if prefix_min < mid
                && self.values[j + 1..]
                    .iter()
                    .any(|&last| prefix_min < last && last < mid)
            {
                return false;
            }
            prefix_min = prefix_min.min(mid);
        }
        true
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = alloc::vec![0u32; self.len()];
        for (i, &v) in self.values.iter().enumerate() {
            inv[(v - 1) as usize] = i as u32 + 1;
        }
        Permutation { values: inv }
    }
}

fn derive_counts(n: u32, idx: u32, v: u32, q3: u32) -> QuadrantCounts {
    let q2 = idx - q3;
    let q4 = v - 1 - q3;
    let q1 = n - 1 - q2 - q3 - q4;
    QuadrantCounts { q1, q2, q3, q4 }
}

/// Order-isomorphic reduction of a word of distinct integers: the `i`-th
/// smallest entry becomes `i`, so `2754` reduces to `1432`.
pub fn reduce(word: &[i64]) -> Result<Permutation> {
    let mut order: Vec<usize> = (0..word.len()).collect();
    order.sort_by_key(|&i| word[i]);
    for pair in order.windows(2) {
        if word[pair[0]] == word[pair[1]] {
            return Err(Error::DuplicateEntry(word[pair[0]]));
        }
    }
    let mut values = alloc::vec![0u32; word.len()];
    for (rank, &i) in order.iter().enumerate() {
        values[i] = rank as u32 + 1;
    }
    Ok(Permutation { values })
}

fn render(values: &[u32]) -> String {
    if values.len() <= 9 && values.iter().all(|&v| (1..=9).contains(&v)) {
        values.iter().map(|v| char::from(b'0' + *v as u8)).collect()
    } else {
        let parts: Vec<String> = values.iter().map(|v| v.to_string()).collect();
        parts.join(",")
    }
}

/// Digit string for `n <= 9` (`"471569283"`), comma-separated otherwise.
impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&render(&self.values))
    }
}

impl FromStr for Permutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = || Error::InvalidPermutation(s.to_string());
        let values: Vec<u32> = if s.contains(',') {
            s.split(',')
                .map(|p| p.trim().parse::<u32>().map_err(|_| bad()))
                .collect::<Result<_>>()?
        } else {
            s.chars()
                .map(|c| c.to_digit(10).ok_or_else(bad))
                .collect::<Result<_>>()?
        };
        Permutation::new(values).map_err(|_| bad())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pattern::Coord;

    fn perm(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    fn brute_132(p: &Permutation) -> bool {
        let v = p.values();
        let n = v.len();
        for i in 0..n {
            for j in i + 1..n {
                for k in j + 1..n {
                    if v[i] < v[k] && v[k] < v[j] {
                        return false;
                    }
                }
            }
        }
        true
    }

    #[test]
    fn quadrant_counts_examples() {
        let s = perm("471569283");
        assert_eq!(
            s.quadrant_counts(4).unwrap(),
            QuadrantCounts {
                q1: 3,
                q2: 1,
                q3: 2,
                q4: 2
            }
        );
        assert_eq!(
            perm("1").quadrant_counts(1).unwrap(),
            QuadrantCounts::default()
        );
        assert_eq!(
            perm("123").quadrant_counts(2).unwrap(),
            QuadrantCounts {
                q1: 1,
                q2: 0,
                q3: 1,
                q4: 0
            }
        );
        assert!(matches!(
            s.quadrant_counts(0),
            Err(Error::InvalidPosition { .. })
        ));
        assert!(matches!(
            s.quadrant_counts(10),
            Err(Error::InvalidPosition { .. })
        ));
    }

    #[test]
    fn profile_agrees_with_direct_counts() {
        let s = perm("471569283");
        for (i, q) in s.quadrant_profile().iter().enumerate() {
            assert_eq!(*q, s.quadrant_counts(i + 1).unwrap());
        }
    }

    #[test]
    fn matching_examples() {
        let s = perm("471569283");
        assert!(s.matches(4, &PatternSpec::nat(2, 1, 2, 1)).unwrap());
        let p = PatternSpec::new(Coord::Nat(4), Coord::Nat(2), Coord::Empty, Coord::Empty);
        assert!(s.matches(3, &p).unwrap());
        for i in 1..=9 {
            assert!(s.matches(i, &PatternSpec::nat(0, 0, 0, 0)).unwrap());
        }
    }

    #[test]
    fn counting_examples() {
        assert_eq!(perm("123").mmp_count(&PatternSpec::nat(0, 0, 1, 0)), 2);
        assert_eq!(perm("321").mmp_count(&PatternSpec::nat(1, 0, 1, 0)), 0);
        assert_eq!(perm("213").mmp_count(&PatternSpec::nat(1, 0, 1, 0)), 0);
    }

    #[test]
    fn avoidance_examples() {
        let s = perm("471569283");
        assert!(!s.is_132_avoiding());
        assert_eq!(s.is_132_avoiding(), brute_132(&s));
        assert!(Permutation::identity(7).is_132_avoiding());
        let p = perm("4231");
        assert_eq!(p.is_132_avoiding(), brute_132(&p));
        assert!(p.is_132_avoiding());
        assert!(!perm("132").is_132_avoiding());
    }

    #[test]
    fn reduce_examples() {
        assert_eq!(reduce(&[2, 7, 5, 4]).unwrap(), perm("1432"));
        assert_eq!(reduce(&[1, 2, 3]).unwrap(), perm("123"));
        assert_eq!(reduce(&[9, 1, 7]).unwrap(), perm("312"));
        assert_eq!(reduce(&[3, 1, 3]), Err(Error::DuplicateEntry(3)));
        // A subsequence contains 132 exactly when its reduction is 132.
        let s = [4i64, 7, 1, 5, 6, 9, 2, 8, 3];
        assert_eq!(reduce(&[s[0], s[5], s[7]]).unwrap(), perm("132"));
    }

    #[test]
    fn inverse_examples() {
        assert_eq!(perm("231").inverse(), perm("312"));
        assert_eq!(Permutation::identity(5).inverse(), Permutation::identity(5));
    }

    #[test]
    fn text_forms() {
        assert_eq!(perm("471569283").to_string(), "471569283");
        let long = Permutation::new((1..=11).rev().collect()).unwrap();
        assert_eq!(long.to_string(), "11,10,9,8,7,6,5,4,3,2,1");
        assert_eq!(long.to_string().parse::<Permutation>().unwrap(), long);
        assert!("1224".parse::<Permutation>().is_err());
        assert!("".parse::<Permutation>().unwrap().is_empty());
    }
}
