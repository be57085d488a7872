//! A [`GfEngine`] that many threads can query at once.

use std::sync::RwLock;

use mmp132_core::{GfEngine, PatternSpec, XPoly, XSeries};

use crate::error::Result;

/// Readers share memoized series; a miss takes the write lock once.
#[derive(Debug)]
pub struct SharedGfEngine {
    inner: RwLock<GfEngine>,
}

impl SharedGfEngine {
    pub fn new(order: usize) -> Self {
        SharedGfEngine {
            inner: RwLock::new(GfEngine::new(order)),
        }
    }

    pub fn order(&self) -> usize {
        self.inner.read().unwrap_or_else(|e| e.into_inner()).order()
    }

    pub fn series(&self, p: &PatternSpec) -> Result<XSeries> {
        {
            let engine = self.inner.read().unwrap_or_else(|e| e.into_inner());
            if let Some(s) = engine.cached(p) {
                return Ok(s.clone());
            }
        }
        let mut engine = self.inner.write().unwrap_or_else(|e| e.into_inner());
        Ok(engine.dispatch(p)?)
    }

    pub fn row(&self, p: &PatternSpec, n: usize) -> Result<XPoly> {
        Ok(self.series(p)?.coeff(n)?.clone())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rayon::prelude::*;

    #[test]
    fn concurrent_queries_agree() {
        let shared = SharedGfEngine::new(12);
        let patterns: Vec<PatternSpec> = ["1,0,1,0", "0,2,0,1", "2,0,0,1", "0,1,2,0", "3,0,0,0"]
            .iter()
            .map(|s| s.parse().unwrap())
            .collect();
        let got: Vec<XSeries> = (0..40)
            .into_par_iter()
            .map(|i| shared.series(&patterns[i % patterns.len()]).unwrap())
            .collect();
        let mut engine = GfEngine::new(12);
        for (i, s) in got.iter().enumerate() {
            assert_eq!(*s, engine.dispatch(&patterns[i % patterns.len()]).unwrap());
        }
    }

    #[test]
    fn unsupported_is_an_error() {
        assert!(SharedGfEngine::new(4)
            .series(&PatternSpec::nat(1, 1, 1, 0))
            .is_err());
    }
}
