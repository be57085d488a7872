//! Enumeration split across threads. `S_n(132)` is partitioned by the
//! position of `n`, and rows for different `n` are independent.

use rayon::prelude::*;

use mmp132_core::oracle::{brute_force_batch, brute_force_partition};
use mmp132_core::{Coeff, DistTable, PatternSpec, XPoly};

use crate::error::Result;

/// Below this length a single pass is cheaper than splitting.
const SPLIT_FROM: usize = 9;

/// `Q_n(x)` for each pattern, from one enumeration of `S_n(132)`.
pub fn oracle_rows(n: usize, patterns: &[PatternSpec], cap: usize) -> Result<Vec<XPoly>> {
    if n < SPLIT_FROM {
        return Ok(brute_force_batch(n, patterns, cap)?);
    }
    let parts = (1..=n)
        .into_par_iter()
        .map(|i| brute_force_partition(n, i, patterns, cap))
        .collect::<Result<Vec<_>, _>>()?;
    let mut out = vec![XPoly::zero(); patterns.len()];
    for part in parts {
        for (acc, row) in out.iter_mut().zip(&part) {
            acc.add_assign(row);
        }
    }
    Ok(out)
}

/// Tables `Q_0, ..., Q_{n_max}` for every pattern, in input order.
pub fn oracle_tables(patterns: &[PatternSpec], n_max: usize, cap: usize) -> Result<Vec<DistTable>> {
    let rows = (0..=n_max)
        .into_par_iter()
        .map(|n| oracle_rows(n, patterns, cap))
        .collect::<Result<Vec<_>>>()?;
    let mut tables: Vec<DistTable> = patterns.iter().map(|p| DistTable::new(*p)).collect();
    for (n, per_pattern) in rows.into_iter().enumerate() {
        for (table, row) in tables.iter_mut().zip(per_pattern) {
            table.rows.insert(n, row);
        }
    }
    Ok(tables)
}

#[cfg(test)]
mod tests {
    use super::*;
    use mmp132_core::{build_table, DEFAULT_ENUMERATION_CAP as CAP};

    #[test]
    fn parallel_matches_sequential() {
        let patterns = [
            PatternSpec::nat(1, 0, 1, 0),
            "2,e,0,1".parse().unwrap(),
            PatternSpec::nat(0, 2, 0, 2),
        ];
        let tables = oracle_tables(&patterns, 10, CAP).unwrap();
        for (p, t) in patterns.iter().zip(&tables) {
            assert_eq!(*t, build_table(p, 10, CAP).unwrap());
        }
    }

    #[test]
    fn cap_is_enforced() {
        assert!(oracle_rows(15, &[PatternSpec::nat(1, 0, 0, 0)], CAP).is_err());
    }
}
