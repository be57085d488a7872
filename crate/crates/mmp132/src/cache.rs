//! On-disk cache of oracle tables, one JSON file per pattern.

use std::fs;
use std::path::{Path, PathBuf};
use std::sync::atomic::{AtomicU64, Ordering};

use rayon::prelude::*;

use mmp132_core::{DistTable, PatternSpec};

use crate::error::{Error, Result};
use crate::json::TableJson;
use crate::parallel::oracle_rows;

/// Write `bytes` to `path` through a temporary file in the same directory,
/// so readers never observe a partial file.
pub fn atomic_write(path: &Path, bytes: &[u8]) -> Result<()> {
    static COUNTER: AtomicU64 = AtomicU64::new(0);
    let dir = path.parent().unwrap_or_else(|| Path::new("."));
    fs::create_dir_all(dir).map_err(|e| Error::io(dir, e))?;
    let tmp = dir.join(format!(
        ".{}.{}.{}.tmp",
        path.file_name().and_then(|n| n.to_str()).unwrap_or("cache"),
        std::process::id(),
        COUNTER.fetch_add(1, Ordering::Relaxed)
    ));
    fs::write(&tmp, bytes).map_err(|e| Error::io(&tmp, e))?;
    fs::rename(&tmp, path).map_err(|e| Error::io(path, e))
}

#[derive(Debug, Clone)]
pub struct TableCache {
    dir: PathBuf,
}

impl TableCache {
    pub fn new(dir: impl Into<PathBuf>) -> Self {
        TableCache { dir: dir.into() }
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    pub fn path_for(&self, p: &PatternSpec) -> PathBuf {
        self.dir
            .join("tables")
            .join(format!("{}.json", p.to_string().replace(',', "_")))
    }

    pub fn load(&self, p: &PatternSpec) -> Result<Option<DistTable>> {
        let path = self.path_for(p);
        let text = match fs::read_to_string(&path) {
            Ok(t) => t,
            Err(e) if e.kind() == std::io::ErrorKind::NotFound => return Ok(None),
            Err(e) => return Err(Error::io(path, e)),
        };
        let json: TableJson = serde_json::from_str(&text)?;
        let table = json.to_table()?;
        Ok((table.pattern == *p).then_some(table))
    }

    pub fn store(&self, table: &DistTable) -> Result<()> {
        let text = serde_json::to_string(&TableJson::from(table))?;
        atomic_write(&self.path_for(&table.pattern), text.as_bytes())
    }
}

/// Oracle rows, optionally backed by a [`TableCache`].
#[derive(Debug, Clone)]
pub struct OracleSource {
    pub cache: Option<TableCache>,
    pub cap: usize,
}

impl OracleSource {
    pub fn new(cache: Option<TableCache>, cap: usize) -> Self {
        OracleSource { cache, cap }
    }

    /// Tables with rows `0..=n_max` for every pattern, enumerating only the
    /// rows the cache lacks and writing the extended tables back.
    pub fn tables(&self, patterns: &[PatternSpec], n_max: usize) -> Result<Vec<DistTable>> {
        let mut tables = Vec::with_capacity(patterns.len());
        for p in patterns {
            let cached = match &self.cache {
                Some(c) => c.load(p)?,
                None => None,
            };
            tables.push(cached.unwrap_or_else(|| DistTable::new(*p)));
        }
        let fresh = (0..=n_max)
            .into_par_iter()
            .map(|n| {
                let missing: Vec<usize> = (0..tables.len())
                    .filter(|&i| tables[i].row(n).is_none())
                    .collect();
                if missing.is_empty() {
                    return Ok((n, Vec::new()));
                }
                let wanted: Vec<PatternSpec> = missing.iter().map(|&i| patterns[i]).collect();
                let rows = oracle_rows(n, &wanted, self.cap)?;
                Ok((n, missing.into_iter().zip(rows).collect::<Vec<_>>()))
            })
            .collect::<Result<Vec<_>>>()?;
        let mut touched = vec![false; tables.len()];
        for (n, rows) in fresh {
            for (i, row) in rows {
                tables[i].rows.insert(n, row);
                touched[i] = true;
            }
        }
        if let Some(cache) = &self.cache {
            for (table, _) in tables.iter().zip(&touched).filter(|(_, t)| **t) {
                cache.store(table)?;
            }
        }
        for table in &mut tables {
            table.rows.retain(|n, _| *n <= n_max);
        }
        Ok(tables)
    }

    pub fn table(&self, p: &PatternSpec, n_max: usize) -> Result<DistTable> {
        Ok(self.tables(std::slice::from_ref(p), n_max)?.remove(0))
    }
}
