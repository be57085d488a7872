//! File formats, caching, parallel enumeration, OEIS access and the
//! verification suites on top of [`mmp132_core`].

pub mod cache;
pub mod error;
pub mod json;
pub mod oeis;
pub mod parallel;
pub mod shared;
pub mod suites;

pub use error::{Error, Result};
pub use mmp132_core as core;

/// Environment variable naming the cache directory.
pub const CACHE_DIR_ENV: &str = "MMP132_CACHE_DIR";
