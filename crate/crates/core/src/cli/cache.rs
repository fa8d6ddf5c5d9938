//! On-disk cache of computed report rows.
//!
//! Entries are files named after their full key, so a version bump simply
//! stops matching old entries. Writes go to a temporary file that is then
//! renamed into place.

use std::fs;
use std::io;
use std::path::{Path, PathBuf};
use std::process;

/// Bump when the row layout or any computation changes.
pub const CACHE_VERSION: u32 = 1;

/// Environment variable naming the default cache directory.
pub const CACHE_ENV: &str = "MORAVA_BO_CACHE";

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CacheKey {
    pub module: String,
    pub n: u32,
    pub q: usize,
    pub degree: u32,
    pub exact: bool,
    pub version: u32,
}

impl CacheKey {
    pub fn new(module: &str, n: u32, q: usize, degree: u32, exact: bool) -> Self {
        Self {
            module: module.to_owned(),
            n,
            q,
            degree,
            exact,
            version: CACHE_VERSION,
        }
    }

    fn file_name(&self) -> String {
        format!(
            "{}-n{}-q{}-d{}-{}-v{}.json",
            self.module,
            self.n,
            self.q,
            self.degree,
            if self.exact { "exact" } else { "all" },
            self.version
        )
    }
}

#[derive(Debug, Clone)]
pub struct Cache {
    dir: PathBuf,
}

impl Cache {
    pub fn new(dir: impl Into<PathBuf>) -> Self {
        Self { dir: dir.into() }
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    pub fn lookup(&self, key: &CacheKey) -> Option<Vec<u8>> {
        fs::read(self.dir.join(key.file_name())).ok()
    }

    pub fn store(&self, key: &CacheKey, value: &[u8]) -> io::Result<()> {
        fs::create_dir_all(&self.dir)?;
        let target = self.dir.join(key.file_name());
        let tmp = self
            .dir
            .join(format!(".{}.{}.tmp", key.file_name(), process::id()));
        fs::write(&tmp, value)?;
        fs::rename(&tmp, &target)
    }
}
