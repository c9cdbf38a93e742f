//! Advisory on-disk store for expensive oracle values.
//!
//! The file holds one JSON object per line:
//! `{"schema_version", "key": {family, p, r, n, name}, "value", "code_version"}`.
//! Records from another schema or code version are ignored, unreadable lines
//! are skipped with a warning, and [`Cache::flush`] rewrites the whole file
//! through a temporary sibling and a rename.

use std::collections::BTreeMap;
use std::fs;
use std::io::{BufRead, BufReader, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::sync::RwLock;

use fibcube_core::{CubeParams, Family};
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::error::{Error, Result};

pub const SCHEMA_VERSION: u32 = 1;

/// Version stamped on every record. Bump the suffix when an oracle changes
/// meaning without a crate version bump.
pub const CODE_VERSION: &str = concat!(env!("CARGO_PKG_VERSION"), "+oracle.1");

/// Environment variable naming the cache file when no flag is given.
pub const CACHE_ENV: &str = "FIBCUBE_CACHE";

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct CacheKey {
    pub family: String,
    pub p: u32,
    pub r: u32,
    pub n: u32,
    pub name: String,
}

impl CacheKey {
    pub fn new(params: &CubeParams, name: &str) -> Self {
        CacheKey {
            family: params.family.to_string(),
            p: params.p,
            r: params.r,
            n: params.n,
            name: name.to_string(),
        }
    }

    pub fn family(&self) -> Option<Family> {
        self.family.parse().ok()
    }
}

#[derive(Serialize, Deserialize)]
struct Record {
    schema_version: u32,
    key: CacheKey,
    value: Value,
    code_version: String,
}

/// In-memory map, optionally mirrored to a file.
#[derive(Debug, Default)]
pub struct Cache {
    path: Option<PathBuf>,
    entries: RwLock<BTreeMap<CacheKey, Value>>,
}

impl Cache {
    /// A cache that is never persisted.
    pub fn in_memory() -> Self {
        Cache::default()
    }

    /// Loads `path` if it exists. A missing file is an empty cache.
    pub fn open(path: impl Into<PathBuf>) -> Result<Self> {
        let path = path.into();
        let mut entries = BTreeMap::new();
        match fs::File::open(&path) {
            Ok(file) => {
                for (lineno, line) in BufReader::new(file).lines().enumerate() {
                    let line = line.map_err(|e| Error::io(&path, e))?;
                    if line.trim().is_empty() {
                        continue;
                    }
                    match serde_json::from_str::<Record>(&line) {
                        Ok(rec)
                            if rec.schema_version == SCHEMA_VERSION
                                && rec.code_version == CODE_VERSION =>
                        {
                            entries.insert(rec.key, rec.value);
                        }
                        Ok(_) => log::debug!(
                            "{}:{}: stale cache record ignored",
                            path.display(),
                            lineno + 1
                        ),
                        Err(e) => log::warn!(
                            "{}:{}: unreadable cache record skipped: {e}",
                            path.display(),
                            lineno + 1
                        ),
                    }
                }
            }
            Err(e) if e.kind() == std::io::ErrorKind::NotFound => {}
            Err(e) => return Err(Error::io(&path, e)),
        }
        Ok(Cache {
            path: Some(path),
            entries: RwLock::new(entries),
        })
    }

    pub fn path(&self) -> Option<&Path> {
        self.path.as_deref()
    }

    pub fn get(&self, key: &CacheKey) -> Option<Value> {
        self.entries.read().expect("cache lock").get(key).cloned()
    }

    pub fn put(&self, key: CacheKey, value: Value) {
        self.entries.write().expect("cache lock").insert(key, value);
    }

    pub fn len(&self) -> usize {
        self.entries.read().expect("cache lock").len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Writes every entry, sorted by key, replacing the file atomically.
    /// Does nothing for an in-memory cache.
    pub fn flush(&self) -> Result<()> {
        let Some(path) = &self.path else {
            return Ok(());
        };
        let mut tmp_name = path.file_name().unwrap_or_default().to_os_string();
        tmp_name.push(format!(".tmp{}", std::process::id()));
        let tmp = path.with_file_name(tmp_name);
        let write = || -> std::io::Result<()> {
            let mut out = BufWriter::new(fs::File::create(&tmp)?);
            for (key, value) in self.entries.read().expect("cache lock").iter() {
                let rec = Record {
                    schema_version: SCHEMA_VERSION,
                    key: key.clone(),
                    value: value.clone(),
                    code_version: CODE_VERSION.to_string(),
                };
                serde_json::to_writer(&mut out, &rec)?;
                out.write_all(b"\n")?;
            }
            out.into_inner().map_err(|e| e.into_error())?.sync_all()?;
            fs::rename(&tmp, path)
        };
        write().map_err(|e| {
            let _ = fs::remove_file(&tmp);
            Error::io(path, e)
        })
    }
}
