//! Content-addressed on-disk cache for computed character tables.
//!
//! Each entry is a JSON envelope holding the format version, the key, the
//! payload text and its SHA-256. Entries that fail any check are ignored
//! (with a warning) and recomputed.

use std::fs;
use std::path::{Path, PathBuf};

use log::{debug, warn};
use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::error::{Error, Result};
use crate::exact::dixon::{character_table, CharacterTable};
use crate::exact::{GroupName, ReflectionGroup};
use crate::hyperoctahedral::BcCharTable;
use crate::symmetric::SnCharTable;

pub const CACHE_FORMAT_VERSION: u32 = 1;
pub const CACHE_DIR_ENV: &str = "SAXL_CACHE_DIR";

#[derive(Serialize, Deserialize)]
struct Envelope {
    format_version: u32,
    key: String,
    sha256: String,
    payload: String,
}

fn digest(s: &str) -> String {
    hex::encode(Sha256::digest(s.as_bytes()))
}

#[derive(Clone, Debug)]
pub struct Cache {
    dir: PathBuf,
}

impl Cache {
    pub fn new(dir: impl Into<PathBuf>) -> Self {
        Cache { dir: dir.into() }
    }

    /// `$SAXL_CACHE_DIR`, else `$XDG_CACHE_HOME/saxl`, else `~/.cache/saxl`.
    pub fn default_dir() -> PathBuf {
        if let Some(d) = std::env::var_os(CACHE_DIR_ENV) {
            return PathBuf::from(d);
        }
        if let Some(d) = std::env::var_os("XDG_CACHE_HOME") {
            return PathBuf::from(d).join("saxl");
        }
        match std::env::var_os("HOME") {
            Some(h) => PathBuf::from(h).join(".cache").join("saxl"),
            None => std::env::temp_dir().join("saxl-cache"),
        }
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    pub fn path_for(&self, key: &str) -> PathBuf {
        self.dir.join(format!("{}.json", digest(key)))
    }

    /// Payload text stored under `key`, if present and intact.
    pub fn get_raw(&self, key: &str) -> Option<String> {
        let path = self.path_for(key);
        let text = fs::read_to_string(&path).ok()?;
        let env: Envelope = match serde_json::from_str(&text) {
            Ok(e) => e,
            Err(e) => {
                warn!("cache entry {} is unreadable ({e}); recomputing", path.display());
                return None;
            }
        };
        if env.format_version != CACHE_FORMAT_VERSION {
            debug!("cache entry {} has format version {}; recomputing", path.display(), env.format_version);
            return None;
        }
        if env.key != key {
            warn!("cache entry {} belongs to another key; recomputing", path.display());
            return None;
        }
        if digest(&env.payload) != env.sha256 {
            warn!("cache entry {} failed its checksum; recomputing", path.display());
            return None;
        }
        Some(env.payload)
    }

    pub fn put_raw(&self, key: &str, payload: String) -> Result<()> {
        fs::create_dir_all(&self.dir)?;
        let env =
            Envelope { format_version: CACHE_FORMAT_VERSION, key: key.to_string(), sha256: digest(&payload), payload };
        let text = serde_json::to_string(&env)?;
        let path = self.path_for(key);
        let tmp = path.with_extension(format!("tmp{}", std::process::id()));
        fs::write(&tmp, text)?;
        fs::rename(&tmp, &path).map_err(|e| Error::Cache(format!("{}: {e}", path.display())))
    }

    pub fn get<T: DeserializeOwned>(&self, key: &str) -> Option<T> {
        let payload = self.get_raw(key)?;
        match serde_json::from_str(&payload) {
            Ok(v) => Some(v),
            Err(e) => {
                warn!("cache entry for {key} does not decode ({e}); recomputing");
                None
            }
        }
    }

    pub fn put<T: Serialize>(&self, key: &str, value: &T) -> Result<()> {
        self.put_raw(key, serde_json::to_string(value)?)
    }

    /// Cached value, or `compute()` stored for next time. A failed write
    /// is logged and does not fail the computation.
    pub fn get_or_compute<T, F>(&self, key: &str, compute: F) -> Result<T>
    where
        T: Serialize + DeserializeOwned,
        F: FnOnce() -> Result<T>,
    {
        if let Some(v) = self.get(key) {
            debug!("cache hit for {key}");
            return Ok(v);
        }
        let v = compute()?;
        if let Err(e) = self.put(key, &v) {
            warn!("could not write cache entry for {key}: {e}");
        }
        Ok(v)
    }
}

// i64 rather than i128: serde_json decodes it several times faster.
#[derive(Serialize, Deserialize)]
struct SnRows {
    n: usize,
    rows: Vec<Vec<i64>>,
}

/// `S_n` table; the cache holds the bare rows in `Partition::all(n)` order.
pub fn sn_table(cache: Option<&Cache>, n: usize) -> Result<SnCharTable> {
    match cache {
        None => Ok(SnCharTable::compute(n)),
        Some(c) => {
            let key = format!("sn-rows/n={n}");
            if let Some(r) = c.get::<SnRows>(&key).filter(|r| r.n == n) {
                let rows = r.rows.into_iter().map(|row| row.into_iter().map(i128::from).collect()).collect();
                if let Ok(t) = SnCharTable::from_rows(n, rows) {
                    return Ok(t);
                }
                warn!("cached S_{n} table has the wrong shape; recomputing");
            }
            let t = SnCharTable::compute(n);
            let narrow: Option<Vec<Vec<i64>>> =
                t.rows.iter().map(|row| row.iter().map(|&v| i64::try_from(v).ok()).collect()).collect();
            match narrow {
                Some(rows) => {
                    if let Err(e) = c.put(&key, &SnRows { n, rows }) {
                        warn!("could not write cache entry for {key}: {e}");
                    }
                }
                None => debug!("S_{n} values exceed 64 bits; not cached"),
            }
            Ok(t)
        }
    }
}

pub fn bc_table(cache: Option<&Cache>, n: usize) -> Result<BcCharTable> {
    match cache {
        None => Ok(BcCharTable::compute(n)),
        Some(c) => {
            let j = c.get_or_compute(&format!("bc-table/n={n}"), || Ok(BcCharTable::compute(n).to_json()))?;
            BcCharTable::from_json(&j)
        }
    }
}

/// Character table of a reflection group, classes in the engine's order.
/// A cached table is checked for orthogonality before use.
pub fn reflection_table(cache: Option<&Cache>, name: GroupName) -> Result<(ReflectionGroup, CharacterTable)> {
    let g = ReflectionGroup::build(name)?;
    let compute = || character_table(&g.group);
    let t = match cache {
        None => compute()?,
        Some(c) => {
            let key = format!("reflection-table/{name}");
            let t: CharacterTable = c.get_or_compute(&key, compute)?;
            if t.class_sizes.len() != g.group.num_classes() || t.verify().is_err() {
                warn!("cached table for {name} is inconsistent; recomputing");
                let t = compute()?;
                c.put(&key, &t)?;
                t
            } else {
                t
            }
        }
    };
    Ok((g, t))
}
