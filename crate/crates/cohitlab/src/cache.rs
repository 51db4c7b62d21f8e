//! A directory of JSON results keyed by operation and degree.
//!
//! Entries carry a schema version and a hash of the computational
//! conventions; a mismatch on either is treated as a miss. Writes go to a
//! temporary file in the cache directory and are renamed into place.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::{SystemTime, UNIX_EPOCH};

use serde::{Deserialize, Serialize};
use serde_json::Value;
use sha2::{Digest, Sha256};

pub const SCHEMA_VERSION: u32 = 1;

/// Everything that changes the meaning of a stored result.
pub const CONVENTIONS: &str =
    "lambda-admissible:a<=2b;psi:first-variable;hit-columns:descending;coinvariant-reps:first;weights:left-lex";

#[must_use]
pub fn convention_hash() -> String {
    hex::encode(&Sha256::digest(CONVENTIONS.as_bytes())[..8])
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CacheKey {
    pub operation: String,
    pub q: usize,
    pub n: u32,
    pub omega: Option<Vec<u32>>,
    pub group: Option<String>,
    pub convention: String,
}

impl CacheKey {
    #[must_use]
    pub fn new(operation: &str, q: usize, n: u32) -> Self {
        Self { operation: operation.into(), q, n, omega: None, group: None, convention: convention_hash() }
    }

    fn file_name(&self) -> String {
        let mut s = format!("{}-q{}-n{}", self.operation, self.q, self.n);
        if let Some(w) = &self.omega {
            let parts: Vec<String> = w.iter().map(u32::to_string).collect();
            s.push_str(&format!("-w{}", parts.join("_")));
        }
        if let Some(g) = &self.group {
            s.push_str(&format!("-{g}"));
        }
        s.push_str(".json");
        s
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Provenance {
    pub code_version: String,
    pub timestamp: u64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CacheEntry {
    pub schema_version: u32,
    pub key: CacheKey,
    pub payload: Value,
    pub provenance: Provenance,
}

#[derive(Clone, Debug)]
pub struct Cache {
    dir: PathBuf,
}

impl Cache {
    pub fn new(dir: impl Into<PathBuf>) -> Self {
        Self { dir: dir.into() }
    }

    /// `COHITLAB_CACHE`, or `.cohitlab/` in the working directory.
    #[must_use]
    pub fn from_env() -> Self {
        Self::new(std::env::var_os("COHITLAB_CACHE").map_or_else(|| PathBuf::from(".cohitlab"), PathBuf::from))
    }

    #[must_use]
    pub fn dir(&self) -> &Path {
        &self.dir
    }

    #[must_use]
    pub fn path_of(&self, key: &CacheKey) -> PathBuf {
        self.dir.join(key.file_name())
    }

    /// The stored payload, if present, readable and written under the current conventions.
    #[must_use]
    pub fn get(&self, key: &CacheKey) -> Option<Value> {
        let text = fs::read_to_string(self.path_of(key)).ok()?;
        let entry: CacheEntry = serde_json::from_str(&text).ok()?;
        (entry.schema_version == SCHEMA_VERSION && entry.key == *key).then_some(entry.payload)
    }

    pub fn put(&self, key: &CacheKey, payload: &Value) -> std::io::Result<()> {
        fs::create_dir_all(&self.dir)?;
        let timestamp = SystemTime::now().duration_since(UNIX_EPOCH).map_or(0, |d| d.as_secs());
        let entry = CacheEntry {
            schema_version: SCHEMA_VERSION,
            key: key.clone(),
            payload: payload.clone(),
            provenance: Provenance { code_version: env!("CARGO_PKG_VERSION").into(), timestamp },
        };
        let mut tmp = tempfile::NamedTempFile::new_in(&self.dir)?;
        serde_json::to_writer(&mut tmp, &entry)?;
        tmp.flush()?;
        tmp.persist(self.path_of(key)).map_err(|e| e.error)?;
        Ok(())
    }
}
