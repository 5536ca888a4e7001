//! Append-only results cache, one JSON record per line.

use std::fs::OpenOptions;
use std::io::{BufRead, BufReader, Write};
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::error::Result;

/// Environment variable naming the cache file.
pub const CACHE_ENV: &str = "PARTSAT_CACHE";
pub const DEFAULT_CACHE_FILE: &str = "partsat-cache.jsonl";

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CacheRecord {
    pub query: String,
    pub outcome: serde_json::Value,
    pub witness_hash: Option<String>,
    pub seed: Option<u64>,
    pub version: String,
}

#[derive(Debug, Clone)]
pub struct ResultCache {
    path: PathBuf,
}

impl ResultCache {
    pub fn new(path: impl Into<PathBuf>) -> Self {
        Self { path: path.into() }
    }

    /// The file named by `PARTSAT_CACHE`, or `partsat-cache.jsonl`.
    pub fn from_env() -> Self {
        Self::new(std::env::var_os(CACHE_ENV).map_or_else(|| PathBuf::from(DEFAULT_CACHE_FILE), PathBuf::from))
    }

    pub fn path(&self) -> &Path {
        &self.path
    }

    /// The most recent record for `query` written by this crate version.
    /// Unreadable lines are skipped.
    pub fn lookup(&self, query: &str) -> Result<Option<CacheRecord>> {
        let file = match std::fs::File::open(&self.path) {
            Ok(f) => f,
            Err(e) if e.kind() == std::io::ErrorKind::NotFound => return Ok(None),
            Err(e) => return Err(e.into()),
        };
        let mut hit = None;
        for line in BufReader::new(file).lines() {
            let line = line?;
            if let Ok(rec) = serde_json::from_str::<CacheRecord>(&line) {
                if rec.query == query && rec.version == env!("CARGO_PKG_VERSION") {
                    hit = Some(rec);
                }
            }
        }
        Ok(hit)
    }

    pub fn append(&self, record: &CacheRecord) -> Result<()> {
        let mut f = OpenOptions::new().create(true).append(true).open(&self.path)?;
        let mut line = serde_json::to_string(record).expect("records always serialize");
        line.push('\n');
        f.write_all(line.as_bytes())?;
        Ok(())
    }
}

impl CacheRecord {
    pub fn new(query: String, outcome: serde_json::Value, witness_json: Option<&str>, seed: Option<u64>) -> Self {
        Self {
            query,
            outcome,
            witness_hash: witness_json.map(witness_hash),
            seed,
            version: env!("CARGO_PKG_VERSION").to_string(),
        }
    }
}

/// Hex SHA-256 of a serialized witness.
pub fn witness_hash(json: &str) -> String {
    hex::encode(Sha256::digest(json.as_bytes()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip_and_latest_wins() {
        let dir = tempfile::tempdir().unwrap();
        let cache = ResultCache::new(dir.path().join("c.jsonl"));
        assert_eq!(cache.lookup("q").unwrap(), None);
        cache.append(&CacheRecord::new("q".into(), serde_json::json!(1), None, None)).unwrap();
        cache.append(&CacheRecord::new("other".into(), serde_json::json!(2), None, None)).unwrap();
        cache.append(&CacheRecord::new("q".into(), serde_json::json!(3), Some("{}"), Some(7))).unwrap();
        let hit = cache.lookup("q").unwrap().unwrap();
        assert_eq!(hit.outcome, serde_json::json!(3));
        assert_eq!(hit.seed, Some(7));
        assert_eq!(hit.witness_hash.unwrap().len(), 64);
    }
}
