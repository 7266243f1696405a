//! Content-addressed result cache keyed by input digest.
//!
//! Entries are JSON files named by the SHA-256 of (operation name, input
//! bytes). Writes go through a temporary file and an atomic rename;
//! corrupted entries are evicted rather than trusted.

use serde::{de::DeserializeOwned, Serialize};
use sha2::{Digest, Sha256};
use std::fs;
use std::path::{Path, PathBuf};

/// Environment variable overriding the cache directory.
pub const CACHE_DIR_ENV: &str = "PRETZEL_SURGEON_CACHE_DIR";

pub struct ResultCache {
    dir: PathBuf,
}

#[derive(Debug, serde::Serialize, serde::Deserialize)]
struct Envelope<T> {
    op: String,
    digest: String,
    result: T,
}

impl ResultCache {
    pub fn new(dir: impl Into<PathBuf>) -> Self {
        ResultCache { dir: dir.into() }
    }

    /// Cache directory from the environment override, or a `.cache`
    /// directory next to the current working directory.
    pub fn from_env() -> Self {
        let dir = std::env::var_os(CACHE_DIR_ENV)
            .map(PathBuf::from)
            .unwrap_or_else(|| PathBuf::from(".pretzel-surgeon-cache"));
        ResultCache::new(dir)
    }

    pub fn digest(op: &str, input: &[u8]) -> String {
        let mut hasher = Sha256::new();
        hasher.update(op.as_bytes());
        hasher.update([0]);
        hasher.update(input);
        hex::encode(hasher.finalize())
    }

    fn entry_path(&self, digest: &str) -> PathBuf {
        self.dir.join(format!("{digest}.json"))
    }

    /// Look up a cached result; evicts and misses on any corruption.
    pub fn get<T: DeserializeOwned>(&self, op: &str, input: &[u8]) -> Option<T> {
        let digest = Self::digest(op, input);
        let path = self.entry_path(&digest);
        let bytes = fs::read(&path).ok()?;
        match serde_json::from_slice::<Envelope<T>>(&bytes) {
            Ok(envelope) if envelope.digest == digest && envelope.op == op => {
                Some(envelope.result)
            }
            _ => {
                let _ = fs::remove_file(&path);
                None
            }
        }
    }

    /// Store a result under the digest of (op, input).
    pub fn put<T: Serialize>(&self, op: &str, input: &[u8], result: &T) -> std::io::Result<()> {
        fs::create_dir_all(&self.dir)?;
        let digest = Self::digest(op, input);
        let envelope =
            Envelope { op: op.to_string(), digest: digest.clone(), result };
        let bytes = serde_json::to_vec_pretty(&envelope)?;
        let tmp = self.dir.join(format!(".{digest}.tmp"));
        fs::write(&tmp, bytes)?;
        fs::rename(&tmp, self.entry_path(&digest))?;
        Ok(())
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn temp_dir(tag: &str) -> PathBuf {
        let dir = std::env::temp_dir()
            .join(format!("pretzel-cache-test-{tag}-{}", std::process::id()));
        let _ = fs::remove_dir_all(&dir);
        dir
    }

    #[test]
    fn round_trip_and_digest_stability() {
        let cache = ResultCache::new(temp_dir("round-trip"));
        let input = b"some input bytes";
        assert!(cache.get::<Vec<i64>>("op", input).is_none());
        cache.put("op", input, &vec![1i64, 2, 3]).unwrap();
        assert_eq!(cache.get::<Vec<i64>>("op", input), Some(vec![1, 2, 3]));
        // same bytes, same digest -> hit; different op -> miss
        assert!(cache.get::<Vec<i64>>("other-op", input).is_none());
        // different bytes -> miss
        assert!(cache.get::<Vec<i64>>("op", b"other input").is_none());
    }

    #[test]
    fn corrupted_entries_are_evicted() {
        let cache = ResultCache::new(temp_dir("corrupt"));
        let input = b"payload";
        cache.put("op", input, &42i64).unwrap();
        let digest = ResultCache::digest("op", input);
        fs::write(cache.entry_path(&digest), b"{ not json").unwrap();
        assert!(cache.get::<i64>("op", input).is_none());
        assert!(!cache.entry_path(&digest).exists());
    }
}
