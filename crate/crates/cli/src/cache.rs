//! Opt-in results cache: an append-only JSON-lines file of
//! `{"key": <sha256 hex>, "value": <output>}` records.

use std::collections::HashMap;
use std::fs::{File, OpenOptions};
use std::io::{BufRead, BufReader, Write};
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

#[derive(Serialize, Deserialize)]
struct Record {
    key: String,
    value: serde_json::Value,
}

pub struct Cache {
    path: PathBuf,
    entries: HashMap<String, serde_json::Value>,
}

/// Content hash of anything serializable; keys are built from the command,
/// its inputs and the full configuration.
pub fn key<T: Serialize>(what: &T) -> String {
    let bytes = serde_json::to_vec(what).expect("cache keys serialize");
    hex::encode(Sha256::digest(&bytes))
}

impl Cache {
    /// Loads every record; later records win. Unreadable lines are skipped.
    pub fn open(path: &Path) -> std::io::Result<Self> {
        let mut entries = HashMap::new();
        if path.exists() {
            for line in BufReader::new(File::open(path)?).lines() {
                if let Ok(r) = serde_json::from_str::<Record>(&line?) {
                    entries.insert(r.key, r.value);
                }
            }
        }
        Ok(Cache {
            path: path.to_path_buf(),
            entries,
        })
    }

    pub fn get(&self, key: &str) -> Option<&serde_json::Value> {
        self.entries.get(key)
    }

    pub fn put(&mut self, key: String, value: serde_json::Value) -> std::io::Result<()> {
        let mut f = OpenOptions::new()
            .create(true)
            .append(true)
            .open(&self.path)?;
        let line = serde_json::to_string(&Record {
            key: key.clone(),
            value: value.clone(),
        })?;
        writeln!(f, "{line}")?;
        self.entries.insert(key, value);
        Ok(())
    }
}
