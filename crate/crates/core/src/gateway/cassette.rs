use std::collections::BTreeMap;
use std::fs::{self, File, OpenOptions};
use std::io::{BufRead, BufReader, Write};
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use super::{GatewayError, PairKey};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CassetteEntry {
    pub pair_key: PairKey,
    pub prompt_digest: String,
    pub raw_text: String,
    pub recorded_at: String,
}

/// Append-only JSON-lines store of recorded model answers.
#[derive(Debug)]
pub struct Cassette {
    path: PathBuf,
    entries: BTreeMap<PairKey, CassetteEntry>,
}

impl Cassette {
    /// Loads `path`, or starts an empty cassette if the file does not exist.
    pub fn open(path: impl AsRef<Path>) -> Result<Self, GatewayError> {
        let path = path.as_ref().to_path_buf();
        let mut entries = BTreeMap::new();
        if path.exists() {
            let io = |source| GatewayError::Io {
                path: path.clone(),
                source,
            };
            let reader = BufReader::new(File::open(&path).map_err(io)?);
            for (n, line) in reader.lines().enumerate() {
                let line = line.map_err(io)?;
                if line.trim().is_empty() {
                    continue;
                }
                let corrupt = |message: String| GatewayError::Corrupt {
                    path: path.clone(),
                    line: n + 1,
                    message,
                };
                let entry: CassetteEntry = serde_json::from_str(&line).map_err(|e| corrupt(e.to_string()))?;
                if entries.contains_key(&entry.pair_key) {
                    return Err(corrupt(format!("duplicate key {}", entry.pair_key)));
                }
                entries.insert(entry.pair_key.clone(), entry);
            }
        }
        Ok(Cassette { path, entries })
    }

    pub fn path(&self) -> &Path {
        &self.path
    }

    pub fn get(&self, key: &PairKey) -> Option<&CassetteEntry> {
        self.entries.get(key)
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entries(&self) -> impl Iterator<Item = &CassetteEntry> {
        self.entries.values()
    }

    /// Records an answer. A new key is appended to the file; replacing an
    /// existing key requires `overwrite` and rewrites the file.
    pub fn record(
        &mut self,
        key: PairKey,
        prompt_digest: &str,
        raw_text: &str,
        overwrite: bool,
    ) -> Result<(), GatewayError> {
        let replacing = self.entries.contains_key(&key);
        if replacing && !overwrite {
            return Err(GatewayError::DuplicateKey(key));
        }
        let entry = CassetteEntry {
            pair_key: key.clone(),
            prompt_digest: prompt_digest.to_string(),
            raw_text: raw_text.to_string(),
            recorded_at: chrono::Utc::now().to_rfc3339_opts(chrono::SecondsFormat::Secs, true),
        };
        let path = self.path.clone();
        let io = |source| GatewayError::Io {
            path: path.clone(),
            source,
        };
        if replacing {
            self.entries.insert(key, entry);
            let mut buf = String::new();
            for e in self.entries.values() {
                buf.push_str(&serde_json::to_string(e).expect("entry serializes"));
                buf.push('\n');
            }
            let tmp = self.path.with_extension("jsonl.tmp");
            fs::write(&tmp, buf).map_err(io)?;
            fs::rename(&tmp, &self.path).map_err(io)?;
        } else {
            let mut f = OpenOptions::new()
                .create(true)
                .append(true)
                .open(&self.path)
                .map_err(io)?;
            writeln!(f, "{}", serde_json::to_string(&entry).expect("entry serializes")).map_err(io)?;
            f.sync_data().map_err(io)?;
            self.entries.insert(key, entry);
        }
        Ok(())
    }
}
