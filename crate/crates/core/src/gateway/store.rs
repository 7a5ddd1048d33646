use std::fs::{self, File, OpenOptions};
use std::io::{BufRead, BufReader, Write};
use std::path::{Path, PathBuf};

use super::{GatewayError, ModelResponse};

/// `runs.jsonl`: one [`ModelResponse`] per line.
#[derive(Debug)]
pub struct RunStore {
    path: PathBuf,
    responses: Vec<ModelResponse>,
}

impl RunStore {
    /// Opens a store for writing. Existing responses for which `keep` returns
    /// true are carried over; the rest are discarded.
    pub fn create(path: impl AsRef<Path>, keep: impl Fn(&ModelResponse) -> bool) -> Result<Self, GatewayError> {
        let path = path.as_ref().to_path_buf();
        let responses = if path.exists() {
            Self::load(&path)?.into_iter().filter(|r| keep(r)).collect()
        } else {
            Vec::new()
        };
        let mut store = RunStore { path, responses };
        store.rewrite()?;
        Ok(store)
    }

    pub fn load(path: impl AsRef<Path>) -> Result<Vec<ModelResponse>, GatewayError> {
        let path = path.as_ref();
        let io = |source| GatewayError::Io {
            path: path.to_path_buf(),
            source,
        };
        let reader = BufReader::new(File::open(path).map_err(io)?);
        let mut out = Vec::new();
        for (n, line) in reader.lines().enumerate() {
            let line = line.map_err(io)?;
            if line.trim().is_empty() {
                continue;
            }
            out.push(serde_json::from_str(&line).map_err(|e| GatewayError::Corrupt {
                path: path.to_path_buf(),
                line: n + 1,
                message: e.to_string(),
            })?);
        }
        Ok(out)
    }

    pub fn path(&self) -> &Path {
        &self.path
    }

    pub fn responses(&self) -> &[ModelResponse] {
        &self.responses
    }

    /// Appends and syncs one response.
    pub fn append(&mut self, response: &ModelResponse) -> Result<(), GatewayError> {
        let io = |source| GatewayError::Io {
            path: self.path.clone(),
            source,
        };
        let mut f = OpenOptions::new()
            .create(true)
            .append(true)
            .open(&self.path)
            .map_err(io)?;
        writeln!(f, "{}", serde_json::to_string(response).expect("response serializes")).map_err(io)?;
        f.sync_data().map_err(io)?;
        self.responses.push(response.clone());
        Ok(())
    }

    /// Sorts by (model, run id) and rewrites the file so that concurrent
    /// completion order does not leak into the output.
    pub fn finalize(&mut self) -> Result<(), GatewayError> {
        self.responses
            .sort_by(|a, b| (&a.pair_key.model_name, a.run_id).cmp(&(&b.pair_key.model_name, b.run_id)));
        self.rewrite()
    }

    fn rewrite(&mut self) -> Result<(), GatewayError> {
        let io = |source| GatewayError::Io {
            path: self.path.clone(),
            source,
        };
        let mut buf = String::new();
        for r in &self.responses {
            buf.push_str(&serde_json::to_string(r).expect("response serializes"));
            buf.push('\n');
        }
        let tmp = self.path.with_extension("jsonl.tmp");
        fs::write(&tmp, buf).map_err(io)?;
        fs::rename(&tmp, &self.path).map_err(io)
    }
}
