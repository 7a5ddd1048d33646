//! Chat-completion execution with live, replay and record backends.
//!
//! Every completed response is appended to the run store before
//! [`Gateway::complete`] returns.

mod cassette;
mod live;
mod store;

use std::fmt;
use std::path::PathBuf;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::promptgen::prompt_digest;

pub use cassette::{Cassette, CassetteEntry};
pub use live::{LiveBackend, API_KEY_ENV};
pub use store::RunStore;

/// Identifies one execution of a planned pair against one model.
///
/// `repeat` distinguishes repeated executions of the same pair.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct PairKey {
    pub example_id: u32,
    pub target_id: u32,
    pub model_name: String,
    #[serde(default)]
    pub repeat: u32,
}

impl fmt::Display for PairKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}->{} @{}", self.example_id, self.target_id, self.model_name)?;
        if self.repeat > 0 {
            write!(f, " #{}", self.repeat)?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum TransportStatus {
    Ok,
    Timeout,
    HttpError,
    Refused,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ModelConfig {
    pub name: String,
    #[serde(default)]
    pub endpoint_url: String,
    #[serde(default)]
    pub temperature: f64,
    #[serde(default = "default_max_output")]
    pub max_output_tokens: u64,
    #[serde(default = "default_timeout")]
    pub timeout_secs: f64,
    #[serde(default = "default_retries")]
    pub retries: u32,
    /// First retry delay; doubles on each further attempt.
    #[serde(default = "default_backoff")]
    pub backoff_ms: u64,
}

fn default_max_output() -> u64 {
    4096
}
fn default_timeout() -> f64 {
    120.0
}
fn default_retries() -> u32 {
    3
}
fn default_backoff() -> u64 {
    1000
}

impl ModelConfig {
    pub fn new(name: impl Into<String>, endpoint_url: impl Into<String>) -> Self {
        ModelConfig {
            name: name.into(),
            endpoint_url: endpoint_url.into(),
            temperature: 0.0,
            max_output_tokens: default_max_output(),
            timeout_secs: default_timeout(),
            retries: default_retries(),
            backoff_ms: default_backoff(),
        }
    }

    pub fn validate(&self) -> Result<(), GatewayError> {
        if self.name.trim().is_empty() {
            return Err(GatewayError::Config("model name is empty".into()));
        }
        if self.timeout_secs.is_nan() || self.timeout_secs <= 0.0 {
            return Err(GatewayError::Config(format!(
                "model {}: timeout must be positive",
                self.name
            )));
        }
        Ok(())
    }
}

/// A prompt ready to send.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChatRequest {
    pub run_id: u32,
    pub pair_key: PairKey,
    pub message_1: String,
    pub message_2: String,
    /// Digest recorded in the plan; checked against the messages before sending.
    pub prompt_digest: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ModelResponse {
    pub run_id: u32,
    pub pair_key: PairKey,
    pub raw_text: String,
    pub latency_secs: f64,
    pub transport_status: TransportStatus,
}

/// What a backend hands back on success.
#[derive(Debug, Clone, PartialEq)]
pub struct Completion {
    pub raw_text: String,
    pub latency_secs: f64,
}

#[derive(Debug, Error)]
pub enum GatewayError {
    #[error("configuration error: {0}")]
    Config(String),
    #[error("transport failure for {pair_key} ({status:?}): {message}")]
    Transport {
        pair_key: PairKey,
        status: TransportStatus,
        message: String,
    },
    #[error("cassette has no entry for {0}")]
    CassetteMiss(PairKey),
    #[error("prompt digest mismatch for {key}: expected {expected}, got {actual}")]
    DigestMismatch {
        key: PairKey,
        expected: String,
        actual: String,
    },
    #[error("cassette already holds {0}; pass overwrite to replace it")]
    DuplicateKey(PairKey),
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("{path}:{line}: {message}")]
    Corrupt {
        path: PathBuf,
        line: usize,
        message: String,
    },
}

pub trait Backend: Send + Sync {
    fn complete(&self, request: &ChatRequest) -> Result<Completion, GatewayError>;
}

/// Serves recorded responses; a miss is an error, never a fabricated answer.
pub struct ReplayBackend {
    cassette: Cassette,
}

impl ReplayBackend {
    pub fn new(cassette: Cassette) -> Self {
        ReplayBackend { cassette }
    }
}

impl Backend for ReplayBackend {
    fn complete(&self, request: &ChatRequest) -> Result<Completion, GatewayError> {
        let entry = self
            .cassette
            .get(&request.pair_key)
            .ok_or_else(|| GatewayError::CassetteMiss(request.pair_key.clone()))?;
        if entry.prompt_digest != request.prompt_digest {
            return Err(GatewayError::DigestMismatch {
                key: request.pair_key.clone(),
                expected: entry.prompt_digest.clone(),
                actual: request.prompt_digest.clone(),
            });
        }
        Ok(Completion {
            raw_text: entry.raw_text.clone(),
            latency_secs: 0.0,
        })
    }
}

/// Calls an inner backend and records each answer into a cassette.
pub struct RecordingBackend<B> {
    inner: B,
    cassette: Mutex<Cassette>,
    overwrite: bool,
}

impl<B: Backend> RecordingBackend<B> {
    pub fn new(inner: B, cassette: Cassette, overwrite: bool) -> Self {
        RecordingBackend {
            inner,
            cassette: Mutex::new(cassette),
            overwrite,
        }
    }
}

impl<B: Backend> Backend for RecordingBackend<B> {
    fn complete(&self, request: &ChatRequest) -> Result<Completion, GatewayError> {
        if !self.overwrite && self.cassette.lock().unwrap().get(&request.pair_key).is_some() {
            return Err(GatewayError::DuplicateKey(request.pair_key.clone()));
        }
        let completion = self.inner.complete(request)?;
        self.cassette.lock().unwrap().record(
            request.pair_key.clone(),
            &request.prompt_digest,
            &completion.raw_text,
            self.overwrite,
        )?;
        Ok(completion)
    }
}

/// Front door for prompt execution: verifies digests, delegates to a backend
/// and persists responses.
pub struct Gateway {
    backend: Box<dyn Backend>,
    store: Mutex<RunStore>,
}

impl Gateway {
    pub fn new(backend: Box<dyn Backend>, store: RunStore) -> Self {
        Gateway {
            backend,
            store: Mutex::new(store),
        }
    }

    pub fn complete(&self, request: &ChatRequest) -> Result<ModelResponse, GatewayError> {
        let actual = prompt_digest(&request.message_1, &request.message_2);
        if actual != request.prompt_digest {
            return Err(GatewayError::DigestMismatch {
                key: request.pair_key.clone(),
                expected: request.prompt_digest.clone(),
                actual,
            });
        }
        let completion = match self.backend.complete(request) {
            Ok(c) => c,
            Err(err) => {
                if let GatewayError::Transport { status, .. } = &err {
                    let failed = ModelResponse {
                        run_id: request.run_id,
                        pair_key: request.pair_key.clone(),
                        raw_text: String::new(),
                        latency_secs: 0.0,
                        transport_status: *status,
                    };
                    self.store.lock().unwrap().append(&failed)?;
                }
                return Err(err);
            }
        };
        let response = ModelResponse {
            run_id: request.run_id,
            pair_key: request.pair_key.clone(),
            raw_text: completion.raw_text,
            latency_secs: completion.latency_secs,
            transport_status: TransportStatus::Ok,
        };
        self.store.lock().unwrap().append(&response)?;
        Ok(response)
    }

    /// Runs all requests with at most `parallelism` in flight. Results come
    /// back in request order; the first error aborts the remaining work.
    pub fn complete_all(
        &self,
        requests: &[ChatRequest],
        parallelism: usize,
    ) -> Result<Vec<ModelResponse>, GatewayError> {
        let next = AtomicUsize::new(0);
        let failed = std::sync::atomic::AtomicBool::new(false);
        let slots: Vec<Mutex<Option<Result<ModelResponse, GatewayError>>>> =
            requests.iter().map(|_| Mutex::new(None)).collect();
        std::thread::scope(|scope| {
            for _ in 0..parallelism.clamp(1, requests.len().max(1)) {
                scope.spawn(|| loop {
                    if failed.load(Ordering::SeqCst) {
                        break;
                    }
                    let i = next.fetch_add(1, Ordering::SeqCst);
                    let Some(req) = requests.get(i) else { break };
                    let result = self.complete(req);
                    if result.is_err() {
                        failed.store(true, Ordering::SeqCst);
                    }
                    *slots[i].lock().unwrap() = Some(result);
                });
            }
        });
        let mut out = Vec::with_capacity(requests.len());
        for slot in slots {
            match slot.into_inner().unwrap() {
                Some(r) => out.push(r?),
                None => break,
            }
        }
        Ok(out)
    }

    /// Rewrites the run store in canonical order.
    pub fn finish(self) -> Result<RunStore, GatewayError> {
        let mut store = self.store.into_inner().unwrap();
        store.finalize()?;
        Ok(store)
    }
}
