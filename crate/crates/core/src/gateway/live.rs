use std::time::{Duration, Instant};

use serde::Deserialize;
use serde_json::json;

use super::{Backend, ChatRequest, Completion, GatewayError, ModelConfig, TransportStatus};

/// Environment variable holding the bearer token for the live endpoint.
pub const API_KEY_ENV: &str = "DP_SCOUT_API_KEY";

/// Chat-completion client speaking the common `messages` JSON schema.
pub struct LiveBackend {
    config: ModelConfig,
    api_key: String,
    agent: ureq::Agent,
}

#[derive(Deserialize)]
struct ChatResponse {
    choices: Vec<Choice>,
}

#[derive(Deserialize)]
struct Choice {
    message: Message,
}

#[derive(Deserialize)]
struct Message {
    #[serde(default)]
    content: Option<String>,
}

struct Failure {
    status: TransportStatus,
    message: String,
    retryable: bool,
}

impl LiveBackend {
    /// Fails before any network activity when the key is missing.
    pub fn new(config: ModelConfig, api_key: Option<String>) -> Result<Self, GatewayError> {
        config.validate()?;
        if config.endpoint_url.is_empty() {
            return Err(GatewayError::Config(format!(
                "model {}: endpoint_url is empty",
                config.name
            )));
        }
        let api_key = api_key
            .filter(|k| !k.trim().is_empty())
            .ok_or_else(|| GatewayError::Config(format!("{API_KEY_ENV} is not set")))?;
        let agent = ureq::Agent::config_builder()
            .timeout_global(Some(Duration::from_secs_f64(config.timeout_secs)))
            .http_status_as_error(false)
            .build()
            .into();
        Ok(LiveBackend { config, api_key, agent })
    }

    pub fn from_env(config: ModelConfig) -> Result<Self, GatewayError> {
        Self::new(config, std::env::var(API_KEY_ENV).ok())
    }

    fn attempt(&self, request: &ChatRequest) -> Result<String, Failure> {
        let body = json!({
            "model": self.config.name,
            "temperature": self.config.temperature,
            "max_tokens": self.config.max_output_tokens,
            "messages": [
                {"role": "user", "content": request.message_1},
                {"role": "user", "content": request.message_2},
            ],
        });
        let result = self
            .agent
            .post(&self.config.endpoint_url)
            .header("Authorization", &format!("Bearer {}", self.api_key))
            .send_json(&body);
        let mut response = match result {
            Ok(r) => r,
            Err(ureq::Error::Timeout(t)) => {
                return Err(Failure {
                    status: TransportStatus::Timeout,
                    message: format!("timed out ({t})"),
                    retryable: true,
                })
            }
            Err(e) => {
                return Err(Failure {
                    status: TransportStatus::Refused,
                    message: e.to_string(),
                    retryable: matches!(
                        e,
                        ureq::Error::Io(_) | ureq::Error::ConnectionFailed | ureq::Error::HostNotFound
                    ),
                })
            }
        };
        let code = response.status().as_u16();
        if !(200..300).contains(&code) {
            let detail = response.body_mut().read_to_string().unwrap_or_default();
            let retryable = code == 429 || code >= 500;
            return Err(Failure {
                status: if retryable {
                    TransportStatus::HttpError
                } else {
                    TransportStatus::Refused
                },
                message: format!("HTTP {code}: {}", detail.chars().take(200).collect::<String>()),
                retryable,
            });
        }
        let parsed: ChatResponse = response.body_mut().read_json().map_err(|e| Failure {
            status: TransportStatus::HttpError,
            message: format!("unreadable completion body: {e}"),
            retryable: false,
        })?;
        parsed
            .choices
            .into_iter()
            .next()
            .and_then(|c| c.message.content)
            .filter(|t| !t.is_empty())
            .ok_or(Failure {
                status: TransportStatus::HttpError,
                message: "completion has no content".into(),
                retryable: false,
            })
    }
}

fn backoff(base_ms: u64, attempt: u32) -> Duration {
    Duration::from_millis(base_ms.saturating_mul(1u64 << attempt.min(16)))
}

impl Backend for LiveBackend {
    fn complete(&self, request: &ChatRequest) -> Result<Completion, GatewayError> {
        let started = Instant::now();
        let mut attempt = 0;
        loop {
            match self.attempt(request) {
                Ok(raw_text) => {
                    return Ok(Completion {
                        raw_text,
                        latency_secs: started.elapsed().as_secs_f64(),
                    })
                }
                Err(f) if f.retryable && attempt < self.config.retries => {
                    let delay = backoff(self.config.backoff_ms, attempt);
                    log::warn!(
                        "{}: {} (retry {} in {:?})",
                        request.pair_key,
                        f.message,
                        attempt + 1,
                        delay
                    );
                    std::thread::sleep(delay);
                    attempt += 1;
                }
                Err(f) => {
                    return Err(GatewayError::Transport {
                        pair_key: request.pair_key.clone(),
                        status: f.status,
                        message: f.message,
                    })
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn missing_key_is_a_config_error() {
        let cfg = ModelConfig::new("gpt-4", "http://127.0.0.1:9/v1/chat/completions");
        assert!(matches!(
            LiveBackend::new(cfg.clone(), None),
            Err(GatewayError::Config(_))
        ));
        assert!(matches!(
            LiveBackend::new(cfg, Some("  ".into())),
            Err(GatewayError::Config(_))
        ));
    }

    #[test]
    fn backoff_doubles() {
        assert_eq!(backoff(100, 0), Duration::from_millis(100));
        assert_eq!(backoff(100, 3), Duration::from_millis(800));
    }
}
