use std::io::{BufRead, BufReader, Read, Write};
use std::net::TcpListener;
use std::sync::{Arc, Mutex};
use std::thread::JoinHandle;

use dp_scout::gateway::{
    Backend, Cassette, ChatRequest, Gateway, GatewayError, LiveBackend, ModelConfig, PairKey, RecordingBackend,
    ReplayBackend, RunStore, TransportStatus,
};
use dp_scout::promptgen::prompt_digest;

const OK_BODY: &str = r#"{"choices":[{"message":{"role":"assistant","content":"No instance found."}}]}"#;

/// Received request: (authorization header, JSON body).
type Seen = Arc<Mutex<Vec<(String, serde_json::Value)>>>;

/// Serves one scripted (status, body) per connection, then stops.
fn stub(script: Vec<(u16, &'static str)>) -> (String, Seen, JoinHandle<()>) {
    let listener = TcpListener::bind("127.0.0.1:0").unwrap();
    let url = format!("http://{}/v1/chat/completions", listener.local_addr().unwrap());
    let seen: Seen = Arc::default();
    let log = seen.clone();
    let handle = std::thread::spawn(move || {
        for (status, body) in script {
            let (stream, _) = listener.accept().unwrap();
            let mut reader = BufReader::new(stream);
            let (mut len, mut auth) = (0usize, String::new());
            loop {
                let mut line = String::new();
                reader.read_line(&mut line).unwrap();
                let line = line.trim_end();
                if line.is_empty() {
                    break;
                }
                let (name, value) = line.split_once(':').unwrap_or((line, ""));
                match name.to_ascii_lowercase().as_str() {
                    "content-length" => len = value.trim().parse().unwrap(),
                    "authorization" => auth = value.trim().to_string(),
                    _ => {}
                }
            }
            let mut buf = vec![0; len];
            reader.read_exact(&mut buf).unwrap();
            log.lock().unwrap().push((auth, serde_json::from_slice(&buf).unwrap()));
            let reply = format!(
                "HTTP/1.1 {status} X\r\nContent-Type: application/json\r\nContent-Length: {}\r\nConnection: close\r\n\r\n{body}",
                body.len()
            );
            reader.get_mut().write_all(reply.as_bytes()).unwrap();
        }
    });
    (url, seen, handle)
}

fn model(url: &str, retries: u32) -> ModelConfig {
    ModelConfig {
        retries,
        backoff_ms: 1,
        timeout_secs: 5.0,
        ..ModelConfig::new("gpt-4", url)
    }
}

fn request() -> ChatRequest {
    let (m1, m2) = ("instructions and example".to_string(), "target code".to_string());
    ChatRequest {
        run_id: 1,
        pair_key: PairKey {
            example_id: 4,
            target_id: 65,
            model_name: "gpt-4".into(),
            repeat: 0,
        },
        prompt_digest: prompt_digest(&m1, &m2),
        message_1: m1,
        message_2: m2,
    }
}

#[test]
fn server_errors_are_retried_until_success() {
    let (url, seen, handle) = stub(vec![(500, "{}"), (503, "{}"), (200, OK_BODY)]);
    let backend = LiveBackend::new(model(&url, 2), Some("secret".into())).unwrap();
    let completion = backend.complete(&request()).unwrap();
    handle.join().unwrap();
    assert_eq!(completion.raw_text, "No instance found.");

    let seen = seen.lock().unwrap();
    assert_eq!(seen.len(), 3);
    let (auth, body) = &seen[2];
    assert_eq!(auth, "Bearer secret");
    assert_eq!(body["model"], "gpt-4");
    assert_eq!(body["temperature"], 0.0);
    let messages = body["messages"].as_array().unwrap();
    assert_eq!(messages.len(), 2);
    assert_eq!(messages[0]["content"], "instructions and example");
    assert_eq!(messages[1]["content"], "target code");
}

#[test]
fn exhausted_retries_are_persisted_as_failures() {
    let (url, _, handle) = stub(vec![(500, "{}"), (500, "{}")]);
    let dir = tempfile::tempdir().unwrap();
    let store = RunStore::create(dir.path().join("runs.jsonl"), |_| true).unwrap();
    let backend = LiveBackend::new(model(&url, 1), Some("k".into())).unwrap();
    let gateway = Gateway::new(Box::new(backend), store);
    let err = gateway.complete(&request()).unwrap_err();
    handle.join().unwrap();
    assert!(matches!(
        err,
        GatewayError::Transport {
            status: TransportStatus::HttpError,
            ..
        }
    ));
    let store = gateway.finish().unwrap();
    assert_eq!(store.responses().len(), 1);
    assert_eq!(store.responses()[0].transport_status, TransportStatus::HttpError);
    assert!(store.responses()[0].raw_text.is_empty());
}

#[test]
fn client_errors_are_not_retried() {
    let (url, seen, handle) = stub(vec![(400, r#"{"error":"bad"}"#)]);
    let backend = LiveBackend::new(model(&url, 3), Some("k".into())).unwrap();
    let err = backend.complete(&request()).unwrap_err();
    handle.join().unwrap();
    assert!(matches!(
        err,
        GatewayError::Transport {
            status: TransportStatus::Refused,
            ..
        }
    ));
    assert_eq!(seen.lock().unwrap().len(), 1);
}

#[test]
fn missing_key_fails_before_any_request() {
    let cfg = model("http://127.0.0.1:9/v1/chat/completions", 0);
    assert!(matches!(LiveBackend::new(cfg, None), Err(GatewayError::Config(_))));
}

#[test]
fn recorded_answers_replay_identically() {
    let (url, _, handle) = stub(vec![(200, OK_BODY)]);
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("cassette.jsonl");
    let live = LiveBackend::new(model(&url, 0), Some("k".into())).unwrap();
    let recorder = RecordingBackend::new(live, Cassette::open(&path).unwrap(), false);
    let recorded = recorder.complete(&request()).unwrap();
    handle.join().unwrap();
    // a second recording of the same key is refused without a network call
    assert!(matches!(
        recorder.complete(&request()),
        Err(GatewayError::DuplicateKey(_))
    ));

    let replay = ReplayBackend::new(Cassette::open(&path).unwrap());
    assert_eq!(replay.complete(&request()).unwrap().raw_text, recorded.raw_text);

    let mut other = request();
    other.pair_key.repeat = 1;
    assert!(matches!(replay.complete(&other), Err(GatewayError::CassetteMiss(_))));
    let mut tampered = request();
    tampered.prompt_digest = "0".repeat(64);
    assert!(matches!(
        replay.complete(&tampered),
        Err(GatewayError::DigestMismatch { .. })
    ));
}
