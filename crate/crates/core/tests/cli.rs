mod common;

use std::collections::BTreeMap;
use std::fs;
use std::path::Path;
use std::process::{Command, Output};
use std::time::{Duration, Instant};

use common::{fixtures, scratch_fixtures};
use serde_json::Value;

fn dp_scout(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_dp-scout"))
        .args(args)
        .env_remove("DP_SCOUT_API_KEY")
        .output()
        .unwrap()
}

fn stage(config: &Path, out: &Path, cmd: &str) -> Output {
    dp_scout(&[
        "--config",
        config.to_str().unwrap(),
        "--out",
        out.to_str().unwrap(),
        cmd,
    ])
}

fn pipeline(config: &Path, out: &Path) {
    for cmd in ["validate", "plan", "run", "eval", "report"] {
        let o = stage(config, out, cmd);
        assert!(o.status.success(), "{cmd}: {}", String::from_utf8_lossy(&o.stderr));
    }
}

fn snapshot(dir: &Path) -> BTreeMap<String, Vec<u8>> {
    fs::read_dir(dir)
        .unwrap()
        .map(|e| e.unwrap())
        .map(|e| {
            (
                e.file_name().to_string_lossy().into_owned(),
                fs::read(e.path()).unwrap(),
            )
        })
        .collect()
}

fn jsonl(path: &Path) -> Vec<Value> {
    fs::read_to_string(path)
        .unwrap()
        .lines()
        .map(|l| serde_json::from_str(l).unwrap())
        .collect()
}

#[test]
fn replay_end_to_end_is_reproducible() {
    let config = fixtures().join("pipeline.json");
    let (a, b) = (tempfile::tempdir().unwrap(), tempfile::tempdir().unwrap());
    let started = Instant::now();
    pipeline(&config, a.path());
    assert!(
        started.elapsed() < Duration::from_secs(10),
        "took {:?}",
        started.elapsed()
    );
    pipeline(&config, b.path());
    let (first, second) = (snapshot(a.path()), snapshot(b.path()));
    assert_eq!(first.keys().collect::<Vec<_>>(), second.keys().collect::<Vec<_>>());
    for (name, bytes) in &first {
        assert!(bytes == &second[name], "{name} differs between runs");
    }
    for name in [
        "report.md",
        "instances.csv",
        "roles.csv",
        "runs_gpt-4.csv",
        "matrix_gpt-3.5-turbo.csv",
    ] {
        assert!(first.contains_key(name), "missing {name}");
    }

    // rerunning in place reuses every stored response and changes nothing
    let o = stage(&config, a.path(), "run");
    assert!(String::from_utf8_lossy(&o.stdout).contains("28 reused"));
    pipeline(&config, a.path());
    assert_eq!(snapshot(a.path()), first);

    let metrics = jsonl(&a.path().join("metrics.jsonl"));
    for model in ["gpt-3.5-turbo", "gpt-4"] {
        for variant in ["with_hallucination", "without_hallucination"] {
            let n = metrics
                .iter()
                .filter(|m| m["model_name"] == model && m["variant"] == variant)
                .count();
            assert_eq!(n, 14, "{model} {variant}");
        }
    }
}

#[test]
fn response_kinds_and_hallucinations_flow_into_the_report() {
    let config = fixtures().join("pipeline.json");
    let out = tempfile::tempdir().unwrap();
    pipeline(&config, out.path());
    let gpt35 = |v: &Value| v["model_name"] == "gpt-3.5-turbo";

    let predictions: Vec<Value> = jsonl(&out.path().join("predictions.jsonl"))
        .into_iter()
        .filter(|p| gpt35(&p["pair_key"]))
        .collect();
    let kind = |run: u64| {
        let p = predictions.iter().find(|p| p["run_id"] == run).unwrap();
        p["kind"].as_str().unwrap().to_string()
    };
    assert_eq!(kind(11), "none_found");
    assert_eq!(kind(12), "malformed");
    assert_eq!(kind(2), "annotations");

    let units: Vec<Value> = jsonl(&out.path().join("units.jsonl"))
        .into_iter()
        .filter(gpt35)
        .collect();
    let hc = |run: u64| {
        units
            .iter()
            .filter(|u| u["run_id"] == run && u["truth"] == "hallucinated_class")
            .count() as u64
    };
    let hr = |run: u64| {
        units
            .iter()
            .filter(|u| u["run_id"] == run && u["predicted"] == "hallucinated_role")
            .count() as u64
    };
    assert!(hc(2) > 0 && hc(3) > 0);
    assert!(hr(4) > 0);

    let metrics: Vec<Value> = jsonl(&out.path().join("metrics.jsonl"))
        .into_iter()
        .filter(gpt35)
        .collect();
    let fp = |run: u64, variant: &str| {
        metrics
            .iter()
            .find(|m| m["run_id"] == run && m["variant"] == variant)
            .unwrap()["fp"]
            .as_u64()
            .unwrap()
    };
    for run in 1..=14 {
        assert_eq!(
            fp(run, "with_hallucination") - fp(run, "without_hallucination"),
            hc(run) + hr(run),
            "run {run}"
        );
    }

    let matrices: Value = serde_json::from_slice(&fs::read(out.path().join("matrix.json")).unwrap()).unwrap();
    let m = matrices.as_array().unwrap().iter().find(|m| gpt35(m)).unwrap();
    let column: u64 = m["matrix"]["cells"]
        .as_array()
        .unwrap()
        .iter()
        .map(|r| r[0].as_u64().unwrap())
        .sum();
    assert_eq!(column, (1..=14).map(hc).sum::<u64>());

    let report = fs::read_to_string(out.path().join("report.md")).unwrap();
    assert!(report.contains("| Hallucinated Role |"));
    assert!(report.contains("Precision w/o"));
}

#[test]
fn usage_errors_exit_3() {
    let out = tempfile::tempdir().unwrap();
    assert_eq!(dp_scout(&["validate"]).status.code(), Some(3));
    assert_eq!(dp_scout(&["--config", "x.json", "bogus"]).status.code(), Some(3));

    let empty = out.path().join("empty.json");
    fs::write(&empty, "").unwrap();
    assert_eq!(stage(&empty, out.path(), "validate").status.code(), Some(3));
    let garbage = out.path().join("garbage.json");
    fs::write(&garbage, "{\"pattern\": 1}").unwrap();
    assert_eq!(stage(&garbage, out.path(), "validate").status.code(), Some(3));
    assert_eq!(
        stage(&out.path().join("absent.json"), out.path(), "validate")
            .status
            .code(),
        Some(3)
    );

    let o = dp_scout(&[
        "--config",
        fixtures().join("pipeline.json").to_str().unwrap(),
        "--model",
        "nope",
        "plan",
    ]);
    assert_eq!(o.status.code(), Some(3));
}

#[test]
fn missing_artifacts_are_named() {
    let config = fixtures().join("pipeline.json");
    let out = tempfile::tempdir().unwrap();
    assert!(stage(&config, out.path(), "plan").status.success());
    let o = stage(&config, out.path(), "report");
    assert_eq!(o.status.code(), Some(1));
    let err = String::from_utf8_lossy(&o.stderr);
    assert!(err.contains("predictions.jsonl") && err.contains("`eval`"), "{err}");

    let o = stage(&config, out.path(), "eval");
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("runs.jsonl"));
}

#[test]
fn cassette_miss_is_a_data_error() {
    let dir = scratch_fixtures();
    let cassette = dir.path().join("cassette.jsonl");
    let text = fs::read_to_string(&cassette).unwrap();
    let kept: Vec<&str> = text.lines().skip(1).collect();
    fs::write(&cassette, kept.join("\n") + "\n").unwrap();
    let config = dir.path().join("pipeline.json");
    let out = dir.path().join("out");
    assert!(stage(&config, &out, "plan").status.success());
    let o = stage(&config, &out, "run");
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("no entry"));
}

#[test]
fn validate_flags_missing_sources() {
    let dir = scratch_fixtures();
    let config = dir.path().join("pipeline.json");
    let out = dir.path().join("out");
    assert_eq!(stage(&config, &out, "validate").status.code(), Some(0));

    fs::remove_dir_all(dir.path().join("corpus/pmd/src")).unwrap();
    fs::create_dir_all(dir.path().join("corpus/pmd/src")).unwrap();
    let o = stage(&config, &out, "validate");
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stdout).contains("129"));

    fs::remove_dir_all(dir.path().join("corpus/pmd")).unwrap();
    assert_eq!(stage(&config, &out, "validate").status.code(), Some(1));
}
