//! Acceptance checks, one line per criterion. Runs without the libtest
//! harness; exits non-zero when any criterion fails.

mod common;

use std::collections::BTreeMap;
use std::fs;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::path::Path;
use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use common::gen;
use common::{close, fixtures, PublishedMatrix, Row, INSTANCES, MATRIX_GPT35, MATRIX_GPT4, RUNS_GPT35, RUNS_GPT4};
use dp_scout::annotations::{canonical_annotation_xml, parse_ground_truth, RoleVocabulary};
use dp_scout::config::PipelineConfig;
use dp_scout::evaluation::{binary_counts, matrix_metrics, Counts, Variant};
use dp_scout::pipeline::{cmd_validate, Corpus};
use dp_scout::promptgen::{common_root_package, enumerate_pairs, PlanOptions, TokenBudget};
use proptest::test_runner::{Config, TestRunner};
use serde_json::Value;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn runner(cases: u32) -> TestRunner {
    TestRunner::new(Config {
        cases,
        failure_persistence: None,
        ..Config::default()
    })
}

fn check(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(started: Instant, limit: Duration) -> Result<(), String> {
    let took = started.elapsed();
    check(took < limit, || format!("took {took:?}, limit {limit:?}"))
}

fn row_mismatches(label: &str, run: usize, row: &Row) -> Vec<String> {
    let c = Counts::new(row.tp, row.fp, row.fn_, row.tn);
    [
        ("P", c.precision().value(), row.p),
        ("R", c.recall().value(), row.r),
        ("F1", c.f1().value(), row.f1),
        ("A", c.accuracy().value(), row.a),
    ]
    .into_iter()
    .filter(|(_, got, want)| !close(*got, *want))
    .map(|(name, got, want)| format!("{label} run {run} {name} {got:.4} vs {want:.3}"))
    .collect()
}

fn metric_golden() -> Outcome {
    let started = Instant::now();
    let mut bad = Vec::new();
    let mut checked = 0;
    for (i, (with, without)) in RUNS_GPT35.iter().enumerate() {
        bad.extend(row_mismatches("gpt-3.5", i + 1, with));
        bad.extend(row_mismatches("gpt-3.5 w/o", i + 1, without));
        checked += 8;
    }
    for (i, row) in RUNS_GPT4.iter().enumerate() {
        bad.extend(row_mismatches("gpt-4", i + 1, row));
        checked += 4;
    }
    within(started, Duration::from_secs(1))?;
    check(bad.is_empty(), || bad.join("; "))?;
    Ok(format!("{checked} figures within tolerance"))
}

fn matrix_mismatches(name: &str, table: &PublishedMatrix) -> (usize, Vec<String>) {
    let m = table.matrix();
    let mut checked = 0;
    let mut bad = Vec::new();
    for (variant, tag) in [
        (Variant::WithHallucination, ""),
        (Variant::WithoutHallucination, " w/o"),
    ] {
        let mm = matrix_metrics(&m, variant);
        let pick = |w: Option<f64>, wo: Option<f64>| if tag.is_empty() { w } else { wo };
        for (kind, published, computed) in [
            ("precision", table.precision, &mm.precision),
            ("recall", table.recall, &mm.recall),
        ] {
            for &(label, w, wo) in published {
                let Some(want) = pick(w, wo) else { continue };
                checked += 1;
                let got = computed.iter().find(|l| l.label == label).and_then(|l| l.value);
                match got {
                    Some(r) if close(r.value(), want) => {}
                    Some(r) => bad.push(format!(
                        "{name} {label} {kind}{tag} {}/{} = {:.3} vs {want:.3}",
                        r.num,
                        r.den,
                        r.value()
                    )),
                    None => bad.push(format!("{name} {label} {kind}{tag} undefined vs {want:.3}")),
                }
            }
        }
    }
    (checked, bad)
}

fn matrix_golden() -> Outcome {
    let started = Instant::now();
    let (n2, mut bad) = matrix_mismatches("gpt-3.5", &MATRIX_GPT35);
    let (n3, bad3) = matrix_mismatches("gpt-4", &MATRIX_GPT4);
    bad.extend(bad3);
    within(started, Duration::from_secs(1))?;
    let checked = n2 + n3;
    check(bad.is_empty(), || {
        format!("{} of {checked} figures off: {}", bad.len(), bad.join("; "))
    })?;
    Ok(format!("{checked} figures within tolerance"))
}

fn hallucination_removal() -> Outcome {
    let mut changed = Vec::new();
    for (i, (with, without)) in RUNS_GPT35.iter().enumerate() {
        let run = i + 1;
        let units = gen::units_for(run, with, without);
        let a = binary_counts(&units, Variant::WithHallucination);
        let b = binary_counts(&units, Variant::WithoutHallucination);
        check(a == Counts::new(with.tp, with.fp, with.fn_, with.tn), || {
            format!("run {run} with: {a:?}")
        })?;
        check(
            b == Counts::new(without.tp, without.fp, without.fn_, without.tn),
            || format!("run {run} w/o: {b:?}"),
        )?;
        check((a.tp, a.fn_, a.tn) == (b.tp, b.fn_, b.tn), || {
            format!("run {run}: TP/FN/TN moved")
        })?;
        if a != b {
            changed.push(run);
        }
    }
    check(changed == [2, 3, 4], || format!("changed runs {changed:?}"))?;
    Ok("only runs 2, 3, 4 change; TP/FN/TN fixed".into())
}

fn root_package() -> Outcome {
    let root = common_root_package(["a.b.c.d.ClassA", "a.b.e.f.ClassB"]).map_err(|e| e.to_string())?;
    check(root == "a.b", || format!("example gave `{root}`"))?;
    let mut r = runner(200);
    r.run(&gen::fqns_and_shuffle(), |(names, shuffled)| {
        gen::check_root(&names, &shuffled)
    })
    .map_err(|e| e.to_string())?;
    let mut r = runner(200);
    r.run(&gen::fqn(), |n| {
        gen::check_root(std::slice::from_ref(&n), std::slice::from_ref(&n))
    })
    .map_err(|e| e.to_string())?;
    Ok("example and 400 random cases hold".into())
}

fn lexer_and_counts() -> Outcome {
    let mut r = runner(1000);
    r.run(&gen::source(), |s| gen::check_source(&s))
        .map_err(|e| e.to_string())?;
    let config = PipelineConfig::load(fixtures().join("pipeline.json")).map_err(|e| e.to_string())?;
    let report = cmd_validate(&config).map_err(|e| e.to_string())?;
    for (id, root, _, classes) in INSTANCES {
        let row = report
            .instances
            .iter()
            .find(|r| r.instance_id == id)
            .ok_or(format!("instance {id} missing"))?;
        check(row.root_package == root && row.root_package_classes == classes, || {
            format!(
                "instance {id}: `{}` {} classes",
                row.root_package, row.root_package_classes
            )
        })?;
    }
    Ok("1000 sources clean; six root package counts exact".into())
}

fn run_pipeline(out: &Path) -> Result<(), String> {
    let config = fixtures().join("pipeline.json");
    for stage in ["validate", "plan", "run", "eval", "report"] {
        let o = Command::new(env!("CARGO_BIN_EXE_dp-scout"))
            .args([
                "--config",
                config.to_str().unwrap(),
                "--out",
                out.to_str().unwrap(),
                stage,
            ])
            .env_remove("DP_SCOUT_API_KEY")
            .output()
            .map_err(|e| e.to_string())?;
        check(o.status.success(), || {
            format!("{stage}: {}", String::from_utf8_lossy(&o.stderr).trim())
        })?;
    }
    Ok(())
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

fn end_to_end() -> Outcome {
    let (a, b) = (tempfile::tempdir().unwrap(), tempfile::tempdir().unwrap());
    let started = Instant::now();
    run_pipeline(a.path())?;
    within(started, Duration::from_secs(10))?;
    run_pipeline(b.path())?;
    let (first, second) = (snapshot(a.path()), snapshot(b.path()));
    check(first == second, || "reruns differ".into())?;

    let predictions = jsonl(&a.path().join("predictions.jsonl"));
    for kind in ["none_found", "malformed", "annotations"] {
        check(predictions.iter().any(|p| p["kind"] == kind), || {
            format!("no {kind} response")
        })?;
    }
    let units = jsonl(&a.path().join("units.jsonl"));
    let count = |field: &str, value: &str| units.iter().filter(|u| u[field] == value).count() as u64;
    let (hc, hr) = (
        count("truth", "hallucinated_class"),
        count("predicted", "hallucinated_role"),
    );
    check(hc > 0 && hr > 0, || format!("hallucinated classes {hc}, roles {hr}"))?;

    let metrics = jsonl(&a.path().join("metrics.jsonl"));
    let fp = |variant: &str| {
        metrics
            .iter()
            .filter(|m| m["variant"] == variant)
            .map(|m| m["fp"].as_u64().unwrap())
            .sum::<u64>()
    };
    let dropped = fp("with_hallucination") - fp("without_hallucination");
    check(dropped == hc + hr, || {
        format!("w/o FP dropped {dropped}, expected {}", hc + hr)
    })?;

    let matrices: Value = serde_json::from_slice(&first["matrix.json"]).unwrap();
    let column: u64 = matrices
        .as_array()
        .unwrap()
        .iter()
        .flat_map(|m| {
            m["matrix"]["cells"]
                .as_array()
                .unwrap()
                .iter()
                .map(|r| r[0].as_u64().unwrap())
        })
        .sum();
    check(column == hc, || {
        format!("Hallucinated Class column {column}, units {hc}")
    })?;

    let report = String::from_utf8_lossy(&first["report.md"]);
    for section in [
        "## Instances",
        "## Runs: gpt-3.5-turbo",
        "## Runs: gpt-4",
        "## Confusion matrix: gpt-3.5-turbo",
    ] {
        check(report.contains(section), || format!("report lacks {section}"))?;
    }
    Ok(format!(
        "{} artifacts byte-identical; {hc} HC units excluded from w/o FP",
        first.len()
    ))
}

fn budget() -> Outcome {
    let config = PipelineConfig::load(fixtures().join("pipeline.json")).map_err(|e| e.to_string())?;
    let corpus = Corpus::load(&config).map_err(|e| e.to_string())?;
    let snippets: BTreeMap<_, _> = corpus
        .retained
        .iter()
        .map(|i| (i.instance_id(), corpus.snippet(i).unwrap()))
        .collect();
    let plan = |b: &TokenBudget| {
        enumerate_pairs(&corpus.retained, &snippets, b, &corpus.vocab, PlanOptions::default())
            .map_err(|e| e.to_string())
    };
    let normal = TokenBudget::default();
    let allowance = 128_000 - normal.reserved_output;
    let p = plan(&normal)?;
    let worst = p.included.iter().map(|x| x.token_estimate).max().unwrap_or(0);
    check(!p.included.is_empty() && worst <= allowance, || {
        format!("largest estimate {worst} > {allowance}")
    })?;
    let degenerate = plan(&TokenBudget::new(4097, 4096, "bytes4").map_err(|e| e.to_string())?)?;
    check(degenerate.included.is_empty(), || {
        format!("{} pairs survive", degenerate.included.len())
    })?;
    Ok(format!(
        "{} pairs, largest estimate {worst} <= {allowance}; degenerate budget excludes all",
        p.included.len()
    ))
}

fn round_trip() -> Outcome {
    let vocab = RoleVocabulary::composite();
    let xml = fs::read_to_string(fixtures().join("ground_truth/composite.xml")).map_err(|e| e.to_string())?;
    let instances = parse_ground_truth(&xml, &vocab).map_err(|e| e.to_string())?;
    for inst in &instances {
        let back = parse_ground_truth(&canonical_annotation_xml(inst, &vocab), &vocab).map_err(|e| e.to_string())?;
        check(back == [inst.clone()], || {
            format!("instance {} differs", inst.instance_id())
        })?;
    }
    let mut r = runner(100);
    r.run(&gen::instance(), |inst| {
        let back = parse_ground_truth(&canonical_annotation_xml(&inst, &vocab), &vocab).unwrap();
        proptest::prop_assert_eq!(back, vec![inst]);
        Ok(())
    })
    .map_err(|e| e.to_string())?;
    Ok(format!("{} fixture and 100 random instances", instances.len()))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 8] = [
        ("metric golden suite", metric_golden),
        ("confusion-matrix golden suite", matrix_golden),
        ("hallucination removal", hallucination_removal),
        ("common root package", root_package),
        ("lexer properties and fixture counts", lexer_and_counts),
        ("end-to-end replay", end_to_end),
        ("prompt budget", budget),
        ("annotation round trip", round_trip),
    ];
    let mut failed = 0;
    for (n, (name, f)) in criteria.into_iter().enumerate() {
        let outcome = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|p| {
            Err(p
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_else(|| "panicked".into()))
        });
        match outcome {
            Ok(detail) => println!("criterion {}: PASS: {name}: {detail}", n + 1),
            Err(detail) => {
                failed += 1;
                println!("criterion {}: FAIL: {name}: {detail}", n + 1);
            }
        }
    }
    println!("{} of 8 criteria passed", 8 - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
