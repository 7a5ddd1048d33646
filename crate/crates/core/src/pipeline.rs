//! Pipeline stages and their on-disk artifacts.
//!
//! `validate` checks inputs; `plan` writes `instances.json`, `plan.jsonl`,
//! `excluded.jsonl` and `dropped.json`; `run` writes `runs.jsonl`; `eval`
//! writes `predictions.jsonl`, `units.jsonl`, `metrics.jsonl` and
//! `matrix.json`; `report` writes `report.md` and CSV tables.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fs;
use std::path::{Path, PathBuf};

use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::annotations::{
    filter_complete, parse_ground_truth, AnnotationError, DroppedInstance, PatternInstance, RoleVocabulary,
};
use crate::config::{BackendKind, ConfigError, PipelineConfig};
use crate::corpus::{assemble_snippet, index_project, ClassIndex, IndexOptions, IngestError, SkippedFile, Snippet};
use crate::detection::{classify_hallucinations, parse_response, ClassifyOptions, PredictionKind, PredictionRecord};
use crate::evaluation::{
    aggregate_matrix, matrix_metrics, run_binary_metrics, score_run, EvalError, MatrixMetrics, RoleConfusionMatrix,
    RunMetrics, ScoredUnit, Variant,
};
use crate::gateway::{
    Backend, Cassette, ChatRequest, Gateway, GatewayError, LiveBackend, ModelConfig, ModelResponse, PairKey,
    RecordingBackend, ReplayBackend, RunStore, TransportStatus,
};
use crate::promptgen::{enumerate_pairs, ExcludedPair, PlanOptions, PromptError};
use crate::report::{self, InstanceRow, ModelSection, ReportData, RunRow};

pub const INSTANCES: &str = "instances.json";
pub const PLAN: &str = "plan.jsonl";
pub const EXCLUDED: &str = "excluded.jsonl";
pub const DROPPED: &str = "dropped.json";
pub const RUNS: &str = "runs.jsonl";
pub const PREDICTIONS: &str = "predictions.jsonl";
pub const UNITS: &str = "units.jsonl";
pub const METRICS: &str = "metrics.jsonl";
pub const MATRIX: &str = "matrix.json";
pub const REPORT: &str = "report.md";

#[derive(Debug, Error)]
pub enum PipelineError {
    #[error(transparent)]
    Config(#[from] ConfigError),
    #[error(transparent)]
    Ingest(#[from] IngestError),
    #[error(transparent)]
    Annotation(#[from] AnnotationError),
    #[error(transparent)]
    Prompt(#[from] PromptError),
    #[error(transparent)]
    Gateway(#[from] GatewayError),
    #[error(transparent)]
    Eval(#[from] EvalError),
    #[error("validation failed: {0}")]
    Validation(String),
    #[error("missing artifact {}; run the `{stage}` stage first", path.display())]
    MissingArtifact { path: PathBuf, stage: &'static str },
    #[error("{}: {message}", path.display())]
    Artifact { path: PathBuf, message: String },
    #[error("{}: {source}", path.display())]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
}

impl PipelineError {
    /// 1 data error, 2 transport error, 3 usage error.
    pub fn exit_code(&self) -> i32 {
        match self {
            PipelineError::Gateway(GatewayError::Transport { .. }) => 2,
            PipelineError::Gateway(GatewayError::Config(_)) => 3,
            PipelineError::Config(_) => 3,
            _ => 1,
        }
    }
}

type Result<T, E = PipelineError> = std::result::Result<T, E>;

fn io_err(path: &Path) -> impl FnOnce(std::io::Error) -> PipelineError + '_ {
    move |source| PipelineError::Io {
        path: path.to_path_buf(),
        source,
    }
}

fn require(out: &Path, name: &str, stage: &'static str) -> Result<PathBuf> {
    let path = out.join(name);
    if path.exists() {
        Ok(path)
    } else {
        Err(PipelineError::MissingArtifact { path, stage })
    }
}

fn write_atomic(path: &Path, content: &str) -> Result<()> {
    if let Some(dir) = path.parent() {
        fs::create_dir_all(dir).map_err(io_err(dir))?;
    }
    let tmp = path.with_extension("tmp");
    fs::write(&tmp, content).map_err(io_err(&tmp))?;
    fs::rename(&tmp, path).map_err(io_err(path))
}

fn write_json<T: Serialize + ?Sized>(path: &Path, value: &T) -> Result<()> {
    let mut text = serde_json::to_string_pretty(value).expect("artifact serializes");
    text.push('\n');
    write_atomic(path, &text)
}

fn write_jsonl<T: Serialize>(path: &Path, values: &[T]) -> Result<()> {
    let text: String = values
        .iter()
        .map(|v| serde_json::to_string(v).expect("artifact serializes") + "\n")
        .collect();
    write_atomic(path, &text)
}

fn read_json<T: DeserializeOwned>(path: &Path) -> Result<T> {
    let text = fs::read_to_string(path).map_err(io_err(path))?;
    serde_json::from_str(&text).map_err(|e| PipelineError::Artifact {
        path: path.to_path_buf(),
        message: e.to_string(),
    })
}

fn read_jsonl<T: DeserializeOwned>(path: &Path) -> Result<Vec<T>> {
    let text = fs::read_to_string(path).map_err(io_err(path))?;
    text.lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty())
        .map(|(n, l)| {
            serde_json::from_str(l).map_err(|e| PipelineError::Artifact {
                path: path.to_path_buf(),
                message: format!("line {}: {e}", n + 1),
            })
        })
        .collect()
}

/// Indexed projects and ground truth, before any pairing.
#[derive(Debug)]
pub struct Corpus {
    pub vocab: RoleVocabulary,
    pub indexes: HashMap<String, ClassIndex>,
    pub skipped: Vec<SkippedFile>,
    pub retained: Vec<PatternInstance>,
    pub dropped: Vec<DroppedInstance>,
}

impl Corpus {
    pub fn load(config: &PipelineConfig) -> Result<Self> {
        let vocab = config.vocabulary()?;
        let missing: Vec<String> = config
            .projects
            .iter()
            .map(|p| &p.root)
            .chain(&config.ground_truth)
            .filter(|p| !p.exists())
            .map(|p| p.display().to_string())
            .collect();
        if !missing.is_empty() {
            return Err(PipelineError::Validation(format!(
                "unresolved paths: {}",
                missing.join(", ")
            )));
        }

        let mut indexes = HashMap::new();
        let mut skipped = Vec::new();
        for p in &config.projects {
            let (index, mut skip) = index_project(
                &p.root,
                &p.id,
                IndexOptions {
                    lenient: config.lenient,
                },
            )?;
            skipped.append(&mut skip);
            indexes.insert(p.id.clone(), index);
        }

        let mut instances = Vec::new();
        for path in &config.ground_truth {
            let xml = fs::read_to_string(path).map_err(io_err(path))?;
            instances.extend(parse_ground_truth(&xml, &vocab)?);
        }
        let mut seen = BTreeSet::new();
        for i in &instances {
            if !seen.insert(i.instance_id()) {
                return Err(PipelineError::Validation(format!(
                    "instance {} is defined more than once",
                    i.instance_id()
                )));
            }
        }
        instances.sort_by_key(PatternInstance::instance_id);

        let outcome = filter_complete(&instances, &indexes)?;
        Ok(Corpus {
            vocab,
            indexes,
            skipped,
            retained: outcome.retained,
            dropped: outcome.dropped,
        })
    }

    pub fn snippet(&self, instance: &PatternInstance) -> Result<Snippet> {
        let index = &self.indexes[instance.project_id()];
        Ok(assemble_snippet(index, instance.root_package())?)
    }
}

/// An instance retained for pairing, with everything later stages need.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InstanceRecord {
    pub row: InstanceRow,
    pub instance: PatternInstance,
    pub snippet_classes: Vec<String>,
}

#[derive(Debug)]
pub struct ValidationReport {
    pub instances: Vec<InstanceRow>,
    pub dropped: Vec<DroppedInstance>,
    pub skipped: Vec<SkippedFile>,
    pub warnings: Vec<String>,
}

impl ValidationReport {
    pub fn is_clean(&self) -> bool {
        self.dropped.is_empty()
    }

    pub fn to_markdown(&self) -> String {
        let mut out = report::instance_table(&self.instances).to_markdown();
        for d in &self.dropped {
            out.push_str(&format!(
                "\ndropped instance {}: missing {}",
                d.instance_id,
                d.missing_fqns.join(", ")
            ));
        }
        for s in &self.skipped {
            out.push_str(&format!("\nskipped {}: {}", s.path.display(), s.error));
        }
        for w in &self.warnings {
            out.push_str(&format!("\nwarning: {w}"));
        }
        if !self.dropped.is_empty() || !self.skipped.is_empty() || !self.warnings.is_empty() {
            out.push('\n');
        }
        out
    }
}

fn instance_records(config: &PipelineConfig, corpus: &Corpus) -> Result<(Vec<InstanceRecord>, BTreeMap<u32, Snippet>)> {
    let mut records = Vec::new();
    let mut snippets = BTreeMap::new();
    for inst in &corpus.retained {
        let snippet = corpus.snippet(inst)?;
        let project = config.project(inst.project_id());
        let role_counts = corpus
            .vocab
            .roles()
            .iter()
            .map(|r| (r.clone(), inst.role_count(r)))
            .collect();
        records.push(InstanceRecord {
            row: InstanceRow {
                instance_id: inst.instance_id(),
                project_id: inst.project_id().to_string(),
                project_name: project.map_or(inst.project_id(), |p| p.display_name()).to_string(),
                root_package: inst.root_package().to_string(),
                participating: inst.classes().len(),
                root_package_classes: snippet.len(),
                role_counts,
            },
            instance: inst.clone(),
            snippet_classes: snippet.class_names().map(str::to_string).collect(),
        });
        snippets.insert(inst.instance_id(), snippet);
    }
    Ok((records, snippets))
}

pub fn cmd_validate(config: &PipelineConfig) -> Result<ValidationReport> {
    let corpus = Corpus::load(config)?;
    let (records, _) = instance_records(config, &corpus)?;
    let warnings = records
        .iter()
        .filter(|r| r.row.root_package.is_empty())
        .map(|r| {
            format!(
                "instance {} has no common root package; its snippet is the whole project",
                r.row.instance_id
            )
        })
        .collect();
    Ok(ValidationReport {
        instances: records.into_iter().map(|r| r.row).collect(),
        dropped: corpus.dropped,
        skipped: corpus.skipped,
        warnings,
    })
}

/// One planned run, shared by every model.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PlanRecord {
    pub run_id: u32,
    pub example_id: u32,
    pub target_id: u32,
    pub repeat: u32,
    pub token_estimate: u64,
    pub prompt_digest: String,
    pub message_1: String,
    pub message_2: String,
}

impl PlanRecord {
    pub fn pair_key(&self, model_name: &str) -> PairKey {
        PairKey {
            example_id: self.example_id,
            target_id: self.target_id,
            model_name: model_name.to_string(),
            repeat: self.repeat,
        }
    }

    pub fn request(&self, model_name: &str) -> ChatRequest {
        ChatRequest {
            run_id: self.run_id,
            pair_key: self.pair_key(model_name),
            message_1: self.message_1.clone(),
            message_2: self.message_2.clone(),
            prompt_digest: self.prompt_digest.clone(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PlanSummary {
    pub runs: usize,
    pub excluded: usize,
    pub dropped: usize,
}

pub fn cmd_plan(config: &PipelineConfig) -> Result<PlanSummary> {
    let corpus = Corpus::load(config)?;
    let (records, snippets) = instance_records(config, &corpus)?;
    let plan = enumerate_pairs(
        &corpus.retained,
        &snippets,
        &config.budget,
        &corpus.vocab,
        PlanOptions {
            allow_same_project: config.allow_same_project,
        },
    )?;

    let by_pair: BTreeMap<(u32, u32), _> = plan.included.iter().map(|p| ((p.example_id, p.target_id), p)).collect();
    let schedule: Vec<(u32, u32)> = match &config.schedule {
        Some(s) => s.clone(),
        None => by_pair.keys().copied().collect(),
    };
    let mut repeats: BTreeMap<(u32, u32), u32> = BTreeMap::new();
    let mut runs = Vec::with_capacity(schedule.len());
    for (n, &(e, t)) in schedule.iter().enumerate() {
        let Some(pair) = by_pair.get(&(e, t)) else {
            let why = plan
                .excluded
                .iter()
                .find(|x| (x.example_id, x.target_id) == (e, t))
                .map_or("not a retained instance pair".to_string(), |x| {
                    format!("{:?}", x.reason)
                });
            return Err(PipelineError::Validation(format!(
                "scheduled pair {e}->{t} cannot run: {why}"
            )));
        };
        let slot = repeats.entry((e, t)).or_insert(0);
        let repeat = *slot;
        *slot += 1;
        runs.push(PlanRecord {
            run_id: n as u32 + 1,
            example_id: e,
            target_id: t,
            repeat,
            token_estimate: pair.token_estimate,
            prompt_digest: pair.digest(),
            message_1: pair.message_1.clone(),
            message_2: pair.message_2.clone(),
        });
    }

    let out = &config.out;
    write_json(&out.join(INSTANCES), &records)?;
    write_jsonl(&out.join(PLAN), &runs)?;
    write_jsonl::<ExcludedPair>(&out.join(EXCLUDED), &plan.excluded)?;
    write_json(&out.join(DROPPED), &corpus.dropped)?;
    Ok(PlanSummary {
        runs: runs.len(),
        excluded: plan.excluded.len(),
        dropped: corpus.dropped.len(),
    })
}

fn load_plan(out: &Path) -> Result<Vec<PlanRecord>> {
    read_jsonl(&require(out, PLAN, "plan")?)
}

fn backend_for(kind: BackendKind, model: &ModelConfig, cassette: Option<&Path>) -> Result<Box<dyn Backend>> {
    let cassette_path = || {
        cassette
            .ok_or_else(|| PipelineError::Config(ConfigError::Invalid(format!("backend {kind:?} needs a cassette"))))
    };
    Ok(match kind {
        BackendKind::Replay => Box::new(ReplayBackend::new(Cassette::open(cassette_path()?)?)),
        BackendKind::Live => Box::new(LiveBackend::from_env(model.clone())?),
        BackendKind::Record => {
            let cassette = Cassette::open(cassette_path()?)?;
            Box::new(RecordingBackend::new(
                LiveBackend::from_env(model.clone())?,
                cassette,
                false,
            ))
        }
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RunSummary {
    pub completed: usize,
    pub reused: usize,
}

/// Executes every planned run for every model. Successful responses already
/// in the run store are kept and not re-sent.
pub fn cmd_run(config: &PipelineConfig) -> Result<RunSummary> {
    let plan = load_plan(&config.out)?;
    let wanted: BTreeSet<(u32, PairKey)> = config
        .models
        .iter()
        .flat_map(|m| plan.iter().map(|r| (r.run_id, r.pair_key(&m.name))))
        .collect();
    let mut store = RunStore::create(config.out.join(RUNS), |r| {
        r.transport_status == TransportStatus::Ok && wanted.contains(&(r.run_id, r.pair_key.clone()))
    })?;
    let done: BTreeSet<(u32, PairKey)> = store
        .responses()
        .iter()
        .map(|r| (r.run_id, r.pair_key.clone()))
        .collect();
    let reused = done.len();
    let mut completed = 0;
    for model in &config.models {
        let pending: Vec<ChatRequest> = plan
            .iter()
            .filter(|r| !done.contains(&(r.run_id, r.pair_key(&model.name))))
            .map(|r| r.request(&model.name))
            .collect();
        if pending.is_empty() {
            continue;
        }
        let backend = backend_for(config.backend, model, config.cassette.as_deref())?;
        let gateway = Gateway::new(backend, store);
        completed += gateway.complete_all(&pending, config.parallelism)?.len();
        store = gateway.finish()?;
    }
    store.finalize()?;
    Ok(RunSummary { completed, reused })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct UnitRecord {
    pub run_id: u32,
    pub model_name: String,
    #[serde(flatten)]
    pub unit: ScoredUnit,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ModelMatrix {
    pub model_name: String,
    pub matrix: RoleConfusionMatrix,
    pub with_hallucination: MatrixMetrics,
    pub without_hallucination: MatrixMetrics,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EvalSummary {
    pub runs: usize,
    pub units: usize,
}

fn load_instances(out: &Path) -> Result<BTreeMap<u32, InstanceRecord>> {
    let records: Vec<InstanceRecord> = read_json(&require(out, INSTANCES, "plan")?)?;
    Ok(records.into_iter().map(|r| (r.row.instance_id, r)).collect())
}

pub fn cmd_eval(config: &PipelineConfig) -> Result<EvalSummary> {
    let out = &config.out;
    let vocab = config.vocabulary()?;
    let instances = load_instances(out)?;
    let plan = load_plan(out)?;
    let runs_path = require(out, RUNS, "run")?;
    let responses: BTreeMap<(u32, PairKey), ModelResponse> = RunStore::load(&runs_path)?
        .into_iter()
        .filter(|r| r.transport_status == TransportStatus::Ok)
        .map(|r| ((r.run_id, r.pair_key.clone()), r))
        .collect();
    let options = ClassifyOptions {
        resolve_simple_names: config.resolve_simple_names,
    };

    let mut predictions = Vec::new();
    let mut unit_log = Vec::new();
    let mut metrics = Vec::new();
    let mut matrices = Vec::new();
    for model in &config.models {
        let mut model_units = Vec::new();
        for run in &plan {
            let key = run.pair_key(&model.name);
            let response = responses
                .get(&(run.run_id, key.clone()))
                .ok_or_else(|| PipelineError::Artifact {
                    path: runs_path.clone(),
                    message: format!("no successful response for run {} ({key})", run.run_id),
                })?;
            let target = instances.get(&run.target_id).ok_or_else(|| PipelineError::Artifact {
                path: out.join(INSTANCES),
                message: format!("unknown target instance {}", run.target_id),
            })?;
            let classes: BTreeSet<String> = target.snippet_classes.iter().cloned().collect();
            let prediction =
                classify_hallucinations(&parse_response(&response.raw_text, &vocab), &classes, &vocab, options);
            let units = score_run(&prediction, &target.instance, &classes)?;
            metrics.push(run_binary_metrics(
                run.run_id,
                &model.name,
                &units,
                Variant::WithHallucination,
            ));
            metrics.push(run_binary_metrics(
                run.run_id,
                &model.name,
                &units,
                Variant::WithoutHallucination,
            ));
            unit_log.extend(units.iter().map(|u| UnitRecord {
                run_id: run.run_id,
                model_name: model.name.clone(),
                unit: u.clone(),
            }));
            model_units.extend(units);
            predictions.push(PredictionRecord {
                run_id: run.run_id,
                pair_key: key,
                prediction,
            });
        }
        let matrix = aggregate_matrix(&model_units, &vocab);
        matrices.push(ModelMatrix {
            model_name: model.name.clone(),
            with_hallucination: matrix_metrics(&matrix, Variant::WithHallucination),
            without_hallucination: matrix_metrics(&matrix, Variant::WithoutHallucination),
            matrix,
        });
    }

    write_jsonl(&out.join(PREDICTIONS), &predictions)?;
    write_jsonl(&out.join(UNITS), &unit_log)?;
    write_jsonl(&out.join(METRICS), &metrics)?;
    write_json(&out.join(MATRIX), &matrices)?;
    Ok(EvalSummary {
        runs: predictions.len(),
        units: unit_log.len(),
    })
}

/// Renders `report.md` and the CSV tables; returns the files written.
pub fn cmd_report(config: &PipelineConfig) -> Result<Vec<PathBuf>> {
    let out = &config.out;
    let vocab = config.vocabulary()?;
    let instances = load_instances(out)?;
    let plan = load_plan(out)?;
    let predictions: Vec<PredictionRecord> = read_jsonl(&require(out, PREDICTIONS, "eval")?)?;
    let metrics: Vec<RunMetrics> = read_jsonl(&require(out, METRICS, "eval")?)?;
    let matrices: Vec<ModelMatrix> = read_json(&require(out, MATRIX, "eval")?)?;

    let mut models = Vec::new();
    for m in &matrices {
        let pick = |variant| {
            metrics
                .iter()
                .filter(move |r| r.model_name == m.model_name && r.variant == variant)
                .cloned()
        };
        let runs: Vec<(RunMetrics, RunMetrics)> = pick(Variant::WithHallucination)
            .zip(pick(Variant::WithoutHallucination))
            .collect();
        let predicted_roles = predictions
            .iter()
            .filter(|p| p.pair_key.model_name == m.model_name)
            .map(|p| {
                let counts = (p.prediction.kind == PredictionKind::Annotations).then(|| {
                    vocab
                        .roles()
                        .iter()
                        .map(|r| (r.clone(), p.prediction.role_count(r)))
                        .collect()
                });
                (p.run_id, counts)
            })
            .collect();
        models.push(ModelSection {
            model_name: m.model_name.clone(),
            runs,
            matrix: m.matrix.clone(),
            predicted_roles,
        });
    }
    let data = ReportData {
        pattern_name: vocab.pattern_name().to_string(),
        roles: vocab.roles().to_vec(),
        instances: instances.into_values().map(|r| r.row).collect(),
        runs: plan
            .iter()
            .map(|r| RunRow {
                run_id: r.run_id,
                example_id: r.example_id,
                target_id: r.target_id,
            })
            .collect(),
        models,
    };
    let rendered = report::render(&data);
    let mut written = vec![out.join(REPORT)];
    write_atomic(&written[0], &rendered.markdown)?;
    for (name, body) in &rendered.csv {
        let path = out.join(name);
        write_atomic(&path, body)?;
        written.push(path);
    }
    Ok(written)
}
