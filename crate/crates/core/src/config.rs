//! JSON pipeline configuration. Relative paths resolve against the directory
//! holding the config file.

use std::fs;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::annotations::RoleVocabulary;
use crate::gateway::ModelConfig;
use crate::promptgen::TokenBudget;

#[derive(Debug, Error)]
pub enum ConfigError {
    #[error("cannot read config {path}: {source}")]
    Read {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("config {path} is empty")]
    Empty { path: PathBuf },
    #[error("invalid config {path}: {source}")]
    Parse {
        path: PathBuf,
        #[source]
        source: serde_json::Error,
    },
    #[error("invalid config: {0}")]
    Invalid(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, Default, clap::ValueEnum)]
#[serde(rename_all = "snake_case")]
pub enum BackendKind {
    Live,
    #[default]
    Replay,
    Record,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PatternConfig {
    pub name: String,
    pub roles: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProjectConfig {
    /// Matches the project name used in the ground-truth files.
    pub id: String,
    /// Display name for reports; defaults to the id.
    #[serde(default)]
    pub name: Option<String>,
    pub root: PathBuf,
}

impl ProjectConfig {
    pub fn display_name(&self) -> &str {
        self.name.as_deref().unwrap_or(&self.id)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PipelineConfig {
    pub pattern: PatternConfig,
    pub projects: Vec<ProjectConfig>,
    pub ground_truth: Vec<PathBuf>,
    #[serde(default)]
    pub budget: TokenBudget,
    pub models: Vec<ModelConfig>,
    #[serde(default)]
    pub backend: BackendKind,
    #[serde(default)]
    pub cassette: Option<PathBuf>,
    #[serde(default = "default_out")]
    pub out: PathBuf,
    /// Explicit (example, target) runs in order. When absent every included
    /// pair runs once.
    #[serde(default)]
    pub schedule: Option<Vec<(u32, u32)>>,
    #[serde(default)]
    pub allow_same_project: bool,
    #[serde(default)]
    pub lenient: bool,
    #[serde(default)]
    pub resolve_simple_names: bool,
    #[serde(default = "default_parallelism")]
    pub parallelism: usize,
}

fn default_out() -> PathBuf {
    PathBuf::from("out")
}

fn default_parallelism() -> usize {
    1
}

impl PipelineConfig {
    /// Reads and validates a config, resolving relative paths.
    pub fn load(path: impl AsRef<Path>) -> Result<Self, ConfigError> {
        let config = Self::read(path)?;
        config.validate()?;
        Ok(config)
    }

    /// Like [`load`](Self::load) but leaves validation to the caller, so that
    /// overrides can be applied first.
    pub fn read(path: impl AsRef<Path>) -> Result<Self, ConfigError> {
        let path = path.as_ref();
        let text = fs::read_to_string(path).map_err(|source| ConfigError::Read {
            path: path.to_path_buf(),
            source,
        })?;
        if text.trim().is_empty() {
            return Err(ConfigError::Empty {
                path: path.to_path_buf(),
            });
        }
        let mut config: PipelineConfig = serde_json::from_str(&text).map_err(|source| ConfigError::Parse {
            path: path.to_path_buf(),
            source,
        })?;
        let base = path.parent().unwrap_or(Path::new("."));
        config.resolve_paths(base);
        Ok(config)
    }

    fn resolve_paths(&mut self, base: &Path) {
        let join = |p: &mut PathBuf| {
            if p.is_relative() {
                *p = base.join(&*p);
            }
        };
        self.projects.iter_mut().for_each(|p| join(&mut p.root));
        self.ground_truth.iter_mut().for_each(join);
        if let Some(c) = self.cassette.as_mut() {
            join(c);
        }
        join(&mut self.out);
    }

    /// Structural checks only; paths are checked by the validate stage.
    pub fn validate(&self) -> Result<(), ConfigError> {
        self.vocabulary()?;
        if self.projects.is_empty() {
            return Err(ConfigError::Invalid("no projects".into()));
        }
        let mut ids: Vec<&str> = self.projects.iter().map(|p| p.id.as_str()).collect();
        ids.sort_unstable();
        if let Some(w) = ids.windows(2).find(|w| w[0] == w[1]) {
            return Err(ConfigError::Invalid(format!("project id `{}` appears twice", w[0])));
        }
        if self.ground_truth.is_empty() {
            return Err(ConfigError::Invalid("no ground-truth files".into()));
        }
        if self.models.is_empty() {
            return Err(ConfigError::Invalid("no models".into()));
        }
        for m in &self.models {
            m.validate().map_err(|e| ConfigError::Invalid(e.to_string()))?;
        }
        let mut names: Vec<&str> = self.models.iter().map(|m| m.name.as_str()).collect();
        names.sort_unstable();
        if let Some(w) = names.windows(2).find(|w| w[0] == w[1]) {
            return Err(ConfigError::Invalid(format!("model `{}` appears twice", w[0])));
        }
        self.budget
            .validate()
            .map_err(|e| ConfigError::Invalid(e.to_string()))?;
        if self.parallelism == 0 {
            return Err(ConfigError::Invalid("parallelism must be at least 1".into()));
        }
        if self.backend != BackendKind::Live && self.cassette.is_none() {
            return Err(ConfigError::Invalid(format!(
                "backend {:?} needs a cassette",
                self.backend
            )));
        }
        Ok(())
    }

    pub fn vocabulary(&self) -> Result<RoleVocabulary, ConfigError> {
        RoleVocabulary::new(&self.pattern.name, self.pattern.roles.iter().cloned())
            .map_err(|e| ConfigError::Invalid(e.to_string()))
    }

    pub fn project(&self, id: &str) -> Option<&ProjectConfig> {
        self.projects.iter().find(|p| p.id == id)
    }

    /// Keeps only the named model.
    pub fn select_model(&mut self, name: &str) -> Result<(), ConfigError> {
        if !self.models.iter().any(|m| m.name == name) {
            return Err(ConfigError::Invalid(format!("no model named `{name}` in config")));
        }
        self.models.retain(|m| m.name == name);
        Ok(())
    }
}
