//! Java project ingestion: comment stripping, type indexing and snippet
//! assembly.

mod lexer;

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;
use walkdir::WalkDir;

pub use lexer::{extract_decls, strip_comments, Declarations, LexError};

#[derive(Debug, Error)]
pub enum IngestError {
    #[error("cannot read {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("{path}: {source}")]
    Lex {
        path: PathBuf,
        #[source]
        source: LexError,
    },
    #[error("duplicate type `{fqn}` declared in {first} and {second}")]
    DuplicateFqn {
        fqn: String,
        first: PathBuf,
        second: PathBuf,
    },
    #[error("project root {0} does not exist")]
    MissingRoot(PathBuf),
    #[error("no classes under package prefix `{0}`")]
    EmptySnippet(String),
}

/// One top-level Java type.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassUnit {
    pub fqn: String,
    /// Relative to the project root.
    pub file_path: PathBuf,
    pub raw_source: String,
    pub clean_source: String,
}

/// Top-level types of one project keyed by fully qualified name.
#[derive(Debug, Clone, Default)]
pub struct ClassIndex {
    project_id: String,
    units: BTreeMap<String, ClassUnit>,
}

/// A source file that failed to lex under lenient ingestion.
#[derive(Debug, Clone)]
pub struct SkippedFile {
    pub path: PathBuf,
    pub error: LexError,
}

#[derive(Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct IndexManifest {
    pub project_id: String,
    pub units: Vec<ManifestEntry>,
}

#[derive(Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct ManifestEntry {
    pub fqn: String,
    pub path: String,
    pub byte_len: usize,
}

impl ClassIndex {
    pub fn new(project_id: impl Into<String>) -> Self {
        ClassIndex {
            project_id: project_id.into(),
            units: BTreeMap::new(),
        }
    }

    /// Adds a unit, rejecting a second unit with the same fqn.
    pub fn insert(&mut self, unit: ClassUnit) -> Result<(), IngestError> {
        if let Some(existing) = self.units.get(&unit.fqn) {
            return Err(IngestError::DuplicateFqn {
                fqn: unit.fqn,
                first: existing.file_path.clone(),
                second: unit.file_path,
            });
        }
        self.units.insert(unit.fqn.clone(), unit);
        Ok(())
    }

    pub fn project_id(&self) -> &str {
        &self.project_id
    }

    pub fn len(&self) -> usize {
        self.units.len()
    }

    pub fn is_empty(&self) -> bool {
        self.units.is_empty()
    }

    pub fn get(&self, fqn: &str) -> Option<&ClassUnit> {
        self.units.get(fqn)
    }

    pub fn contains(&self, fqn: &str) -> bool {
        self.units.contains_key(fqn)
    }

    /// Units in lexicographic fqn order.
    pub fn units(&self) -> impl Iterator<Item = &ClassUnit> {
        self.units.values()
    }

    /// Units whose fqn lies under `prefix` at a dot boundary; all units when
    /// the prefix is empty.
    pub fn under_package<'a>(&'a self, prefix: &'a str) -> impl Iterator<Item = &'a ClassUnit> + 'a {
        self.units.values().filter(move |u| in_package(&u.fqn, prefix))
    }

    pub fn manifest(&self) -> IndexManifest {
        IndexManifest {
            project_id: self.project_id.clone(),
            units: self
                .units()
                .map(|u| ManifestEntry {
                    fqn: u.fqn.clone(),
                    path: u.file_path.to_string_lossy().replace('\\', "/"),
                    byte_len: u.raw_source.len(),
                })
                .collect(),
        }
    }
}

/// True when `fqn` equals `prefix` extended by at least one `.segment`.
pub fn in_package(fqn: &str, prefix: &str) -> bool {
    prefix.is_empty() || fqn.strip_prefix(prefix).is_some_and(|rest| rest.starts_with('.'))
}

#[derive(Debug, Clone, Copy, Default)]
pub struct IndexOptions {
    /// Skip files that fail to lex instead of failing the whole project.
    pub lenient: bool,
}

fn lex_file(root: &Path, path: &Path) -> Result<Result<Vec<ClassUnit>, SkippedFile>, IngestError> {
    let raw = fs::read_to_string(path).map_err(|source| IngestError::Io {
        path: path.to_path_buf(),
        source,
    })?;
    let rel = path.strip_prefix(root).unwrap_or(path).to_path_buf();
    let lexed = strip_comments(&raw).and_then(|clean| extract_decls(&clean).map(|d| (clean, d)));
    let (clean, decls) = match lexed {
        Ok(v) => v,
        Err(error) => return Ok(Err(SkippedFile { path: rel, error })),
    };
    // Every top-level type of a file carries the whole compilation unit.
    Ok(Ok(decls
        .type_names
        .iter()
        .map(|name| ClassUnit {
            fqn: if decls.package.is_empty() {
                name.clone()
            } else {
                format!("{}.{}", decls.package, name)
            },
            file_path: rel.clone(),
            raw_source: raw.clone(),
            clean_source: clean.clone(),
        })
        .collect()))
}

/// Indexes every `.java` file under `root`.
///
/// Files are lexed in parallel; results are merged in path order so that
/// duplicate reports are deterministic.
pub fn index_project(
    root: &Path,
    project_id: &str,
    options: IndexOptions,
) -> Result<(ClassIndex, Vec<SkippedFile>), IngestError> {
    if !root.is_dir() {
        return Err(IngestError::MissingRoot(root.to_path_buf()));
    }
    let mut files = Vec::new();
    for entry in WalkDir::new(root).sort_by_file_name() {
        let entry = entry.map_err(|e| IngestError::Io {
            path: e.path().unwrap_or(root).to_path_buf(),
            source: e.into(),
        })?;
        if entry.file_type().is_file() && entry.path().extension().is_some_and(|x| x == "java") {
            files.push(entry.into_path());
        }
    }

    let lexed: Vec<_> = files.par_iter().map(|p| lex_file(root, p)).collect();

    let mut index = ClassIndex::new(project_id);
    let mut skipped = Vec::new();
    for result in lexed {
        match result? {
            Ok(units) => {
                for unit in units {
                    index.insert(unit)?;
                }
            }
            Err(skip) if options.lenient => {
                log::warn!("skipping {}: {}", skip.path.display(), skip.error);
                skipped.push(skip);
            }
            Err(skip) => {
                return Err(IngestError::Lex {
                    path: skip.path,
                    source: skip.error,
                })
            }
        }
    }
    Ok((index, skipped))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SnippetEntry {
    pub fqn: String,
    pub clean_source: String,
}

/// The code handed to the model: a sequence of `File:` headed code blocks.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Snippet {
    entries: Vec<SnippetEntry>,
    rendered: String,
}

impl Snippet {
    pub fn new(mut entries: Vec<SnippetEntry>) -> Self {
        entries.sort_by(|a, b| a.fqn.cmp(&b.fqn));
        let mut rendered = String::new();
        for (i, e) in entries.iter().enumerate() {
            if i > 0 {
                rendered.push('\n');
            }
            let _ = writeln!(rendered, "File: {}", e.fqn);
            rendered.push_str("```java\n");
            rendered.push_str(&e.clean_source);
            if !e.clean_source.ends_with('\n') {
                rendered.push('\n');
            }
            rendered.push_str("```\n");
        }
        Snippet { entries, rendered }
    }

    pub fn entries(&self) -> &[SnippetEntry] {
        &self.entries
    }

    pub fn rendered(&self) -> &str {
        &self.rendered
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn class_names(&self) -> impl Iterator<Item = &str> {
        self.entries.iter().map(|e| e.fqn.as_str())
    }
}

/// Collects every unit under `package_prefix` into a rendered snippet.
pub fn assemble_snippet(index: &ClassIndex, package_prefix: &str) -> Result<Snippet, IngestError> {
    let entries: Vec<_> = index
        .under_package(package_prefix)
        .map(|u| SnippetEntry {
            fqn: u.fqn.clone(),
            clean_source: u.clean_source.clone(),
        })
        .collect();
    if entries.is_empty() {
        return Err(IngestError::EmptySnippet(package_prefix.to_string()));
    }
    Ok(Snippet::new(entries))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn unit(fqn: &str) -> ClassUnit {
        ClassUnit {
            fqn: fqn.into(),
            file_path: PathBuf::from(format!("{}.java", fqn.replace('.', "/"))),
            raw_source: format!("// {fqn}\nclass X {{}}\n"),
            clean_source: "\nclass X {}\n".into(),
        }
    }

    fn index_of(fqns: &[&str]) -> ClassIndex {
        let mut idx = ClassIndex::new("p");
        for f in fqns {
            idx.insert(unit(f)).unwrap();
        }
        idx
    }

    #[test]
    fn prefix_respects_dot_boundary() {
        let idx = index_of(&["a.b.C", "a.bc.D"]);
        let s = assemble_snippet(&idx, "a.b").unwrap();
        assert_eq!(s.class_names().collect::<Vec<_>>(), vec!["a.b.C"]);
    }

    #[test]
    fn empty_prefix_selects_everything() {
        let idx = index_of(&["z.A", "a.B", "C"]);
        let s = assemble_snippet(&idx, "").unwrap();
        assert_eq!(s.class_names().collect::<Vec<_>>(), vec!["C", "a.B", "z.A"]);
    }

    #[test]
    fn unmatched_prefix_is_an_error() {
        let idx = index_of(&["a.B"]);
        assert!(matches!(assemble_snippet(&idx, "zzz"), Err(IngestError::EmptySnippet(p)) if p == "zzz"));
    }

    #[test]
    fn rendered_has_one_header_per_entry() {
        let idx = index_of(&["a.b.C", "a.b.D", "a.b.e.F"]);
        let s = assemble_snippet(&idx, "a.b").unwrap();
        assert_eq!(s.rendered().matches("File: ").count(), 3);
        assert!(s.rendered().starts_with("File: a.b.C\n```java\n\nclass X {}\n```\n"));
        assert_eq!(s, assemble_snippet(&idx, "a.b").unwrap());
    }

    #[test]
    fn duplicate_fqn_rejected() {
        let mut idx = index_of(&["a.b.C"]);
        let mut dup = unit("a.b.C");
        dup.file_path = PathBuf::from("other/C.java");
        match idx.insert(dup) {
            Err(IngestError::DuplicateFqn { fqn, first, second }) => {
                assert_eq!(fqn, "a.b.C");
                assert_eq!(first, PathBuf::from("a/b/C.java"));
                assert_eq!(second, PathBuf::from("other/C.java"));
            }
            other => panic!("expected duplicate error, got {other:?}"),
        }
    }

    #[test]
    fn in_package_cases() {
        assert!(in_package("a.b.C", "a.b"));
        assert!(in_package("a.b.c.D", "a.b"));
        assert!(!in_package("a.bc.D", "a.b"));
        assert!(!in_package("a.b", "a.b"));
        assert!(in_package("X", ""));
    }
}
