//! Ground-truth pattern instances: parsing, normalization, completeness
//! filtering and canonical serialization.
//!
//! Two role layouts are accepted inside `<roles>`:
//!
//! * normalized: `<role name="Leaf"><class>a.b.C</class></role>`
//! * repository-native: `<leaves><leaf><entity>a.b.C</entity></leaf></leaves>`,
//!   where the element directly enclosing `<entity>` names the role.
//!
//! Both may appear in one document. Text and attribute values are trimmed.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt::Write as _;

use quick_xml::escape::{escape, resolve_predefined_entity};
use quick_xml::events::{BytesStart, Event};
use quick_xml::Reader;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::corpus::ClassIndex;
use crate::promptgen::common_root_package;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AnnotationError {
    #[error("malformed XML at line {line}, column {column}: {message}")]
    Xml {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("role `{role}` is not part of the {pattern} vocabulary")]
    UnknownRole { role: String, pattern: String },
    #[error("micro-architecture {0}: {1}")]
    InvalidInstance(String, String),
    #[error("instance {instance_id} references unknown project `{project_id}`")]
    UnknownProject { instance_id: u32, project_id: String },
    #[error("invalid role vocabulary: {0}")]
    InvalidVocabulary(String),
}

/// The ordered role names of one design pattern.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RoleVocabulary {
    pattern_name: String,
    roles: Vec<String>,
}

impl RoleVocabulary {
    pub fn new(
        pattern_name: impl Into<String>,
        roles: impl IntoIterator<Item = impl Into<String>>,
    ) -> Result<Self, AnnotationError> {
        let roles: Vec<String> = roles.into_iter().map(Into::into).collect();
        if roles.is_empty() {
            return Err(AnnotationError::InvalidVocabulary("no roles".into()));
        }
        let mut seen = BTreeSet::new();
        for r in &roles {
            if r.trim().is_empty() || r.trim() != r {
                return Err(AnnotationError::InvalidVocabulary(format!("bad role name `{r}`")));
            }
            if !seen.insert(r.as_str()) {
                return Err(AnnotationError::InvalidVocabulary(format!("duplicate role `{r}`")));
            }
        }
        Ok(RoleVocabulary {
            pattern_name: pattern_name.into(),
            roles,
        })
    }

    /// Client, Component, Composite, Leaf.
    pub fn composite() -> Self {
        Self::new("Composite", ["Client", "Component", "Composite", "Leaf"]).expect("static vocabulary is valid")
    }

    pub fn pattern_name(&self) -> &str {
        &self.pattern_name
    }

    pub fn roles(&self) -> &[String] {
        &self.roles
    }

    pub fn contains(&self, role: &str) -> bool {
        self.position(role).is_some()
    }

    pub fn position(&self, role: &str) -> Option<usize> {
        self.roles.iter().position(|r| r == role)
    }

    /// Maps a native element name such as `leaf` onto its vocabulary spelling.
    fn normalize_element_role(&self, element: &str) -> String {
        if let Some(r) = self.roles.iter().find(|r| r.eq_ignore_ascii_case(element)) {
            return r.clone();
        }
        let mut chars = element.chars();
        match chars.next() {
            Some(first) => first.to_uppercase().chain(chars).collect(),
            None => String::new(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct RoleAssignment {
    pub role: String,
    pub class_fqn: String,
}

impl RoleAssignment {
    pub fn new(role: impl Into<String>, class_fqn: impl Into<String>) -> Self {
        RoleAssignment {
            role: role.into(),
            class_fqn: class_fqn.into(),
        }
    }
}

/// A ground-truth micro-architecture.
///
/// Assignments are kept sorted by (role, class), so two instances that differ
/// only in assignment order compare equal.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PatternInstance {
    instance_id: u32,
    pattern_name: String,
    project_id: String,
    assignments: Vec<RoleAssignment>,
    root_package: String,
}

impl PatternInstance {
    pub fn new(
        instance_id: u32,
        pattern_name: impl Into<String>,
        project_id: impl Into<String>,
        assignments: Vec<RoleAssignment>,
    ) -> Result<Self, AnnotationError> {
        let invalid = |msg: String| AnnotationError::InvalidInstance(instance_id.to_string(), msg);
        if assignments.is_empty() {
            return Err(invalid("no role assignments".into()));
        }
        let project_id = project_id.into();
        if project_id.trim() != project_id {
            return Err(invalid(format!("project `{project_id}` has surrounding whitespace")));
        }
        let mut set = BTreeSet::new();
        for a in assignments {
            if a.role.is_empty() || a.class_fqn.is_empty() {
                return Err(invalid("empty role or class name".into()));
            }
            if a.class_fqn.chars().any(char::is_whitespace) {
                return Err(invalid(format!("class name `{}` contains whitespace", a.class_fqn)));
            }
            let dup = format!("duplicate assignment ({}, {})", a.role, a.class_fqn);
            if !set.insert(a) {
                return Err(invalid(dup));
            }
        }
        let assignments: Vec<_> = set.into_iter().collect();
        let root_package =
            common_root_package(assignments.iter().map(|a| a.class_fqn.as_str())).expect("assignments are non-empty");
        Ok(PatternInstance {
            instance_id,
            pattern_name: pattern_name.into(),
            project_id,
            assignments,
            root_package,
        })
    }

    pub fn instance_id(&self) -> u32 {
        self.instance_id
    }

    pub fn pattern_name(&self) -> &str {
        &self.pattern_name
    }

    pub fn project_id(&self) -> &str {
        &self.project_id
    }

    pub fn assignments(&self) -> &[RoleAssignment] {
        &self.assignments
    }

    /// Longest common package of all participating classes; empty when the
    /// classes share no package prefix.
    pub fn root_package(&self) -> &str {
        &self.root_package
    }

    /// Distinct participating classes. A class may carry several roles, so
    /// this can be smaller than the assignment count.
    pub fn classes(&self) -> BTreeSet<&str> {
        self.assignments.iter().map(|a| a.class_fqn.as_str()).collect()
    }

    pub fn role_count(&self, role: &str) -> usize {
        self.assignments.iter().filter(|a| a.role == role).count()
    }
}

/// One `microArchitecture` element before validation.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct RawMicroArchitecture {
    pub number: Option<String>,
    pub pattern_name: Option<String>,
    pub project_id: Option<String>,
    pub assignments: Vec<RoleAssignment>,
}

fn xml_error(xml: &str, pos: u64, message: impl Into<String>) -> AnnotationError {
    let pos = (pos as usize).min(xml.len());
    let before = &xml.as_bytes()[..pos];
    let line = before.iter().filter(|&&b| b == b'\n').count() + 1;
    let column = pos - before.iter().rposition(|&b| b == b'\n').map_or(0, |p| p + 1) + 1;
    AnnotationError::Xml {
        line,
        column,
        message: message.into(),
    }
}

fn attr(reader: &Reader<&[u8]>, xml: &str, e: &BytesStart<'_>, name: &str) -> Result<Option<String>, AnnotationError> {
    match e.try_get_attribute(name) {
        Ok(Some(a)) => a
            .unescape_value()
            .map(|v| Some(v.trim().to_string()))
            .map_err(|err| xml_error(xml, reader.buffer_position(), err.to_string())),
        Ok(None) => Ok(None),
        Err(err) => Err(xml_error(xml, reader.buffer_position(), err.to_string())),
    }
}

/// Extracts every micro-architecture element of a document without
/// vocabulary checks.
pub fn parse_micro_architectures(
    xml: &str,
    vocab: &RoleVocabulary,
) -> Result<Vec<RawMicroArchitecture>, AnnotationError> {
    let mut reader = Reader::from_str(xml);
    reader.config_mut().check_end_names = true;

    let mut stack: Vec<String> = Vec::new();
    let mut program: Option<String> = None;
    let mut design_pattern: Option<String> = None;
    let mut current: Option<RawMicroArchitecture> = None;
    let mut role_attr: Option<String> = None;
    // (role, text) of the <class>/<entity> element being read
    let mut pending: Option<(String, String)> = None;
    let mut out = Vec::new();

    loop {
        let event = reader
            .read_event()
            .map_err(|e| xml_error(xml, reader.error_position(), e.to_string()))?;
        match event {
            Event::Start(ref e) | Event::Empty(ref e) => {
                let is_empty = matches!(event, Event::Empty(_));
                let name = String::from_utf8_lossy(e.local_name().as_ref()).into_owned();
                match name.as_str() {
                    "program" => program = attr(&reader, xml, e, "name")?,
                    "designPattern" => design_pattern = attr(&reader, xml, e, "name")?,
                    "microArchitecture" => {
                        if current.is_some() {
                            return Err(xml_error(xml, reader.buffer_position(), "nested microArchitecture"));
                        }
                        let raw = RawMicroArchitecture {
                            number: attr(&reader, xml, e, "number")?,
                            pattern_name: attr(&reader, xml, e, "designPatternName")?
                                .filter(|s| !s.is_empty())
                                .or_else(|| design_pattern.clone()),
                            project_id: attr(&reader, xml, e, "project")?.or_else(|| program.clone()),
                            assignments: Vec::new(),
                        };
                        if is_empty {
                            out.push(raw);
                        } else {
                            current = Some(raw);
                        }
                    }
                    "role" if current.is_some() => {
                        role_attr = attr(&reader, xml, e, "name")?;
                    }
                    "class" | "entity" if current.is_some() && stack.iter().any(|s| s == "roles") => {
                        let role = match &role_attr {
                            Some(r) => r.clone(),
                            None => vocab.normalize_element_role(stack.last().map_or("", String::as_str)),
                        };
                        if !is_empty {
                            pending = Some((role, String::new()));
                        }
                    }
                    _ => {}
                }
                if !is_empty {
                    stack.push(name);
                }
            }
            Event::End(ref e) => {
                let name = String::from_utf8_lossy(e.local_name().as_ref()).into_owned();
                stack.pop();
                match name.as_str() {
                    "microArchitecture" => {
                        if let Some(raw) = current.take() {
                            out.push(raw);
                        }
                    }
                    "role" => role_attr = None,
                    "class" | "entity" => {
                        if let (Some((role, text)), Some(cur)) = (pending.take(), current.as_mut()) {
                            let class = text.trim();
                            if !class.is_empty() {
                                cur.assignments.push(RoleAssignment::new(role, class));
                            }
                        }
                    }
                    "program" => program = None,
                    "designPattern" => design_pattern = None,
                    _ => {}
                }
            }
            Event::Text(ref t) => {
                if let Some((_, text)) = pending.as_mut() {
                    let s = t
                        .xml_content()
                        .map_err(|e| xml_error(xml, reader.buffer_position(), e.to_string()))?;
                    text.push_str(&s);
                }
            }
            Event::CData(ref t) => {
                if let Some((_, text)) = pending.as_mut() {
                    text.push_str(&String::from_utf8_lossy(t));
                }
            }
            Event::GeneralRef(ref r) => {
                if let Some((_, text)) = pending.as_mut() {
                    let resolved = match r.resolve_char_ref() {
                        Ok(Some(c)) => c.to_string(),
                        Ok(None) => {
                            let name = String::from_utf8_lossy(r).into_owned();
                            resolve_predefined_entity(&name).map(str::to_string).ok_or_else(|| {
                                xml_error(xml, reader.buffer_position(), format!("unknown entity &{name};"))
                            })?
                        }
                        Err(e) => return Err(xml_error(xml, reader.buffer_position(), e.to_string())),
                    };
                    text.push_str(&resolved);
                }
            }
            Event::Eof => {
                if let Some(open) = stack.last() {
                    return Err(xml_error(
                        xml,
                        reader.buffer_position(),
                        format!("unclosed element <{open}>"),
                    ));
                }
                break;
            }
            _ => {}
        }
    }
    Ok(out)
}

/// Parses ground-truth annotations, rejecting roles outside `vocab`.
pub fn parse_ground_truth(xml: &str, vocab: &RoleVocabulary) -> Result<Vec<PatternInstance>, AnnotationError> {
    let raws = parse_micro_architectures(xml, vocab)?;
    let mut seen = BTreeSet::new();
    let mut instances = Vec::with_capacity(raws.len());
    for raw in raws {
        let number = raw.number.unwrap_or_default();
        let instance_id: u32 = number.parse().map_err(|_| {
            AnnotationError::InvalidInstance(
                number.clone(),
                "attribute `number` must be a non-negative integer".into(),
            )
        })?;
        if let Some(a) = raw.assignments.iter().find(|a| !vocab.contains(&a.role)) {
            return Err(AnnotationError::UnknownRole {
                role: a.role.clone(),
                pattern: vocab.pattern_name().to_string(),
            });
        }
        let pattern = raw.pattern_name.unwrap_or_else(|| vocab.pattern_name().to_string());
        if !seen.insert((pattern.clone(), instance_id)) {
            return Err(AnnotationError::InvalidInstance(
                number,
                format!("duplicate number for pattern {pattern}"),
            ));
        }
        instances.push(PatternInstance::new(
            instance_id,
            pattern,
            raw.project_id.unwrap_or_default(),
            raw.assignments,
        )?);
    }
    Ok(instances)
}

/// Deterministic normalized XML for one instance.
///
/// Roles appear in vocabulary order (unknown roles after, alphabetically),
/// classes sorted within each role.
pub fn canonical_annotation_xml(instance: &PatternInstance, vocab: &RoleVocabulary) -> String {
    let mut by_role: BTreeMap<(usize, &str), Vec<&str>> = BTreeMap::new();
    for a in instance.assignments() {
        let rank = vocab.position(&a.role).unwrap_or(usize::MAX);
        by_role.entry((rank, a.role.as_str())).or_default().push(&a.class_fqn);
    }
    let mut xml = String::from("<?xml version=\"1.0\" ?>\n");
    let _ = writeln!(
        xml,
        "<microArchitecture number=\"{}\" designPatternName=\"{}\" project=\"{}\">",
        instance.instance_id(),
        escape(instance.pattern_name()),
        escape(instance.project_id()),
    );
    xml.push_str("  <roles>\n");
    for ((_, role), mut classes) in by_role {
        classes.sort_unstable();
        let _ = writeln!(xml, "    <role name=\"{}\">", escape(role));
        for c in classes {
            let _ = writeln!(xml, "      <class>{}</class>", escape(c));
        }
        xml.push_str("    </role>\n");
    }
    xml.push_str("  </roles>\n</microArchitecture>\n");
    xml
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DroppedInstance {
    pub instance_id: u32,
    pub missing_fqns: Vec<String>,
}

#[derive(Debug, Clone, Default)]
pub struct FilterOutcome {
    pub retained: Vec<PatternInstance>,
    pub dropped: Vec<DroppedInstance>,
}

/// Keeps the instances whose every class resolves in its project's index.
pub fn filter_complete(
    instances: &[PatternInstance],
    indexes: &HashMap<String, ClassIndex>,
) -> Result<FilterOutcome, AnnotationError> {
    let mut outcome = FilterOutcome::default();
    for inst in instances {
        let index = indexes
            .get(inst.project_id())
            .ok_or_else(|| AnnotationError::UnknownProject {
                instance_id: inst.instance_id(),
                project_id: inst.project_id().to_string(),
            })?;
        let missing: Vec<String> = inst
            .classes()
            .into_iter()
            .filter(|c| !index.contains(c))
            .map(str::to_string)
            .collect();
        if missing.is_empty() {
            outcome.retained.push(inst.clone());
        } else {
            outcome.dropped.push(DroppedInstance {
                instance_id: inst.instance_id(),
                missing_fqns: missing,
            });
        }
    }
    Ok(outcome)
}
