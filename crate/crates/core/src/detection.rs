//! Turning raw model answers into labeled predictions.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use crate::annotations::{parse_micro_architectures, RoleAssignment, RoleVocabulary};
use crate::gateway::PairKey;
use crate::promptgen::NO_INSTANCE_FOUND;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PredictionKind {
    Annotations,
    NoneFound,
    Malformed,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ClassStatus {
    Known,
    HallucinatedClass,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum RoleStatus {
    Known,
    HallucinatedRole,
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct PredictedAssignment {
    pub role: String,
    pub class_fqn: String,
    pub class_status: ClassStatus,
    pub role_status: RoleStatus,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Prediction {
    pub kind: PredictionKind,
    /// Deduplicated and sorted by (role, class).
    pub assignments: Vec<PredictedAssignment>,
    /// Text outside the annotation blocks was present.
    #[serde(default)]
    pub extra_text: bool,
    /// Original answer, kept only for malformed responses.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub raw_text: Option<String>,
    #[serde(default)]
    pub hallucinated_classes: usize,
    #[serde(default)]
    pub hallucinated_roles: usize,
}

impl Prediction {
    fn of_kind(kind: PredictionKind) -> Self {
        Prediction {
            kind,
            assignments: Vec::new(),
            extra_text: false,
            raw_text: None,
            hallucinated_classes: 0,
            hallucinated_roles: 0,
        }
    }

    fn malformed(raw: &str) -> Self {
        Prediction {
            raw_text: Some(raw.to_string()),
            ..Self::of_kind(PredictionKind::Malformed)
        }
    }

    pub fn role_count(&self, role: &str) -> usize {
        self.assignments.iter().filter(|a| a.role == role).count()
    }
}

/// One line of `predictions.jsonl`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PredictionRecord {
    pub run_id: u32,
    pub pair_key: PairKey,
    #[serde(flatten)]
    pub prediction: Prediction,
}

fn strip_fence(text: &str) -> &str {
    let t = text.trim();
    let Some(rest) = t.strip_prefix("```") else { return t };
    let body = rest.split_once('\n').map_or("", |(_, b)| b);
    body.trim_end().strip_suffix("```").unwrap_or(body).trim()
}

/// Byte ranges of `<microArchitecture ...>...</microArchitecture>` blocks,
/// or `None` if a block is left open.
fn annotation_blocks(text: &str) -> Option<Vec<(usize, usize)>> {
    const OPEN: &str = "<microArchitecture";
    const CLOSE: &str = "</microArchitecture>";
    let mut blocks = Vec::new();
    let mut from = 0;
    while let Some(rel) = text[from..].find(OPEN) {
        let start = from + rel;
        let after = &text[start + OPEN.len()..];
        if !after.starts_with(|c: char| c.is_whitespace() || c == '>' || c == '/') {
            from = start + OPEN.len();
            continue;
        }
        let tag_end = start + OPEN.len() + after.find('>')? + 1;
        let end = if text[..tag_end].ends_with("/>") {
            tag_end
        } else {
            tag_end + text[tag_end..].find(CLOSE)? + CLOSE.len()
        };
        blocks.push((start, end));
        from = end;
    }
    Some(blocks)
}

fn is_noise(gap: &str) -> bool {
    gap.lines().all(|l| {
        let l = l.trim();
        l.is_empty() || l.starts_with("```") || (l.starts_with("<?xml") && l.ends_with("?>"))
    })
}

/// Classifies an answer as the fallback sentence, annotations, or malformed.
///
/// Role names are not checked here; see [`classify_hallucinations`].
pub fn parse_response(raw_text: &str, vocab: &RoleVocabulary) -> Prediction {
    if strip_fence(raw_text) == NO_INSTANCE_FOUND {
        return Prediction::of_kind(PredictionKind::NoneFound);
    }
    let blocks = match annotation_blocks(raw_text) {
        Some(b) if !b.is_empty() => b,
        _ => return Prediction::malformed(raw_text),
    };
    let mut assignments = BTreeSet::new();
    let mut extra_text = false;
    let mut cursor = 0;
    for &(start, end) in &blocks {
        extra_text |= !is_noise(&raw_text[cursor..start]);
        cursor = end;
        match parse_micro_architectures(&raw_text[start..end], vocab) {
            Ok(parsed) => {
                for block in parsed {
                    for RoleAssignment { role, class_fqn } in block.assignments {
                        assignments.insert(PredictedAssignment {
                            role,
                            class_fqn,
                            class_status: ClassStatus::Known,
                            role_status: RoleStatus::Known,
                        });
                    }
                }
            }
            Err(_) => return Prediction::malformed(raw_text),
        }
    }
    extra_text |= !is_noise(&raw_text[cursor..]);
    Prediction {
        assignments: assignments.into_iter().collect(),
        extra_text,
        ..Prediction::of_kind(PredictionKind::Annotations)
    }
}

#[derive(Debug, Clone, Copy, Default)]
pub struct ClassifyOptions {
    /// Resolve a class name that misses exactly but whose last segment
    /// matches exactly one target class.
    pub resolve_simple_names: bool,
}

/// Labels every assignment as known or hallucinated by class and by role.
pub fn classify_hallucinations(
    prediction: &Prediction,
    target_classes: &BTreeSet<String>,
    vocab: &RoleVocabulary,
    options: ClassifyOptions,
) -> Prediction {
    if prediction.kind != PredictionKind::Annotations {
        return prediction.clone();
    }
    let mut by_simple: BTreeMap<&str, Vec<&str>> = BTreeMap::new();
    if options.resolve_simple_names {
        for fqn in target_classes {
            by_simple.entry(simple_name(fqn)).or_default().push(fqn);
        }
    }
    let assignments: BTreeSet<PredictedAssignment> = prediction
        .assignments
        .iter()
        .map(|a| {
            let mut class_fqn = a.class_fqn.clone();
            if !target_classes.contains(&class_fqn) {
                if let Some([only]) = by_simple.get(simple_name(&class_fqn)).map(Vec::as_slice) {
                    class_fqn = only.to_string();
                }
            }
            PredictedAssignment {
                role: a.role.clone(),
                class_status: if target_classes.contains(&class_fqn) {
                    ClassStatus::Known
                } else {
                    ClassStatus::HallucinatedClass
                },
                role_status: if vocab.contains(&a.role) {
                    RoleStatus::Known
                } else {
                    RoleStatus::HallucinatedRole
                },
                class_fqn,
            }
        })
        .collect();
    let assignments: Vec<_> = assignments.into_iter().collect();
    Prediction {
        hallucinated_classes: assignments
            .iter()
            .filter(|a| a.class_status == ClassStatus::HallucinatedClass)
            .count(),
        hallucinated_roles: assignments
            .iter()
            .filter(|a| a.role_status == RoleStatus::HallucinatedRole)
            .count(),
        assignments,
        ..prediction.clone()
    }
}

fn simple_name(fqn: &str) -> &str {
    fqn.rsplit('.').next().unwrap_or(fqn)
}
