//! Prompt construction and pair planning.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};
use thiserror::Error;

use crate::annotations::{canonical_annotation_xml, PatternInstance, RoleVocabulary};
use crate::corpus::Snippet;

/// The sentence the model must answer with when it finds nothing.
pub const NO_INSTANCE_FOUND: &str = "No instance found.";

pub const DEFAULT_CONTEXT_LIMIT: u64 = 128_000;
pub const DEFAULT_RESERVED_OUTPUT: u64 = 4096;
pub const DEFAULT_ESTIMATOR: &str = "bytes4";

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PromptError {
    #[error("common root package of an empty class list")]
    EmptyClassList,
    #[error("unknown token estimator `{0}`")]
    UnknownEstimator(String),
    #[error("invalid token budget: {0}")]
    InvalidBudget(String),
    #[error("{0}")]
    Argument(String),
}

/// Longest dot-separated package prefix shared by the package parts of all
/// `fqns`. Empty when they share none.
pub fn common_root_package<'a>(fqns: impl IntoIterator<Item = &'a str>) -> Result<String, PromptError> {
    let mut common: Option<Vec<&str>> = None;
    for fqn in fqns {
        let mut segments: Vec<&str> = fqn.split('.').collect();
        segments.pop();
        common = Some(match common {
            None => segments,
            Some(prev) => prev
                .into_iter()
                .zip(segments)
                .take_while(|(a, b)| a == b)
                .map(|(a, _)| a)
                .collect(),
        });
    }
    common.map(|c| c.join(".")).ok_or(PromptError::EmptyClassList)
}

/// Context window accounting for one model.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TokenBudget {
    #[serde(default = "default_context_limit")]
    pub context_limit: u64,
    #[serde(default = "default_reserved_output")]
    pub reserved_output: u64,
    #[serde(default = "default_estimator", rename = "estimator")]
    pub estimator_id: String,
}

fn default_context_limit() -> u64 {
    DEFAULT_CONTEXT_LIMIT
}
fn default_reserved_output() -> u64 {
    DEFAULT_RESERVED_OUTPUT
}
fn default_estimator() -> String {
    DEFAULT_ESTIMATOR.to_string()
}

impl Default for TokenBudget {
    fn default() -> Self {
        TokenBudget {
            context_limit: DEFAULT_CONTEXT_LIMIT,
            reserved_output: DEFAULT_RESERVED_OUTPUT,
            estimator_id: DEFAULT_ESTIMATOR.to_string(),
        }
    }
}

impl TokenBudget {
    pub fn new(context_limit: u64, reserved_output: u64, estimator_id: impl Into<String>) -> Result<Self, PromptError> {
        let b = TokenBudget {
            context_limit,
            reserved_output,
            estimator_id: estimator_id.into(),
        };
        b.validate()?;
        Ok(b)
    }

    pub fn validate(&self) -> Result<(), PromptError> {
        if self.reserved_output == 0 || self.reserved_output >= self.context_limit {
            return Err(PromptError::InvalidBudget(format!(
                "need 0 < reserved_output ({}) < context_limit ({})",
                self.reserved_output, self.context_limit
            )));
        }
        estimator(&self.estimator_id).map(|_| ())
    }

    /// Tokens available to the prompt itself.
    pub fn prompt_allowance(&self) -> u64 {
        self.context_limit - self.reserved_output
    }
}

pub trait TokenEstimator: Send + Sync {
    fn estimate(&self, text: &str) -> u64;
}

/// `ceil(len / divisor)` over bytes or chars.
#[derive(Debug, Clone, Copy)]
pub struct RatioEstimator {
    pub divisor: u64,
    pub count_chars: bool,
}

impl TokenEstimator for RatioEstimator {
    fn estimate(&self, text: &str) -> u64 {
        let len = if self.count_chars {
            text.chars().count()
        } else {
            text.len()
        } as u64;
        len.div_ceil(self.divisor)
    }
}

/// Resolves an estimator id.
///
/// Known ids: `bytes4` (default), `chars4`, and `bytes:<n>` for any positive
/// integer divisor.
pub fn estimator(id: &str) -> Result<Box<dyn TokenEstimator>, PromptError> {
    let unknown = || PromptError::UnknownEstimator(id.to_string());
    let est = match id {
        "bytes4" => RatioEstimator {
            divisor: 4,
            count_chars: false,
        },
        "chars4" => RatioEstimator {
            divisor: 4,
            count_chars: true,
        },
        _ => {
            let divisor: u64 = id
                .strip_prefix("bytes:")
                .and_then(|n| n.parse().ok())
                .filter(|&n| n > 0)
                .ok_or_else(unknown)?;
            RatioEstimator {
                divisor,
                count_chars: false,
            }
        }
    };
    Ok(Box::new(est))
}

pub fn estimate_tokens(text: &str, budget: &TokenBudget) -> Result<u64, PromptError> {
    Ok(estimator(&budget.estimator_id)?.estimate(text))
}

/// Renders the instruction message (with the worked example) and the target
/// message.
pub fn render_prompt(
    example: &PatternInstance,
    example_snippet: &Snippet,
    target_snippet: &Snippet,
    vocab: &RoleVocabulary,
) -> Result<(String, String), PromptError> {
    if example_snippet.is_empty() || target_snippet.is_empty() {
        return Err(PromptError::Argument("prompt snippets must not be empty".into()));
    }
    let covered: std::collections::BTreeSet<&str> = example_snippet.class_names().collect();
    if let Some(missing) = example.classes().into_iter().find(|c| !covered.contains(c)) {
        return Err(PromptError::Argument(format!(
            "example snippet lacks class `{missing}` of instance {}",
            example.instance_id()
        )));
    }

    let pattern = vocab.pattern_name();
    let mut m1 = String::new();
    m1.push_str(
        "You are a skilled software architect. Your task is to identify design patterns \
         in source code snippets and create XML annotations for them.\n\n",
    );
    m1.push_str("### Instructions:\n");
    m1.push_str("1. Wait for a subsequent prompt that will contain the source code to analyze.\n");
    let _ = writeln!(
        m1,
        "2. Once the source code is provided, analyze it for the presence of the specific design pattern {pattern}."
    );
    m1.push_str(
        "3. If the design pattern is found, create a valid XML annotation for each instance within the snippet.\n",
    );
    let _ = writeln!(
        m1,
        "4. If no pattern is found, simply respond with the text: \"{NO_INSTANCE_FOUND}\""
    );
    m1.push_str("\nImportant:\n");
    m1.push_str("- Do not provide any additional explanations, outputs, or analyses beyond what is requested.\n");
    m1.push_str("- If the pattern is found, only output the XML annotation(s).\n");
    let _ = writeln!(m1, "- If the pattern is not found, only output \"{NO_INSTANCE_FOUND}\"");
    m1.push_str("\nExample:\n\nSource Code Snippet:\n\n");
    m1.push_str(example_snippet.rendered());
    m1.push_str("\nXML Annotation:\n\n```xml\n");
    m1.push_str(&canonical_annotation_xml(example, vocab));
    m1.push_str("```\n");

    Ok((m1, target_snippet.rendered().to_string()))
}

pub fn sha256_hex(text: &str) -> String {
    hex::encode(Sha256::digest(text.as_bytes()))
}

/// Digest of a two-message conversation.
pub fn prompt_digest(message_1: &str, message_2: &str) -> String {
    let mut h = Sha256::new();
    h.update(message_1.as_bytes());
    h.update([0u8]);
    h.update(message_2.as_bytes());
    hex::encode(h.finalize())
}

/// An ordered (example, target) pairing and its rendered conversation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PromptPair {
    pub example_id: u32,
    pub target_id: u32,
    pub pattern_name: String,
    pub message_1: String,
    pub message_2: String,
    pub token_estimate: u64,
    pub same_project: bool,
}

impl PromptPair {
    pub fn digest(&self) -> String {
        prompt_digest(&self.message_1, &self.message_2)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ExclusionReason {
    OverBudget,
    SameProject,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExcludedPair {
    pub example_id: u32,
    pub target_id: u32,
    pub token_estimate: u64,
    pub reason: ExclusionReason,
}

#[derive(Debug, Clone, Default)]
pub struct PairPlan {
    pub included: Vec<PromptPair>,
    pub excluded: Vec<ExcludedPair>,
}

#[derive(Debug, Clone, Copy, Default)]
pub struct PlanOptions {
    pub allow_same_project: bool,
}

/// Every ordered pairing of distinct instances, split into those that fit the
/// budget and those that do not. Output is ordered by (example, target).
pub fn enumerate_pairs(
    instances: &[PatternInstance],
    snippets: &BTreeMap<u32, Snippet>,
    budget: &TokenBudget,
    vocab: &RoleVocabulary,
    options: PlanOptions,
) -> Result<PairPlan, PromptError> {
    budget.validate()?;
    let est = estimator(&budget.estimator_id)?;
    let mut sorted: Vec<&PatternInstance> = instances.iter().collect();
    sorted.sort_by_key(|i| i.instance_id());
    if let Some(w) = sorted.windows(2).find(|w| w[0].instance_id() == w[1].instance_id()) {
        return Err(PromptError::Argument(format!(
            "instance {} appears twice",
            w[0].instance_id()
        )));
    }
    let snippet_of = |i: &PatternInstance| {
        snippets
            .get(&i.instance_id())
            .ok_or_else(|| PromptError::Argument(format!("no snippet for instance {}", i.instance_id())))
    };

    let candidates: Vec<(&PatternInstance, &PatternInstance)> = sorted
        .iter()
        .flat_map(|&e| {
            sorted
                .iter()
                .filter(move |t| t.instance_id() != e.instance_id())
                .map(move |&t| (e, t))
        })
        .collect();

    let rendered: Vec<Result<PromptPair, PromptError>> = candidates
        .par_iter()
        .map(|&(example, target)| {
            let (message_1, message_2) = render_prompt(example, snippet_of(example)?, snippet_of(target)?, vocab)?;
            let token_estimate = est.estimate(&message_1) + est.estimate(&message_2);
            Ok(PromptPair {
                example_id: example.instance_id(),
                target_id: target.instance_id(),
                pattern_name: vocab.pattern_name().to_string(),
                message_1,
                message_2,
                token_estimate,
                same_project: example.project_id() == target.project_id(),
            })
        })
        .collect();

    let mut plan = PairPlan::default();
    for pair in rendered {
        let pair = pair?;
        let reason = if pair.same_project && !options.allow_same_project {
            Some(ExclusionReason::SameProject)
        } else if pair.token_estimate > budget.prompt_allowance() {
            Some(ExclusionReason::OverBudget)
        } else {
            None
        };
        match reason {
            Some(reason) => plan.excluded.push(ExcludedPair {
                example_id: pair.example_id,
                target_id: pair.target_id,
                token_estimate: pair.token_estimate,
                reason,
            }),
            None => plan.included.push(pair),
        }
    }
    Ok(plan)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::annotations::RoleAssignment;
    use crate::corpus::SnippetEntry;

    fn snippet(fqns: &[&str]) -> Snippet {
        Snippet::new(
            fqns.iter()
                .map(|f| SnippetEntry {
                    fqn: f.to_string(),
                    clean_source: format!("class {} {{}}\n", f.rsplit('.').next().unwrap()),
                })
                .collect(),
        )
    }

    fn instance(id: u32, project: &str, classes: &[&str]) -> PatternInstance {
        PatternInstance::new(
            id,
            "Composite",
            project,
            classes.iter().map(|c| RoleAssignment::new("Leaf", *c)).collect(),
        )
        .unwrap()
    }

    #[test]
    fn root_package_examples() {
        assert_eq!(
            common_root_package(["a.b.c.d.ClassA", "a.b.e.f.ClassB"]).unwrap(),
            "a.b"
        );
        assert_eq!(common_root_package(["x.y.Z"]).unwrap(), "x.y");
        assert_eq!(common_root_package(["p.A", "q.B"]).unwrap(), "");
        assert_eq!(common_root_package(["A"]).unwrap(), "");
        assert_eq!(
            common_root_package(std::iter::empty()),
            Err(PromptError::EmptyClassList)
        );
    }

    #[test]
    fn estimator_defaults_and_registry() {
        let b = TokenBudget::default();
        assert_eq!(estimate_tokens("", &b).unwrap(), 0);
        assert_eq!(estimate_tokens("abcdefgh", &b).unwrap(), 2);
        assert_eq!(estimate_tokens("abcdefghi", &b).unwrap(), 3);
        let b3 = TokenBudget::new(100, 10, "bytes:3").unwrap();
        assert_eq!(estimate_tokens("abcdefg", &b3).unwrap(), 3);
        let chars = TokenBudget::new(100, 10, "chars4").unwrap();
        assert_eq!(estimate_tokens("ääää", &chars).unwrap(), 1);
        let bad = TokenBudget {
            estimator_id: "tiktoken".into(),
            ..TokenBudget::default()
        };
        assert_eq!(
            estimate_tokens("x", &bad),
            Err(PromptError::UnknownEstimator("tiktoken".into()))
        );
        assert!(TokenBudget::new(100, 10, "bytes:0").is_err());
    }

    #[test]
    fn budget_invariants() {
        assert!(TokenBudget::new(100, 0, "bytes4").is_err());
        assert!(TokenBudget::new(100, 100, "bytes4").is_err());
        assert_eq!(TokenBudget::default().prompt_allowance(), 128_000 - 4096);
    }

    #[test]
    fn render_contains_listing_parts_in_order() {
        let ex = instance(65, "junit", &["junit.ui.TestRunner"]);
        let (m1, m2) = render_prompt(
            &ex,
            &snippet(&["junit.ui.TestRunner"]),
            &snippet(&["a.B"]),
            &RoleVocabulary::composite(),
        )
        .unwrap();
        let order = [
            "You are a skilled software architect.",
            "### Instructions:",
            "specific design pattern Composite.",
            "simply respond with the text: \"No instance found.\"",
            "Important:",
            "File: junit.ui.TestRunner",
            "XML Annotation:",
            "<microArchitecture number=\"65\"",
        ];
        let mut at = 0;
        for needle in order {
            let pos = m1[at..]
                .find(needle)
                .unwrap_or_else(|| panic!("missing or out of order: {needle}"));
            at += pos;
        }
        assert_eq!(m1.matches("<microArchitecture").count(), 1);
        assert_eq!(m2, "File: a.B\n```java\nclass B {}\n```\n");
        assert!(!m2.contains("<microArchitecture"));
    }

    #[test]
    fn render_requires_covering_example_snippet() {
        let ex = instance(1, "p", &["a.B", "a.C"]);
        let v = RoleVocabulary::composite();
        assert!(render_prompt(&ex, &snippet(&["a.B"]), &snippet(&["x.Y"]), &v).is_err());
        assert!(render_prompt(&ex, &Snippet::new(vec![]), &snippet(&["x.Y"]), &v).is_err());
    }

    #[test]
    fn pairs_are_ordered_and_budgeted() {
        let v = RoleVocabulary::composite();
        let insts = vec![
            instance(3, "p3", &["c.C"]),
            instance(1, "p1", &["a.A"]),
            instance(2, "p2", &["b.B"]),
        ];
        let snippets: BTreeMap<u32, Snippet> = [(1, "a.A"), (2, "b.B"), (3, "c.C")]
            .into_iter()
            .map(|(id, f)| (id, snippet(&[f])))
            .collect();
        let plan = enumerate_pairs(&insts, &snippets, &TokenBudget::default(), &v, PlanOptions::default()).unwrap();
        let ids: Vec<_> = plan.included.iter().map(|p| (p.example_id, p.target_id)).collect();
        assert_eq!(ids, vec![(1, 2), (1, 3), (2, 1), (2, 3), (3, 1), (3, 2)]);
        assert!(plan.excluded.is_empty());

        let degenerate = TokenBudget::new(4097, 4096, "bytes4").unwrap();
        let plan = enumerate_pairs(&insts, &snippets, &degenerate, &v, PlanOptions::default()).unwrap();
        assert!(plan.included.is_empty());
        assert_eq!(plan.excluded.len(), 6);
        assert!(plan.excluded.iter().all(|e| e.reason == ExclusionReason::OverBudget));
    }

    #[test]
    fn same_project_pairs_need_opt_in() {
        let v = RoleVocabulary::composite();
        let insts = vec![instance(1, "p", &["a.A"]), instance(2, "p", &["a.B"])];
        let snippets: BTreeMap<u32, Snippet> = [(1, snippet(&["a.A", "a.B"])), (2, snippet(&["a.A", "a.B"]))].into();
        let plan = enumerate_pairs(&insts, &snippets, &TokenBudget::default(), &v, PlanOptions::default()).unwrap();
        assert!(plan.included.is_empty());
        assert!(plan.excluded.iter().all(|e| e.reason == ExclusionReason::SameProject));
        let plan = enumerate_pairs(
            &insts,
            &snippets,
            &TokenBudget::default(),
            &v,
            PlanOptions {
                allow_same_project: true,
            },
        )
        .unwrap();
        assert_eq!(plan.included.len(), 2);
        assert!(plan.included.iter().all(|p| p.same_project));
    }
}
