//! Scoring predictions against ground truth.
//!
//! Each run is broken into scored units, one (predicted label, truth label)
//! pair per decision:
//!
//! * a predicted (class, role) that matches the truth is one true-positive unit;
//! * a predicted pair without a match is one false-positive unit, in the column
//!   of the class's truth role (or `No Role`), or in the `Hallucinated Class`
//!   column when the class is not in the snippet;
//! * a predicted role outside the vocabulary lands in the `Hallucinated Role` row;
//! * every unmatched truth pair is one false-negative unit `(No Role, role)`;
//! * every snippet class with no truth role and no prediction is one
//!   true-negative unit `(No Role, No Role)`.
//!
//! A misprediction on an annotated class therefore yields two units: the stray
//! prediction and the missed truth pair.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::annotations::{PatternInstance, RoleVocabulary};
use crate::detection::{ClassStatus, Prediction, PredictionKind, RoleStatus};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EvalError {
    #[error("truth class `{class}` of instance {instance_id} is not in the target snippet")]
    TruthOutsideSnippet { instance_id: u32, class: String },
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PredictedLabel {
    Role(String),
    NoRole,
    HallucinatedRole,
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum TruthLabel {
    Role(String),
    NoRole,
    HallucinatedClass,
}

impl fmt::Display for PredictedLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PredictedLabel::Role(r) => f.write_str(r),
            PredictedLabel::NoRole => f.write_str("No Role"),
            PredictedLabel::HallucinatedRole => f.write_str("Hallucinated Role"),
        }
    }
}

impl fmt::Display for TruthLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TruthLabel::Role(r) => f.write_str(r),
            TruthLabel::NoRole => f.write_str("No Role"),
            TruthLabel::HallucinatedClass => f.write_str("Hallucinated Class"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ScoredUnit {
    pub class_fqn: String,
    pub predicted: PredictedLabel,
    pub truth: TruthLabel,
}

impl ScoredUnit {
    pub fn new(class_fqn: impl Into<String>, predicted: PredictedLabel, truth: TruthLabel) -> Self {
        ScoredUnit {
            class_fqn: class_fqn.into(),
            predicted,
            truth,
        }
    }

    pub fn is_hallucination(&self) -> bool {
        self.truth == TruthLabel::HallucinatedClass || self.predicted == PredictedLabel::HallucinatedRole
    }
}

/// Scores one classified prediction against its target instance.
pub fn score_run(
    prediction: &Prediction,
    truth: &PatternInstance,
    snippet_classes: &BTreeSet<String>,
) -> Result<Vec<ScoredUnit>, EvalError> {
    let mut truth_roles: BTreeMap<&str, Vec<&str>> = BTreeMap::new();
    for a in truth.assignments() {
        if !snippet_classes.contains(&a.class_fqn) {
            return Err(EvalError::TruthOutsideSnippet {
                instance_id: truth.instance_id(),
                class: a.class_fqn.clone(),
            });
        }
        truth_roles.entry(&a.class_fqn).or_default().push(&a.role);
    }
    let first_truth = |class: &str| {
        truth_roles
            .get(class)
            .and_then(|roles| roles.first())
            .map_or(TruthLabel::NoRole, |r| TruthLabel::Role(r.to_string()))
    };

    let assignments = match prediction.kind {
        PredictionKind::Annotations => prediction.assignments.as_slice(),
        PredictionKind::NoneFound | PredictionKind::Malformed => &[],
    };

    let mut units = Vec::new();
    let mut matched: BTreeSet<(&str, &str)> = BTreeSet::new();
    let mut touched: BTreeSet<&str> = BTreeSet::new();
    for a in assignments {
        let predicted = match a.role_status {
            RoleStatus::HallucinatedRole => PredictedLabel::HallucinatedRole,
            RoleStatus::Known => PredictedLabel::Role(a.role.clone()),
        };
        if a.class_status == ClassStatus::HallucinatedClass {
            units.push(ScoredUnit::new(&a.class_fqn, predicted, TruthLabel::HallucinatedClass));
            continue;
        }
        touched.insert(&a.class_fqn);
        let is_match = a.role_status == RoleStatus::Known
            && truth_roles
                .get(a.class_fqn.as_str())
                .is_some_and(|roles| roles.contains(&a.role.as_str()));
        if is_match {
            matched.insert((&a.class_fqn, &a.role));
            units.push(ScoredUnit::new(
                &a.class_fqn,
                predicted,
                TruthLabel::Role(a.role.clone()),
            ));
        } else {
            units.push(ScoredUnit::new(&a.class_fqn, predicted, first_truth(&a.class_fqn)));
        }
    }
    for a in truth.assignments() {
        if !matched.contains(&(a.class_fqn.as_str(), a.role.as_str())) {
            units.push(ScoredUnit::new(
                &a.class_fqn,
                PredictedLabel::NoRole,
                TruthLabel::Role(a.role.clone()),
            ));
        }
    }
    for class in snippet_classes {
        if !truth_roles.contains_key(class.as_str()) && !touched.contains(class.as_str()) {
            units.push(ScoredUnit::new(class, PredictedLabel::NoRole, TruthLabel::NoRole));
        }
    }
    Ok(units)
}

/// An exact non-negative fraction.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Ratio {
    pub num: u64,
    pub den: u64,
}

impl Ratio {
    /// `num / den`, or zero when `den` is zero.
    pub fn or_zero(num: u64, den: u64) -> Self {
        if den == 0 {
            Ratio { num: 0, den: 1 }
        } else {
            Ratio { num, den }
        }
    }

    pub fn value(self) -> f64 {
        self.num as f64 / self.den as f64
    }

    /// Thousandths, rounded half-up on the exact fraction.
    pub fn thousandths(self) -> u64 {
        (2000 * self.num + self.den) / (2 * self.den)
    }

    /// Three-decimal report form: `0`, `.414`, `1.000`.
    pub fn display3(self) -> String {
        match self.thousandths() {
            0 => "0".to_string(),
            k if k >= 1000 => format!("{}.{:03}", k / 1000, k % 1000),
            k => format!(".{k:03}"),
        }
    }
}

/// Report form of a metric that may be undefined (`-`).
pub fn display_optional(r: Option<Ratio>) -> String {
    r.map_or_else(|| "-".to_string(), Ratio::display3)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Variant {
    WithHallucination,
    WithoutHallucination,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct Counts {
    pub tp: u64,
    pub fp: u64,
    #[serde(rename = "fn")]
    pub fn_: u64,
    pub tn: u64,
}

impl Counts {
    pub fn new(tp: u64, fp: u64, fn_: u64, tn: u64) -> Self {
        Counts { tp, fp, fn_, tn }
    }

    pub fn precision(&self) -> Ratio {
        Ratio::or_zero(self.tp, self.tp + self.fp)
    }

    pub fn recall(&self) -> Ratio {
        Ratio::or_zero(self.tp, self.tp + self.fn_)
    }

    /// Harmonic mean of precision and recall, which reduces to
    /// `2tp / (2tp + fp + fn)`; zero when `tp` is zero.
    pub fn f1(&self) -> Ratio {
        if self.tp == 0 {
            Ratio::or_zero(0, 0)
        } else {
            Ratio::or_zero(2 * self.tp, 2 * self.tp + self.fp + self.fn_)
        }
    }

    pub fn accuracy(&self) -> Ratio {
        Ratio::or_zero(self.tp + self.tn, self.tp + self.fp + self.fn_ + self.tn)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RunMetrics {
    pub run_id: u32,
    pub model_name: String,
    pub variant: Variant,
    #[serde(flatten)]
    pub counts: Counts,
    pub precision: f64,
    pub recall: f64,
    pub f1: f64,
    pub accuracy: f64,
}

impl RunMetrics {
    pub fn from_counts(run_id: u32, model_name: impl Into<String>, variant: Variant, counts: Counts) -> Self {
        RunMetrics {
            run_id,
            model_name: model_name.into(),
            variant,
            counts,
            precision: counts.precision().value(),
            recall: counts.recall().value(),
            f1: counts.f1().value(),
            accuracy: counts.accuracy().value(),
        }
    }
}

/// Binary counts for one run: every vocabulary role is positive, `No Role`
/// negative. The without-hallucination variant drops hallucinated-class and
/// hallucinated-role units, which are always false positives.
pub fn binary_counts(units: &[ScoredUnit], variant: Variant) -> Counts {
    let mut c = Counts::default();
    for u in units {
        match (&u.predicted, &u.truth) {
            (PredictedLabel::Role(p), TruthLabel::Role(t)) if p == t => c.tp += 1,
            (PredictedLabel::NoRole, TruthLabel::NoRole) => c.tn += 1,
            (PredictedLabel::NoRole, _) => c.fn_ += 1,
            _ => {
                if variant == Variant::WithHallucination || !u.is_hallucination() {
                    c.fp += 1;
                }
            }
        }
    }
    c
}

pub fn run_binary_metrics(run_id: u32, model_name: &str, units: &[ScoredUnit], variant: Variant) -> RunMetrics {
    RunMetrics::from_counts(run_id, model_name, variant, binary_counts(units, variant))
}

/// Multi-class role matrix: rows are predicted labels, columns truth labels.
///
/// Row order: `Hallucinated Role`, vocabulary roles, `No Role`.
/// Column order: `Hallucinated Class`, vocabulary roles, `No Role`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RoleConfusionMatrix {
    roles: Vec<String>,
    cells: Vec<Vec<u64>>,
}

impl RoleConfusionMatrix {
    pub fn new(vocab: &RoleVocabulary) -> Self {
        let n = vocab.roles().len() + 2;
        RoleConfusionMatrix {
            roles: vocab.roles().to_vec(),
            cells: vec![vec![0; n]; n],
        }
    }

    pub fn row_labels(&self) -> Vec<PredictedLabel> {
        std::iter::once(PredictedLabel::HallucinatedRole)
            .chain(self.roles.iter().cloned().map(PredictedLabel::Role))
            .chain(std::iter::once(PredictedLabel::NoRole))
            .collect()
    }

    pub fn column_labels(&self) -> Vec<TruthLabel> {
        std::iter::once(TruthLabel::HallucinatedClass)
            .chain(self.roles.iter().cloned().map(TruthLabel::Role))
            .chain(std::iter::once(TruthLabel::NoRole))
            .collect()
    }

    fn role_index(&self, role: &str) -> Option<usize> {
        self.roles.iter().position(|r| r == role).map(|i| i + 1)
    }

    /// Predicted roles outside the vocabulary count as hallucinated roles.
    fn row_index(&self, label: &PredictedLabel) -> usize {
        match label {
            PredictedLabel::HallucinatedRole => 0,
            PredictedLabel::Role(r) => self.role_index(r).unwrap_or(0),
            PredictedLabel::NoRole => self.roles.len() + 1,
        }
    }

    fn column_index(&self, label: &TruthLabel) -> usize {
        match label {
            TruthLabel::HallucinatedClass => 0,
            TruthLabel::Role(r) => self.role_index(r).unwrap_or(self.roles.len() + 1),
            TruthLabel::NoRole => self.roles.len() + 1,
        }
    }

    pub fn add(&mut self, predicted: &PredictedLabel, truth: &TruthLabel, count: u64) {
        let (r, c) = (self.row_index(predicted), self.column_index(truth));
        self.cells[r][c] += count;
    }

    pub fn cell(&self, predicted: &PredictedLabel, truth: &TruthLabel) -> u64 {
        self.cells[self.row_index(predicted)][self.column_index(truth)]
    }

    pub fn cells(&self) -> &[Vec<u64>] {
        &self.cells
    }

    pub fn row_total(&self, predicted: &PredictedLabel, variant: Variant) -> u64 {
        let row = &self.cells[self.row_index(predicted)];
        let skip = usize::from(variant == Variant::WithoutHallucination);
        row[skip..].iter().sum()
    }

    pub fn column_total(&self, truth: &TruthLabel, variant: Variant) -> u64 {
        let c = self.column_index(truth);
        let skip = usize::from(variant == Variant::WithoutHallucination);
        self.cells[skip..].iter().map(|row| row[c]).sum()
    }

    pub fn grand_total(&self, variant: Variant) -> u64 {
        let skip = usize::from(variant == Variant::WithoutHallucination);
        self.cells[skip..]
            .iter()
            .map(|row| row[skip..].iter().sum::<u64>())
            .sum()
    }
}

pub fn aggregate_matrix<'a>(
    units: impl IntoIterator<Item = &'a ScoredUnit>,
    vocab: &RoleVocabulary,
) -> RoleConfusionMatrix {
    let mut m = RoleConfusionMatrix::new(vocab);
    for u in units {
        m.add(&u.predicted, &u.truth, 1);
    }
    m
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LabelMetric {
    pub label: String,
    /// `None` when the label is removed in this variant.
    pub total: Option<u64>,
    /// `None` when undefined: no diagonal counterpart, or zero total.
    pub value: Option<Ratio>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatrixMetrics {
    pub variant: Variant,
    /// Per predicted label, in row order.
    pub precision: Vec<LabelMetric>,
    /// Per truth label, in column order.
    pub recall: Vec<LabelMetric>,
    pub grand_total: u64,
}

impl MatrixMetrics {
    pub fn precision_of(&self, label: &str) -> Option<Ratio> {
        self.precision.iter().find(|m| m.label == label).and_then(|m| m.value)
    }

    pub fn recall_of(&self, label: &str) -> Option<Ratio> {
        self.recall.iter().find(|m| m.label == label).and_then(|m| m.value)
    }
}

/// Row precision and column recall of a role matrix.
pub fn matrix_metrics(m: &RoleConfusionMatrix, variant: Variant) -> MatrixMetrics {
    let without = variant == Variant::WithoutHallucination;
    let diagonal = |p: &PredictedLabel, t: &TruthLabel| m.cell(p, t);
    let precision = m
        .row_labels()
        .into_iter()
        .map(|p| {
            let removed = without && p == PredictedLabel::HallucinatedRole;
            let total = (!removed).then(|| m.row_total(&p, variant));
            let t = match &p {
                PredictedLabel::Role(r) => Some(TruthLabel::Role(r.clone())),
                PredictedLabel::NoRole => Some(TruthLabel::NoRole),
                PredictedLabel::HallucinatedRole => None,
            };
            let value = match (t, total) {
                (Some(t), Some(total)) if total > 0 => Some(Ratio {
                    num: diagonal(&p, &t),
                    den: total,
                }),
                _ => None,
            };
            LabelMetric {
                label: p.to_string(),
                total,
                value,
            }
        })
        .collect();
    let recall = m
        .column_labels()
        .into_iter()
        .map(|t| {
            let removed = without && t == TruthLabel::HallucinatedClass;
            let total = (!removed).then(|| m.column_total(&t, variant));
            let p = match &t {
                TruthLabel::Role(r) => Some(PredictedLabel::Role(r.clone())),
                TruthLabel::NoRole => Some(PredictedLabel::NoRole),
                TruthLabel::HallucinatedClass => None,
            };
            let value = match (p, total) {
                (Some(p), Some(total)) if total > 0 => Some(Ratio {
                    num: diagonal(&p, &t),
                    den: total,
                }),
                _ => None,
            };
            LabelMetric {
                label: t.to_string(),
                total,
                value,
            }
        })
        .collect();
    MatrixMetrics {
        variant,
        precision,
        recall,
        grand_total: m.grand_total(variant),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::annotations::RoleAssignment;
    use crate::detection::PredictedAssignment;

    fn role(r: &str) -> PredictedLabel {
        PredictedLabel::Role(r.into())
    }
    fn truth(r: &str) -> TruthLabel {
        TruthLabel::Role(r.into())
    }

    fn pa(role: &str, class: &str, cs: ClassStatus, rs: RoleStatus) -> PredictedAssignment {
        PredictedAssignment {
            role: role.into(),
            class_fqn: class.into(),
            class_status: cs,
            role_status: rs,
        }
    }

    fn annotations(assignments: Vec<PredictedAssignment>) -> Prediction {
        let mut p = crate::detection::parse_response("No instance found.", &RoleVocabulary::composite());
        p.kind = PredictionKind::Annotations;
        p.assignments = assignments;
        p
    }

    fn inst143() -> PatternInstance {
        PatternInstance::new(
            143,
            "Composite",
            "sadp",
            vec![
                RoleAssignment::new("Component", "src.COMPOSITE.Component"),
                RoleAssignment::new("Composite", "src.COMPOSITE.Composite"),
                RoleAssignment::new("Leaf", "src.COMPOSITE.Leaf1"),
                RoleAssignment::new("Leaf", "src.COMPOSITE.Leaf2"),
                RoleAssignment::new("Client", "src.COMPOSITE.Client"),
            ],
        )
        .unwrap()
    }

    fn classes(i: &PatternInstance) -> BTreeSet<String> {
        i.classes().into_iter().map(String::from).collect()
    }

    #[test]
    fn exact_prediction_is_all_true_positives() {
        let t = inst143();
        let pred = annotations(
            t.assignments()
                .iter()
                .map(|a| pa(&a.role, &a.class_fqn, ClassStatus::Known, RoleStatus::Known))
                .collect(),
        );
        let units = score_run(&pred, &t, &classes(&t)).unwrap();
        assert_eq!(units.len(), 5);
        assert!(units
            .iter()
            .all(|u| matches!((&u.predicted, &u.truth), (PredictedLabel::Role(p), TruthLabel::Role(q)) if p == q)));
        assert_eq!(
            binary_counts(&units, Variant::WithHallucination),
            Counts::new(5, 0, 0, 0)
        );
    }

    #[test]
    fn none_found_yields_fn_and_tn() {
        let roles: Vec<_> = (0..17)
            .map(|i| RoleAssignment::new("Leaf", format!("p{i}.C")))
            .collect();
        let t = PatternInstance::new(4, "Composite", "q", roles).unwrap();
        let mut snippet = classes(&t);
        snippet.extend((0..200).map(|i| format!("other.X{i}")));
        let pred = crate::detection::parse_response("No instance found.", &RoleVocabulary::composite());
        let units = score_run(&pred, &t, &snippet).unwrap();
        assert_eq!(
            binary_counts(&units, Variant::WithHallucination),
            Counts::new(0, 0, 17, 200)
        );
    }

    #[test]
    fn hallucinated_class_and_role_cells() {
        let t = inst143();
        let pred = annotations(vec![
            pa(
                "Composite",
                "src.COMPOSITE.Phantom",
                ClassStatus::HallucinatedClass,
                RoleStatus::Known,
            ),
            pa(
                "Decorator",
                "src.COMPOSITE.Leaf1",
                ClassStatus::Known,
                RoleStatus::HallucinatedRole,
            ),
        ]);
        let units = score_run(&pred, &t, &classes(&t)).unwrap();
        let m = aggregate_matrix(&units, &RoleVocabulary::composite());
        assert_eq!(m.cell(&role("Composite"), &TruthLabel::HallucinatedClass), 1);
        assert_eq!(m.cell(&PredictedLabel::HallucinatedRole, &truth("Leaf")), 1);
        let with = binary_counts(&units, Variant::WithHallucination);
        let without = binary_counts(&units, Variant::WithoutHallucination);
        assert_eq!(with, Counts::new(0, 2, 5, 0));
        assert_eq!(without, Counts::new(0, 0, 5, 0));
    }

    #[test]
    fn misprediction_counts_once_each_side() {
        let t = inst143();
        let pred = annotations(vec![
            pa(
                "Composite",
                "src.COMPOSITE.Leaf1",
                ClassStatus::Known,
                RoleStatus::Known,
            ),
            pa("Leaf", "src.COMPOSITE.Leaf2", ClassStatus::Known, RoleStatus::Known),
        ]);
        let mut snippet = classes(&t);
        snippet.insert("src.COMPOSITE.Extra".into());
        let units = score_run(&pred, &t, &snippet).unwrap();
        assert!(units.contains(&ScoredUnit::new(
            "src.COMPOSITE.Leaf1",
            role("Composite"),
            truth("Leaf")
        )));
        assert!(units.contains(&ScoredUnit::new(
            "src.COMPOSITE.Leaf1",
            PredictedLabel::NoRole,
            truth("Leaf")
        )));
        assert_eq!(
            binary_counts(&units, Variant::WithHallucination),
            Counts::new(1, 1, 4, 1)
        );
    }

    #[test]
    fn truth_outside_snippet_is_an_error() {
        let t = inst143();
        let mut snippet = classes(&t);
        snippet.remove("src.COMPOSITE.Leaf1");
        assert!(matches!(
            score_run(&annotations(vec![]), &t, &snippet),
            Err(EvalError::TruthOutsideSnippet { instance_id: 143, .. })
        ));
    }

    #[test]
    fn ratio_rounding_and_display() {
        assert_eq!(Ratio { num: 3, den: 80 }.display3(), ".038");
        assert_eq!(Ratio { num: 12, den: 29 }.display3(), ".414");
        assert_eq!(Ratio { num: 1, den: 1 }.display3(), "1.000");
        assert_eq!(Ratio::or_zero(0, 0).display3(), "0");
        assert_eq!(Ratio { num: 1, den: 2000 }.display3(), ".001");
        assert_eq!(Ratio { num: 1, den: 2001 }.display3(), "0");
        assert_eq!(display_optional(None), "-");
    }

    #[test]
    fn published_run_metrics_examples() {
        let c = Counts::new(12, 17, 23, 117);
        assert_eq!(
            [c.precision(), c.recall(), c.f1(), c.accuracy()].map(Ratio::display3),
            [".414", ".343", ".375", ".763"]
        );
        let c = Counts::new(12, 6, 23, 117);
        assert_eq!(
            [c.precision(), c.f1(), c.accuracy()].map(Ratio::display3),
            [".667", ".453", ".816"]
        );
        let c = Counts::new(3, 1, 2, 0);
        assert_eq!(
            [c.precision(), c.recall(), c.f1(), c.accuracy()].map(Ratio::display3),
            [".750", ".600", ".667", ".500"]
        );
    }

    #[test]
    fn identity_matrix_is_perfect() {
        let v = RoleVocabulary::composite();
        let mut m = RoleConfusionMatrix::new(&v);
        for r in v.roles() {
            m.add(&role(r), &truth(r), 3);
        }
        m.add(&PredictedLabel::NoRole, &TruthLabel::NoRole, 10);
        for variant in [Variant::WithHallucination, Variant::WithoutHallucination] {
            let mm = matrix_metrics(&m, variant);
            for lm in mm.precision.iter().chain(&mm.recall) {
                if let Some(v) = lm.value {
                    assert_eq!(v.num, v.den, "{}", lm.label);
                }
            }
            assert_eq!(mm.precision_of("Hallucinated Role"), None);
            assert_eq!(mm.recall_of("Hallucinated Class"), None);
        }
    }

    #[test]
    fn empty_matrix_is_zero() {
        let m = aggregate_matrix(&[], &RoleVocabulary::composite());
        assert_eq!(m.grand_total(Variant::WithHallucination), 0);
        assert!(matrix_metrics(&m, Variant::WithHallucination)
            .precision
            .iter()
            .all(|p| p.value.is_none()));
    }
}
