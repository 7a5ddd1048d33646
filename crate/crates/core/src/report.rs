//! Markdown and CSV rendering of pipeline results.
//!
//! Both formats are produced from the same formatted cells, so they always
//! carry identical numbers.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::evaluation::{
    display_optional, matrix_metrics, LabelMetric, PredictedLabel, RoleConfusionMatrix, RunMetrics, TruthLabel, Variant,
};

/// One row of the instance overview.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InstanceRow {
    pub instance_id: u32,
    pub project_id: String,
    pub project_name: String,
    pub root_package: String,
    pub participating: usize,
    pub root_package_classes: usize,
    /// Ground-truth assignments per role.
    pub role_counts: BTreeMap<String, usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RunRow {
    pub run_id: u32,
    pub example_id: u32,
    pub target_id: u32,
}

#[derive(Debug, Clone)]
pub struct ModelSection {
    pub model_name: String,
    /// (with, without) per run, in run order.
    pub runs: Vec<(RunMetrics, RunMetrics)>,
    pub matrix: RoleConfusionMatrix,
    /// Predicted assignments per role by run id; `None` when the model gave
    /// no annotations for that run.
    pub predicted_roles: BTreeMap<u32, Option<BTreeMap<String, usize>>>,
}

impl ModelSection {
    pub fn had_hallucination(&self) -> bool {
        self.matrix
            .row_total(&PredictedLabel::HallucinatedRole, Variant::WithHallucination)
            > 0
            || self
                .matrix
                .column_total(&TruthLabel::HallucinatedClass, Variant::WithHallucination)
                > 0
    }
}

#[derive(Debug, Clone)]
pub struct ReportData {
    pub pattern_name: String,
    pub roles: Vec<String>,
    pub instances: Vec<InstanceRow>,
    pub runs: Vec<RunRow>,
    pub models: Vec<ModelSection>,
}

/// A rectangular table of already-formatted cells.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Table {
    pub header: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

impl Table {
    fn new(header: impl IntoIterator<Item = impl Into<String>>) -> Self {
        Table {
            header: header.into_iter().map(Into::into).collect(),
            rows: Vec::new(),
        }
    }

    fn push(&mut self, row: Vec<String>) {
        debug_assert_eq!(row.len(), self.header.len());
        self.rows.push(row);
    }

    pub fn to_markdown(&self) -> String {
        let line = |cells: &[String]| format!("| {} |\n", cells.join(" | "));
        let mut out = line(&self.header);
        out.push_str(&line(&vec!["---".to_string(); self.header.len()]));
        for r in &self.rows {
            out.push_str(&line(r));
        }
        out
    }

    pub fn to_csv(&self) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(&self.header).expect("in-memory write");
        for r in &self.rows {
            w.write_record(r).expect("in-memory write");
        }
        String::from_utf8(w.into_inner().expect("in-memory flush")).expect("csv is utf-8")
    }
}

pub fn instance_table(instances: &[InstanceRow]) -> Table {
    let mut t = Table::new([
        "Instance",
        "Project",
        "Common Root Package",
        "Participating Classes",
        "Classes in Root Package",
    ]);
    for i in instances {
        t.push(vec![
            i.instance_id.to_string(),
            i.project_name.clone(),
            i.root_package.clone(),
            i.participating.to_string(),
            i.root_package_classes.to_string(),
        ]);
    }
    t
}

fn metric_cells(m: &RunMetrics) -> [String; 8] {
    let c = m.counts;
    [
        c.tp.to_string(),
        c.fp.to_string(),
        c.fn_.to_string(),
        c.tn.to_string(),
        c.precision().display3(),
        c.recall().display3(),
        c.f1().display3(),
        c.accuracy().display3(),
    ]
}

const METRIC_HEADS: [&str; 8] = ["TP", "FP", "FN", "TN", "P", "R", "F1", "A"];

pub fn run_table(section: &ModelSection, runs: &[RunRow]) -> Table {
    let mut header: Vec<String> = ["Run", "Example", "Target"].map(String::from).to_vec();
    header.extend(METRIC_HEADS.map(String::from));
    header.extend(METRIC_HEADS.map(|h| format!("{h} w/o")));
    let mut t = Table::new(header);
    for (with, without) in &section.runs {
        let run = runs.iter().find(|r| r.run_id == with.run_id);
        let mut row = vec![
            with.run_id.to_string(),
            run.map_or("?".into(), |r| r.example_id.to_string()),
            run.map_or("?".into(), |r| r.target_id.to_string()),
        ];
        row.extend(metric_cells(with));
        row.extend(metric_cells(without));
        t.push(row);
    }
    t
}

fn total_cell(lm: &LabelMetric) -> String {
    lm.total.map_or_else(|| "-".to_string(), |t| t.to_string())
}

/// Rows are predicted labels, columns truth labels. The without-hallucination
/// block is shown only when the model produced any hallucination.
pub fn matrix_table(m: &RoleConfusionMatrix, with_block: bool) -> Table {
    let with = matrix_metrics(m, Variant::WithHallucination);
    let without = matrix_metrics(m, Variant::WithoutHallucination);
    let columns = m.column_labels();
    let mut header = vec!["Predicted \\ Truth".to_string()];
    header.extend(columns.iter().map(ToString::to_string));
    header.extend(["Overall", "Precision"].map(String::from));
    if with_block {
        header.extend(["Overall w/o", "Precision w/o"].map(String::from));
    }
    let mut t = Table::new(header);
    for (i, p) in m.row_labels().iter().enumerate() {
        let mut row = vec![p.to_string()];
        row.extend(columns.iter().map(|c| m.cell(p, c).to_string()));
        row.push(total_cell(&with.precision[i]));
        row.push(display_optional(with.precision[i].value));
        if with_block {
            row.push(total_cell(&without.precision[i]));
            row.push(display_optional(without.precision[i].value));
        }
        t.push(row);
    }
    let tail = |label: &str, cells: Vec<String>, total: String| {
        let mut row = vec![label.to_string()];
        row.extend(cells);
        row.push(total);
        row.push(String::new());
        if with_block {
            row.extend([String::new(), String::new()]);
        }
        row
    };
    t.push(tail(
        "Truth overall",
        with.recall.iter().map(total_cell).collect(),
        with.grand_total.to_string(),
    ));
    t.push(tail(
        "Recall",
        with.recall.iter().map(|r| display_optional(r.value)).collect(),
        String::new(),
    ));
    if with_block {
        t.push(tail(
            "Truth overall w/o",
            without.recall.iter().map(total_cell).collect(),
            without.grand_total.to_string(),
        ));
        t.push(tail(
            "Recall w/o",
            without.recall.iter().map(|r| display_optional(r.value)).collect(),
            String::new(),
        ));
    }
    t
}

pub fn role_count_table(data: &ReportData) -> Table {
    let mut header: Vec<String> = ["Run", "Example", "Target"].map(String::from).to_vec();
    for role in &data.roles {
        header.push(format!("{role} E"));
        header.push(format!("{role} T"));
        header.extend(data.models.iter().map(|m| format!("{role} {}", m.model_name)));
    }
    let mut t = Table::new(header);
    let count_of = |id: u32, role: &str| {
        data.instances
            .iter()
            .find(|i| i.instance_id == id)
            .map_or("?".to_string(), |i| {
                i.role_counts.get(role).copied().unwrap_or(0).to_string()
            })
    };
    for run in &data.runs {
        let mut row = vec![
            run.run_id.to_string(),
            run.example_id.to_string(),
            run.target_id.to_string(),
        ];
        for role in &data.roles {
            row.push(count_of(run.example_id, role));
            row.push(count_of(run.target_id, role));
            for m in &data.models {
                row.push(match m.predicted_roles.get(&run.run_id) {
                    Some(Some(counts)) => counts.get(role).copied().unwrap_or(0).to_string(),
                    _ => "-".to_string(),
                });
            }
        }
        t.push(row);
    }
    t
}

/// The full report: Markdown text plus CSV files by name.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RenderedReport {
    pub markdown: String,
    pub csv: Vec<(String, String)>,
}

fn file_stem(model_name: &str) -> String {
    model_name
        .chars()
        .map(|c| {
            if c.is_ascii_alphanumeric() || c == '.' || c == '-' {
                c
            } else {
                '_'
            }
        })
        .collect()
}

pub fn render(data: &ReportData) -> RenderedReport {
    let mut md = format!("# {} pattern detection report\n\n", data.pattern_name);
    let mut csv = Vec::new();

    let instances = instance_table(&data.instances);
    md.push_str("## Instances\n\n");
    md.push_str(&instances.to_markdown());
    csv.push(("instances.csv".to_string(), instances.to_csv()));

    for section in &data.models {
        let stem = file_stem(&section.model_name);
        let runs = run_table(section, &data.runs);
        md.push_str(&format!("\n## Runs: {}\n\n", section.model_name));
        md.push_str(&runs.to_markdown());
        csv.push((format!("runs_{stem}.csv"), runs.to_csv()));

        let matrix = matrix_table(&section.matrix, section.had_hallucination());
        md.push_str(&format!("\n## Confusion matrix: {}\n\n", section.model_name));
        md.push_str(&matrix.to_markdown());
        csv.push((format!("matrix_{stem}.csv"), matrix.to_csv()));
    }

    let roles = role_count_table(data);
    md.push_str("\n## Role counts\n\n");
    md.push_str(&roles.to_markdown());
    csv.push(("roles.csv".to_string(), roles.to_csv()));

    RenderedReport { markdown: md, csv }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::annotations::RoleVocabulary;
    use crate::evaluation::Counts;

    fn section(hallucinated: bool) -> ModelSection {
        let v = RoleVocabulary::composite();
        let mut matrix = RoleConfusionMatrix::new(&v);
        matrix.add(
            &PredictedLabel::Role("Leaf".into()),
            &TruthLabel::Role("Leaf".into()),
            2,
        );
        matrix.add(&PredictedLabel::NoRole, &TruthLabel::NoRole, 3);
        if hallucinated {
            matrix.add(&PredictedLabel::Role("Leaf".into()), &TruthLabel::HallucinatedClass, 1);
        }
        let with = RunMetrics::from_counts(1, "m", Variant::WithHallucination, Counts::new(2, 1, 0, 3));
        let without = RunMetrics::from_counts(1, "m", Variant::WithoutHallucination, Counts::new(2, 0, 0, 3));
        ModelSection {
            model_name: "m".into(),
            runs: vec![(with, without)],
            matrix,
            predicted_roles: BTreeMap::from([(1, None)]),
        }
    }

    #[test]
    fn markdown_and_csv_share_cells() {
        let t = run_table(
            &section(true),
            &[RunRow {
                run_id: 1,
                example_id: 4,
                target_id: 65,
            }],
        );
        let md = t.to_markdown();
        let csv = t.to_csv();
        for cell in &t.rows[0] {
            assert!(md.contains(cell.as_str()) && csv.contains(cell.as_str()));
        }
        assert!(md.contains("| 1 | 4 | 65 | 2 | 1 | 0 | 3 | .667 | 1.000 | .800 | .833 |"));
    }

    #[test]
    fn without_block_only_with_hallucination() {
        let s = section(false);
        assert_eq!(matrix_table(&s.matrix, s.had_hallucination()).header.len(), 9);
        let s = section(true);
        let t = matrix_table(&s.matrix, s.had_hallucination());
        assert_eq!(t.header.len(), 11);
        let leaf = t.rows.iter().find(|r| r[0] == "Leaf").unwrap();
        assert_eq!(&leaf[7..], ["3", ".667", "2", "1.000"]);
        let hr = &t.rows[0];
        assert_eq!(&hr[7..], ["0", "-", "-", "-"]);
    }

    #[test]
    fn csv_quotes_commas() {
        let rows = vec![InstanceRow {
            instance_id: 1,
            project_id: "p".into(),
            project_name: "A, B".into(),
            root_package: "x".into(),
            participating: 1,
            root_package_classes: 2,
            role_counts: BTreeMap::new(),
        }];
        assert!(instance_table(&rows).to_csv().contains("\"A, B\""));
    }
}
