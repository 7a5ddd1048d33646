//! Published figures of the reference study, transcribed by hand, plus small
//! helpers shared by the integration tests.
#![allow(dead_code)]

pub mod gen;

use std::path::PathBuf;

use dp_scout::annotations::RoleVocabulary;
use dp_scout::evaluation::{PredictedLabel, RoleConfusionMatrix, TruthLabel};

/// Published figures are rounded to three decimals.
pub const TOLERANCE: f64 = 0.0005;

pub fn close(computed: f64, published: f64) -> bool {
    (computed - published).abs() <= TOLERANCE + 1e-9
}

pub fn fixtures() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures")
}

/// Counts and the four derived figures.
#[derive(Debug, Clone, Copy)]
pub struct Row {
    pub tp: u64,
    pub fp: u64,
    pub fn_: u64,
    pub tn: u64,
    pub p: f64,
    pub r: f64,
    pub f1: f64,
    pub a: f64,
}

#[allow(clippy::too_many_arguments)]
const fn row(tp: u64, fp: u64, fn_: u64, tn: u64, p: f64, r: f64, f1: f64, a: f64) -> Row {
    Row {
        tp,
        fp,
        fn_,
        tn,
        p,
        r,
        f1,
        a,
    }
}

/// Per-run figures for gpt-3.5: (with hallucination, without hallucination).
pub const RUNS_GPT35: [(Row, Row); 14] = [
    (
        row(4, 5, 36, 53, 0.444, 0.100, 0.163, 0.582),
        row(4, 5, 36, 53, 0.444, 0.100, 0.163, 0.582),
    ),
    (
        row(12, 17, 23, 117, 0.414, 0.343, 0.375, 0.763),
        row(12, 6, 23, 117, 0.667, 0.343, 0.453, 0.816),
    ),
    (
        row(3, 77, 37, 39, 0.037, 0.075, 0.050, 0.269),
        row(3, 33, 37, 39, 0.083, 0.075, 0.079, 0.375),
    ),
    (
        row(2, 2, 38, 54, 0.500, 0.050, 0.091, 0.583),
        row(2, 1, 38, 54, 0.667, 0.050, 0.093, 0.589),
    ),
    (
        row(1, 29, 16, 171, 0.033, 0.059, 0.043, 0.793),
        row(1, 29, 16, 171, 0.033, 0.059, 0.043, 0.793),
    ),
    (
        row(1, 3, 4, 0, 0.250, 0.200, 0.222, 0.125),
        row(1, 3, 4, 0, 0.250, 0.200, 0.222, 0.125),
    ),
    (
        row(3, 4, 2, 0, 0.429, 0.600, 0.500, 0.333),
        row(3, 4, 2, 0, 0.429, 0.600, 0.500, 0.333),
    ),
    (
        row(3, 1, 2, 0, 0.750, 0.600, 0.667, 0.500),
        row(3, 1, 2, 0, 0.750, 0.600, 0.667, 0.500),
    ),
    (
        row(3, 1, 2, 0, 0.750, 0.600, 0.667, 0.500),
        row(3, 1, 2, 0, 0.750, 0.600, 0.667, 0.500),
    ),
    (
        row(2, 3, 3, 0, 0.400, 0.400, 0.400, 0.250),
        row(2, 3, 3, 0, 0.400, 0.400, 0.400, 0.250),
    ),
    (
        row(0, 0, 17, 200, 0.0, 0.0, 0.0, 0.922),
        row(0, 0, 17, 200, 0.0, 0.0, 0.0, 0.922),
    ),
    (
        row(0, 0, 3, 105, 0.0, 0.0, 0.0, 0.972),
        row(0, 0, 3, 105, 0.0, 0.0, 0.0, 0.972),
    ),
    (
        row(0, 0, 29, 205, 0.0, 0.0, 0.0, 0.876),
        row(0, 0, 29, 205, 0.0, 0.0, 0.0, 0.876),
    ),
    (
        row(0, 0, 35, 120, 0.0, 0.0, 0.0, 0.774),
        row(0, 0, 35, 120, 0.0, 0.0, 0.0, 0.774),
    ),
];

/// Per-run figures for gpt-4.
pub const RUNS_GPT4: [Row; 14] = [
    row(6, 3, 34, 54, 0.667, 0.150, 0.245, 0.619),
    row(21, 32, 14, 98, 0.396, 0.600, 0.477, 0.721),
    row(8, 4, 32, 53, 0.667, 0.200, 0.308, 0.629),
    row(0, 0, 39, 55, 0.0, 0.0, 0.0, 0.585),
    row(0, 0, 17, 200, 0.0, 0.0, 0.0, 0.922),
    row(2, 1, 3, 0, 0.667, 0.400, 0.500, 0.333),
    row(3, 1, 2, 0, 0.750, 0.600, 0.667, 0.500),
    row(3, 1, 2, 0, 0.750, 0.600, 0.667, 0.500),
    row(3, 1, 2, 0, 0.750, 0.600, 0.667, 0.500),
    row(2, 1, 3, 0, 0.667, 0.400, 0.500, 0.333),
    row(11, 0, 6, 200, 1.000, 0.647, 0.786, 0.972),
    row(0, 0, 3, 105, 0.0, 0.0, 0.0, 0.972),
    row(0, 11, 29, 203, 0.0, 0.0, 0.0, 0.835),
    row(17, 15, 18, 111, 0.531, 0.486, 0.507, 0.795),
];

pub fn predicted(label: &str) -> PredictedLabel {
    match label {
        "Hallucinated Role" => PredictedLabel::HallucinatedRole,
        "No Role" => PredictedLabel::NoRole,
        r => PredictedLabel::Role(r.to_string()),
    }
}

pub fn truth(label: &str) -> TruthLabel {
    match label {
        "Hallucinated Class" => TruthLabel::HallucinatedClass,
        "No Role" => TruthLabel::NoRole,
        r => TruthLabel::Role(r.to_string()),
    }
}

/// A published confusion matrix: cells plus every printed figure.
pub struct PublishedMatrix {
    pub rows: &'static [&'static str],
    pub columns: &'static [&'static str],
    pub cells: &'static [&'static [u64]],
    /// (label, with, without); `None` where the table prints `-` or nothing.
    pub precision: &'static [(&'static str, Option<f64>, Option<f64>)],
    pub recall: &'static [(&'static str, Option<f64>, Option<f64>)],
    pub row_totals: &'static [(&'static str, u64, Option<u64>)],
    pub column_totals: &'static [(&'static str, u64, Option<u64>)],
    pub grand_total: (u64, Option<u64>),
}

impl PublishedMatrix {
    pub fn matrix(&self) -> RoleConfusionMatrix {
        let mut m = RoleConfusionMatrix::new(&RoleVocabulary::composite());
        for (r, row) in self.rows.iter().zip(self.cells) {
            for (c, &count) in self.columns.iter().zip(row.iter()) {
                m.add(&predicted(r), &truth(c), count);
            }
        }
        m
    }
}

/// gpt-3.5 role matrix, 36 cells.
pub const MATRIX_GPT35: PublishedMatrix = PublishedMatrix {
    rows: &[
        "Hallucinated Role",
        "Client",
        "Component",
        "Composite",
        "Leaf",
        "No Role",
    ],
    columns: &[
        "Hallucinated Class",
        "Client",
        "Component",
        "Composite",
        "Leaf",
        "No Role",
    ],
    cells: &[
        &[0, 0, 1, 0, 0, 3],
        &[38, 5, 1, 0, 2, 24],
        &[0, 0, 8, 1, 0, 1],
        &[1, 0, 0, 4, 12, 10],
        &[13, 0, 0, 4, 17, 32],
        &[0, 23, 5, 16, 185, 1064],
    ],
    precision: &[
        ("Client", Some(0.071), Some(0.156)),
        ("Component", Some(0.800), Some(0.800)),
        ("Composite", Some(0.148), Some(0.154)),
        ("Leaf", Some(0.258), Some(0.321)),
        ("No Role", Some(0.823), Some(0.823)),
    ],
    recall: &[
        ("Client", Some(0.179), Some(0.179)),
        ("Component", Some(0.533), Some(0.571)),
        ("Composite", Some(0.160), Some(0.160)),
        ("Leaf", Some(0.008), Some(0.008)),
        ("No Role", Some(0.938), Some(0.941)),
    ],
    row_totals: &[
        ("Hallucinated Role", 4, None),
        ("Client", 70, Some(32)),
        ("Component", 10, Some(10)),
        ("Composite", 27, Some(26)),
        ("Leaf", 66, Some(53)),
        ("No Role", 1293, Some(1293)),
    ],
    column_totals: &[
        ("Hallucinated Class", 52, None),
        ("Client", 28, Some(28)),
        ("Component", 15, Some(14)),
        ("Composite", 25, Some(25)),
        ("Leaf", 216, Some(216)),
        ("No Role", 1134, Some(1131)),
    ],
    grand_total: (1470, Some(1414)),
};

/// gpt-4 role matrix, 25 cells. This model produced no hallucinations, so both
/// variants share the printed figures.
pub const MATRIX_GPT4: PublishedMatrix = PublishedMatrix {
    rows: &["Client", "Component", "Composite", "Leaf", "No Role"],
    columns: &["No Role", "Client", "Component", "Composite", "Leaf"],
    cells: &[
        &[13, 9, 1, 3, 8],
        &[1, 0, 10, 0, 0],
        &[5, 0, 0, 12, 12],
        &[34, 2, 0, 1, 45],
        &[1079, 17, 4, 11, 150],
    ],
    precision: &[
        ("Client", Some(0.265), Some(0.265)),
        ("Component", Some(0.910), Some(0.910)),
        ("Composite", Some(0.414), Some(0.414)),
        ("Leaf", Some(0.549), Some(0.549)),
        ("No Role", Some(0.856), Some(0.856)),
    ],
    recall: &[
        ("No Role", Some(0.953), Some(0.953)),
        ("Client", Some(0.333), Some(0.333)),
        ("Component", Some(0.833), Some(0.833)),
        ("Composite", Some(0.522), Some(0.522)),
        ("Leaf", Some(0.209), Some(0.209)),
    ],
    row_totals: &[
        ("Client", 34, Some(34)),
        ("Component", 11, Some(11)),
        ("Composite", 29, Some(29)),
        ("Leaf", 82, Some(82)),
        ("No Role", 1261, Some(1261)),
    ],
    column_totals: &[
        ("No Role", 1132, Some(1132)),
        ("Client", 28, Some(28)),
        ("Component", 15, Some(15)),
        ("Composite", 27, Some(27)),
        ("Leaf", 215, Some(215)),
    ],
    grand_total: (1417, Some(1417)),
};

/// Instances: (id, root package, participating classes, classes in root).
pub const INSTANCES: [(u32, &str, usize, usize); 6] = [
    (4, "", 17, 217),
    (65, "junit", 39, 94),
    (75, "CH.ifa.draw", 35, 155),
    (98, "com.taursys", 29, 234),
    (129, "net.sourceforge.pmd.ast", 3, 108),
    (143, "src.COMPOSITE", 5, 5),
];

/// Copies the fixture tree into a scratch directory so tests can mutate it.
pub fn scratch_fixtures() -> tempfile::TempDir {
    let dir = tempfile::tempdir().unwrap();
    for entry in walkdir::WalkDir::new(fixtures()) {
        let entry = entry.unwrap();
        let rel = entry.path().strip_prefix(fixtures()).unwrap();
        if rel.starts_with("out") {
            continue;
        }
        let dest = dir.path().join(rel);
        if entry.file_type().is_dir() {
            std::fs::create_dir_all(&dest).unwrap();
        } else {
            std::fs::copy(entry.path(), &dest).unwrap();
        }
    }
    dir
}
