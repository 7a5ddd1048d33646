mod common;

use common::gen::{unit, units_for};
use common::{close, predicted, truth, Row, MATRIX_GPT35, MATRIX_GPT4, RUNS_GPT35, RUNS_GPT4};
use dp_scout::annotations::RoleVocabulary;
use dp_scout::evaluation::{
    aggregate_matrix, binary_counts, matrix_metrics, Counts, PredictedLabel, RoleConfusionMatrix, TruthLabel, Variant,
};
use proptest::prelude::*;

fn check_row(run: usize, label: &str, row: &Row) {
    let c = Counts::new(row.tp, row.fp, row.fn_, row.tn);
    for (name, got, want) in [
        ("P", c.precision().value(), row.p),
        ("R", c.recall().value(), row.r),
        ("F1", c.f1().value(), row.f1),
        ("A", c.accuracy().value(), row.a),
    ] {
        assert!(
            close(got, want),
            "{label} run {run} {name}: computed {got:.4}, published {want:.3}"
        );
    }
}

#[test]
fn gpt35_run_rows_reproduce() {
    for (i, (with, without)) in RUNS_GPT35.iter().enumerate() {
        check_row(i + 1, "gpt-3.5 with", with);
        check_row(i + 1, "gpt-3.5 without", without);
    }
}

#[test]
fn gpt4_run_rows_reproduce() {
    for (i, row) in RUNS_GPT4.iter().enumerate() {
        check_row(i + 1, "gpt-4", row);
    }
}

#[test]
fn f1_equals_harmonic_mean_on_published_rows() {
    for row in RUNS_GPT35.iter().flat_map(|(a, b)| [a, b]).chain(RUNS_GPT4.iter()) {
        let c = Counts::new(row.tp, row.fp, row.fn_, row.tn);
        let (p, r) = (c.precision().value(), c.recall().value());
        let hm = if p + r > 0.0 { 2.0 * p * r / (p + r) } else { 0.0 };
        assert!((c.f1().value() - hm).abs() < 1e-12);
    }
}

#[test]
fn hallucination_removal_only_touches_runs_2_3_4() {
    let mut changed = Vec::new();
    for (i, (with, without)) in RUNS_GPT35.iter().enumerate() {
        let run = i + 1;
        let units = units_for(run, with, without);
        let a = binary_counts(&units, Variant::WithHallucination);
        let b = binary_counts(&units, Variant::WithoutHallucination);
        assert_eq!(a, Counts::new(with.tp, with.fp, with.fn_, with.tn), "run {run}");
        assert_eq!(
            b,
            Counts::new(without.tp, without.fp, without.fn_, without.tn),
            "run {run}"
        );
        assert_eq!((a.tp, a.fn_, a.tn), (b.tp, b.fn_, b.tn), "run {run}");
        if a != b {
            changed.push(run);
        }
    }
    assert_eq!(changed, [2, 3, 4]);
}

#[test]
fn gpt35_matrix_examples() {
    let m = MATRIX_GPT35.matrix();
    assert_eq!(m.grand_total(Variant::WithHallucination), 1470);
    assert_eq!(m.grand_total(Variant::WithoutHallucination), 1414);
    let component = PredictedLabel::Role("Component".into());
    assert_eq!(m.row_total(&component, Variant::WithHallucination), 10);
    assert_eq!(m.cell(&component, &TruthLabel::Role("Component".into())), 8);

    let with = matrix_metrics(&m, Variant::WithHallucination);
    let without = matrix_metrics(&m, Variant::WithoutHallucination);
    assert_eq!(with.precision_of("Client").unwrap().display3(), ".071");
    assert_eq!(without.precision_of("Client").unwrap().display3(), ".156");
    assert_eq!(with.recall_of("Component").unwrap().display3(), ".533");
    assert_eq!(without.recall_of("Component").unwrap().display3(), ".571");
    assert_eq!(with.precision_of("Hallucinated Role"), None);
    assert_eq!(with.recall_of("Hallucinated Class"), None);
}

#[test]
fn published_totals_match_cells() {
    for table in [&MATRIX_GPT35, &MATRIX_GPT4] {
        let m = table.matrix();
        for (variant, pick) in [(Variant::WithHallucination, 0), (Variant::WithoutHallucination, 1)] {
            let mm = matrix_metrics(&m, variant);
            for &(label, with, without) in table.row_totals {
                let want = if pick == 0 { Some(with) } else { without };
                let got = mm.precision.iter().find(|p| p.label == label).unwrap().total;
                assert_eq!(got, want, "row {label} {variant:?}");
            }
            for &(label, with, without) in table.column_totals {
                let want = if pick == 0 { Some(with) } else { without };
                let got = mm.recall.iter().find(|p| p.label == label).unwrap().total;
                assert_eq!(got, want, "column {label} {variant:?}");
            }
            let want = if pick == 0 {
                table.grand_total.0
            } else {
                table.grand_total.1.unwrap()
            };
            assert_eq!(mm.grand_total, want);
        }
    }
}

proptest! {
    #[test]
    fn aggregation_is_permutation_invariant(
        (units, shuffled) in proptest::collection::vec(unit(), 0..80)
            .prop_flat_map(|u| (Just(u.clone()), Just(u).prop_shuffle()))
    ) {
        let vocab = RoleVocabulary::composite();
        let a = aggregate_matrix(&units, &vocab);
        let b = aggregate_matrix(&shuffled, &vocab);
        prop_assert_eq!(&a, &b);
        prop_assert_eq!(a.grand_total(Variant::WithHallucination), units.len() as u64);
    }

    #[test]
    fn removal_never_changes_tp_fn_tn(units in proptest::collection::vec(unit(), 0..80)) {
        let a = binary_counts(&units, Variant::WithHallucination);
        let b = binary_counts(&units, Variant::WithoutHallucination);
        prop_assert_eq!((a.tp, a.fn_, a.tn), (b.tp, b.fn_, b.tn));
        prop_assert!(b.fp <= a.fp);
    }

    #[test]
    fn identity_matrix_has_unit_metrics(counts in proptest::collection::vec(1u64..50, 5)) {
        let vocab = RoleVocabulary::composite();
        let mut m = RoleConfusionMatrix::new(&vocab);
        let labels = ["Client", "Component", "Composite", "Leaf", "No Role"];
        for (l, n) in labels.iter().zip(&counts) {
            m.add(&predicted(l), &truth(l), *n);
        }
        for v in [Variant::WithHallucination, Variant::WithoutHallucination] {
            let mm = matrix_metrics(&m, v);
            for l in labels {
                let p = mm.precision_of(l).unwrap();
                let r = mm.recall_of(l).unwrap();
                prop_assert_eq!(p.num, p.den);
                prop_assert_eq!(r.num, r.den);
            }
        }
    }
}
