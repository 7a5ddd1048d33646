mod common;

use common::fixtures;
use common::gen::instance;
use dp_scout::annotations::{
    canonical_annotation_xml, parse_ground_truth, PatternInstance, RoleAssignment, RoleVocabulary,
};
use dp_scout::detection::{parse_response, PredictionKind};
use proptest::prelude::*;

fn fixture_instances() -> Vec<PatternInstance> {
    let xml = std::fs::read_to_string(fixtures().join("ground_truth/composite.xml")).unwrap();
    parse_ground_truth(&xml, &RoleVocabulary::composite()).unwrap()
}

#[test]
fn fixture_instances_round_trip() {
    let vocab = RoleVocabulary::composite();
    let instances = fixture_instances();
    assert_eq!(instances.len(), 6);
    for inst in instances {
        let xml = canonical_annotation_xml(&inst, &vocab);
        assert_eq!(parse_ground_truth(&xml, &vocab).unwrap(), vec![inst.clone()]);
        // the canonical form is a fixed point
        let again = parse_ground_truth(&xml, &vocab).unwrap().remove(0);
        assert_eq!(canonical_annotation_xml(&again, &vocab), xml);
    }
}

#[test]
fn fenced_canonical_answer_parses_as_annotations() {
    let vocab = RoleVocabulary::composite();
    for inst in fixture_instances() {
        let answer = format!("```xml\n{}```\n", canonical_annotation_xml(&inst, &vocab));
        let p = parse_response(&answer, &vocab);
        assert_eq!(p.kind, PredictionKind::Annotations);
        assert!(!p.extra_text);
        let got: Vec<_> = p
            .assignments
            .iter()
            .map(|a| RoleAssignment::new(&a.role, &a.class_fqn))
            .collect();
        assert_eq!(got, inst.assignments());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn random_instances_round_trip(inst in instance()) {
        let vocab = RoleVocabulary::composite();
        let xml = canonical_annotation_xml(&inst, &vocab);
        prop_assert_eq!(parse_ground_truth(&xml, &vocab).unwrap(), vec![inst]);
    }
}

#[test]
fn padded_project_id_is_rejected() {
    // attribute values are trimmed on parse, so this could never round-trip
    let a = vec![RoleAssignment::new("Leaf", "p.A")];
    assert!(PatternInstance::new(1, "Composite", " junit", a).is_err());
}
