mod common;

use common::gen::{check_source, source};
use common::{fixtures, scratch_fixtures, INSTANCES};
use dp_scout::config::PipelineConfig;
use dp_scout::corpus::{index_project, strip_comments, IndexOptions};
use dp_scout::pipeline::cmd_validate;
use proptest::prelude::*;

#[test]
fn fixture_index_reproduces_root_package_counts() {
    let config = PipelineConfig::load(fixtures().join("pipeline.json")).unwrap();
    let report = cmd_validate(&config).unwrap();
    assert!(report.is_clean(), "{:?}", report.dropped);
    assert_eq!(report.instances.len(), INSTANCES.len());
    for (id, root, participating, classes) in INSTANCES {
        let row = report.instances.iter().find(|r| r.instance_id == id).unwrap();
        assert_eq!(row.root_package, root, "instance {id}");
        assert_eq!(row.participating, participating, "instance {id}");
        assert_eq!(row.root_package_classes, classes, "instance {id}");

        // same count straight from the index
        let project = config.project(&row.project_id).unwrap();
        let (index, skipped) = index_project(&project.root, &project.id, IndexOptions::default()).unwrap();
        assert!(skipped.is_empty());
        assert_eq!(index.under_package(root).count(), classes, "instance {id}");
    }
}

#[test]
fn removing_a_participant_drops_the_instance() {
    let dir = scratch_fixtures();
    std::fs::remove_dir_all(dir.path().join("corpus/sadp")).unwrap();
    std::fs::create_dir(dir.path().join("corpus/sadp")).unwrap();
    let config = PipelineConfig::load(dir.path().join("pipeline.json")).unwrap();
    let report = cmd_validate(&config).unwrap();
    assert!(!report.is_clean());
    assert_eq!(report.dropped.len(), 1);
    assert_eq!(report.dropped[0].instance_id, 143);
    assert!(!report.dropped[0].missing_fqns.is_empty());
    assert_eq!(report.instances.len(), 5);
}

#[test]
fn literal_contents_are_not_comments() {
    let src = "String s = \"// not a comment /* nor this */\"; char c = '/'; // gone\nint x = 1; /* gone */";
    assert_eq!(
        strip_comments(src).unwrap(),
        "String s = \"// not a comment /* nor this */\"; char c = '/'; \nint x = 1; "
    );
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn strip_comments_matches_generator_oracle(segments in source()) {
        check_source(&segments)?;
    }
}
