mod common;

use std::collections::BTreeMap;

use common::fixtures;
use common::gen::{check_root, fqn, fqns_and_shuffle};
use dp_scout::config::PipelineConfig;
use dp_scout::pipeline::{cmd_plan, Corpus, PipelineError};
use dp_scout::promptgen::{
    common_root_package, enumerate_pairs, estimate_tokens, ExclusionReason, PairPlan, PlanOptions, TokenBudget,
};
use proptest::prelude::*;

#[test]
fn root_package_example() {
    let root = common_root_package(["a.b.c.d.ClassA", "a.b.e.f.ClassB"]).unwrap();
    assert_eq!(root, "a.b");
}

#[test]
fn root_package_edges() {
    assert!(common_root_package(std::iter::empty()).is_err());
    assert_eq!(common_root_package(["Top", "a.B"]).unwrap(), "");
    // "ab" is not a dot-boundary extension of "a"
    assert_eq!(common_root_package(["a.x.C", "ab.x.D"]).unwrap(), "");
    assert_eq!(common_root_package(["p.q.C", "p.qr.D"]).unwrap(), "p");
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn root_is_the_longest_dot_boundary_prefix((names, shuffled) in fqns_and_shuffle()) {
        check_root(&names, &shuffled)?;
    }

    #[test]
    fn single_input_yields_its_package(name in fqn()) {
        check_root(std::slice::from_ref(&name), std::slice::from_ref(&name))?;
    }
}

fn fixture_plan(budget: &TokenBudget) -> (PipelineConfig, PairPlan) {
    let config = PipelineConfig::load(fixtures().join("pipeline.json")).unwrap();
    let corpus = Corpus::load(&config).unwrap();
    let snippets: BTreeMap<_, _> = corpus
        .retained
        .iter()
        .map(|i| (i.instance_id(), corpus.snippet(i).unwrap()))
        .collect();
    let plan = enumerate_pairs(
        &corpus.retained,
        &snippets,
        budget,
        &corpus.vocab,
        PlanOptions::default(),
    )
    .unwrap();
    (config, plan)
}

#[test]
fn every_planned_pair_fits_the_budget() {
    let budget = TokenBudget::default();
    let allowance = 128_000 - budget.reserved_output;
    let (config, plan) = fixture_plan(&budget);
    assert_eq!(plan.included.len() + plan.excluded.len(), 30);
    for pair in &plan.included {
        assert!(
            pair.token_estimate <= allowance,
            "{}->{}",
            pair.example_id,
            pair.target_id
        );
        let recomputed =
            estimate_tokens(&pair.message_1, &budget).unwrap() + estimate_tokens(&pair.message_2, &budget).unwrap();
        assert_eq!(pair.token_estimate, recomputed);
    }
    for x in &plan.excluded {
        match x.reason {
            ExclusionReason::OverBudget => assert!(x.token_estimate > allowance),
            ExclusionReason::SameProject => {}
        }
    }
    for (e, t) in config.schedule.unwrap() {
        assert!(plan.included.iter().any(|p| (p.example_id, p.target_id) == (e, t)));
    }
}

#[test]
fn degenerate_budget_excludes_everything() {
    let budget = TokenBudget::new(4097, 4096, "bytes4").unwrap();
    let (_, plan) = fixture_plan(&budget);
    assert!(plan.included.is_empty());
    assert_eq!(plan.excluded.len(), 30);
    assert!(plan.excluded.iter().all(|x| x.reason == ExclusionReason::OverBudget));

    let dir = tempfile::tempdir().unwrap();
    let mut config = PipelineConfig::load(fixtures().join("pipeline.json")).unwrap();
    config.budget = budget;
    config.out = dir.path().to_path_buf();
    assert!(matches!(cmd_plan(&config), Err(PipelineError::Validation(_))));
    config.schedule = None;
    let summary = cmd_plan(&config).unwrap();
    assert_eq!((summary.runs, summary.excluded), (0, 30));
}
