//! Generators shared by the property tests and the acceptance target.

use dp_scout::annotations::{PatternInstance, RoleAssignment};
use dp_scout::evaluation::{PredictedLabel, ScoredUnit, TruthLabel};
use proptest::prelude::*;

use super::Row;

pub static ROLES: [&str; 4] = ["Client", "Component", "Composite", "Leaf"];

/// One piece of a generated Java-like source.
#[derive(Debug, Clone)]
pub enum Segment {
    Code(String),
    Line(String),
    Block(String),
    Str(String),
    Char(String),
}

impl Segment {
    pub fn source(&self) -> String {
        match self {
            Segment::Code(s) => s.clone(),
            Segment::Line(s) => format!("//{s}\n"),
            Segment::Block(s) => format!("/*{s}*/"),
            Segment::Str(s) => format!("\"{s}\""),
            Segment::Char(s) => format!("'{s}'"),
        }
    }

    /// What comment removal must leave behind.
    pub fn expected(&self) -> String {
        match self {
            Segment::Line(_) => "\n".into(),
            Segment::Block(_) => String::new(),
            other => other.source(),
        }
    }

    pub fn literal(&self) -> Option<String> {
        matches!(self, Segment::Str(_) | Segment::Char(_)).then(|| self.source())
    }
}

// Code never ends in '/' nor starts with '*' or '/', so removing a comment
// cannot fuse a new delimiter out of its neighbours.
fn segment() -> impl Strategy<Value = Segment> {
    prop_oneof![
        3 => "([a-zA-Z0-9_;{}()=+.,\n ]| \\* | / ){0,16}".prop_map(Segment::Code),
        1 => "[^\n]{0,20}".prop_map(Segment::Line),
        1 => "([^*]|\\*+[^*/]){0,12}".prop_map(Segment::Block),
        1 => "([^\"\\\\\n]|\\\\[nt\"\\\\]|//|/\\*|\\*/){0,10}".prop_map(Segment::Str),
        1 => prop_oneof![
            "[^'\\\\\n]".prop_map(String::from),
            Just("\\'".to_string()),
            Just("\\\\".to_string()),
        ]
        .prop_map(Segment::Char),
    ]
}

pub fn source() -> impl Strategy<Value = Vec<Segment>> {
    // a block body ending in '*' would close early on the appended "*/"
    proptest::collection::vec(segment(), 0..24).prop_filter("block body ends in *", |s| {
        s.iter().all(|s| !matches!(s, Segment::Block(b) if b.ends_with('*')))
    })
}

/// Checks comment removal against the generator's own expectation.
pub fn check_source(segments: &[Segment]) -> Result<(), TestCaseError> {
    use dp_scout::corpus::strip_comments;
    let source: String = segments.iter().map(Segment::source).collect();
    let expected: String = segments.iter().map(Segment::expected).collect();

    let once = strip_comments(&source).map_err(|e| TestCaseError::fail(e.to_string()))?;
    prop_assert_eq!(&once, &expected);
    prop_assert_eq!(strip_comments(&once).unwrap(), once.clone());

    let mut rest = once.as_str();
    for lit in segments.iter().filter_map(Segment::literal) {
        let at = rest.find(&lit);
        prop_assert!(at.is_some(), "literal {} lost", lit);
        rest = &rest[at.unwrap() + lit.len()..];
    }
    Ok(())
}

pub fn fqn() -> impl Strategy<Value = String> {
    // a tiny alphabet so that shared prefixes are common
    (proptest::collection::vec("[ab]{1,2}", 0..5), "[A-C][a-z]{0,3}")
        .prop_map(|(pkg, class)| pkg.into_iter().chain([class]).collect::<Vec<_>>().join("."))
}

/// A class list together with a shuffled copy.
pub fn fqns_and_shuffle() -> impl Strategy<Value = (Vec<String>, Vec<String>)> {
    proptest::collection::vec(fqn(), 1..8).prop_flat_map(|n| (Just(n.clone()), Just(n).prop_shuffle()))
}

pub fn package_of(fqn: &str) -> &str {
    fqn.rsplit_once('.').map_or("", |(p, _)| p)
}

fn under(package: &str, root: &str) -> bool {
    root.is_empty() || package == root || package.starts_with(&format!("{root}."))
}

/// Root covers every package on a dot boundary, no longer prefix does, and
/// input order does not matter.
pub fn check_root(names: &[String], shuffled: &[String]) -> Result<(), TestCaseError> {
    use dp_scout::promptgen::common_root_package;
    let root = common_root_package(names.iter().map(String::as_str)).unwrap();
    for n in names {
        prop_assert!(under(package_of(n), &root), "{} not under {}", n, root);
    }
    let first = package_of(&names[0]);
    let longer = first
        .match_indices('.')
        .map(|(i, _)| &first[..i])
        .chain([first])
        .filter(|c| c.len() > root.len());
    for cand in longer {
        prop_assert!(
            !names.iter().all(|n| under(package_of(n), cand)),
            "{} also covers all",
            cand
        );
    }
    let again = common_root_package(shuffled.iter().map(String::as_str)).unwrap();
    prop_assert_eq!(again, root);
    if let [single] = names {
        prop_assert_eq!(common_root_package([single.as_str()]).unwrap(), package_of(single));
    }
    Ok(())
}

pub fn instance() -> impl Strategy<Value = PatternInstance> {
    let class = "[a-z]{1,3}(\\.[a-z&<>'\"]{1,3}){0,3}\\.[A-Z][A-Za-z0-9_$]{0,6}";
    let assignment = (proptest::sample::select(&ROLES[..]), class).prop_map(|(r, c)| RoleAssignment::new(r, c));
    (
        0u32..100_000,
        // attribute values are trimmed on parse, so no surrounding spaces
        "([A-Za-z0-9_&<>'\"-]([A-Za-z0-9 _&<>'\"-]{0,10}[A-Za-z0-9_&<>'\"-])?)?",
        proptest::collection::btree_set(assignment, 1..12),
    )
        .prop_map(|(id, project, set)| {
            PatternInstance::new(id, "Composite", project, set.into_iter().collect()).unwrap()
        })
}

pub fn unit() -> impl Strategy<Value = ScoredUnit> {
    let p = prop_oneof![
        Just(PredictedLabel::HallucinatedRole),
        Just(PredictedLabel::NoRole),
        proptest::sample::select(&ROLES[..]).prop_map(|r| PredictedLabel::Role(r.into())),
    ];
    let t = prop_oneof![
        Just(TruthLabel::HallucinatedClass),
        Just(TruthLabel::NoRole),
        proptest::sample::select(&ROLES[..]).prop_map(|r| TruthLabel::Role(r.into())),
    ];
    ("[a-z]{1,4}", p, t).prop_map(|(c, p, t)| ScoredUnit::new(c, p, t))
}

/// Unit multiset whose binary counts are the published with-hallucination
/// quadruple; the surplus false positives are hallucinations. Run 4 carries a
/// hallucinated role, the others hallucinated classes.
pub fn units_for(run: usize, with: &Row, without: &Row) -> Vec<ScoredUnit> {
    let leaf = || PredictedLabel::Role("Leaf".into());
    let mut units = Vec::new();
    let mut push = |n: u64, p: PredictedLabel, t: TruthLabel| {
        for _ in 0..n {
            units.push(ScoredUnit::new(format!("c{}", units.len()), p.clone(), t.clone()));
        }
    };
    push(with.tp, leaf(), TruthLabel::Role("Leaf".into()));
    push(without.fp, PredictedLabel::Role("Client".into()), TruthLabel::NoRole);
    let hallucinated = with.fp - without.fp;
    if run == 4 {
        push(
            hallucinated,
            PredictedLabel::HallucinatedRole,
            TruthLabel::Role("Leaf".into()),
        );
    } else {
        push(hallucinated, leaf(), TruthLabel::HallucinatedClass);
    }
    push(with.fn_, PredictedLabel::NoRole, TruthLabel::Role("Leaf".into()));
    push(with.tn, PredictedLabel::NoRole, TruthLabel::NoRole);
    units
}
