//! Regenerates `fixtures/`: a synthetic Java corpus shaped like the six
//! Composite instances of the reference study, their ground truth, a pipeline
//! config with the 14-run schedule, and a replay cassette of synthetic
//! answers for two models.
//!
//! Run with `cargo run --example gen_fixtures` from `crates/core`.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};

use dp_scout::config::PipelineConfig;
use dp_scout::corpus::in_package;
use dp_scout::gateway::{CassetteEntry, PairKey};
use dp_scout::pipeline::{self, PlanRecord};

const RECORDED_AT: &str = "2024-05-01T00:00:00Z";
const ROLES: [&str; 4] = ["Client", "Component", "Composite", "Leaf"];

const SCHEDULE: [(u32, u32); 14] = [
    (4, 65),
    (65, 75),
    (75, 65),
    (143, 129),
    (143, 98),
    (129, 143),
    (98, 143),
    (65, 143),
    (4, 143),
    (75, 143),
    (143, 4),
    (143, 129),
    (143, 98),
    (143, 75),
];

const WORDS_A: [&str; 24] = [
    "Abstract", "Default", "Simple", "Basic", "Base", "Custom", "Generic", "Local", "Remote", "Static", "Dynamic",
    "Cached", "Lazy", "Shared", "Nested", "Plain", "Smart", "Linked", "Sorted", "Mapped", "Buffered", "Async",
    "Scoped", "Typed",
];
const WORDS_B: [&str; 24] = [
    "Handler",
    "Manager",
    "Factory",
    "Builder",
    "Parser",
    "Reader",
    "Writer",
    "Visitor",
    "Listener",
    "Adapter",
    "Helper",
    "Util",
    "Event",
    "Model",
    "View",
    "Controller",
    "Tool",
    "Command",
    "Panel",
    "Dialog",
    "Resolver",
    "Registry",
    "Filter",
    "Loader",
];

#[derive(Clone, Debug)]
enum Kind {
    Component,
    Composite { component: String },
    Leaf { component: String },
    Client { component: String },
    Plain,
}

#[derive(Clone, Debug)]
struct Class {
    fqn: String,
    kind: Kind,
}

struct Instance {
    id: u32,
    project: &'static str,
    /// (role, fqn)
    roles: Vec<(&'static str, String)>,
}

struct Project {
    id: &'static str,
    name: &'static str,
    classes: Vec<Class>,
}

fn package_of(fqn: &str) -> &str {
    fqn.rsplit_once('.').map_or("", |(p, _)| p)
}

fn simple(fqn: &str) -> &str {
    fqn.rsplit_once('.').map_or(fqn, |(_, s)| s)
}

/// Builds instance classes plus `background` filler spread over `packages`,
/// and `outside` filler in packages beyond the instance root.
#[allow(clippy::too_many_arguments)]
fn project(
    id: &'static str,
    name: &'static str,
    instance_id: u32,
    roles: Vec<(&'static str, String)>,
    packages: &[&str],
    background: usize,
    outside: &[&str],
    outside_count: usize,
    name_prefix: &str,
) -> (Project, Instance) {
    let component = roles.iter().find(|(r, _)| *r == "Component").unwrap().1.clone();
    let mut classes: Vec<Class> = Vec::new();
    let mut seen: BTreeSet<String> = BTreeSet::new();
    for (role, fqn) in &roles {
        if !seen.insert(fqn.clone()) {
            continue;
        }
        let kind = match *role {
            "Component" => Kind::Component,
            "Composite" => Kind::Composite {
                component: component.clone(),
            },
            "Leaf" => Kind::Leaf {
                component: component.clone(),
            },
            _ => Kind::Client {
                component: component.clone(),
            },
        };
        classes.push(Class { fqn: fqn.clone(), kind });
    }
    let mut names = WORDS_A
        .iter()
        .flat_map(|a| WORDS_B.iter().map(move |b| format!("{name_prefix}{a}{b}")));
    let mut fill = |pkgs: &[&str], count: usize, classes: &mut Vec<Class>| {
        let mut added = 0;
        let mut i = 0;
        while added < count {
            let n = names.next().expect("enough filler names");
            let fqn = format!("{}.{}", pkgs[i % pkgs.len()], n);
            i += 1;
            if seen.insert(fqn.clone()) {
                classes.push(Class { fqn, kind: Kind::Plain });
                added += 1;
            }
        }
    };
    fill(packages, background, &mut classes);
    if outside_count > 0 {
        fill(outside, outside_count, &mut classes);
    }
    (
        Project { id, name, classes },
        Instance {
            id: instance_id,
            project: id,
            roles,
        },
    )
}

fn corpus() -> Vec<(Project, Instance)> {
    let mut out = Vec::new();

    // QuickUML: classes span two top-level packages, so the root is empty.
    let mut roles = vec![
        ("Component", "diagram.Figure".to_string()),
        ("Composite", "diagram.FigureGroup".to_string()),
        ("Client", "uml.ui.DiagramPanel".to_string()),
    ];
    for leaf in [
        "ClassFigure",
        "InterfaceFigure",
        "NoteFigure",
        "LinkFigure",
        "AssociationFigure",
        "GeneralizationFigure",
        "DependencyFigure",
        "RealizationFigure",
        "CompositionFigure",
        "AggregationFigure",
        "LabelFigure",
        "PackageFigure",
        "ActorFigure",
        "StateFigure",
    ] {
        roles.push(("Leaf", format!("diagram.figures.{leaf}")));
    }
    out.push(project(
        "quickuml",
        "QuickUML 2001",
        4,
        roles,
        &[
            "uml.ui",
            "uml.builder",
            "uml.tools",
            "diagram.tool",
            "diagram.layout",
            "util",
        ],
        200,
        &[],
        0,
        "",
    ));

    // JUnit: one class plays two roles.
    let mut roles = vec![
        ("Component", "junit.framework.Test".to_string()),
        ("Composite", "junit.framework.TestSuite".to_string()),
        ("Composite", "junit.extensions.TestDecorator".to_string()),
        ("Leaf", "junit.extensions.TestDecorator".to_string()),
        ("Leaf", "junit.framework.TestCase".to_string()),
        ("Leaf", "junit.extensions.RepeatedTest".to_string()),
        ("Leaf", "junit.extensions.TestSetup".to_string()),
        ("Leaf", "junit.extensions.ExceptionTestCase".to_string()),
    ];
    for (i, w) in WORDS_B.iter().chain(&WORDS_A).take(32).enumerate() {
        let pkg = if i % 3 == 0 {
            "junit.tests.extensions"
        } else {
            "junit.tests.framework"
        };
        roles.push(("Leaf", format!("{pkg}.{w}Test")));
    }
    out.push(project(
        "junit",
        "JUnit v3.7",
        65,
        roles,
        &[
            "junit.runner",
            "junit.textui",
            "junit.awtui",
            "junit.swingui",
            "junit.framework",
        ],
        55,
        &["junitx.samples"],
        6,
        "",
    ));

    // JHotDraw.
    let mut roles = vec![
        ("Component", "CH.ifa.draw.framework.Figure".to_string()),
        ("Composite", "CH.ifa.draw.standard.CompositeFigure".to_string()),
        ("Composite", "CH.ifa.draw.standard.StandardDrawing".to_string()),
        ("Composite", "CH.ifa.draw.figures.GroupFigure".to_string()),
        ("Composite", "CH.ifa.draw.samples.pert.PertFigure".to_string()),
        ("Composite", "CH.ifa.draw.samples.net.NodeFigure".to_string()),
    ];
    for leaf in [
        "RectangleFigure",
        "RoundRectangleFigure",
        "EllipseFigure",
        "PolyLineFigure",
        "LineFigure",
        "TextFigure",
        "NumberTextFigure",
        "ImageFigure",
        "ArrowTip",
        "BorderDecorator",
        "ElbowConnection",
        "LineConnection",
        "AttributeFigure",
        "DecoratorFigure",
        "ConnectedTextTool",
        "ScribbleFigure",
        "DiamondFigure",
        "TriangleFigure",
        "PolygonFigure",
        "BouncingDrawing",
        "AnimationDecorator",
    ] {
        roles.push(("Leaf", format!("CH.ifa.draw.figures.{leaf}")));
    }
    for client in [
        "CH.ifa.draw.standard.StandardDrawingView",
        "CH.ifa.draw.standard.SelectionTool",
        "CH.ifa.draw.standard.CreationTool",
        "CH.ifa.draw.standard.DragTracker",
        "CH.ifa.draw.applet.DrawApplet",
        "CH.ifa.draw.application.DrawApplication",
        "CH.ifa.draw.samples.javadraw.JavaDrawApp",
        "CH.ifa.draw.samples.pert.PertApplet",
    ] {
        roles.push(("Client", client.to_string()));
    }
    out.push(project(
        "jhotdraw",
        "JHotDraw v5.1",
        75,
        roles,
        &[
            "CH.ifa.draw.util",
            "CH.ifa.draw.standard",
            "CH.ifa.draw.framework",
            "CH.ifa.draw.contrib",
            "CH.ifa.draw.figures",
        ],
        120,
        &["CH.ifa.tools"],
        4,
        "",
    ));

    // MapperXML.
    let mut roles = vec![
        ("Component", "com.taursys.xml.Component".to_string()),
        ("Composite", "com.taursys.xml.Container".to_string()),
    ];
    for leaf in [
        "Parameter",
        "Template",
        "TextField",
        "SelectField",
        "CheckboxField",
        "Button",
        "Trigger",
        "DocumentElement",
        "AttributeText",
        "ElementText",
        "RadioField",
        "MultiSelectField",
    ] {
        roles.push(("Leaf", format!("com.taursys.xml.{leaf}")));
    }
    for leaf in [
        "HTMLAnchorURL",
        "HTMLCheckBox",
        "HTMLInputText",
        "HTMLSelect",
        "HTMLTextArea",
        "HTMLComponentFactory",
        "HTMLDocument",
        "HTMLLink",
        "HTMLImage",
        "HTMLForm",
    ] {
        roles.push(("Leaf", format!("com.taursys.html.{leaf}")));
    }
    for client in [
        "com.taursys.servlet.ServletForm",
        "com.taursys.servlet.ServletApp",
        "com.taursys.xml.event.Dispatcher",
        "com.taursys.xml.event.RenderDispatcher",
        "com.taursys.xml.event.InputDispatcher",
    ] {
        roles.push(("Client", client.to_string()));
    }
    out.push(project(
        "mapperxml",
        "MapperXML v1.9.7",
        98,
        roles,
        &[
            "com.taursys.model",
            "com.taursys.util",
            "com.taursys.dom",
            "com.taursys.debug",
            "com.taursys.xml.render",
            "com.taursys.beans",
        ],
        205,
        &["com.example.demo"],
        5,
        "",
    ));

    // PMD: the whole instance lives in one package.
    out.push(project(
        "pmd",
        "PMD v1.8",
        129,
        vec![
            ("Component", "net.sourceforge.pmd.ast.Node".to_string()),
            ("Composite", "net.sourceforge.pmd.ast.SimpleNode".to_string()),
            ("Leaf", "net.sourceforge.pmd.ast.ASTCompilationUnit".to_string()),
        ],
        &["net.sourceforge.pmd.ast"],
        105,
        &["net.sourceforge.pmd.rules", "net.sourceforge.pmd"],
        15,
        "AST",
    ));

    // Textbook sample: the snippet is exactly the instance.
    out.push(project(
        "sadp",
        "Software architecture design patterns in Java",
        143,
        vec![
            ("Component", "src.COMPOSITE.FileSystemComponent".to_string()),
            ("Composite", "src.COMPOSITE.DirComponent".to_string()),
            ("Leaf", "src.COMPOSITE.FileComponent".to_string()),
            ("Leaf", "src.COMPOSITE.LinkComponent".to_string()),
            ("Client", "src.COMPOSITE.CompositeDemo".to_string()),
        ],
        &["src.COMPOSITE"],
        0,
        &["src.DECORATOR", "src.SINGLETON"],
        4,
        "",
    ));
    out
}

fn import_line(own_pkg: &str, fqn: &str) -> String {
    if package_of(fqn) == own_pkg {
        String::new()
    } else {
        format!("import {fqn};\n")
    }
}

/// Java text for one top-level type. `n` varies comment and literal shapes.
fn java_type(class: &Class, n: usize, public: bool) -> String {
    let name = simple(&class.fqn);
    let vis = if public { "public " } else { "" };
    let mut s = String::new();
    match &class.kind {
        Kind::Component => {
            let _ = write!(
                s,
                "/**\n * Common type of the {name} hierarchy.\n */\n{vis}abstract class {name} {{\n    \
                 /* children are managed by subclasses */\n    public abstract void draw(java.io.PrintStream out);\n\n    \
                 public void add({name} child) {{\n        throw new UnsupportedOperationException(\"add /* not supported */\");\n    }}\n\n    \
                 public void remove({name} child) {{\n        throw new UnsupportedOperationException(\"remove // not supported\");\n    }}\n}}\n"
            );
        }
        Kind::Composite { component } => {
            let c = simple(component);
            let _ = write!(
                s,
                "{vis}class {name} extends {c} {{\n    private final List<{c}> children = new ArrayList<{c}>(); // ordered\n\n    \
                 @Override\n    public void add({c} child) {{\n        children.add(child);\n    }}\n\n    \
                 @Override\n    public void remove({c} child) {{\n        children.remove(child);\n    }}\n\n    \
                 @Override\n    public void draw(java.io.PrintStream out) {{\n        out.println(\"{name} {{\");\n        \
                 for ({c} child : children) {{\n            child.draw(out); /* delegate */\n        }}\n        out.println('}}');\n    }}\n}}\n"
            );
        }
        Kind::Leaf { component } => {
            let c = simple(component);
            let lit = match n % 3 {
                0 => "\"// leaf\"".to_string(),
                1 => "\"/* leaf */\"".to_string(),
                _ => "\"quote \\\" inside\"".to_string(),
            };
            let ch = if n.is_multiple_of(2) { "'\\''" } else { "'\"'" };
            let _ = write!(
                s,
                "// {name}: a terminal node\n{vis}class {name} extends {c} {{\n    private static final String LABEL = {lit};\n    private final char mark = {ch};\n\n    \
                 @Override\n    public void draw(java.io.PrintStream out) {{\n        out.println(LABEL + mark); // no children\n    }}\n}}\n"
            );
        }
        Kind::Client { component } => {
            let c = simple(component);
            let _ = write!(
                s,
                "/*\n * Builds and renders a tree.\n */\n{vis}class {name} {{\n    private {c} root;\n\n    \
                 public void setRoot({c} root) {{ this.root = root; }}\n\n    \
                 public void render() {{\n        if (root != null) {{\n            root.draw(System.out); // whole tree\n        }}\n    }}\n}}\n"
            );
        }
        Kind::Plain => match n % 4 {
            0 => {
                let _ = write!(
                    s,
                    "/** Utility type. */\n{vis}class {name} {{\n    private int count; // calls so far\n    private final String url = \"http://example.org/{n}\";\n\n    \
                     public int next() {{\n        return ++count;\n    }}\n\n    public String url() {{ return url; }}\n}}\n"
                );
            }
            1 => {
                let _ = write!(
                    s,
                    "{vis}interface {name} {{\n    /* called once per item */\n    void accept(Object item);\n\n    \
                     String PREFIX = \"{name}:\"; // shared\n}}\n"
                );
            }
            2 => {
                let _ = write!(
                    s,
                    "{vis}enum {name} {{\n    FIRST, SECOND, /* reserved */ THIRD;\n\n    \
                     char code() {{ return name().charAt(0) == '/' ? '*' : name().charAt(0); }}\n}}\n"
                );
            }
            _ => {
                let _ = write!(
                    s,
                    "// kept for compatibility\n{vis}class {name} {{\n    private final StringBuilder buf = new StringBuilder();\n\n    \
                     /**\n     * Appends a line.\n     */\n    public {name} line(String text) {{\n        \
                     buf.append(text).append(\"\\n\"); // newline\n        return this;\n    }}\n\n    \
                     @Override\n    public String toString() {{\n        return buf.toString().replace(\"/*\", \"\").replace(\"*/\", \"\");\n    }}\n}}\n"
                );
            }
        },
    }
    s
}

fn write_project(root: &Path, project: &Project) {
    let src = root.join(project.id).join("src");
    // Every 23rd filler class shares a file with the next one from the same
    // package, as a package-private second type.
    let mut i = 0;
    let classes = &project.classes;
    while i < classes.len() {
        let class = &classes[i];
        let pkg = package_of(&class.fqn);
        let mut body = format!("package {pkg};\n\n");
        let mut imports = String::new();
        match &class.kind {
            Kind::Composite { component } => {
                imports.push_str("import java.util.ArrayList;\nimport java.util.List;\n");
                imports.push_str(&import_line(pkg, component));
            }
            Kind::Leaf { component } | Kind::Client { component } => imports.push_str(&import_line(pkg, component)),
            _ => {}
        }
        if !imports.is_empty() {
            body.push_str(&imports);
            body.push('\n');
        }
        body.push_str(&java_type(class, i, true));
        let mut next = i + 1;
        if matches!(class.kind, Kind::Plain) && i % 23 == 0 {
            if let Some(second) = classes.get(i + 1) {
                if matches!(second.kind, Kind::Plain) && package_of(&second.fqn) == pkg {
                    body.push('\n');
                    body.push_str(&java_type(second, i + 1, false));
                    next = i + 2;
                }
            }
        }
        let path = src
            .join(pkg.replace('.', "/"))
            .join(format!("{}.java", simple(&class.fqn)));
        fs::create_dir_all(path.parent().unwrap()).unwrap();
        fs::write(path, body).unwrap();
        i = next;
    }
}

fn ground_truth_xml(instances: &[&Instance]) -> String {
    let mut xml = String::from("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n<designPattern name=\"Composite\">\n");
    for inst in instances {
        let _ = writeln!(xml, "  <program name=\"{}\">", inst.project);
        let _ = writeln!(xml, "    <microArchitecture number=\"{}\">", inst.id);
        xml.push_str("      <roles>\n");
        for (role, group) in [
            ("Client", "clients"),
            ("Component", "components"),
            ("Composite", "composites"),
            ("Leaf", "leaves"),
        ] {
            let members: Vec<&String> = inst.roles.iter().filter(|(r, _)| *r == role).map(|(_, c)| c).collect();
            if members.is_empty() {
                continue;
            }
            let elem = role.to_ascii_lowercase();
            let _ = writeln!(xml, "        <{group}>");
            for c in members {
                let _ = writeln!(
                    xml,
                    "          <{elem}>\n            <entity>{c}</entity>\n          </{elem}>"
                );
            }
            let _ = writeln!(xml, "        </{group}>");
        }
        xml.push_str("      </roles>\n    </microArchitecture>\n  </program>\n");
    }
    xml.push_str("</designPattern>\n");
    xml
}

/// What a synthetic answer should contain, in scoring terms.
#[derive(Clone, Copy)]
enum Answer {
    Roles {
        tp: usize,
        mispredicted: usize,
        non_truth: usize,
        hallucinated_classes: usize,
        hallucinated_role: bool,
        style: Style,
    },
    NoneFound {
        fenced: bool,
    },
    Malformed,
}

#[derive(Clone, Copy)]
enum Style {
    Fenced,
    FencedWithProse,
    Bare,
    TwoBlocks,
}

fn roles(tp: usize, mispredicted: usize, non_truth: usize, style: Style) -> Answer {
    Answer::Roles {
        tp,
        mispredicted,
        non_truth,
        hallucinated_classes: 0,
        hallucinated_role: false,
        style,
    }
}

fn answers_gpt35() -> [Answer; 14] {
    [
        roles(4, 3, 2, Style::Fenced),
        Answer::Roles {
            tp: 12,
            mispredicted: 3,
            non_truth: 3,
            hallucinated_classes: 11,
            hallucinated_role: false,
            style: Style::FencedWithProse,
        },
        Answer::Roles {
            tp: 3,
            mispredicted: 17,
            non_truth: 16,
            hallucinated_classes: 44,
            hallucinated_role: false,
            style: Style::TwoBlocks,
        },
        Answer::Roles {
            tp: 2,
            mispredicted: 0,
            non_truth: 1,
            hallucinated_classes: 0,
            hallucinated_role: true,
            style: Style::Fenced,
        },
        roles(1, 9, 20, Style::Bare),
        roles(1, 3, 0, Style::Fenced),
        roles(3, 4, 0, Style::Fenced),
        roles(3, 1, 0, Style::Bare),
        roles(3, 1, 0, Style::Fenced),
        roles(2, 3, 0, Style::FencedWithProse),
        Answer::NoneFound { fenced: false },
        Answer::Malformed,
        Answer::NoneFound { fenced: true },
        Answer::NoneFound { fenced: false },
    ]
}

fn answers_gpt4() -> [Answer; 14] {
    [
        roles(6, 2, 1, Style::Fenced),
        roles(21, 10, 22, Style::Fenced),
        roles(8, 2, 2, Style::Bare),
        Answer::NoneFound { fenced: false },
        Answer::NoneFound { fenced: false },
        roles(2, 1, 0, Style::Fenced),
        roles(3, 1, 0, Style::Fenced),
        roles(3, 1, 0, Style::Fenced),
        roles(3, 1, 0, Style::Fenced),
        roles(2, 1, 0, Style::Fenced),
        roles(11, 0, 0, Style::TwoBlocks),
        Answer::NoneFound { fenced: false },
        roles(0, 9, 2, Style::Fenced),
        roles(17, 6, 9, Style::FencedWithProse),
    ]
}

fn role_rank(role: &str) -> usize {
    ["Component", "Composite", "Client", "Leaf"]
        .iter()
        .position(|r| *r == role)
        .unwrap()
}

/// Builds the predicted (role, class) list for `answer` against `target`.
fn predicted(answer: Answer, target: &Instance, snippet: &[String]) -> Vec<(String, String)> {
    let Answer::Roles {
        tp,
        mispredicted,
        non_truth,
        hallucinated_classes,
        hallucinated_role,
        ..
    } = answer
    else {
        return Vec::new();
    };
    let mut truth: Vec<(&str, &str)> = target.roles.iter().map(|(r, c)| (*r, c.as_str())).collect();
    truth.sort_by_key(|(r, c)| (role_rank(r), c.to_string()));
    let truth_roles =
        |class: &str| -> Vec<&str> { truth.iter().filter(|(_, c)| *c == class).map(|(r, _)| *r).collect() };

    let mut out: Vec<(String, String)> = Vec::new();
    let mut touched: BTreeSet<&str> = BTreeSet::new();
    if hallucinated_role {
        // an invented role on the last truth class
        let (_, c) = truth.last().unwrap();
        out.push(("Decorator".into(), c.to_string()));
        touched.insert(c);
    }
    for (r, c) in truth.iter().filter(|(_, c)| !touched.contains(c)).take(tp) {
        out.push((r.to_string(), c.to_string()));
    }
    let tp_classes: BTreeSet<&str> = out.iter().map(|(_, c)| c.as_str()).collect();
    let mut classes: Vec<&str> = truth
        .iter()
        .map(|(_, c)| *c)
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();
    classes.sort_by_key(|c| (tp_classes.contains(c) || touched.contains(c), *c));
    let mut wrong: Vec<(String, String)> = Vec::new();
    'rounds: for round in 0..ROLES.len() {
        for c in &classes {
            let own = truth_roles(c);
            let candidates: Vec<&str> = ["Client", "Composite", "Leaf", "Component"]
                .into_iter()
                .filter(|r| !own.contains(r))
                .collect();
            if let Some(r) = candidates.get(round) {
                if wrong.len() == mispredicted {
                    break 'rounds;
                }
                wrong.push((r.to_string(), c.to_string()));
            }
        }
    }
    assert_eq!(
        wrong.len(),
        mispredicted,
        "not enough wrong roles for instance {}",
        target.id
    );
    out.extend(wrong);

    let truth_classes: BTreeSet<&str> = truth.iter().map(|(_, c)| *c).collect();
    let others: Vec<&String> = snippet.iter().filter(|c| !truth_classes.contains(c.as_str())).collect();
    assert!(others.len() >= non_truth);
    for (i, c) in others.iter().take(non_truth).enumerate() {
        let role = if i % 3 == 2 { "Client" } else { "Leaf" };
        out.push((role.to_string(), c.to_string()));
    }

    let root = pipeline_root(target);
    let snippet_set: BTreeSet<&str> = snippet.iter().map(String::as_str).collect();
    let mut added = 0;
    let mut k = 0;
    while added < hallucinated_classes {
        let fqn = format!(
            "{}Phantom{}{}",
            if root.is_empty() {
                String::new()
            } else {
                format!("{root}.")
            },
            WORDS_B[k % WORDS_B.len()],
            k
        );
        k += 1;
        if !snippet_set.contains(fqn.as_str()) {
            let role = if added % 4 == 3 { "Leaf" } else { "Client" };
            out.push((role.to_string(), fqn));
            added += 1;
        }
    }
    out
}

fn pipeline_root(inst: &Instance) -> String {
    let pkgs: Vec<Vec<&str>> = inst
        .roles
        .iter()
        .map(|(_, c)| {
            let mut segs: Vec<&str> = c.split('.').collect();
            segs.pop();
            segs
        })
        .collect();
    let mut prefix = pkgs[0].clone();
    for p in &pkgs[1..] {
        let n = prefix.iter().zip(p).take_while(|(a, b)| a == b).count();
        prefix.truncate(n);
    }
    prefix.join(".")
}

fn xml_block(target: u32, assignments: &[(String, String)]) -> String {
    let mut by_role: BTreeMap<&str, Vec<&str>> = BTreeMap::new();
    for (r, c) in assignments {
        by_role.entry(r).or_default().push(c);
    }
    let mut xml = format!("<microArchitecture number=\"{target}\" designPatternName=\"Composite\">\n  <roles>\n");
    for (role, classes) in by_role {
        let _ = writeln!(xml, "    <role name=\"{role}\">");
        for c in classes {
            let _ = writeln!(xml, "      <class>{c}</class>");
        }
        xml.push_str("    </role>\n");
    }
    xml.push_str("  </roles>\n</microArchitecture>");
    xml
}

fn answer_text(answer: Answer, target: &Instance, snippet: &[String]) -> String {
    match answer {
        Answer::NoneFound { fenced: false } => "No instance found.".into(),
        Answer::NoneFound { fenced: true } => "```\nNo instance found.\n```".into(),
        Answer::Malformed => "The snippet appears to describe a syntax tree, but I cannot determine the roles of its classes with confidence.".into(),
        Answer::Roles { style, .. } => {
            let assignments = predicted(answer, target, snippet);
            match style {
                Style::Fenced => format!("```xml\n{}\n```", xml_block(target.id, &assignments)),
                Style::FencedWithProse => format!(
                    "Here is the XML annotation for the provided snippet:\n\n```xml\n{}\n```\n",
                    xml_block(target.id, &assignments)
                ),
                Style::Bare => xml_block(target.id, &assignments),
                Style::TwoBlocks => {
                    let half = assignments.len() / 2;
                    format!(
                        "```xml\n{}\n```\n\n```xml\n{}\n```",
                        xml_block(target.id, &assignments[..half]),
                        xml_block(target.id, &assignments[half..])
                    )
                }
            }
        }
    }
}

fn main() {
    let fixtures = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures");
    let corpus_dir = fixtures.join("corpus");
    if corpus_dir.exists() {
        fs::remove_dir_all(&corpus_dir).unwrap();
    }
    let data = corpus();
    for (p, _) in &data {
        write_project(&corpus_dir, p);
    }
    let instances: Vec<&Instance> = data.iter().map(|(_, i)| i).collect();
    fs::create_dir_all(fixtures.join("ground_truth")).unwrap();
    fs::write(
        fixtures.join("ground_truth/composite.xml"),
        ground_truth_xml(&instances),
    )
    .unwrap();

    let projects: Vec<serde_json::Value> = data
        .iter()
        .map(|(p, _)| serde_json::json!({"id": p.id, "name": p.name, "root": format!("corpus/{}", p.id)}))
        .collect();
    let config = serde_json::json!({
        "pattern": {"name": "Composite", "roles": ROLES},
        "projects": projects,
        "ground_truth": ["ground_truth/composite.xml"],
        "budget": {"context_limit": 128000, "reserved_output": 4096, "estimator": "bytes4"},
        "models": [
            {"name": "gpt-3.5-turbo", "endpoint_url": "https://api.openai.com/v1/chat/completions"},
            {"name": "gpt-4", "endpoint_url": "https://api.openai.com/v1/chat/completions"}
        ],
        "backend": "replay",
        "cassette": "cassette.jsonl",
        "out": "out",
        "schedule": SCHEDULE,
    });
    let config_path = fixtures.join("pipeline.json");
    fs::write(&config_path, serde_json::to_string_pretty(&config).unwrap() + "\n").unwrap();

    // Plan in a scratch directory to learn the prompt digests.
    let scratch = tempfile::tempdir().unwrap();
    let mut cfg = PipelineConfig::load(&config_path).unwrap();
    cfg.out = scratch.path().to_path_buf();
    pipeline::cmd_plan(&cfg).unwrap();
    let plan: Vec<PlanRecord> = fs::read_to_string(scratch.path().join(pipeline::PLAN))
        .unwrap()
        .lines()
        .map(|l| serde_json::from_str(l).unwrap())
        .collect();

    let by_id: BTreeMap<u32, (&Project, &Instance)> = data.iter().map(|(p, i)| (i.id, (p, i))).collect();
    let mut entries = Vec::new();
    for (model, answers) in [("gpt-3.5-turbo", answers_gpt35()), ("gpt-4", answers_gpt4())] {
        for (run, answer) in plan.iter().zip(answers) {
            let (project, target) = by_id[&run.target_id];
            let root = pipeline_root(target);
            let mut snippet: Vec<String> = project
                .classes
                .iter()
                .map(|c| c.fqn.clone())
                .filter(|c| in_package(c, &root))
                .collect();
            snippet.sort();
            entries.push(CassetteEntry {
                pair_key: PairKey {
                    example_id: run.example_id,
                    target_id: run.target_id,
                    model_name: model.to_string(),
                    repeat: run.repeat,
                },
                prompt_digest: run.prompt_digest.clone(),
                raw_text: answer_text(answer, target, &snippet),
                recorded_at: RECORDED_AT.to_string(),
            });
        }
    }
    let cassette: String = entries
        .iter()
        .map(|e| serde_json::to_string(e).unwrap() + "\n")
        .collect();
    fs::write(fixtures.join("cassette.jsonl"), cassette).unwrap();
    println!("wrote fixtures to {}", fixtures.display());
}
