use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use ncframe_cli::format::{emit, parse};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_ncframe"))
}

fn fixture(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("tests/fixtures")
        .join(name)
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn scratch(name: &str, text: &str) -> PathBuf {
    let dir = Path::new(env!("CARGO_TARGET_TMPDIR")).join("cli-tests");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, text).unwrap();
    path
}

#[test]
fn pfn1_model_matches_golden_fixture() {
    let o = run(&["model", "pfn", "--m", "1"]);
    assert!(o.status.success());
    assert_eq!(
        stdout(&o),
        std::fs::read_to_string(fixture("pfn1.skl")).unwrap()
    );
}

#[test]
fn models_round_trip() {
    let cases: &[&[&str]] = &[
        &["model", "pfn", "--m", "2"],
        &["model", "rect", "--n", "2", "--hand", "left"],
        &["model", "rect", "--n", "3", "--hand", "right"],
        &["model", "chain", "--n", "1"],
        &["model", "chain", "--n", "4", "--heyting"],
        &["model", "bool", "--k", "2", "--heyting"],
    ];
    for args in cases {
        let text = stdout(&run(args));
        let f = parse(&text).unwrap();
        assert_eq!(emit(f.name.as_deref(), &f.algebra), text, "{args:?}");
    }
}

#[test]
fn small_models() {
    let rect = parse(&stdout(&run(&[
        "model", "rect", "--n", "2", "--hand", "left",
    ])))
    .unwrap();
    assert_eq!(rect.algebra.size(), 2);
    assert_eq!(rect.algebra.meet(0, 1), 0);
    assert_eq!(rect.algebra.join(0, 1), 1);
    let one = parse(&stdout(&run(&["model", "chain", "--n", "1"]))).unwrap();
    assert_eq!(one.algebra.size(), 1);
}

#[test]
fn product_of_files() {
    let p1 = fixture("pfn1.skl");
    let rect = scratch("rect2.skl", &stdout(&run(&["model", "rect", "--n", "2"])));
    let o = run(&[
        "model",
        "product",
        p1.to_str().unwrap(),
        rect.to_str().unwrap(),
    ]);
    assert!(o.status.success());
    let f = parse(&stdout(&o)).unwrap();
    assert_eq!(f.algebra.size(), 6);
    assert_eq!(f.name.as_deref(), Some("(pfn(1))x(rect-left(2))"));
}

#[test]
fn budget_exit_code() {
    assert_eq!(run(&["model", "pfn", "--m", "7"]).status.code(), Some(4));
    assert_eq!(run(&["model", "bool", "--k", "11"]).status.code(), Some(4));
}

#[test]
fn validate_exit_codes() {
    let ok = run(&["validate", fixture("pfn1.skl").to_str().unwrap()]);
    assert_eq!(ok.status.code(), Some(0));
    let bad = run(&["validate", fixture("nonassoc.skl").to_str().unwrap()]);
    assert_eq!(bad.status.code(), Some(1));
    assert!(stdout(&bad).contains("FAIL meet associative witness (0,0,1)"));
    let parse_err = run(&["validate", fixture("out_of_range.skl").to_str().unwrap()]);
    assert_eq!(parse_err.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&parse_err.stderr).contains("line 5, column 3"));
    let missing = run(&["validate", "/nonexistent/file.skl"]);
    assert_eq!(missing.status.code(), Some(3));
}

#[test]
fn classify_summaries() {
    let p2 = scratch("p2.skl", &stdout(&run(&["model", "pfn", "--m", "2"])));
    let out = stdout(&run(&["classify", p2.to_str().unwrap()]));
    assert!(
        out.contains("summary: left-handed, strongly distributive, normal, symmetric;"),
        "{out}"
    );
    assert!(out.contains("quotient = 2^2"));
    assert!(out.contains("top class: {4,5,7,8}"));

    let lat = scratch("b2.skl", &stdout(&run(&["model", "bool", "--k", "2"])));
    let out = stdout(&run(&["classify", lat.to_str().unwrap()]));
    assert!(out.contains("summary: commutative"), "{out}");
    assert!(out.contains("classes singleton"));

    let rect = scratch("r3.skl", &stdout(&run(&["model", "rect", "--n", "3"])));
    let out = stdout(&run(&["classify", rect.to_str().unwrap()]));
    assert!(out.contains("rectangular"), "{out}");
    assert!(out.contains("one D-class"));
}

#[test]
fn implication_methods_agree() {
    let p1 = fixture("pfn1.skl");
    let both = run(&["imp", p1.to_str().unwrap(), "--t", "2", "--method", "both"]);
    assert!(both.status.success());
    let out = stdout(&both);
    assert!(out.ends_with("diff: none\n"));
    assert!(out.starts_with("2 1 2\n0 1 2\n0 1 2\n"));
    let nh = stdout(&run(&[
        "imp",
        p1.to_str().unwrap(),
        "--t",
        "2",
        "--method",
        "nh",
    ]));
    let sup = stdout(&run(&[
        "imp",
        p1.to_str().unwrap(),
        "--t",
        "2",
        "--method",
        "sup",
    ]));
    assert_eq!(nh, sup);

    let chain = scratch("c3.skl", &stdout(&run(&["model", "chain", "--n", "3"])));
    let heyting = stdout(&run(&["imp", chain.to_str().unwrap(), "--t", "2"]));
    assert_eq!(heyting, "2 2 2\n0 2 2\n0 1 2\n");

    let bottom = run(&["imp", p1.to_str().unwrap(), "--t", "0"]);
    assert_eq!(bottom.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&bottom.stderr).contains("top D-class"));
}

#[test]
fn verify_modes() {
    let empty = run(&["verify", "--corpus", "empty"]);
    assert_eq!(empty.status.code(), Some(0));
    assert!(stdout(&empty).contains("0 instances"));

    let mutants = run(&["verify", "--mutate", "pfn1", "--no-cap"]);
    assert_eq!(mutants.status.code(), Some(1));
    assert!(stdout(&mutants).contains("mutants caught: 54/54"));

    let files = run(&[
        "verify",
        "--machine",
        "--no-cap",
        fixture("pfn1.skl").to_str().unwrap(),
    ]);
    assert_eq!(files.status.code(), Some(0));
    let text = stdout(&files);
    for line in text.lines() {
        let fields: Vec<&str> = line.split('\t').collect();
        assert_eq!(fields.len(), 4, "{line}");
        assert!(["pass", "skip"].contains(&fields[2]), "{line}");
    }
    assert!(text.contains("nh-axioms\tpfn(1)\tpass\t"));

    let broken = run(&["verify", fixture("nonassoc.skl").to_str().unwrap()]);
    assert_eq!(broken.status.code(), Some(1));
}
