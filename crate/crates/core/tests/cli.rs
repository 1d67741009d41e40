use std::io::Write;
use std::path::Path;
use std::process::{Command, Output, Stdio};

use levelrsk::document::{self, parse, serialize, Document, Kind};
use levelrsk::fixtures;

const BIN: &str = env!("CARGO_BIN_EXE_levelrsk");

fn fixture(name: &str) -> String {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("fixtures")
        .join(name)
        .to_string_lossy()
        .into_owned()
}

fn run(args: &[&str]) -> Output {
    Command::new(BIN).args(args).output().expect("binary runs")
}

fn run_stdin(args: &[&str], input: &str) -> Output {
    let mut child = Command::new(BIN)
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child
        .stdin
        .take()
        .unwrap()
        .write_all(input.as_bytes())
        .unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

#[test]
fn forward_matches_library_and_fixture() {
    let o = run(&["forward", "--input", &fixture("example_parmat.json")]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let got = parse(&stdout(&o)).unwrap();
    assert_eq!(got, Document::TableauPair(fixtures::example_tableaux()));
    let lib = levelrsk::psi(&fixtures::example_parmat()).unwrap();
    assert_eq!(stdout(&o), serialize(&Document::TableauPair(lib)));
}

#[test]
fn inverse_through_files() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("parmat.json");
    let o = run(&[
        "inverse",
        "--input",
        &fixture("inverse_tableaux.json"),
        "--output",
        out.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let text = std::fs::read_to_string(&out).unwrap();
    assert_eq!(
        parse(&text).unwrap(),
        Document::ParMat(fixtures::inverse_parmat())
    );
}

#[test]
fn convert_hops_agree_with_library() {
    let chain = [
        ("example_parmat.json", "bcm"),
        ("example_bcm.json", "flagged-biword"),
        ("example_biword.json", "tableau-pair"),
        ("example_tableaux.json", "flagged-biword"),
        ("example_biword.json", "bcm"),
        ("example_bcm.json", "parmat"),
        ("inverse_tableaux.json", "parmat"),
    ];
    for (file, to) in chain {
        let o = run(&["convert", "--to", to, "--input", &fixture(file)]);
        assert_eq!(o.status.code(), Some(0), "{file} -> {to}: {}", stderr(&o));
        let input = parse(&std::fs::read_to_string(fixture(file)).unwrap()).unwrap();
        let kind = <Kind as clap::ValueEnum>::from_str(to, false).unwrap();
        let want = document::convert(&input, kind).unwrap();
        assert_eq!(stdout(&o), serialize(&want), "{file} -> {to}");
    }
}

#[test]
fn reads_stdin_by_default() {
    let o = run_stdin(&["convert", "--to", "bcm"], fixtures::EXAMPLE_PARMAT);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    assert_eq!(
        parse(&stdout(&o)).unwrap(),
        Document::Bcm(fixtures::example_bcm())
    );
}

#[test]
fn enumerate_counts() {
    let cases: &[(&[&str], &str)] = &[
        (
            &["--family", "multipartitions", "--n", "2", "--level", "2"],
            "5",
        ),
        (
            &["--family", "multipartitions", "--n", "3", "--level", "1"],
            "3",
        ),
        (
            &["--family", "multicompositions", "--n", "1", "--level", "2"],
            "2",
        ),
        (
            &["--family", "multicompositions", "--n", "0", "--level", "3"],
            "1",
        ),
        (
            &["--family", "parmat", "--nu", "[[],[1]]", "--mu", "[[],[1]]"],
            "2",
        ),
        (
            &["--family", "parmat", "--nu", "[[1,1]]", "--mu", "[[1,1]]"],
            "2",
        ),
        (
            &["--family", "bcm", "--nu", "[[],[1]]", "--mu", "[[],[1]]"],
            "2",
        ),
        (
            &[
                "--family",
                "flagged-biwords",
                "--nu",
                "[[2]]",
                "--mu",
                "[[1]]",
            ],
            "0",
        ),
        (
            &["--family", "sst", "--shape", "[[2,1]]", "--mu", "[[1,1,1]]"],
            "2",
        ),
    ];
    for (args, want) in cases {
        let mut full = vec!["enumerate", "--count"];
        full.extend_from_slice(args);
        let o = run(&full);
        assert_eq!(o.status.code(), Some(0), "{args:?}: {}", stderr(&o));
        assert_eq!(stdout(&o).trim(), *want, "{args:?}");
    }
}

#[test]
fn enumerate_lists_parseable_documents() {
    let o = run(&[
        "enumerate",
        "--family",
        "parmat",
        "--nu",
        "[[],[1]]",
        "--mu",
        "[[],[1]]",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let docs: Vec<_> = stdout(&o).lines().map(|l| parse(l).unwrap()).collect();
    assert_eq!(docs.len(), 2);
    assert_ne!(docs[0], docs[1]);
}

#[test]
fn verify_small_budget_is_clean() {
    let o = run(&["verify", "--budget", "n=3,level=2"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let report: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    let checks = report["checks"].as_object().unwrap();
    assert!(!checks.is_empty());
    for (name, tally) in checks {
        assert_eq!(tally["failed"], 0, "{name}");
        assert!(tally["passed"].as_u64().unwrap() > 0, "{name}");
    }
    assert_eq!(report["failures"].as_array().unwrap().len(), 0);
}

#[test]
fn demo_reproduces_examples() {
    let o = run(&["demo"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    let text = stdout(&o);
    assert!(text.contains("0 mismatches"));
    assert!(!text.contains("MISMATCH"));
    assert!(text.contains("row(B) = (212, 3, 23)"));
}

#[test]
fn show_renders_block_layout() {
    let o = run(&["show", "--input", &fixture("example_bcm.json")]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("001"));
}

#[test]
fn exit_codes() {
    let bad_composition =
        r#"{"kind":"multicomposition","level":1,"payload":{"components":[[0,1,0]]}}"#;
    let o = run_stdin(&["convert", "--to", "bcm"], bad_composition);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("trailing zero"), "{}", stderr(&o));

    let o = run_stdin(&["forward"], "{\n  \"kind\": \"parmat\",\n  oops\n}");
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("line 3"), "{}", stderr(&o));

    let o = run(&["forward", "--input", &fixture("example_bcm.json")]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("expected a parmat document"));

    let o = run(&[
        "convert",
        "--to",
        "multipartition",
        "--input",
        &fixture("example_bcm.json"),
    ]);
    assert_eq!(o.status.code(), Some(2));

    let o = run(&[
        "enumerate",
        "--family",
        "parmat",
        "--nu",
        "[[1]]",
        "--mu",
        "[[1],[]]",
    ]);
    assert_eq!(o.status.code(), Some(2));

    let o = run(&["forward", "--input", "/nonexistent/levelrsk.json"]);
    assert_eq!(o.status.code(), Some(1));

    let o = run(&["verify", "--budget", "n=99,level=2"]);
    assert_eq!(o.status.code(), Some(2), "{}", stderr(&o));
}
