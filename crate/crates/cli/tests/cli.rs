//! End-to-end checks of the binary: exit codes, output determinism, the JSON
//! schema, and the emitters.

use std::path::PathBuf;
use std::process::{Command, Output};

use ncgraded::report::Report;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_ncgraded"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf8 output")
}

#[test]
fn classify_exit_codes() {
    let ok = run(&["classify", "1", "1", "1"]);
    assert_eq!(ok.status.code(), Some(0));
    assert!(stdout(&ok).contains("witness-validates"));

    let nondegenerate = run(&["classify", "1", "2", "3"]);
    assert_eq!(nondegenerate.status.code(), Some(0));
    assert!(stdout(&nondegenerate).contains("non-degenerate"));

    let bad = run(&["classify", "1", "1", "oops"]);
    assert_eq!(bad.status.code(), Some(2));

    let zero = run(&["classify", "0", "0", "0"]);
    assert_eq!(zero.status.code(), Some(2));
}

#[test]
fn scalar_literals_accepted_on_the_command_line() {
    for c in ["w", "w^2", "-1/2", "(1/2 + 3*w)", "(1 - w)"] {
        let out = run(&["classify", "1", "1", c]);
        assert_eq!(out.status.code(), Some(0), "scalar {c}");
    }
}

#[test]
fn verify_all_passes_and_is_deterministic() {
    let first = run(&["verify-all", "--json"]);
    assert_eq!(first.status.code(), Some(0));
    let second = run(&["verify-all", "--json"]);
    assert_eq!(stdout(&first), stdout(&second), "byte-identical across runs");

    let report = Report::from_json(&stdout(&first)).expect("parses as a report");
    assert!(report.all_pass());
    assert_eq!(report.command, "verify-all");
    // Round trip is byte identical.
    assert_eq!(report.to_json(), stdout(&first));
}

#[test]
fn verify_all_json_matches_the_published_schema() {
    let schema_path: PathBuf = [env!("CARGO_MANIFEST_DIR"), "..", "..", "docs", "report.schema.json"]
        .iter()
        .collect();
    let schema_text = std::fs::read_to_string(schema_path).expect("schema file exists");
    let schema: serde_json::Value = serde_json::from_str(&schema_text).unwrap();
    let validator = jsonschema::validator_for(&schema).expect("schema compiles");

    for args in [
        vec!["verify-all", "--json", "--strict"],
        vec!["classify", "1", "w", "w^2", "--json"],
        vec!["k0", "--member", "1/8,1/8,1/8", "--json"],
        vec!["points", "4", "--json"],
    ] {
        let out = run(&args);
        let value: serde_json::Value = serde_json::from_str(&stdout(&out)).expect("json output");
        assert!(
            validator.validate(&value).is_ok(),
            "schema violation for {args:?}: {:?}",
            validator.iter_errors(&value).map(|e| e.to_string()).collect::<Vec<_>>()
        );
    }
}

#[test]
fn strict_mode_adds_info_entries_without_failing() {
    let plain = run(&["verify-all", "--json"]);
    let strict = run(&["verify-all", "--json", "--strict"]);
    assert_eq!(strict.status.code(), Some(0));
    let plain_report = Report::from_json(&stdout(&plain)).unwrap();
    let strict_report = Report::from_json(&stdout(&strict)).unwrap();
    let infos = |r: &Report| r.results.iter().filter(|e| e.status == ncgraded::Status::Info).count();
    assert_eq!(infos(&plain_report), 0);
    assert!(infos(&strict_report) >= 3);
    assert!(strict_report.all_pass());
}

#[test]
fn fault_injection_fails_the_named_entry_and_the_exit_code() {
    let out = run(&["verify-all", "--json", "--inject-fault", "k0:lattice-quotients"]);
    assert_eq!(out.status.code(), Some(1));
    let report = Report::from_json(&stdout(&out)).unwrap();
    let failed: Vec<_> = report
        .results
        .iter()
        .filter(|e| e.status == ncgraded::Status::Fail)
        .collect();
    assert_eq!(failed.len(), 1);
    assert_eq!(failed[0].name, "k0:lattice-quotients");
}

#[test]
fn maxdeg_flag_and_environment_override() {
    let flag = run(&["verify-all", "--maxdeg", "5", "--json"]);
    let report = Report::from_json(&stdout(&flag)).unwrap();
    assert_eq!(report.inputs["maxdeg"], "5");

    let env = bin()
        .args(["verify-all", "--json"])
        .env("NCGRADED_MAXDEG", "4")
        .output()
        .unwrap();
    let report = Report::from_json(&stdout(&env)).unwrap();
    assert_eq!(report.inputs["maxdeg"], "4");
    assert_eq!(env.status.code(), Some(0));

    let too_small = run(&["verify-all", "--maxdeg", "3"]);
    assert_eq!(too_small.status.code(), Some(2));
}

#[test]
fn emit_outputs_have_the_documented_shapes() {
    let q = stdout(&run(&["emit", "quiver-Q"]));
    assert_eq!(q.matches("->").count(), 6, "six arrows");
    assert!(q.contains("  1;\n  2;\n  3;\n"), "three nodes");

    let qprime = stdout(&run(&["emit", "quiver-Qprime"]));
    assert_eq!(qprime.matches("->").count(), 6);
    // Three loops in the cycle graph.
    let loops = qprime
        .lines()
        .filter(|l| {
            l.trim_start()
                .split_once(" -> ")
                .is_some_and(|(a, b)| b.starts_with(a) && b.as_bytes().get(a.len()) == Some(&b' '))
        })
        .count();
    assert_eq!(loops, 3);

    let bratteli = stdout(&run(&["emit", "bratteli"]));
    assert_eq!(bratteli.matches("rank=same").count(), 3, "levels 0..2");
    assert!(bratteli.contains("label=\"1\""));
    assert!(bratteli.contains("label=\"4\""));

    let automaton = stdout(&run(&["emit", "successor-automaton"]));
    assert_eq!(automaton.matches("label=").count(), 6, "six states");
    assert_eq!(automaton.matches(" -> ").count(), 12, "twelve transitions");

    let unknown = run(&["emit", "nonsense"]);
    assert_eq!(unknown.status.code(), Some(2));
}

#[test]
fn emit_ufnarovskii_reads_a_presentation_file() {
    let dir = std::env::temp_dir().join("ncgraded-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("cycle.alg");
    std::fs::write(&path, "gens: u v w\nrel: u*v\nrel: v*w\nrel: w*u\n").unwrap();
    let out = run(&["emit", "ufnarovskii", path.to_str().unwrap(), "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let value: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(value["vertex_count"], 3);
    assert_eq!(value["arrows"].as_array().unwrap().len(), 6);

    let missing = run(&["emit", "ufnarovskii", "/nonexistent/file.alg"]);
    assert_eq!(missing.status.code(), Some(2));

    let bad = dir.join("bad.alg");
    std::fs::write(&bad, "gens: x\nrel: x*y\n").unwrap();
    let out = run(&["emit", "ufnarovskii", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("unknown generator"), "stderr: {err}");
}

#[test]
fn points_listing_is_json_with_the_right_count() {
    let out = run(&["points", "3", "--list"]);
    assert_eq!(out.status.code(), Some(0));
    let value: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(value["count"], 24);
    assert_eq!(value["sequences"].as_array().unwrap().len(), 24);
}

#[test]
fn twist_command_round_trips_a_file() {
    let dir = std::env::temp_dir().join("ncgraded-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("squares.alg");
    std::fs::write(&path, "gens: u v w\nrel: u*u\nrel: v*v\nrel: w*w\n").unwrap();
    let out = run(&[
        "twist",
        path.to_str().unwrap(),
        "--map",
        "u->w,v->u,w->v",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("twisted"));
    assert!(text.contains("changed"), "the twist changes the span: {text}");
}

#[test]
fn veronese_and_custom_k0_matrices() {
    let out = run(&["veronese", "3"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("[2,3,3; 3,2,3; 3,3,2]"));

    let zero_power = run(&["veronese", "0"]);
    assert_eq!(zero_power.status.code(), Some(2));

    let out = run(&["k0", "--matrix", "2", "--start", "1", "--period", "1"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("Z[1/2]"), "{text}");

    let bad = run(&["k0", "--matrix", "1,2;3"]);
    assert_eq!(bad.status.code(), Some(2));
}

#[test]
fn hilbert_rejects_non_monomial_presentations() {
    let dir = std::env::temp_dir().join("ncgraded-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("nonmono.alg");
    std::fs::write(&path, "gens: x y\nrel: x*y + y*x\n").unwrap();
    let out = run(&["hilbert", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("single words"), "stderr: {err}");
}

#[test]
fn mckay_argument_validation() {
    let out = run(&["mckay", "3", "1,oops"]);
    assert_eq!(out.status.code(), Some(2));
    let out = run(&["mckay", "0", "1,2"]);
    assert_eq!(out.status.code(), Some(2));
    let ok = run(&["mckay", "4", "1,3"]);
    assert_eq!(ok.status.code(), Some(0));
}

#[test]
fn timestamps_are_off_by_default() {
    let out = stdout(&run(&["classify", "1", "1", "1", "--json"]));
    assert!(!out.contains("timestamp"));
    let stamped = stdout(&run(&["classify", "1", "1", "1", "--json", "--timestamps"]));
    assert!(stamped.contains("timestamp"));
}
