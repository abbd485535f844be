use std::process::Command;

use assoc_cli::{run, Cli, RunResult, SCHEMA, VERBS};
use clap::CommandFactory;
use serde_json::Value;

fn assoc(args: &[&str]) -> RunResult {
    let out = Command::new(env!("CARGO_BIN_EXE_assoc")).args(args).output().unwrap();
    RunResult {
        code: out.status.code().unwrap(),
        stdout: String::from_utf8(out.stdout).unwrap(),
        stderr: String::from_utf8(out.stderr).unwrap(),
    }
}

fn call(args: &[&str]) -> RunResult {
    run(std::iter::once("assoc").chain(args.iter().copied()))
}

/// One successful invocation per verb.
const SAMPLES: &[&[&str]] = &[
    &["bijection", "--to-partition", "8; (4,6),(2,4),(2,6),(0,2),(0,6)"],
    &["flip", "--partition", "[4,2,2]", "--row", "2"],
    &["neighbors", "--partition", "[2,1]", "--n", "4"],
    &["dihedral", "--partition", "[2]", "--n", "4", "--word", "a b"],
    &["graph", "--n", "3"],
    &["faces", "--n", "2"],
    &["mutate", "--type", "A", "--n", "3", "--sequence", "1,2,3"],
    &["exchange-graph", "--type", "A", "--n", "2"],
    &["verify", "dihedral", "--n", "3"],
    &["cc", "--n", "2"],
    &["arcs", "family", "--family", "fountain:0", "--lo", "-3", "--hi", "3"],
];

#[test]
fn documented_examples() {
    let r = assoc(&["bijection", "--to-partition", "8; (4,6),(2,4),(2,6),(0,2),(0,6)"]);
    assert_eq!((r.code, r.stdout.as_str()), (0, "[4,2,2]\n"));
    let r = assoc(&["flip", "--partition", "[4,2,2]", "--row", "2"]);
    assert_eq!((r.code, r.stdout.as_str()), (0, "[4,3,2]\n"));
    let r = assoc(&["exchange-graph", "--type", "A", "--n", "2", "--format", "edge-list"]);
    assert_eq!(r.code, 0);
    let mut lines = r.stdout.lines();
    assert_eq!(lines.next(), Some("# exchange-graph A_2 vertices=5 edges=5"));
    assert_eq!(lines.filter(|l| l.contains(" -- ")).count(), 5);
}

#[test]
fn every_verb_is_dispatched() {
    let names: Vec<String> = Cli::command().get_subcommands().map(|c| c.get_name().to_string()).collect();
    assert_eq!(names, VERBS);
    assert_eq!(SAMPLES.len(), VERBS.len());
    for (verb, sample) in VERBS.iter().zip(SAMPLES) {
        assert_eq!(sample[0], *verb);
        let r = call(sample);
        assert_eq!(r.code, 0, "{sample:?}: {}", r.stderr);
        assert!(!r.stdout.is_empty());
        let s = call(&[sample, &["--format", "structured"][..]].concat());
        let v: Value = serde_json::from_str(&s.stdout).unwrap();
        assert_eq!(v["schema"], SCHEMA);
        assert_eq!(v["command"], *verb);
    }
}

#[test]
fn output_is_deterministic() {
    for sample in SAMPLES {
        for format in ["human", "structured"] {
            let args = [sample, &["--format", format][..]].concat();
            assert_eq!(assoc(&args), assoc(&args), "{args:?}");
        }
    }
    let g = ["graph", "--n", "5", "--format", "adjacency-json"];
    assert_eq!(assoc(&g), assoc(&g));
}

#[test]
fn exit_codes() {
    assert_eq!(assoc(&["--help"]).code, 0);
    assert_eq!(assoc(&["--version"]).code, 0);
    assert_eq!(assoc(&[]).code, 1);
    assert_eq!(assoc(&["frobnicate"]).code, 1);
    assert_eq!(assoc(&["flip", "--partition", "[1]", "--row", "1", "--bogus"]).code, 1);
    assert_eq!(assoc(&["faces", "--n", "2", "--format", "edge-list"]).code, 1);

    for (args, name) in [
        (&["flip", "--partition", "[1,3]", "--row", "1"][..], "InvalidPartition"),
        (&["flip", "--partition", "[9]", "--row", "1", "--n", "3"], "DoesNotFit"),
        (&["bijection", "--to-partition", "6; (0,2),(1,3)"], "InvalidTriangulation"),
        (&["flip", "--triangulation", "5; (0,2),(0,3)", "--diagonal", "(1,3)"], "DiagonalNotPresent"),
        (&["mutate", "--n", "2", "--sequence", "3"], "NotMutable"),
        (&["verify", "nope"], "Parse"),
        (&["graph", "--n", "12"], "BudgetExceeded"),
        (&["arcs", "family", "--family", "spiral", "--lo", "0", "--hi", "4"], "UnknownFamily"),
        (&["arcs", "reach", "--family", "leapfrog", "--lo", "-3", "--hi", "3"], "NotClassifiable"),
        (&["arcs", "flip", "--arcs", "(0,2),(0,3)", "--arc", "(0,4)", "--lo", "0", "--hi", "4"], "ArcNotPresent"),
    ] {
        let r = assoc(args);
        assert_eq!(r.code, 2, "{args:?}: {}", r.stderr);
        assert!(r.stderr.starts_with(&format!("error[{name}]")), "{args:?}: {}", r.stderr);
        assert!(r.stdout.is_empty());
    }
}

#[test]
fn graph_exports_round_trip() {
    let json = call(&["graph", "--n", "4", "--format", "adjacency-json"]);
    assert_eq!(json.code, 0);
    let dir = std::env::temp_dir().join(format!("assoc-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("y4.json");
    std::fs::write(&path, &json.stdout).unwrap();
    let path = path.to_str().unwrap();
    let back = call(&["graph", "--n", "4", "--input", path, "--format", "edge-list"]);
    assert_eq!(back.stdout, call(&["graph", "--n", "4", "--format", "edge-list"]).stdout);
    assert!(back.stdout.starts_with("# flip-graph Y_4 vertices=14 edges=21"));
    let dot = call(&["graph", "--n", "3", "--format", "dot-like"]);
    assert!(dot.stdout.contains("\"[]\" -- \"[1]\";"));
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn verbs_agree_with_each_other() {
    let t = call(&["bijection", "--to-triangulation", "[4,2,2]", "--ngon", "8"]);
    assert_eq!(t.stdout, "8; (4,6),(2,4),(2,6),(0,2),(0,6)\n");
    let f = call(&["flip", "--triangulation", t.stdout.trim(), "--diagonal", "(2,4)"]);
    let p = call(&["bijection", "--to-partition", f.stdout.trim()]);
    assert_eq!(p.stdout, call(&["flip", "--partition", "[4,2,2]", "--row", "2"]).stdout);

    let nb = call(&["neighbors", "--partition", "[4,2,2]", "--n", "6"]);
    assert_eq!(nb.stdout.lines().count(), 5);
    assert!(nb.stdout.lines().any(|l| l == "[4,3,2]"));

    let cc = call(&["cc", "--n", "2", "--module", "M[1,2]"]);
    assert_eq!(cc.stdout, "M[1,2]@> -> (1 + x1 + x2)/(x1*x2)\n");
    let check = call(&["cc", "--orientation", "><", "--check", "--format", "structured"]);
    let v: Value = serde_json::from_str(&check.stdout).unwrap();
    assert_eq!(v["result"]["holds"], true);

    let faces = call(&["faces", "--n", "2"]);
    assert_eq!(faces.stdout, "5 5 1\n");
}

#[test]
fn verify_reports_each_property() {
    let r = call(&["verify", "laurent-phenomenon", "--n", "3"]);
    assert_eq!(r.code, 0);
    assert!(r.stdout.starts_with("laurent-phenomenon n=3: PASS"));
    assert_eq!(r.stdout.lines().filter(|l| l.starts_with("  [PASS]")).count(), 4);
    let s = call(&["verify", "extension", "--n", "3", "--format", "structured"]);
    let v: Value = serde_json::from_str(&s.stdout).unwrap();
    assert_eq!(v["result"]["passed"], false);
}

#[test]
fn seeds_round_trip_through_files() {
    let s = call(&["mutate", "--type", "A-ice", "--n", "2", "--sequence", "1", "--format", "structured"]);
    let v: Value = serde_json::from_str(&s.stdout).unwrap();
    let dir = std::env::temp_dir().join(format!("assoc-seed-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("seed.json");
    std::fs::write(&path, v["result"]["seed"].to_string()).unwrap();
    let back = call(&["mutate", "--seed-file", path.to_str().unwrap(), "--sequence", "1"]);
    let start = call(&["mutate", "--type", "A-ice", "--n", "2"]);
    assert_eq!(back.stdout, start.stdout);
    std::fs::remove_dir_all(&dir).unwrap();

    let fan = call(&["mutate", "--triangulation", "5; (0,2),(0,3)"]);
    assert_eq!(fan.stdout, start.stdout);
}
