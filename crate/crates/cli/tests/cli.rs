use std::process::{Command, Output};

use grpcoh::{
    emit, parse_request, report, run, CommandRequest, Failure, Format, SubcommandKind,
    EXIT_INTERNAL, EXIT_UNSUPPORTED, EXIT_USAGE, SCHEMA_VERSION,
};
use grpcoh_core::Error;
use serde_json::Value;

fn grpcoh(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_grpcoh"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn json(args: &[&str]) -> Value {
    let mut full = args.to_vec();
    full.extend(["--format", "json"]);
    let out = grpcoh(&full);
    assert_eq!(
        out.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_slice(&out.stdout).expect("valid JSON")
}

#[test]
fn parse_examples() {
    let req = parse_request([
        "ring", "--group", "S3", "--char", "3", "--maxdeg", "8", "--format", "json",
    ])
    .unwrap();
    assert_eq!(
        req,
        CommandRequest {
            subcommand: SubcommandKind::Ring,
            group: "S3".into(),
            p: 3,
            maxdeg: 8,
            format: Format::Json,
        }
    );
    assert_eq!(
        parse_request(["ring", "--group", "C0"]).unwrap_err().code,
        EXIT_USAGE
    );
    let req = parse_request(["betti", "--group", "Klein", "--char", "2"]).unwrap();
    assert_eq!((req.maxdeg, req.format), (10, Format::Text));
    for bad in [
        vec!["betti", "--group", "Klein", "--char", "4"],
        vec!["betti", "--group", "C65", "--char", "2"],
        vec!["frobnicate", "--group", "C2", "--char", "2"],
        vec!["betti", "--group", "C2", "--char", "2", "--format", "xml"],
        vec!["betti", "--group", "C2", "--char", "2", "--maxdeg", "-1"],
    ] {
        assert_eq!(
            parse_request(bad.clone()).unwrap_err().code,
            EXIT_USAGE,
            "{bad:?}"
        );
    }
}

#[test]
fn echoed_inputs_parse_back() {
    for args in [
        vec![
            "ring", "--group", "S3", "--char", "3", "--maxdeg", "8", "--format", "json",
        ],
        vec!["klein", "--group", "Klein", "--char", "2"],
        vec![
            "projectives",
            "--group",
            "C2xC3",
            "--char",
            "5",
            "--maxdeg",
            "0",
        ],
    ] {
        let req = parse_request(args).unwrap();
        let rep = report(&req, run(&req).unwrap());
        let inputs = &rep["inputs"];
        let echoed: Vec<String> = vec![
            inputs["subcommand"].as_str().unwrap().into(),
            "--group".into(),
            inputs["group"].as_str().unwrap().into(),
            "--char".into(),
            inputs["char"].to_string(),
            "--maxdeg".into(),
            inputs["maxdeg"].to_string(),
            "--format".into(),
            inputs["format"].as_str().unwrap().into(),
        ];
        assert_eq!(parse_request(echoed).unwrap(), req);
        assert_eq!(parse_request(req.to_args()).unwrap(), req);
    }
}

#[test]
fn exit_codes() {
    assert_eq!(
        grpcoh(&["betti", "--group", "C4", "--char", "2"])
            .status
            .code(),
        Some(0)
    );
    let usage = grpcoh(&["ring", "--group", "C0", "--char", "2"]);
    assert_eq!(usage.status.code(), Some(EXIT_USAGE));
    assert!(usage.stdout.is_empty());
    assert!(!usage.stderr.is_empty());
    let unsupported = grpcoh(&[
        "projectives",
        "--group",
        "S3xC2",
        "--char",
        "3",
        "--format",
        "json",
    ]);
    assert_eq!(unsupported.status.code(), Some(EXIT_UNSUPPORTED));
    assert!(
        unsupported.stdout.is_empty(),
        "no partial output on failure"
    );
    assert_eq!(
        grpcoh(&["klein", "--group", "C4", "--char", "2"])
            .status
            .code(),
        Some(EXIT_UNSUPPORTED)
    );
    assert_eq!(
        Failure::from(Error::LiftFailed { degree: 3 }).code,
        EXIT_INTERNAL
    );
}

#[test]
fn output_is_deterministic() {
    for args in [
        ["info", "--group", "S3", "--char", "2", "--format", "json"],
        [
            "ring", "--group", "Klein", "--char", "2", "--format", "text",
        ],
        ["check", "--group", "C4", "--char", "2", "--format", "json"],
    ] {
        let (a, b) = (grpcoh(&args), grpcoh(&args));
        assert_eq!(a.status.code(), Some(0));
        assert_eq!(a.stdout, b.stdout, "{args:?}");
    }
}

#[test]
fn json_reports() {
    let v = json(&["ring", "--group", "S3", "--char", "3", "--maxdeg", "8"]);
    assert_eq!(v["schema_version"], SCHEMA_VERSION);
    assert_eq!(v["inputs"]["group"], "S3");
    let r = &v["result"];
    assert_eq!(r["hilbert"], serde_json::json!([1, 0, 0, 1, 1, 0, 0, 1, 1]));
    let gens: Vec<(u64, &str)> = r["generators"]
        .as_array()
        .unwrap()
        .iter()
        .map(|g| (g["degree"].as_u64().unwrap(), g["kind"].as_str().unwrap()))
        .collect();
    assert_eq!(gens, [(3, "exterior"), (4, "polynomial")]);
    assert_eq!(r["cutoff"], 8);

    let v = json(&["projectives", "--group", "S3", "--char", "2"]);
    assert_eq!(v["result"]["ranks"], serde_json::json!([2, 4]));
    let v = json(&["projectives", "--group", "S3", "--char", "3"]);
    assert_eq!(v["result"]["ranks"], serde_json::json!([3, 3]));
    assert_eq!(v["result"]["pairwise_non_isomorphic"], true);

    let v = json(&["betti", "--group", "Klein", "--char", "2", "--maxdeg", "12"]);
    let expected: Vec<usize> = (1..=13).collect();
    assert_eq!(v["result"]["dims"], serde_json::json!(expected));

    let v = json(&["h1", "--group", "C2xC2xC3", "--char", "2"]);
    assert_eq!(v["result"]["h1"], 2);
}

#[test]
fn check_passes_on_small_groups() {
    for (g, p) in [
        ("Klein", "2"),
        ("C9", "3"),
        ("S3", "3"),
        ("S3", "2"),
        ("C6", "5"),
    ] {
        let v = json(&["check", "--group", g, "--char", p, "--maxdeg", "6"]);
        assert_eq!(v["result"]["counts"]["fail"], 0, "{g}@{p}: {}", v["result"]);
        assert!(v["result"]["counts"]["pass"].as_u64().unwrap() >= 4);
    }
}

#[test]
fn text_output_is_line_oriented() {
    let req = parse_request(["betti", "--group", "C3", "--char", "3", "--maxdeg", "3"]).unwrap();
    let text = emit(&report(&req, run(&req).unwrap()), Format::Text);
    assert!(text.lines().any(|l| l == "dims: [1, 1, 1, 1]"), "{text}");
    assert!(text.lines().any(|l| l == "group: C3"), "{text}");
    assert!(text.lines().all(|l| l.contains(": ")), "{text}");
}
