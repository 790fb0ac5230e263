use alt_tamari::cli::{parse, run};

fn invoke(args: &[&str]) -> (bool, String) {
    let cli = parse(args.iter().copied()).unwrap();
    let mut out = Vec::new();
    let ok = run(&cli, &mut out).unwrap();
    (ok, String::from_utf8(out).unwrap())
}

#[test]
fn build_reports_counts() {
    let (ok, out) = invoke(&["build", "--nu", "EN^2E^2N", "--delta", "0,0"]);
    assert!(ok);
    assert!(out.contains("elements: 10\n"), "{out}");
    assert!(out.contains("semidistributive: true"));
    let (_, out) = invoke(&["build", "--nu", "N"]);
    assert!(out.contains("elements: 1\n"));
}

#[test]
fn build_exports_dot_and_json() {
    let dir = tempfile::tempdir().unwrap();
    let dot = dir.path().join("t.dot");
    let dot_arg = dot.to_str().unwrap();
    invoke(&[
        "build", "--nu", "E^3NE^3N", "--delta", "2,0", "--export", "dot", "--out", dot_arg,
    ]);
    let text = std::fs::read_to_string(&dot).unwrap();
    let nodes = text.lines().filter(|l| l.contains("[label=")).count();
    assert_eq!(nodes, 22);

    let json = dir.path().join("t.json");
    let json_arg = json.to_str().unwrap();
    invoke(&[
        "build", "--nu", "(3,3,0)", "--export", "json", "--out", json_arg,
    ]);
    let value: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&json).unwrap()).unwrap();
    assert_eq!(value["elements"].as_array().unwrap().len(), 22);
}

#[test]
fn bad_input_is_an_error() {
    let cli = parse(["build", "--nu", "EN", "--delta", "5"]).unwrap();
    assert!(run(&cli, &mut Vec::new()).is_err());
    assert!(parse(["build", "--nu", "EX"]).is_err());
    let cli = parse(["verify", "--suite", "nope"]).unwrap();
    assert!(run(&cli, &mut Vec::new()).is_err());
    let cli = parse(["--max-elements", "5", "build", "--nu", "E^3NE^3N"]).unwrap();
    assert!(run(&cli, &mut Vec::new()).is_err());
}

#[test]
fn verify_suites_pass_and_write_json() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("hook.json");
    let (ok, out) = invoke(&[
        "verify",
        "--suite",
        "hook",
        "--max-a",
        "6",
        "--max-b",
        "6",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert!(ok);
    assert!(out.ends_with(" 0 failed\n"));
    let report: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert!(report["checks"]
        .as_array()
        .unwrap()
        .iter()
        .all(|c| c["passed"] == true));

    let (ok, _) = invoke(&["verify", "--suite", "csp", "--max-a", "5", "--max-b", "5"]);
    assert!(ok);
    let (ok, out) = invoke(&[
        "verify", "--suite", "two-row", "--max-a", "7", "--max-b", "7",
    ]);
    assert!(ok);
    assert!(out.contains("area-not-homometric"));
}

#[test]
fn output_is_byte_stable() {
    let args = [
        "verify", "--suite", "interval", "--cases", "5", "--seed", "3",
    ];
    assert_eq!(invoke(&args), invoke(&args));
    let args = ["scan", "--random", "6", "--seed", "9"];
    assert_eq!(invoke(&args), invoke(&args));
}

#[test]
fn scan_examples() {
    let (ok, out) = invoke(&["scan", "--nu", "EN^2E^2N", "--nu", "NE"]);
    assert!(ok);
    assert_eq!(out.matches("CONSISTENT").count(), 2, "{out}");
    let (ok, out) = invoke(&[
        "scan", "--nu", "EN^2E^2N", "--delta", "0,0", "--delta", "2,0",
    ]);
    assert!(ok);
    assert!(out.contains("2 deltas"), "{out}");
    let cli = parse(["--max-elements", "10", "scan", "--nu", "NE"]).unwrap();
    assert!(run(&cli, &mut Vec::new()).is_err());
}

#[test]
fn orbits_prints_tables() {
    let (ok, out) = invoke(&[
        "orbits",
        "--nu",
        "EN^2E^2N",
        "--delta",
        "2,0",
        "--stat",
        "ddeg,area",
    ]);
    assert!(ok);
    assert!(out.contains("orbits: 3 (order 12)"), "{out}");
    assert!(out.contains("statistic: area"));
}
