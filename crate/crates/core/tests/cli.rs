use std::path::{Path, PathBuf};
use std::process::Command;

use alglen::cli::run;
use alglen::Algebra;
use serde_json::Value;
use tempfile::TempDir;

fn alglen(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("alglen").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn json(args: &[&str]) -> (i32, Value) {
    let mut full = vec!["--json"];
    full.extend_from_slice(args);
    let (code, out, _) = alglen(&full);
    (code, serde_json::from_str(&out).expect("JSON report"))
}

fn example(dir: &Path, family: &str, extra: &[&str]) -> PathBuf {
    let path = dir.join(format!("{family}{}.json", extra.join("")));
    let p = path.to_str().unwrap();
    let mut args = vec!["example", family, "-o", p];
    args.extend_from_slice(extra);
    let (code, _, err) = alglen(&args);
    assert_eq!(code, 0, "{err}");
    path
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn length_of_vinberg_set() {
    let dir = TempDir::new().unwrap();
    let r4 = example(dir.path(), "vinberg_R4", &[]);
    let (code, out, _) = alglen(&["length", s(&r4), "--set", "@e1"]);
    assert_eq!(code, 0);
    assert!(out.contains("length: 5"), "{out}");
    assert!(out.contains("characteristic sequence: (1,2,3,5)"), "{out}");
    assert!(out.contains("((x1*(x1*x1))*(x1*x1))"), "{out}");

    let (code, report) = json(&["length", s(&r4), "--set", "@e1"]);
    assert_eq!(code, 0);
    assert_eq!(report["result"]["length"], 5);
    assert_eq!(
        report["result"]["characteristic_sequence"],
        serde_json::json!([1, 2, 3, 5])
    );
    assert_eq!(report["algebra"]["name"], "R4");
    assert_eq!(report["exit_status"], 0);
}

#[test]
fn length_claims_and_non_generating_sets() {
    let dir = TempDir::new().unwrap();
    let b5 = example(dir.path(), "leibniz_B", &["--d", "5"]);
    assert_eq!(alglen(&["length", s(&b5), "--set", "@x1", "--claim", "5"]).0, 0);
    assert_eq!(alglen(&["length", s(&b5), "--set", "@x1", "--claim", "4"]).0, 1);
    let (code, report) = json(&["length", s(&b5), "--set", "@x2"]);
    assert_eq!(code, 1);
    assert_eq!(report["result"]["generating"], false);
    assert_eq!(report["result"]["partial_sequence"], serde_json::json!([1]));
}

#[test]
fn identity_checks() {
    let dir = TempDir::new().unwrap();
    let v6 = example(dir.path(), "valya_V6", &[]);
    let (code, out, _) = alglen(&["check", s(&v6), "--identity", "valya"]);
    assert_eq!(code, 0, "{out}");
    assert!(out.contains("holds"));
    let (code, report) = json(&["check", s(&v6), "--identity", "leibniz"]);
    assert_eq!(code, 1);
    assert_eq!(report["result"]["outcome"]["verdict"], "counterexample");

    let idfile = dir.path().join("comm.json");
    std::fs::write(
        &idfile,
        r#"{"name":"comm","arity":2,"terms":[{"coeff":"1","monomial":[1,2]},{"coeff":"-1","monomial":[2,1]}]}"#,
    )
    .unwrap();
    let f3 = example(dir.path(), "coordinatewise", &["--d", "3"]);
    assert_eq!(alglen(&["check", s(&f3), "--identity-file", s(&idfile)]).0, 0);
    assert_eq!(alglen(&["check", s(&v6), "--identity-file", s(&idfile)]).0, 1);

    let e = example(dir.path(), "r_ended_E", &["--d", "5", "--r", "3"]);
    assert_eq!(alglen(&["check", s(&e), "--r-ended", "3"]).0, 0);
    assert_eq!(alglen(&["check", s(&e), "--r-ended", "2"]).0, 1);
}

#[test]
fn input_errors_exit_with_two() {
    let dir = TempDir::new().unwrap();
    let bad = dir.path().join("bare.json");
    std::fs::write(&bad, r#"{"name": "bare", "dim": 3"#).unwrap();
    assert_eq!(alglen(&["check", s(&bad), "--identity", "associative"]).0, 2);
    assert_eq!(alglen(&["check", "/nonexistent/file.json", "--identity", "lie"]).0, 2);
    let b3 = example(dir.path(), "leibniz_B", &["--d", "3"]);
    assert_eq!(alglen(&["check", s(&b3), "--identity", "jordan"]).0, 2);
    assert_eq!(alglen(&["length", s(&b3), "--set", "1,0"]).0, 2);
    assert_eq!(alglen(&["example", "no_such_family"]).0, 2);
    assert_eq!(alglen(&["example", "leibniz_B", "--d", "2"]).0, 2);
    assert_eq!(alglen(&["check", s(&b3)]).0, 2);
    assert_eq!(alglen(&["frobnicate"]).0, 2);
    let (code, report) = json(&["check", s(&bad), "--identity", "associative"]);
    assert_eq!(code, 2);
    assert!(report["error"].is_string());
}

#[test]
fn budget_exceeded_exits_with_three() {
    let dir = TempDir::new().unwrap();
    let v6 = example(dir.path(), "valya_V6", &[]);
    assert_eq!(
        alglen(&["--budget", "100", "check", s(&v6), "--identity", "valya"]).0,
        3
    );
    let r4 = example(dir.path(), "vinberg_R4", &[]);
    assert_eq!(alglen(&["oracle", s(&r4), "--set", "@basis", "--kmax", "12"]).0, 3);
}

#[test]
fn classify_and_search_reports() {
    let dir = TempDir::new().unwrap();
    let c4 = example(dir.path(), "novikov_C4", &[]);
    let (code, report) = json(&["classify", s(&c4)]);
    assert_eq!(code, 0);
    let cls = &report["result"]["classification"];
    assert_eq!(cls["is_mixing"], "certified");
    assert_eq!(cls["is_sliding"], "refuted");
    assert_eq!(
        cls["sliding_item2"]["refutation"]["basis_triple"],
        serde_json::json!([1, 1, 1])
    );
    assert_eq!(report["result"]["bound"]["value"], 4);

    let a5 = example(dir.path(), "filiform_A", &["--d", "5"]);
    let (code, report) = json(&["search", s(&a5), "--max-subset", "2", "--with-bounds"]);
    assert_eq!(code, 0);
    assert_eq!(report["result"]["best"], 4);
    assert_eq!(report["result"]["exact"], true);
    assert_eq!(report["result"]["bound"]["justification"], "Lie");

    let cands = dir.path().join("cands.txt");
    std::fs::write(&cands, "# G1, G2\n1,-1,0,0; 0,0,1,1\n").unwrap();
    let m2 = example(dir.path(), "matrix_full", &["--d", "2"]);
    let (code, report) = json(&["search", s(&m2), "--max-subset", "1", "--candidates", s(&cands)]);
    assert_eq!(code, 0);
    assert_eq!(report["result"]["attempts"][4]["source"], "candidate");
}

#[test]
fn oracle_agrees() {
    let dir = TempDir::new().unwrap();
    let r4 = example(dir.path(), "vinberg_R4", &[]);
    let (code, report) = json(&["oracle", s(&r4), "--set", "@e1", "--kmax", "5"]);
    assert_eq!(code, 0);
    assert_eq!(report["result"]["enumeration"], serde_json::json!([0, 1, 2, 3, 3, 4]));
    assert_eq!(report["result"]["agree"], true);
}

#[test]
fn example_files_round_trip() {
    let dir = TempDir::new().unwrap();
    for family in alglen::families::Family::ALL {
        let extra: &[&str] = match family.key() {
            "r_ended_E" => &["--d", "5", "--r", "3"],
            "coordinatewise" | "matrix_full" => &["--d", "2"],
            k if family.fixed_dim().is_none() && k != "r_ended_E" => &["--d", "4"],
            _ => &[],
        };
        let path = example(dir.path(), family.key(), extra);
        let loaded = Algebra::from_json(&std::fs::read_to_string(&path).unwrap()).unwrap();
        let (code, report) = json(&["info", s(&path)]);
        assert_eq!(code, 0);
        assert_eq!(report["algebra"], serde_json::to_value(loaded.fingerprint()).unwrap());
        let mut spec = alglen::families::FamilySpec::new(family);
        let opt = |flag: &str| {
            extra
                .iter()
                .position(|a| *a == flag)
                .map(|i| extra[i + 1].parse().unwrap())
        };
        spec.d = opt("--d");
        spec.r = opt("--r");
        assert_eq!(loaded, spec.build().unwrap());
    }
    let (code, out, _) = alglen(&["example", "zinbiel_Z", "--d", "4", "--field", "5"]);
    assert_eq!(code, 0);
    assert!(out.contains(r#""p": 5"#));
    assert_eq!(alglen(&["example", "zinbiel_Z", "--d", "4", "--field", "3"]).0, 2);
}

#[test]
fn reports_are_byte_identical_and_thread_independent() {
    let dir = TempDir::new().unwrap();
    let r4 = example(dir.path(), "vinberg_R4", &[]);
    let args = [
        "--json",
        "search",
        s(&r4),
        "--random",
        "20",
        "--set-size",
        "1..3",
        "--seed",
        "9",
    ];
    let first = alglen(&args).1;
    assert_eq!(first, alglen(&args).1);
    let without_command = |text: &str| {
        let mut v: Value = serde_json::from_str(text).unwrap();
        v.as_object_mut().unwrap().remove("command");
        v
    };
    for threads in ["1", "3"] {
        let mut threaded = vec!["--threads", threads];
        threaded.extend_from_slice(&args);
        assert_eq!(without_command(&first), without_command(&alglen(&threaded).1));
    }
}

#[test]
fn binary_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_alglen");
    let dir = TempDir::new().unwrap();
    let r4 = example(dir.path(), "vinberg_R4", &[]);
    let ok = Command::new(bin)
        .args(["length", s(&r4), "--set", "@e1"])
        .output()
        .unwrap();
    assert_eq!(ok.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&ok.stdout).contains("length: 5"));
    let bad = Command::new(bin).args(["info", "/nonexistent.json"]).output().unwrap();
    assert_eq!(bad.status.code(), Some(2));
    let budget = Command::new(bin)
        .env("ALGLEN_BUDGET", "10")
        .args(["check", s(&r4), "--identity", "vinberg"])
        .output()
        .unwrap();
    assert_eq!(budget.status.code(), Some(3));
    let help = Command::new(bin).arg("--help").output().unwrap();
    assert_eq!(help.status.code(), Some(0));
}
