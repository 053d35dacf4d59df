use std::process::Command;

use serde_json::Value;
use twisted_doubles::cli::run_args;

fn run(args: &[&str]) -> (i32, Value) {
    let mut argv = vec!["twisted-doubles"];
    argv.extend_from_slice(args);
    let out = run_args(argv);
    let v = if out.stdout.is_empty() { Value::Null } else { serde_json::from_str(&out.stdout).unwrap() };
    (out.code, v)
}

#[test]
fn genuine_report() {
    let (code, v) = run(&["genuine", "--m", "2", "--a", "1", "--explicit"]);
    assert_eq!(code, 0);
    assert_eq!(v["genuine"], true);
    assert_eq!(v["consistent"], true);
    assert_eq!(v["report"]["gcd_criterion"], true);
    assert_eq!(v["report"]["valuation_criterion"], true);
    assert_eq!(v["report"]["explicit_oracle"]["genuine"], true);
    let (code, v) = run(&["genuine", "--m", "3", "--a", "1"]);
    assert_eq!(code, 1);
    assert_eq!(v["report"]["explicit_oracle"], "skipped");
}

#[test]
fn genuine_sweep() {
    let (code, v) = run(&["genuine", "--sweep", "8", "--explicit"]);
    assert_eq!(code, 0);
    assert_eq!(v["reports"].as_array().unwrap().len(), 28);
}

#[test]
fn morita_construct_fixture() {
    let (code, v) = run(&["morita", "construct", "--fixture", "z2cubed-a123"]);
    assert_eq!(code, 0);
    assert_eq!(v["dual_group"]["iso_class"], "D8");
    assert_eq!(v["dual_group"]["order"], 8);
    assert_eq!(v["theorem12"], true);
    let (code, v) = run(&["morita", "check", "--fixture", "example-3-7"]);
    assert_eq!(code, 1);
    assert_eq!(v["theorem12"], false);
    let (code, v) = run(&["morita", "verify-witness", "--fixture", "example-3-7"]);
    assert_eq!(code, 0);
    assert_eq!(v["report"]["gauge_equivalent"], true);
}

#[test]
fn nichols_cartan() {
    let (code, v) = run(&["nichols", "cartan", "--modules", "M1,M3,M5"]);
    assert_eq!(code, 0);
    assert_eq!(v["cartan"], serde_json::json!([[2, -1, -1], [-1, 2, -1], [-1, -1, 2]]));
}

#[test]
fn nichols_predicates() {
    let (code, v) = run(&["nichols", "indecomposable", "--modules", "M1,M3"]);
    assert_eq!(code, 0);
    assert_eq!(v["result"]["pairs"][0]["witness"], serde_json::json!(["1u1", "1w1"]));
    let (code, v) = run(&["nichols", "skeleton", "--modules", "M2,M3,M5"]);
    assert_eq!(code, 0);
    assert_eq!(v["skeleton"]["edges"].as_array().unwrap().len(), 3);
    let (code, v) = run(&["nichols", "skeleton", "--modules", "M3,M4,M6"]);
    assert_eq!(code, 1);
    assert!(v["skeleton"].is_null());
    let (code, v) = run(&["nichols", "analyze", "--modules", "M1,M2,M4"]);
    assert_eq!(code, 0);
    assert_eq!(v["route"], "diagonal");
    let (code, v) = run(&["nichols", "diagram", "--modules", "M1,M2"]);
    assert_eq!(code, 0);
    assert_eq!(v["diagonal"]["matrix"][2][0], "3/4");
}

#[test]
fn nichols_accepts_module_specs() {
    let specs = r#"[{"group":"D8","class_rep":"x^2","representation":{"x":[[1,"0/1"],[0,"1/2"]],"y":[[1,"1/2"],[0,"1/2"]]},"vectors":["u1","u2"]},
                   {"group":"D8","class_rep":"y","character":{"y":"1/2","x^2":"1/2"},"vectors":["w1"]}]"#;
    let (code, v) = run(&["nichols", "indecomposable", "--modules", specs]);
    assert_eq!(code, 0, "{v}");
    assert_eq!(v["result"]["pairs"][0]["witness"], serde_json::json!(["1u1", "1w1"]));
}

#[test]
fn cocycle_commands() {
    let (code, v) = run(&["cocycle", "verify", "--fixture", "z2cubed-a123"]);
    assert_eq!((code, v["valid"].clone()), (0, Value::Bool(true)));
    let (code, _) = run(&["cocycle", "abelian", "--fixture", "z2cubed-a123"]);
    assert_eq!(code, 1);
    let (code, _) = run(&["cocycle", "abelian", "--params", r#"{"group":[4],"a":[3]}"#]);
    assert_eq!(code, 0);
}

#[test]
fn tqd_commands() {
    let (code, v) = run(&["tqd", "axioms", "--params", r#"{"group":[2],"a":[1]}"#]);
    assert_eq!(code, 0);
    assert_eq!(v["coverage"], "full");
    let (code, v) = run(&["tqd", "axioms", "--d8", "--samples", "64"]);
    assert_eq!(code, 0);
    assert_ne!(v["coverage"], "full");
    let (code, v) = run(&["tqd", "grouplikes", "--m", "4", "--a", "1"]);
    assert_eq!(code, 0);
    assert_eq!(v["invariant_factors"], serde_json::json!([2, 8]));
}

#[test]
fn errors_exit_two() {
    for args in [
        vec!["genuine", "--m", "4", "--a", "9"],
        vec!["nichols", "cartan", "--modules", "M1,M7"],
        vec!["morita", "check", "--fixture", "nope"],
        vec!["cocycle", "verify", "--params", "{not json"],
        vec!["nichols", "cartan", "--modules", "M1,M3", "--cap", "4"],
        vec!["frobnicate"],
    ] {
        let mut argv = vec!["twisted-doubles"];
        argv.extend(args.iter().copied());
        let out = run_args(argv);
        assert_eq!(out.code, 2, "{args:?}");
        assert!(!out.stderr.is_empty());
    }
}

#[test]
fn fixtures_commands() {
    let (code, v) = run(&["fixtures", "list"]);
    assert_eq!(code, 0);
    assert_eq!(v.as_array().unwrap().len(), 10);
    let (code, v) = run(&["fixtures", "show", "M2"]);
    assert_eq!(code, 0);
    assert_eq!(v["spec"]["class_rep"], "x");
}

#[test]
fn text_format() {
    let out = run_args(["twisted-doubles", "--format", "text", "genuine", "--m", "2", "--a", "1"]);
    assert_eq!(out.code, 0);
    assert!(out.stdout.lines().any(|l| l == "genuine = true"));
}

#[test]
fn reports_are_deterministic() {
    for args in [
        vec!["twisted-doubles", "tqd", "axioms", "--d8", "--samples", "32", "--seed", "9"],
        vec!["twisted-doubles", "nichols", "analyze", "--modules", "M3,M4,M5"],
        vec!["twisted-doubles", "morita", "construct", "--fixture", "z2cubed-a123"],
    ] {
        assert_eq!(run_args(args.clone()).stdout, run_args(args).stdout);
    }
}

#[test]
fn binary_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_twisted-doubles");
    let status = |args: &[&str]| Command::new(bin).args(args).output().unwrap().status.code();
    assert_eq!(status(&["genuine", "--m", "2", "--a", "1"]), Some(0));
    assert_eq!(status(&["genuine", "--m", "3", "--a", "1"]), Some(1));
    assert_eq!(status(&["genuine", "--m", "3"]), Some(2));
}
