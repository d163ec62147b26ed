use std::path::PathBuf;
use std::process::Command;

use defekt_cli::run;
use serde_json::Value;

fn data(name: &str) -> String {
    let p: PathBuf = [env!("CARGO_MANIFEST_DIR"), "tests", "data", name].iter().collect();
    p.display().to_string()
}

fn call(args: &[&str]) -> (i32, Value) {
    let mut argv = vec!["defekt".to_string()];
    argv.extend(args.iter().map(|s| s.to_string()));
    let r = run(argv);
    let v = serde_json::from_str(&r.stdout).unwrap_or_else(|e| panic!("not JSON ({e}): {}", r.stdout));
    (r.code, v)
}

#[test]
fn invariants_of_nilpotent_example() {
    let (code, v) = call(&["invariants", &data("ex3.json")]);
    assert_eq!(code, 0);
    assert_eq!(v["triple"], serde_json::json!([2, 1, 1]));
    assert_eq!(v["dimApm"], 5);
    let (_, v) = call(&["invariants", &data("ex3_lambda2.json")]);
    assert_eq!(v["dimK"], 0);
    assert_eq!(v["tqft"], true);
}

#[test]
fn minimize_zero_theory() {
    let (code, v) = call(&["minimize", &data("zero.json")]);
    assert_eq!(code, 0);
    assert_eq!(v["dim"], 0);
}

#[test]
fn minimize_reports_pairing() {
    let (_, v) = call(&["minimize", &data("ex3.json")]);
    assert_eq!(v["pairing"], serde_json::json!([["3", "1"], ["1", "0"]]));
    assert_eq!(v["wordBasis"], serde_json::json!(["", "a"]));
}

#[test]
fn onevar_commands() {
    let (code, v) = call(&["onevar", "crosscheck", "--zi", "1;1,-2", "--zc", "3,-5;1,-3,2"]);
    assert_eq!(code, 0);
    assert_eq!(v["pass"], true);
    let (_, v) = call(&["onevar", "analyze", "--zi", "3,1", "--zc", "5"]);
    assert_eq!(v["dims"], serde_json::json!({"dimA": 2, "dimU": 2, "dimK": 1}));
    assert_eq!(v["gAlpha"], serde_json::json!(["0", "0", "1"]));
    let (code, v) = call(&["onevar", "analyze", "--zi", "1;0,1", "--zc", "1"]);
    assert_eq!(code, 2);
    assert_eq!(v["error"]["path"], "--zi.den");
}

#[test]
fn diagrams_and_state_spaces() {
    let (_, v) = call(&["eval-diagram", &data("ex2.json"), &data("circle_a3.json")]);
    assert_eq!(v["value"], "10");
    // interval a² vanishes, whatever the circle does
    let (_, v) = call(&["eval-diagram", &data("ex3.json"), &data("cap_cup.json")]);
    assert_eq!(v["value"], "0");
    let (_, v) = call(&["statespace", &data("ex3.json"), "--eps", "+-"]);
    assert_eq!(v["dim"], 5);
    let (_, v) = call(&["statespace", &data("tqft2.json"), "--eps", "+", "--from", "+"]);
    assert_eq!(v["dim"], 4);
    let (code, v) = call(&["statespace", &data("ex3.json"), "--eps", "+-+", "--bound", "2"]);
    assert_eq!(code, 1);
    assert_eq!(v["error"]["kind"], "SizeBound");
    let (code, v) = call(&["statespace", &data("ex3.json"), "--eps", "+x"]);
    assert_eq!(code, 2);
    assert_eq!(v["error"]["path"], "--eps");
}

#[test]
fn frobenius_commands() {
    let (_, v) = call(&["frob", "check", &data("c5.json")]);
    assert_eq!(v["pass"], true);
    let (_, v) = call(&["frob", "beta", &data("c5.json")]);
    assert_eq!(v["zero"], true);
    let (_, v) = call(&["frob", "embed", &data("dual_numbers.json")]);
    assert_eq!(v["embeddingPossible"], false);
    assert_eq!(v["witnessNilpotency"], 2);
    let (_, v) = call(&["frob", "embed", &data("mat2.json")]);
    assert_eq!(v["semisimple"], true);
    assert_eq!(v["traceOfUnit"], "2");
    let (code, v) = call(&["frob", "embed", &data("c5.json")]);
    assert_eq!(code, 1);
    assert_eq!(v["error"]["kind"], "UnsupportedCharacteristic");
    let (_, v) = call(&["surface", "eval", &data("c5.json"), &data("disk_one.json")]);
    assert_eq!(v["value"], "1");
}

#[test]
fn extracted_algebra_round_trips() {
    let dir = std::env::temp_dir().join(format!("defekt-cli-test-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let out = dir.join("k.json");
    let out_s = out.display().to_string();
    let r = run(["defekt", "frobenius-extract", &data("two_letters.json"), "-o", &out_s]);
    assert_eq!(r.code, 0);
    assert!(r.stdout.is_empty());
    let (code, v) = call(&["frob", "check", &out_s]);
    assert_eq!(code, 0);
    assert_eq!(v["pass"], true);
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn open_closed_commands() {
    let (_, v) = call(&["oc", "check", &data("pair_c5.json")]);
    assert_eq!(v["pass"], true);
    let (_, v) = call(&["oc", "eval", &data("oc_c5.json"), &data("torus_disk.json")]);
    assert_eq!(v["value"], "0");
    let (_, v) = call(&["oc", "circle-dim", &data("oc_c5.json"), "--gmax", "3", "--smax", "3"]);
    assert_eq!(v["dim"], 2);
    assert_eq!(v["stabilized"], true);
    let (_, v) = call(&["oc", "circle-dim", &data("oc_ground.json")]);
    assert_eq!(v["dim"], 1);
}

#[test]
fn field_override() {
    // 1/(1-2T) over F_3 is 1/(1+T); dimensions are unchanged.
    let (code, v) = call(&["--field", "prime:3", "invariants", &data("ex2.json")]);
    assert_eq!(code, 0);
    assert_eq!(v["dimA"], 1);
    let (code, v) = call(&["--field", "prime:4", "invariants", &data("ex2.json")]);
    assert_eq!(code, 2);
    assert_eq!(v["error"]["path"], "--field");
}

#[test]
fn malformed_inputs_name_their_path() {
    let (code, v) = call(&["invariants", &data("bad_scalar.json")]);
    assert_eq!(code, 2);
    assert_eq!(v["error"]["path"], "$.interval.num[1]");
    let (code, v) = call(&["invariants", &data("does_not_exist.json")]);
    assert_eq!(code, 2);
    assert!(v["error"]["path"].as_str().unwrap().ends_with("does_not_exist.json"));
    let r = run(["defekt", "no-such-command"]);
    assert_eq!(r.code, 2);
}

#[test]
fn binary_output_is_byte_stable() {
    let exe = env!("CARGO_BIN_EXE_defekt");
    let once = || Command::new(exe).args(["invariants", &data("two_letters.json")]).output().unwrap();
    let (a, b) = (once(), once());
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    let code = Command::new(exe).args(["invariants", &data("bad_scalar.json")]).output().unwrap().status.code();
    assert_eq!(code, Some(2));
}
