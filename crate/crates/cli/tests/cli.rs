use assert_cmd::Command;

fn run(args: &[&str]) -> (i32, String) {
    let out = Command::cargo_bin("betasplit").unwrap().args(args).output().unwrap();
    (out.status.code().unwrap_or(-1), String::from_utf8(out.stdout).unwrap())
}

#[test]
fn f_image_of_e2() {
    let (code, out) = run(&["monomials", "--op", "F", "--n", "5", "--j", "2"]);
    assert_eq!(code, 0);
    // F_5 e_2 = x/25 + 24x^2/25
    assert!(out.contains("e2,0,0.04,0.96"), "{out}");
    let (_, json) = run(&["monomials", "--op", "F", "--n", "5", "--j", "2", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&json).unwrap();
    assert_eq!(v["images"][0]["coefficients"], serde_json::json!(["0/1", "1/25", "24/25"]));
}

#[test]
fn beta_eigenpair() {
    let (code, out) = run(&["eigen", "--op", "beta", "--n", "3", "--k", "2", "--format", "json"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["eigenvalue"], "3/4");
    assert_eq!(v["eigenpolynomial"], serde_json::json!(["0/1", "-1/1", "1/1"]));
}

#[test]
fn lebesgue_max_at_ten() {
    let (code, out) = run(&["lebesgue", "--n", "10", "--max"]);
    assert_eq!(code, 0);
    let row = out.lines().nth(1).unwrap();
    let max: f64 = row.split(',').nth(2).unwrap().parse().unwrap();
    assert!((max - 1.2258).abs() < 1e-3, "{out}");
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(run(&["monomials"]).0, 2);
    assert_eq!(run(&["monomials", "--n", "3", "--j", "4"]).0, 2);
    assert_eq!(run(&["eigen", "--op", "stancu", "--n", "3"]).0, 2);
    assert_eq!(run(&["lebesgue", "--n", "3", "--bits", "100"]).0, 2);
    assert_eq!(run(&["voronovskaya", "--m", "3", "--ns", "10,5"]).0, 2);
    assert_eq!(run(&["monomials", "--op", "nope", "--n", "3"]).0, 2);
}

#[test]
fn output_is_deterministic() {
    let args = ["bench", "--function", "kink", "--ns", "5,10", "--bits", "64"];
    assert_eq!(run(&args), run(&args));
}

#[test]
fn verify_passes() {
    let (code, out) = run(&["verify", "--n", "4"]);
    assert_eq!(code, 0, "{out}");
    assert!(!out.contains("FAIL"));
}

#[test]
fn out_flag_writes_file() {
    let path = std::env::temp_dir().join(format!("betasplit-moments-{}.csv", std::process::id()));
    let (code, out) = run(&["moments", "--n", "4", "--m", "2", "--out", path.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert!(out.is_empty());
    let written = std::fs::read_to_string(&path).unwrap();
    std::fs::remove_file(&path).ok();
    // M_{4,2} = x(1-x)/16
    assert!(written.contains("M2,0,0.0625,-0.0625"));
}
