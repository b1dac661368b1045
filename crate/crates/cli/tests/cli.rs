use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_pcaxial")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

const F5_A6: [&str; 8] = ["--field", "Fp:5", "--alpha", "3", "--beta", "3", "--gamma", "1"];

#[test]
fn symbolic_tau_prints_parameters() {
    let o = run(&["tau", "a"]);
    assert_eq!(o.status.code(), Some(0));
    let first = stdout(&o).lines().next().unwrap().to_string();
    assert!(first.starts_with("1, 8/3*alpha, 8/3*gamma"), "{first}");
}

#[test]
fn two_generated_order_from_alpha_alone() {
    let o = run(&["--alpha", "1/4", "order", "ab2"]);
    assert_eq!(stdout(&o).trim(), "2");
    let o = run(&["--alpha", "prop1:k=5:root=1", "order", "ab2"]);
    assert_eq!((o.status.code(), stdout(&o).trim()), (Some(0), "5"));
}

#[test]
fn conjugate_order_and_solve() {
    let o = run(&["--alpha=-1/8", "--beta=-1/8", "--gamma=-1/8", "--psi", "5/32", "order", "abc"]);
    assert_eq!(stdout(&o).trim(), "3");
    let o = run(&["--alpha=-1/8", "solve-order", "4", "--word", "abc", "--out", "json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v[0]["verified_order"], "4");
}

#[test]
fn group_json_identifies_a6() {
    let mut args = F5_A6.to_vec();
    args.extend(["--psi", "1", "--out", "json", "group"]);
    let o = run(&args);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["order"], 360);
    assert_eq!(v["perfect"], true);
    assert_eq!(v["catalog"][0], "A6");
}

#[test]
fn cutoff_exit_code() {
    let mut args = F5_A6.to_vec();
    args.extend(["--psi", "1", "--cutoff", "100", "group"]);
    let o = run(&args);
    assert_eq!(o.status.code(), Some(3));
    assert!(stdout(&o).contains("exceeded(100)"));
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(run(&["--field", "Fp:5", "--alpha", "3", "group"]).status.code(), Some(2));
    assert_eq!(run(&["--alpha", "x", "order", "ab"]).status.code(), Some(2));
    assert_eq!(run(&["--field", "Fp:6", "sweep", "--pair"]).status.code(), Some(2));
    assert_eq!(run(&["repro", "nope"]).status.code(), Some(2));
}

#[test]
fn repro_exit_codes() {
    let o = run(&["repro", "remark-f7"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("remark-f7: PASS"));
    let o = run(&["repro", "example-sl85"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("[FAIL]"));
}

#[test]
fn ideal_and_quotient_at_quarter() {
    let p = ["--alpha", "1/4", "--beta", "1", "--gamma", "1/4", "--psi", "1/4"];
    let o = run(&[&p[..], &["--out", "json", "ideal", "--defect", "2"]].concat());
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["dim"], 4);
    let o = run(&[&p[..], &["--out", "json", "ideal", "--defect", "2", "--seed", "b"]].concat());
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert!(v["dim"].as_u64().unwrap() >= 4);
    let o = run(&[&p[..], &["quotient", "--defect", "2"]].concat());
    assert!(stdout(&o).contains("tau_ab order on quotient: 2"));
}

#[test]
fn pair_sweep_matches_f7_row() {
    let o = run(&["--field", "Fp:7", "sweep", "--pair"]);
    let lines: Vec<String> = stdout(&o).lines().map(String::from).collect();
    assert_eq!(lines[0], "p,alpha,ord_ab");
    assert_eq!(lines.len(), 8);
}

#[test]
fn filtered_sweep_csv() {
    let o = run(&["--field", "Fp:5", "--alpha", "3", "--beta", "3", "--gamma", "1", "sweep"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert_eq!(text.lines().count(), 6);
    assert!(text.lines().any(|l| l.starts_with("5,3,3,1,1,") && l.contains(",360,")));
}

#[test]
fn config_file_supplies_defaults() {
    let dir = std::env::temp_dir().join(format!("pcaxial-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("a6.conf");
    std::fs::write(&path, "# F_5 A6 point\nfield = Fp:5\nalpha = 3\nbeta = 3\ngamma = 1\npsi = 1\ncutoff = 100\n").unwrap();
    let p = path.to_str().unwrap();
    assert_eq!(run(&["--config", p, "group"]).status.code(), Some(3));
    assert_eq!(run(&["--config", p, "--cutoff", "1000", "group"]).status.code(), Some(0));
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn charpoly_csv_has_nine_coefficients() {
    let o = run(&["--out", "csv", "charpoly", "ab"]);
    assert_eq!(stdout(&o).lines().count(), 10);
}
