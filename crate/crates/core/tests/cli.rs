use std::process::{Command, Output};

fn prym(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_prym"))
        .args(args)
        .output()
        .expect("run prym")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).trim().to_string()
}

#[test]
fn eval_examples() {
    let o = prym(&["eval", "--d", "5", "--g", "2", "--word", "T"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "z, 0 ; 0, z");

    let o = prym(&["eval", "--d", "5", "--g", "2", "--word", "G1(1)"]);
    assert_eq!(stdout(&o), "1, 1 ; 0, 1");
}

#[test]
fn eval_inverse_matches_product() {
    let inv = stdout(&prym(&["eval", "--d", "4", "--g", "3", "--word", "TH(2)^-1"]));
    let fwd = stdout(&prym(&["eval", "--d", "4", "--g", "3", "--word", "TH(2)"]));
    let m = prym::BlockMat::parse(3, 4, &inv).unwrap();
    let t = prym::BlockMat::parse(3, 4, &fwd).unwrap();
    assert!(m.try_mul(&t).unwrap().is_identity());
}

#[test]
fn eval_errors_exit_2() {
    assert_eq!(prym(&["eval", "--d", "5", "--g", "2", "--word", "Ti(1;"]).status.code(), Some(2));
    assert_eq!(prym(&["eval", "--d", "1", "--g", "2", "--word", "T"]).status.code(), Some(2));
    assert_eq!(prym(&["eval", "--d", "5", "--g", "2", "--word", "Tij(1, 2; 1)"]).status.code(), Some(2));
    assert_eq!(prym(&["eval", "--d", "5"]).status.code(), Some(2));
}

#[test]
fn check_identity_and_lower_left() {
    let o = prym(&["check", "--d", "5", "--g", "2", "--matrix", "1, 0 ; 0, 1", "--group", "Delta"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "Delta: member");

    let o = prym(&["check", "--d", "5", "--g", "2", "--matrix", "1, 0 ; 1, 1", "--group", "Lambda"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("lower-left ≠ 0"));

    let o = prym(&["check", "--d", "5", "--g", "2", "--matrix", "1, 0 ; 1"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn check_golden_ratio_diagonal() {
    let m = "-1 + 2*z + 2*z^4, 0 ; 0, 3 + 2*z + 2*z^4";
    let o = prym(&["check", "--d", "5", "--g", "2", "--matrix", m, "--group", "UrUSharp"]);
    assert_eq!(o.status.code(), Some(0));
    let o = prym(&["check", "--d", "5", "--g", "2", "--matrix", m, "--group", "Lambda"]);
    assert_eq!(o.status.code(), Some(1));
    let all = stdout(&prym(&["check", "--d", "5", "--g", "2", "--matrix", m]));
    assert_eq!(all.lines().count(), 8);
    assert!(all.contains("UrUSharp: member"));
}

#[test]
fn decompose_and_reduce() {
    let o = prym(&["decompose-delta", "--d", "5", "--g", "2", "--B", "1"]);
    assert_eq!(stdout(&o), "G1(1)");

    let o = prym(&["decompose-delta", "--d", "5", "--g", "2", "--B", "z"]);
    assert_eq!(o.status.code(), Some(1));

    let m = "z, z ; 0, z";
    let o = prym(&["reduce-lambda", "--d", "5", "--g", "2", "--matrix", m, "--word", "T"]);
    assert_eq!(o.status.code(), Some(0));
    let w = stdout(&o);
    let back = stdout(&prym(&["eval", "--d", "5", "--g", "2", "--word", &w]));
    assert_eq!(back, m);

    let o = prym(&["reduce-lambda", "--d", "5", "--g", "2", "--matrix", m, "--word", "Zeta(2)"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn fox_conjugation() {
    let o = prym(&[
        "fox", "--d", "3", "--g", "3",
        "--map", "x1 -> x3 x1 x3^-1 ; x2 -> x3 x2 x3^-1",
        "--inverse", "x1 -> x3^-1 x1 x3 ; x2 -> x3^-1 x2 x3",
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "z, 0 ; 0, z");

    let bad = prym(&["fox", "--d", "3", "--g", "2", "--map", "x1 -> x1 x2", "--inverse", "x1 -> x1 x2^-1"]);
    assert_eq!(bad.status.code(), Some(1));
}

#[test]
fn selftest_exit_codes() {
    let o = prym(&["selftest", "--max-d", "2", "--max-g", "2"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).lines().all(|l| l.starts_with("PASS")));

    let o = prym(&["selftest", "--max-d", "4", "--max-g", "3", "--samples", "3", "--seed", "7"]);
    assert_eq!(o.status.code(), Some(0));

    let o = prym(&["selftest", "--max-d", "2", "--max-g", "2", "--inject-failure"]);
    assert_ne!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("FAIL"));
}

#[test]
fn selftest_is_deterministic() {
    let a = prym(&["selftest", "--max-d", "3", "--max-g", "2", "--seed", "11"]);
    let b = prym(&["selftest", "--max-d", "3", "--max-g", "2", "--seed", "11"]);
    assert_eq!(a.stdout, b.stdout);
}
