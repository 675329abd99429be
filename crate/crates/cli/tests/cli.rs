use std::process::{Command, Output};

fn sbk(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_sbk")).args(args).env_remove("SBK_SEED").output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn verify_algebra_passes() {
    let o = sbk(&["verify-algebra", "osp22"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("GradedJacobi"));
}

#[test]
fn cocycle_space_reports_sixteen() {
    let o = sbk(&["cocycle-space", "osp22", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    let details = v["checks"].as_array().unwrap().iter().flat_map(|c| c["details"].as_array().unwrap().clone());
    assert!(details.into_iter().any(|d| d == "dimension 16"));
}

#[test]
fn unknown_template_is_usage_error() {
    assert_eq!(sbk(&["check-r", "osp22", "nosuchid"]).status.code(), Some(2));
    assert_eq!(sbk(&["check-r", "nosuchalgebra", "b2"]).status.code(), Some(2));
    assert_eq!(sbk(&["check-r", "osp22", "o1"]).status.code(), Some(2));
    assert_eq!(sbk(&["check-r", "osp22", "h1", "--param", "x"]).status.code(), Some(2));
    assert_eq!(sbk(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn failing_cybe_exits_one() {
    assert_eq!(sbk(&["cybe", "osp22", "f2", "--param", "x=1", "--param", "y=0"]).status.code(), Some(1));
    assert_eq!(sbk(&["cybe", "osp22", "f2", "--param", "x=0", "--param", "y=1"]).status.code(), Some(0));
}

#[test]
fn equivalence_and_seed_are_reproducible() {
    let a = sbk(&["equiv", "17->j1", "--seed", "7"]);
    let b = Command::new(env!("CARGO_BIN_EXE_sbk")).args(["equiv", "17->j1"]).env("SBK_SEED", "7").output().unwrap();
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(stdout(&a).lines().skip(1).collect::<Vec<_>>(), stdout(&b).lines().skip(1).collect::<Vec<_>>());
    assert!(stdout(&a).contains("(seed 7)"));
}

#[test]
fn skipped_witness_is_reported() {
    let o = sbk(&["equiv", "12->g2@printed"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("[SKIP]"));
}

#[test]
fn r_matrix_file_input() {
    let dir = std::env::temp_dir().join(format!("sbk-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("e10.json");
    let export = sbk(&["export", "r", "e10"]);
    std::fs::write(&path, export.stdout).unwrap();
    let o = sbk(&["check-r", "osp22", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("CYBE: true"));
    std::fs::write(&path, "{not json").unwrap();
    assert_eq!(sbk(&["check-r", "osp22", path.to_str().unwrap()]).status.code(), Some(2));
}

#[test]
fn normal_step_swaps() {
    let o = sbk(&["normal-step", "osp22", "e10", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let s = stdout(&o);
    assert!(s.contains("swap applied: false"));
}
