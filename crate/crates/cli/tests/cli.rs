use std::io::Write;
use std::process::{Command, Output, Stdio};

fn run(args: &[&str], stdin: Option<&str>) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_kac-crystal"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary runs");
    if let Some(text) = stdin {
        child.stdin.take().unwrap().write_all(text.as_bytes()).unwrap();
    }
    drop(child.stdin.take());
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).trim().to_string()
}

const WORKED_T: &str = r#"{"alphabet":"B","outer":[4,3,2,1,1],"inner":[],"antinormal":false,
  "rows":[["b3","b3","b2","b1"],["b2","b1","3"],["1","2"],["1"],["2"]]}"#;

#[test]
fn crystal_counts() {
    let o = run(&["crystal", "--rank", "1,1", "--lambda", "0|0"], None);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "vertices=2 edges=1");

    let o = run(&["crystal", "--rank", "2,1", "--lambda", "0,0|0"], None);
    assert!(stdout(&o).starts_with("vertices=4 "));
}

#[test]
fn crystal_errors() {
    let o = run(&["crystal", "--rank", "1,1", "--lambda", "0|x"], None);
    assert_eq!(o.status.code(), Some(2));
    let o = run(&["crystal", "--rank", "2,1", "--lambda", "0,1|0"], None);
    assert_eq!(o.status.code(), Some(2), "non-dominant");
    let o = run(&["crystal", "--rank", "3,3", "--lambda", "4,3,2|3,1,0", "--cap", "100"], None);
    assert_eq!(o.status.code(), Some(3));
    assert_eq!(stdout(&o), "cardinality=61440");
}

#[test]
fn crystal_writes_files() {
    let dir = std::env::temp_dir().join(format!("kac-crystal-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let dot = dir.join("g.dot");
    let json = dir.join("g.json");
    let o = run(
        &["crystal", "--rank", "2,2", "--lambda", "0,0|0,0", "--format", "dot", "--out", dot.to_str().unwrap()],
        None,
    );
    assert_eq!(o.status.code(), Some(0));
    let text = std::fs::read_to_string(&dot).unwrap();
    assert!(text.starts_with("digraph"));
    let o = run(
        &["crystal", "--rank", "2,2", "--lambda", "0,0|0,0", "--out", json.to_str().unwrap()],
        None,
    );
    assert_eq!(o.status.code(), Some(0));
    let g: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&json).unwrap()).unwrap();
    assert_eq!(g["vertices"].as_array().unwrap().len(), 16);
    assert_eq!(g["lambda"], "0,0|0,0");
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn verify_worked_instance() {
    let o = run(&["verify", "--rank", "3,3", "--lambda", "4,3,2|3,1,0"], None);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    let report: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(report["instance"], "(3|3) 4,3,2|3,1,0");
    assert!(report["checks"].as_array().unwrap().iter().all(|c| c["pass"] == true));
}

#[test]
fn verify_selected_checks_and_corruption() {
    let o = run(&["verify", "--rank", "2,1", "--lambda", "2,1|1", "--checks", "axioms,rho"], None);
    assert_eq!(o.status.code(), Some(0));
    let report: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    let names: Vec<_> = report["checks"].as_array().unwrap().iter().map(|c| c["name"].clone()).collect();
    assert_eq!(names, ["axioms", "rho"]);

    let o = run(&["verify", "--rank", "2,1", "--lambda", "2,1|1", "--corrupt"], None);
    assert_eq!(o.status.code(), Some(1));
    let report: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert!(report["checks"].as_array().unwrap().iter().any(|c| !c["witness"].is_null()));

    let o = run(&["verify", "--rank", "2,1", "--lambda", "2,1|1", "--checks", "nope"], None);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn threads_env_is_accepted() {
    let o = Command::new(env!("CARGO_BIN_EXE_kac-crystal"))
        .args(["--threads", "2", "verify", "--rank", "1,1", "--lambda", "-1|1"])
        .env("KAC_CRYSTAL_THREADS", "1")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn embed_worked_example_and_back() {
    let o = run(&["embed", "--rank", "3,3"], Some(WORKED_T));
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    let b: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(b["lambda"], "4,3,2|2,0,0");
    assert_eq!(b["S"], serde_json::json!([[0, 0, 1], [0, 1, 0], [1, 0, 0]]));
    assert_eq!(
        b["Tplus"]["rows"],
        serde_json::json!([["b3", "b3", "b3", "b2"], ["b2", "b2", "b1"], ["b1", "b1"]])
    );
    assert_eq!(b["Tminus"]["rows"], serde_json::json!([["1"], ["2"]]));

    let back = run(&["embed", "--inverse"], Some(&stdout(&o)));
    assert_eq!(back.status.code(), Some(0));
    let t: serde_json::Value = serde_json::from_slice(&back.stdout).unwrap();
    let expected: serde_json::Value = serde_json::from_str(WORKED_T).unwrap();
    assert_eq!(t, expected);
}

#[test]
fn embed_single_box() {
    let o = run(
        &["embed", "--rank", "3,3"],
        Some(r#"{"alphabet":"B","outer":[1],"inner":[],"antinormal":false,"rows":[["b3"]]}"#),
    );
    assert_eq!(o.status.code(), Some(0));
    let b: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(b["S"], serde_json::json!([[0, 0, 0], [0, 0, 0], [0, 0, 0]]));
    assert_eq!(b["Tplus"]["rows"], serde_json::json!([["b3"]]));
    assert_eq!(b["Tminus"]["rows"], serde_json::json!([]));
}

#[test]
fn embed_errors() {
    let bad = r#"{"alphabet":"B","outer":[2],"inner":[],"antinormal":false,"rows":[["1","1"]]}"#;
    assert_eq!(run(&["embed", "--rank", "3,3"], Some(bad)).status.code(), Some(2));
    assert_eq!(run(&["embed", "--rank", "3,3"], Some("not json")).status.code(), Some(2));

    let out_of_image = r#"{"rank":[2,1],"lambda":"1,0|0","S":[[1],[1]],
      "Tplus":{"alphabet":"B+","outer":[1],"inner":[],"antinormal":false,"rows":[["b2"]]},
      "Tminus":{"alphabet":"B-","outer":[],"inner":[],"antinormal":false,"rows":[]}}"#;
    let o = run(&["embed", "--inverse"], Some(out_of_image));
    assert_eq!(o.status.code(), Some(4));
    assert_eq!(stdout(&o), "null");
}
