use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::{Command, Output, Stdio};

fn data(name: &str) -> String {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("data")
        .join(name)
        .to_str()
        .unwrap()
        .to_owned()
}

fn run(args: &[&str], stdin: Option<&str>) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_qchrom"))
        .args(args)
        .env_remove("QCHROM_BUDGET")
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("spawn qchrom");
    let mut pipe = child.stdin.take().unwrap();
    pipe.write_all(stdin.unwrap_or("").as_bytes()).unwrap();
    drop(pipe);
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn stderr(o: &Output) -> String {
    String::from_utf8_lossy(&o.stderr).into_owned()
}

struct TempDir(PathBuf);

impl TempDir {
    fn new(tag: &str) -> Self {
        let p = std::env::temp_dir().join(format!("qchrom-cli-{tag}-{}", std::process::id()));
        std::fs::create_dir_all(&p).unwrap();
        TempDir(p)
    }

    fn file(&self, name: &str, contents: &str) -> String {
        let p = self.0.join(name);
        std::fs::write(&p, contents).unwrap();
        p.to_str().unwrap().to_owned()
    }
}

impl Drop for TempDir {
    fn drop(&mut self) {
        std::fs::remove_dir_all(&self.0).ok();
    }
}

#[test]
fn generated_g18_pipes_into_solver() {
    let g = run(&["gen", "g18"], None);
    assert_eq!(g.status.code(), Some(0));
    let out = run(&["solve", "chi"], Some(&stdout(&g)));
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    assert_eq!(stdout(&out).trim(), "5");
    let out = run(&["solve", "omega", &data("g18.dimacs")], None);
    assert_eq!(stdout(&out).trim(), "4");
}

#[test]
fn solve_json_includes_witness() {
    let out = run(
        &["--json", "solve", "alpha", "--witness"],
        Some(&stdout(&run(&["gen", "roots", "3"], None))),
    );
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["value"], 9);
    assert_eq!(v["witness"].as_array().map(Vec::len), Some(9));
}

#[test]
fn bipartite_answers_on_cycles() {
    let even = run(
        &["solve", "bipartite"],
        Some(&stdout(&run(&["gen", "cycle", "6"], None))),
    );
    let odd = run(
        &["solve", "bipartite"],
        Some(&stdout(&run(&["gen", "cycle", "5"], None))),
    );
    assert_eq!(stdout(&even).trim(), "true");
    assert_eq!(stdout(&odd).trim(), "false");
}

#[test]
fn dim4_colouring_file_verifies() {
    let dir = TempDir::new("dim4");
    let graph = dir.file("dim4.dimacs", &stdout(&run(&["gen", "dim4"], None)));
    let out = run(&["verify", "colouring", &graph, &data("dim4_colouring.txt")], None);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    assert_eq!(stdout(&out).trim(), "PASS");
}

#[test]
fn improper_colouring_exits_one_and_names_edge() {
    let dir = TempDir::new("improper");
    let graph = dir.file("k3.dimacs", &stdout(&run(&["gen", "complete", "3"], None)));
    let col = dir.file("col.txt", "1 2 1\n");
    let out = run(&["verify", "colouring", &graph, &col], None);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("on edge (0,2)"), "{}", stderr(&out));
}

#[test]
fn od_lift_round_trips_through_verify() {
    let dir = TempDir::new("od");
    let out = run(
        &["construct", "od-lift", &data("g18.dimacs"), &data("g18_vectors.json")],
        None,
    );
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    let cert = dir.file("cert.json", &stdout(&out));
    let v = run(&["--json", "verify", "rank1", &cert], None);
    assert_eq!(v.status.code(), Some(0));
    let report: serde_json::Value = serde_json::from_str(&stdout(&v)).unwrap();
    assert_eq!(report["pass"], true);
    assert!(report["worst_residual"].as_f64().unwrap() <= 1e-12);
    // a rank-1 certificate is not a projector certificate
    assert_eq!(run(&["verify", "projector", &cert], None).status.code(), Some(2));
    let p = run(&["construct", "equalize", &cert], None);
    assert_eq!(p.status.code(), Some(0), "{}", stderr(&p));
    let proj = dir.file("proj.json", &stdout(&p));
    assert_eq!(run(&["verify", "projector", &proj], None).status.code(), Some(0));
}

#[test]
fn fourier_lift_of_hadamard_vectors() {
    let dir = TempDir::new("fourier");
    let vectors = dir.0.join("h4.json");
    let g = run(&["gen", "hadamard", "4", "--vectors", vectors.to_str().unwrap()], None);
    let graph = dir.file("h4.dimacs", &stdout(&g));
    let out = run(&["construct", "fourier-lift", &graph, vectors.to_str().unwrap()], None);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    let cert = dir.file("cert.json", &stdout(&out));
    assert_eq!(run(&["verify", "rank1", &cert], None).status.code(), Some(0));
}

#[test]
fn classical_lift_extracts_back() {
    let dir = TempDir::new("extract");
    let graph = dir.file("c5.dimacs", &stdout(&run(&["gen", "cycle", "5"], None)));
    let col = dir.file("col.txt", "1 2 1 2 3\n");
    let lift = run(&["construct", "classical-lift", &graph, &col], None);
    assert_eq!(lift.status.code(), Some(0), "{}", stderr(&lift));
    let cert = dir.file("cert.json", &stdout(&lift));
    let out = run(&["--json", "construct", "extract3", &cert], None);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["colours"], serde_json::json!([0, 1, 0, 1, 2]));
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(run(&["solve", "chi", "/no/such/file"], None).status.code(), Some(2));
    assert_eq!(run(&["gen", "hadamard", "3"], None).status.code(), Some(2));
    assert_eq!(run(&["frobnicate"], None).status.code(), Some(2));
    assert_eq!(
        run(&["solve", "chi"], Some("p edge 2 1\ne 1 3\n")).status.code(),
        Some(2)
    );
}

#[test]
fn exhausted_budget_exits_three() {
    let g = stdout(&run(&["gen", "g18"], None));
    let out = run(&["--budget", "3", "solve", "chi"], Some(&g));
    assert_eq!(out.status.code(), Some(3), "{}", stderr(&out));
    let out = Command::new(env!("CARGO_BIN_EXE_qchrom"))
        .args(["solve", "chi", &data("g18.dimacs")])
        .env("QCHROM_BUDGET", "3")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn experiment_is_reproducible() {
    let args = [
        "--json",
        "--seed",
        "5",
        "experiment",
        "gnp",
        "--n",
        "20,25",
        "--trials",
        "3",
    ];
    let a: serde_json::Value = serde_json::from_str(&stdout(&run(&args, None))).unwrap();
    let b: serde_json::Value = serde_json::from_str(&stdout(&run(&args, None))).unwrap();
    assert_eq!(a["records"], b["records"]);
    assert_eq!(a["records"].as_array().unwrap().len(), 6);
}

#[test]
fn repro_passes() {
    let out = run(&["repro"], None);
    assert_eq!(out.status.code(), Some(0), "{}{}", stdout(&out), stderr(&out));
}
