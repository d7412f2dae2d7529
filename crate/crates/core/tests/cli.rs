mod common;

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use common::{c, dft_definition, max_dev};
use qfunc::circuit::Circuit;
use qfunc::cli::{read_json, write_json, StateFile};
use qfunc::frft::{frft_apply, FrftParams};
use qfunc::funcsynth::FunctionSpec;
use qfunc::matcore::ComplexMatrix;
use tempfile::TempDir;

fn qfunc(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qfunc"))
        .args(args)
        .output()
        .unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn stderr(o: &Output) -> String {
    String::from_utf8_lossy(&o.stderr).into_owned()
}

fn save(dir: &Path, name: &str, m: &ComplexMatrix) -> String {
    let path = dir.join(name);
    write_json(&path, m).unwrap();
    path.to_str().unwrap().to_owned()
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn mpoly_reports_scalar_power() {
    let dir = TempDir::new().unwrap();
    let f3 = save(dir.path(), "f3.json", &dft_definition(3));
    let o = qfunc(&["mpoly", &f3]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "x^4 - 1; m=4, tau=1\n");

    let report = dir.path().join("mpoly.json");
    let o = qfunc(&["mpoly", &f3, "--out", s(&report)]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&report).unwrap()).unwrap();
    assert_eq!(v["degree"], 4);
    assert_eq!(v["m"], 4);
}

#[test]
fn mpoly_without_scalar_power_exits_four() {
    let dir = TempDir::new().unwrap();
    let t = 1.0_f64;
    let rot = ComplexMatrix::from_diagonal(&[c(t.cos(), t.sin()), c(1.0, 0.0)]);
    let o = qfunc(&["mpoly", &save(dir.path(), "rot.json", &rot)]);
    assert_eq!(o.status.code(), Some(4));
    assert!(stdout(&o).contains("no m <= 64"));
}

#[test]
fn build_writes_artifacts_and_passes() {
    let dir = TempDir::new().unwrap();
    let f3 = save(dir.path(), "f3.json", &dft_definition(3));
    let out = dir.path().join("out");
    let o = qfunc(&[
        "build",
        "--matrix",
        &f3,
        "--frft",
        "0.4",
        "--seed",
        "5",
        "--out",
        s(&out),
    ]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    for name in ["B.json", "C.json", "M.json", "circuit.json", "report.json"] {
        assert!(out.join(name).exists(), "{name}");
    }
    let report: serde_json::Value = read_json(&out.join("report.json")).unwrap();
    assert_eq!(report["pass"], true);
    assert_eq!(report["m"], 4);
    assert_eq!(report["mu"], 2);
    assert!(
        read_json::<ComplexMatrix>(&out.join("M.json"))
            .unwrap()
            .unitarity_residual()
            < 1e-10
    );
    assert!(stdout(&o).contains("PASS"));
}

#[test]
fn build_reports_are_reproducible() {
    let dir = TempDir::new().unwrap();
    let f3 = save(dir.path(), "f3.json", &dft_definition(3));
    let runs: Vec<PathBuf> = ["a", "b"].iter().map(|n| dir.path().join(n)).collect();
    for out in &runs {
        let o = qfunc(&[
            "build",
            "--matrix",
            &f3,
            "--power",
            "0.5",
            "--seed",
            "11",
            "--out",
            s(out),
        ]);
        assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    }
    for name in ["report.json", "circuit.json", "M.json"] {
        assert_eq!(
            std::fs::read(runs[0].join(name)).unwrap(),
            std::fs::read(runs[1].join(name)).unwrap(),
            "{name}"
        );
    }
    let report: serde_json::Value = read_json(&runs[0].join("report.json")).unwrap();
    assert_eq!(report["pass"], true);
    assert!(report["sampled_states"].as_u64().unwrap() > 0);
}

#[test]
fn build_with_function_file() {
    let dir = TempDir::new().unwrap();
    let d = ComplexMatrix::from_diagonal(&[c(1.0, 0.0), c(-1.0, 0.0)]);
    let u = save(dir.path(), "z.json", &d);
    let f = FunctionSpec::samples(2, c(1.0, 0.0), vec![c(0.0, 1.0), c(1.0, 0.0)]).unwrap();
    let fpath = dir.path().join("f.json");
    write_json(&fpath, &f).unwrap();
    let out = dir.path().join("out");
    let o = qfunc(&[
        "build",
        "--matrix",
        &u,
        "--function",
        s(&fpath),
        "--out",
        s(&out),
    ]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
}

#[test]
fn build_failures_map_to_exit_codes() {
    let dir = TempDir::new().unwrap();
    let d = ComplexMatrix::from_diagonal(&[c(1.0, 0.0), c(0.0, 1.0)]);
    let u = save(dir.path(), "d.json", &d);
    let out = dir.path().join("out");

    let o = qfunc(&[
        "build",
        "--matrix",
        &u,
        "--identity",
        "--m",
        "2",
        "--out",
        s(&out),
    ]);
    assert_eq!(o.status.code(), Some(3));
    assert!(stderr(&o).contains("try --m 4"), "{}", stderr(&o));

    let o = qfunc(&["build", "--matrix", &u, "--identity"]);
    assert_eq!(o.status.code(), Some(2));

    let bad = FunctionSpec::samples(
        4,
        c(1.0, 0.0),
        vec![c(1.0, 0.0), c(2.0, 0.0), c(1.0, 0.0), c(1.0, 0.0)],
    )
    .unwrap();
    let fpath = dir.path().join("bad.json");
    write_json(&fpath, &bad).unwrap();
    let o = qfunc(&[
        "build",
        "--matrix",
        &u,
        "--function",
        s(&fpath),
        "--out",
        s(&out),
    ]);
    assert_eq!(o.status.code(), Some(3));
    assert!(stderr(&o).contains("not unimodular"));

    let o = qfunc(&[
        "build",
        "--matrix",
        &u,
        "--identity",
        "--frft",
        "1",
        "--out",
        s(&out),
    ]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn simulate_round_trips_emitted_circuit() {
    let dir = TempDir::new().unwrap();
    let f2 = save(dir.path(), "f2.json", &dft_definition(2));
    let out = dir.path().join("out");
    let o = qfunc(&[
        "build",
        "--matrix",
        &f2,
        "--frft",
        "1.1",
        "--m",
        "4",
        "--out",
        s(&out),
    ]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));

    let circuit_text = std::fs::read_to_string(out.join("circuit.json")).unwrap();
    let circuit: Circuit = serde_json::from_str(&circuit_text).unwrap();
    assert_eq!(
        serde_json::to_string_pretty(&circuit).unwrap().trim(),
        circuit_text.trim()
    );

    let psi = vec![c(0.5, 0.0), c(0.0, 0.5), c(-0.5, 0.0), c(0.0, -0.5)];
    let mut input = vec![c(0.0, 0.0); 1 << circuit.width()];
    input[..4].copy_from_slice(&psi);
    let state = dir.path().join("psi.json");
    write_json(&state, &StateFile::from_vector(&input)).unwrap();
    let o = qfunc(&[
        "simulate",
        "--circuit",
        s(&out.join("circuit.json")),
        "--state",
        s(&state),
    ]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let result: StateFile = serde_json::from_str(&stdout(&o)).unwrap();
    let result = result.to_vector();
    let expected = frft_apply(FrftParams { n: 2, x: 1.1 }, &psi).unwrap();
    assert!(max_dev(&result[..4], &expected) < 1e-9);
    assert!(result[4..].iter().all(|z| z.norm() < 1e-9));
}

#[test]
fn simulate_rejects_wrong_state_length() {
    let dir = TempDir::new().unwrap();
    let circuit = dir.path().join("c.json");
    write_json(&circuit, &Circuit::new(2)).unwrap();
    let state = dir.path().join("s.json");
    write_json(&state, &StateFile::from_vector(&[c(1.0, 0.0)])).unwrap();
    let o = qfunc(&["simulate", "--circuit", s(&circuit), "--state", s(&state)]);
    assert_eq!(o.status.code(), Some(3));
}

#[test]
fn frft_command_outputs_state() {
    let o = qfunc(&["frft", "--n", "2", "--x", "1.5707963267948966"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let state: StateFile = serde_json::from_str(&stdout(&o)).unwrap();
    let v = state.to_vector();
    assert!(v.iter().all(|z| (z - c(0.5, 0.0)).norm() < 1e-9));

    assert_eq!(
        qfunc(&["frft", "--n", "11", "--x", "1"]).status.code(),
        Some(3)
    );
    assert_eq!(
        qfunc(&["frft", "--n", "40", "--x", "1"]).status.code(),
        Some(3)
    );
    assert_eq!(
        qfunc(&["frft", "--n", "2", "--x", "-0.5"]).status.code(),
        Some(0)
    );
}

#[test]
fn limitation_command() {
    let dir = TempDir::new().unwrap();
    let d = save(
        dir.path(),
        "d.json",
        &ComplexMatrix::from_diagonal(&[c(1.0, 0.0), c(0.0, 1.0)]),
    );
    let o = qfunc(&["limitation", &d]);
    assert_eq!(o.status.code(), Some(0));
    assert!(
        stdout(&o).contains("first_row_norm_sq = 3\n"),
        "{}",
        stdout(&o)
    );

    let f3 = save(dir.path(), "f3.json", &dft_definition(3));
    assert_eq!(qfunc(&["limitation", &f3]).status.code(), Some(3));
}

#[test]
fn cost_command_csv() {
    let o = qfunc(&["cost", "--k", "10", "--m", "4"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(
        stdout(&o),
        "m,mu,bound_A,bound_small,total_bound\n4,2,420,6144,6984\n"
    );

    let o = qfunc(&["cost", "--k", "1", "--sweep"]);
    assert_eq!(stdout(&o).lines().count(), 64);

    assert_eq!(qfunc(&["cost", "--k", "0"]).status.code(), Some(2));
    assert_eq!(qfunc(&["cost"]).status.code(), Some(2));
}

#[test]
fn malformed_inputs_are_usage_errors() {
    let dir = TempDir::new().unwrap();
    let bad = dir.path().join("bad.json");
    std::fs::write(&bad, "{\"dim\": 2, \"entries\": [[1, 0]]}").unwrap();
    assert_eq!(qfunc(&["mpoly", s(&bad)]).status.code(), Some(2));
    assert_eq!(
        qfunc(&["mpoly", s(&dir.path().join("missing.json"))])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(qfunc(&["nonsense"]).status.code(), Some(2));
    let nonunitary = save(
        dir.path(),
        "n.json",
        &ComplexMatrix::from_diagonal(&[c(2.0, 0.0), c(1.0, 0.0)]),
    );
    assert_eq!(qfunc(&["mpoly", &nonunitary]).status.code(), Some(3));
}
