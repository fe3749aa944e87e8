use std::net::TcpListener;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::{json, Value};

fn bin() -> Command {
    let mut c = Command::new(env!("CARGO_BIN_EXE_matroid-arena"));
    c.env_remove("MATROID_ARENA_LOG");
    c
}

fn write(dir: &Path, name: &str, value: Value) -> PathBuf {
    let path = dir.join(name);
    std::fs::write(&path, value.to_string()).unwrap();
    path
}

fn run(args: &[&str]) -> (i32, Value, String) {
    let Output {
        status,
        stdout,
        stderr,
    } = bin().args(args).output().unwrap();
    let stdout = String::from_utf8(stdout).unwrap();
    let value = serde_json::from_str(&stdout).unwrap_or(Value::Null);
    (status.code().unwrap(), value, String::from_utf8(stderr).unwrap())
}

struct Files {
    _dir: tempfile::TempDir,
    k4: String,
    u12: String,
    u13: String,
    u24: String,
    root: PathBuf,
}

fn files() -> Files {
    let dir = tempfile::tempdir().unwrap();
    let root = dir.path().to_path_buf();
    let edges: Vec<[usize; 2]> = vec![[0, 1], [0, 2], [0, 3], [1, 2], [1, 3], [2, 3]];
    let p = |name, v| write(&root, name, v).to_str().unwrap().to_string();
    Files {
        k4: p(
            "k4.json",
            json!({"type": "graphic", "vertices": 4, "edges": edges}),
        ),
        u12: p("u12.json", json!({"type": "uniform", "n": 2, "r": 1})),
        u13: p("u13.json", json!({"type": "uniform", "n": 3, "r": 1})),
        u24: p("u24.json", json!({"type": "uniform", "n": 4, "r": 2})),
        root,
        _dir: dir,
    }
}

#[test]
fn chroma() {
    let f = files();
    let (code, out, _) = run(&["chroma", "--matroid", &f.k4]);
    assert_eq!(code, 0);
    assert_eq!(out["chi"], 2);
    assert_eq!(out["cover"]["parts"].as_array().unwrap().len(), 2);
    assert_eq!(run(&["chroma", "--matroid", &f.u13]).1["chi"], 3);

    let looped = write(
        &f.root,
        "loop.json",
        json!({"type": "graphic", "vertices": 2, "edges": [[1, 1]]}),
    );
    let (code, _, err) = run(&["chroma", "--matroid", looped.to_str().unwrap()]);
    assert_eq!(code, 2);
    assert!(err.contains("LoopDetected"), "{err}");
    let (code, _, _) = run(&["chroma", "--matroid", "/nonexistent.json"]);
    assert_eq!(code, 2);
}

#[test]
fn wcover() {
    let f = files();
    let (code, out, _) = run(&["wcover", "--matroid", &f.k4, "--k", "2"]);
    assert_eq!(code, 0);
    assert_eq!(out["parts"].as_array().unwrap().len(), 2);

    let (code, out, _) = run(&["wcover", "--matroid", &f.u13, "--k", "2"]);
    assert_eq!(code, 1);
    assert_eq!(out["A"], json!([0, 1, 2]));

    let w = write(&f.root, "w.json", json!({"w": [2, 1, 1]}));
    let l = write(&f.root, "l.json", json!({"l": [1, 3, 3]}));
    let (code, out, _) = run(&[
        "wcover",
        "--matroid",
        &f.u13,
        "--weights",
        w.to_str().unwrap(),
        "--lists",
        l.to_str().unwrap(),
    ]);
    assert_eq!(code, 1);
    assert_eq!(out["A"], json!([0]));

    let short = write(&f.root, "short.json", json!({"l": [1, 1]}));
    assert_eq!(
        run(&["wcover", "--matroid", &f.u13, "--lists", short.to_str().unwrap()]).0,
        2
    );
    assert_eq!(run(&["wcover", "--matroid", &f.u13]).0, 2);
}

#[test]
fn play() {
    let f = files();
    let out_file = f.root.join("t.json");
    let (code, out, err) = run(&[
        "play",
        "--matroid",
        &f.u12,
        "--k",
        "2",
        "--bob",
        "full",
        "--out",
        out_file.to_str().unwrap(),
    ]);
    assert_eq!(code, 0);
    assert_eq!(out["result"], "alice");
    assert_eq!(out["rounds"].as_array().unwrap().len(), 2);
    assert!(err.contains("Alice"));
    let written: Value = serde_json::from_str(&std::fs::read_to_string(&out_file).unwrap()).unwrap();
    assert_eq!(written, out);

    let (code, out, _) = run(&["play", "--matroid", &f.u13, "--k", "2", "--bob", "full"]);
    assert_eq!((code, out["result"].clone()), (1, json!("bob")));
    assert_eq!(
        run(&["play", "--matroid", &f.u12, "--k", "2", "--bob", "nobody"]).0,
        2
    );
    assert_eq!(
        run(&["play", "--matroid", &f.u12, "--k", "2", "--bob", "random"]).0,
        2
    );
}

#[test]
fn play_is_deterministic() {
    let f = files();
    let args = [
        "play",
        "--matroid",
        &f.k4,
        "--k",
        "2",
        "--bob",
        "random",
        "--seed",
        "7",
    ];
    let a = bin().args(args).output().unwrap();
    let b = bin().args(args).output().unwrap();
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn verify() {
    let f = files();
    let (code, out, _) = run(&["verify", "--matroid", &f.u12, "--k", "2", "--mode", "exhaustive"]);
    assert_eq!((code, out["winner"].clone()), (0, json!("alice")));
    assert_eq!(out["exhaustive"], true);

    let (code, out, _) = run(&["verify", "--matroid", &f.u12, "--k", "1", "--mode", "minimax"]);
    assert_eq!((code, out["winner"].clone()), (1, json!("bob")));
    assert_eq!(out["counterexample"]["result"], "bob");

    let big = write(&f.root, "u10.json", json!({"type": "uniform", "n": 10, "r": 5}));
    let (code, _, err) = run(&["verify", "--matroid", big.to_str().unwrap(), "--k", "2"]);
    assert_eq!(code, 2);
    assert!(err.contains("TooLarge"));

    let (code, out, _) = run(&[
        "verify",
        "--matroid",
        big.to_str().unwrap(),
        "--k",
        "2",
        "--max-states",
        "50",
    ]);
    assert_eq!(code, 0);
    assert_eq!(out["exhaustive"], false);

    let (code, out, _) = run(&["verify", "--matroid", &f.u13, "--k", "2"]);
    assert_eq!((code, out["A"].clone()), (1, json!([0, 1, 2])));
}

#[test]
fn exchange_check() {
    let f = files();
    let (code, out, _) = run(&["exchange-check", "--matroid", &f.u24, "--exhaustive"]);
    assert_eq!(code, 0);
    assert_eq!(out["failed"], 0);
    assert!(out["cases"].as_u64().unwrap() > 0);

    let (code, out, _) = run(&["exchange-check", "--matroid", &f.u24, "--samples", "0"]);
    assert_eq!((code, out["cases"].clone()), (0, json!(0)));

    let (code, out, _) = run(&[
        "exchange-check",
        "--matroid",
        &f.k4,
        "--samples",
        "1000",
        "--seed",
        "1",
    ]);
    assert_eq!((code, out["passed"].clone()), (0, json!(1000)));

    let big = write(&f.root, "u9.json", json!({"type": "uniform", "n": 9, "r": 3}));
    assert_eq!(
        run(&[
            "exchange-check",
            "--matroid",
            big.to_str().unwrap(),
            "--exhaustive"
        ])
        .0,
        2
    );
}

#[test]
fn list_color() {
    let f = files();
    let lists = write(&f.root, "lists.json", json!({"lists": [[1, 2], [2, 3]]}));
    let (code, out, _) = run(&[
        "list-color",
        "--matroid",
        &f.u12,
        "--lists",
        lists.to_str().unwrap(),
    ]);
    assert_eq!(code, 0);
    let w = out["W"].as_array().unwrap();
    assert_eq!(w.len(), 2);
    assert_ne!(w[0], w[1]);

    let same = write(&f.root, "same.json", json!({"lists": [[1, 2], [1, 2], [1, 2]]}));
    assert_eq!(
        run(&[
            "list-color",
            "--matroid",
            &f.u13,
            "--lists",
            same.to_str().unwrap()
        ])
        .0,
        1
    );
}

#[test]
fn serve_on_occupied_port_is_an_input_error() {
    let held = TcpListener::bind("127.0.0.1:0").unwrap();
    let port = held.local_addr().unwrap().port().to_string();
    let (code, _, err) = run(&["serve", "--port", &port]);
    assert_eq!(code, 2);
    assert!(err.contains("cannot bind"), "{err}");
}

#[test]
fn bad_flags_are_input_errors() {
    assert_eq!(run(&["chroma"]).0, 2);
    assert_eq!(run(&["frobnicate"]).0, 2);
}
