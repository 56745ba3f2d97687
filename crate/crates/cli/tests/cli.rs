use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use tempfile::TempDir;

fn pathcycle(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_pathcycle"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).unwrap()
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let p = dir.join(name);
    fs::write(&p, text).unwrap();
    p.to_str().unwrap().to_string()
}

fn cycle_text(n: usize) -> String {
    let mut s = format!("p {n} {n}\n");
    let mut edges: Vec<(usize, usize)> = (0..n).map(|i| (i.min((i + 1) % n), i.max((i + 1) % n))).collect();
    edges.sort();
    for (u, v) in edges {
        s.push_str(&format!("e {u} {v}\n"));
    }
    s
}

fn path(prefix: &Path, ext: &str) -> String {
    format!("{}.{ext}", prefix.display())
}

#[test]
fn solve_c6_without_terminals() {
    let dir = TempDir::new().unwrap();
    let g = write(dir.path(), "c6.graph", &cycle_text(6));
    let w = write(dir.path(), "empty.terminals", "\n");
    let out = pathcycle(&["solve", "--graph", &g, "--terminals", &w]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "cycle: 0 1 2 3 4 5\n");
}

#[test]
fn c5_exhaustive_certificate() {
    let dir = TempDir::new().unwrap();
    let g = write(dir.path(), "c5.graph", &cycle_text(5));
    let w = write(dir.path(), "w02.terminals", "0 2\n");
    let out = pathcycle(&["certify", "--graph", &g, "--terminals", &w, "--exhaustive"]);
    assert_eq!(out.status.code(), Some(1));
    let text = stdout(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0].trim_end(), "S:");
    assert_eq!(lines[1], "T: 1 3");
    assert_eq!(lines[2], "delta: -2");

    let solved = pathcycle(&["solve", "--graph", &g, "--terminals", &w]);
    assert_eq!(solved.status.code(), Some(1));
    assert_eq!(stdout(&solved), "INFEASIBLE\n");

    let listed = pathcycle(&["certify", "--graph", &g, "--terminals", &w, "--s", "", "--t", "1,3"]);
    assert_eq!(listed.status.code(), Some(1));
    assert_eq!(stdout(&listed), text);
}

#[test]
fn prop2_r4_witness_replay() {
    let dir = TempDir::new().unwrap();
    let prefix = dir.path().join("inst/p2r4");
    let out = pathcycle(&["generate", "--family", "prop2-r4", "--n", "6", "--out", prefix.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    let out = pathcycle(&[
        "certify",
        "--graph",
        &path(&prefix, "graph"),
        "--terminals",
        &path(&prefix, "terminals"),
        "--witness",
        &path(&prefix, "witness"),
    ]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).lines().any(|l| l == "delta: -2"));
    let witness = fs::read_to_string(path(&prefix, "witness")).unwrap();
    assert_eq!(stdout(&out), witness);
}

#[test]
fn tampered_witness_is_rejected() {
    let dir = TempDir::new().unwrap();
    let prefix = dir.path().join("p2r4");
    pathcycle(&["generate", "--family", "prop2-r4", "--n", "6", "--out", prefix.to_str().unwrap()]);
    let witness = fs::read_to_string(path(&prefix, "witness")).unwrap();
    let bad = write(dir.path(), "bad.witness", &witness.replace("delta: -2", "delta: -4"));
    let out = pathcycle(&[
        "certify",
        "--graph",
        &path(&prefix, "graph"),
        "--terminals",
        &path(&prefix, "terminals"),
        "--witness",
        &bad,
    ]);
    assert_eq!(out.status.code(), Some(2));
    assert_eq!(stderr(&out).lines().count(), 1);
}

struct Family {
    args: &'static [&'static str],
    verify: &'static [&'static str],
    has_witness: bool,
}

const FAMILIES: &[Family] = &[
    Family {
        args: &["--family", "prop1-odd", "--r", "5", "--k", "6"],
        verify: &["--regular", "5", "--edge-connectivity", "4", "--star-free", "5", "--mode", "distance3"],
        has_witness: true,
    },
    Family {
        args: &["--family", "prop1-even", "--r", "6", "--k", "6"],
        verify: &["--regular", "6", "--edge-connectivity", "4", "--star-free", "6", "--mode", "distance3"],
        has_witness: true,
    },
    Family {
        args: &["--family", "prop2-r4", "--n", "6"],
        verify: &["--regular", "4", "--edge-connectivity", "4", "--star-free", "4"],
        has_witness: true,
    },
    Family {
        args: &["--family", "prop2-r5", "--m", "96"],
        verify: &["--regular", "5", "--edge-connectivity", "5", "--star-free", "5"],
        has_witness: true,
    },
    Family {
        args: &["--family", "random", "--r", "5", "--n", "30", "--seed", "2"],
        verify: &["--regular", "5", "--edge-connectivity", "5", "--star-free", "5", "--mode", "distance3"],
        has_witness: false,
    },
];

#[test]
fn generate_verify_certify_round_trip() {
    let dir = TempDir::new().unwrap();
    for (i, fam) in FAMILIES.iter().enumerate() {
        let prefix = dir.path().join(format!("f{i}"));
        let mut args = vec!["generate"];
        args.extend(fam.args);
        args.extend(["--out", prefix.to_str().unwrap()]);
        let out = pathcycle(&args);
        assert_eq!(out.status.code(), Some(0), "{:?}: {}", fam.args, stderr(&out));
        assert!(fs::read_to_string(path(&prefix, "names")).unwrap().starts_with("c "));

        let graph = path(&prefix, "graph");
        let terminals = path(&prefix, "terminals");
        let mut args = vec!["verify", "--graph", &graph];
        args.extend(fam.verify);
        if fam.verify.contains(&"--mode") {
            args.extend(["--terminals", &terminals]);
        }
        let out = pathcycle(&args);
        assert_eq!(out.status.code(), Some(0), "{:?}: {}", fam.args, stdout(&out));

        let witness = PathBuf::from(path(&prefix, "witness"));
        assert_eq!(witness.exists(), fam.has_witness);
        if fam.has_witness {
            let out = pathcycle(&[
                "certify",
                "--graph",
                &graph,
                "--terminals",
                &terminals,
                "--witness",
                witness.to_str().unwrap(),
            ]);
            assert_eq!(out.status.code(), Some(1));
            assert!(stdout(&out).contains("delta: -2"));
        }
    }
}

#[test]
fn verify_reports_each_property() {
    let dir = TempDir::new().unwrap();
    let g = write(dir.path(), "c6.graph", &cycle_text(6));
    let w = write(dir.path(), "w.terminals", "0 3\n");
    let out = pathcycle(&[
        "verify",
        "--graph",
        &g,
        "--regular",
        "2",
        "--edge-connectivity",
        "2",
        "--star-free",
        "3",
        "--terminals",
        &w,
        "--mode",
        "distance3",
        "--path-system-criterion",
    ]);
    assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));
    let text = stdout(&out);
    assert_eq!(text.lines().count(), 5);
    assert!(text.lines().all(|l| l.ends_with(": PASS")));

    let out = pathcycle(&["verify", "--graph", &g, "--regular", "3"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).contains(": FAIL "));
}

#[test]
fn solve_and_oracle_agree() {
    let dir = TempDir::new().unwrap();
    let graphs = [
        ("c5", cycle_text(5)),
        ("k4", "p 4 6\ne 0 1\ne 0 2\ne 0 3\ne 1 2\ne 1 3\ne 2 3\n".to_string()),
        ("star", "p 4 3\ne 0 1\ne 0 2\ne 0 3\n".to_string()),
        ("p4", "p 4 3\ne 0 1\ne 1 2\ne 2 3\n".to_string()),
    ];
    let sets = ["", "0 1", "0 2", "1 3", "0 1 2 3"];
    for (name, text) in &graphs {
        let g = write(dir.path(), &format!("{name}.graph"), text);
        for (i, set) in sets.iter().enumerate() {
            let w = write(dir.path(), &format!("{name}{i}.terminals"), &format!("{set}\n"));
            let a = pathcycle(&["solve", "--graph", &g, "--terminals", &w]);
            let b = pathcycle(&["oracle", "--graph", &g, "--terminals", &w]);
            assert_eq!(a.status.code(), b.status.code(), "{name} W={set}");
            assert!(matches!(a.status.code(), Some(0 | 1)));
            assert_eq!(stdout(&a) == "INFEASIBLE\n", stdout(&b) == "INFEASIBLE\n");
        }
    }
}

#[test]
fn discharge_on_circulant() {
    let dir = TempDir::new().unwrap();
    let n = 12;
    let mut edges: Vec<(usize, usize)> = Vec::new();
    for i in 0..n {
        for d in [1, 2] {
            let j = (i + d) % n;
            edges.push((i.min(j), i.max(j)));
        }
    }
    edges.sort();
    let mut text = format!("p {n} {}\n", edges.len());
    for (u, v) in edges {
        text.push_str(&format!("e {u} {v}\n"));
    }
    let g = write(dir.path(), "c12.graph", &text);
    let w = write(dir.path(), "w.terminals", "0 6\n");
    let out = pathcycle(&["discharge", "--graph", &g, "--terminals", &w, "--s", "1,7", "--t", "3,9", "--r", "4"]);
    assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));
    assert!(!stdout(&out).is_empty());
}

#[test]
fn input_errors_exit_two_with_one_line() {
    let dir = TempDir::new().unwrap();
    let g = write(dir.path(), "bad.graph", "p 3 1\ne 0 5\n");
    let w = write(dir.path(), "w.terminals", "\n");
    let cases: Vec<Vec<&str>> = vec![
        vec!["solve", "--graph", &g, "--terminals", &w],
        vec!["solve", "--graph", "/nonexistent/x.graph", "--terminals", &w],
        vec!["frobnicate"],
        vec!["solve", "--graph", &g],
        vec!["generate", "--family", "random", "--r", "4", "--out", "x"],
        vec!["generate", "--family", "nope", "--out", "x"],
    ];
    for args in cases {
        let out = pathcycle(&args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert_eq!(stderr(&out).lines().count(), 1, "{args:?}: {}", stderr(&out));
    }
}

#[test]
fn oversized_exhaustive_search_is_undecided() {
    let dir = TempDir::new().unwrap();
    let g = write(dir.path(), "c30.graph", &cycle_text(30));
    let w = write(dir.path(), "w.terminals", "\n");
    let out = pathcycle(&["certify", "--graph", &g, "--terminals", &w, "--exhaustive", "--jobs", "2"]);
    assert_eq!(out.status.code(), Some(3));
    let out = pathcycle(&["oracle", "--graph", &g, "--terminals", &w]);
    assert_eq!(out.status.code(), Some(3));
}
