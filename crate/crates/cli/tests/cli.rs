//! End-to-end runs of the binary: documented examples and exit statuses.

use std::path::PathBuf;
use std::process::{Command, Output};

fn scratch(name: &str, contents: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("easyqg-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, contents).unwrap();
    path
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_easyqg"))
        .args(args)
        .env_remove("EASYQG_COORD_CAP")
        .output()
        .unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().unwrap()
}

#[test]
fn classify_empty_generators() {
    let gens = scratch("empty.gens", "# no generators\n");
    let o = run(&["classify", "--generators", gens.to_str().unwrap(), "--pmax", "8"]);
    assert_eq!(code(&o), 0);
    let out = stdout(&o);
    assert!(out.starts_with("# config: subcommand=classify"), "{out}");
    for line in ["case: O", "colorization: local", "matches: O_loc"] {
        assert!(out.lines().any(|l| l == line), "missing {line:?} in\n{out}");
    }
}

#[test]
fn dim_of_unitary_slice() {
    let o = run(&["dim", "--catalog", "Ogrp_loc", "--upper", "ooo", "--lower", "ooo", "--n", "3"]);
    assert_eq!((code(&o), stdout(&o).as_str()), (0, "6\n"));
}

#[test]
fn four_block_excludes_singleton_pair() {
    let gens = scratch("fourblock_wbwb.gens", "|oxox;(l1 l2 l3 l4)\n");
    let o = run(&["member", "--generators", gens.to_str().unwrap(), "--partition", "|ox;(l1)(l2)"]);
    assert_eq!((code(&o), stdout(&o).as_str()), (0, "no\n"));
    let o = run(&["member", "--generators", gens.to_str().unwrap(), "--partition", "|ox;(l1 l2)"]);
    assert_eq!(stdout(&o), "yes\n");
}

#[test]
fn relation_text_and_matrix_check() {
    let o = run(&["relation", "--partition", "|ox;(l1 l2)"]);
    assert_eq!(stdout(&o), "sum_l u[i1][l] u*[i2][l] = delta(i1,i2)\n");

    let perm = scratch("perm.txt", "0 1 0\n0 0 1\n1 0 0\n");
    let o = run(&["relation", "--partition", "|o;(l1)", "--matrix", perm.to_str().unwrap()]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).ends_with("verdict: pass\n"));

    let diag = scratch("diag.txt", "1 0\n0 -1\n");
    let o = run(&["relation", "--partition", "|o;(l1)", "--matrix", diag.to_str().unwrap()]);
    assert_eq!(code(&o), 1);
    assert!(stdout(&o).contains("max_deviation: 2e0"));
}

#[test]
fn check_group_verdicts() {
    let o = run(&["check-group", "--catalog", "Sgrp_glob(1)", "--n", "4", "--seed", "3"]);
    assert_eq!(code(&o), 0, "{}", stdout(&o));
    assert!(stdout(&o).contains("group: S_n"));

    let o = run(&["check-group", "--catalog", "Ogrp_loc", "--n", "3"]);
    assert_eq!(code(&o), 0);

    let o = run(&["check-group", "--catalog", "Sgrp_glob(1)", "--group", "O_n", "--n", "3"]);
    assert_eq!(code(&o), 2);
}

#[test]
fn outputs_are_deterministic() {
    let args = ["closure", "--catalog", "B_loc(2,0)", "--pmax", "4"];
    let a = run(&args);
    assert_eq!(code(&a), 0);
    assert_eq!(stdout(&a), stdout(&run(&args)));
    assert!(stdout(&a).starts_with("# config: subcommand=closure catalog=B_loc(2,0) pmax=4 imax=8"));
}

#[test]
fn equal_and_catalog() {
    let o = run(&["equal", "--catalog", "S_loc(3,3)", "--other-catalog", "S_loc(3,0)", "--pmax", "6"]);
    assert_eq!(stdout(&o), "yes\n");
    let o = run(&["equal", "--catalog", "O_loc", "--other-catalog", "H_loc(0,0)", "--pmax", "4"]);
    assert_eq!(stdout(&o), "no\n");

    let o = run(&["catalog", "--max-param", "1"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).lines().any(|l| l.starts_with("Ogrp_loc ")));
}

#[test]
fn exit_statuses() {
    assert_eq!(code(&run(&["member", "--catalog", "O_loc", "--partition", "bad"])), 2);
    assert_eq!(code(&run(&["dim", "--catalog", "Nope", "--n", "2"])), 2);
    assert_eq!(code(&run(&["classify"])), 2);
    assert_eq!(code(&run(&["relation", "--partition", "|o;(l1)", "--tol", "0"])), 2);

    let capped = Command::new(env!("CARGO_BIN_EXE_easyqg"))
        .args(["dim", "--catalog", "Ogrp_loc", "--upper", "ooo", "--lower", "ooo", "--n", "3"])
        .env("EASYQG_COORD_CAP", "10")
        .output()
        .unwrap();
    assert_eq!(code(&capped), 3);
}
