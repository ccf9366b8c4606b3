use std::process::{Command, Output};

use stsys::deformation::read_rows;
use stsys::library;
use stsys::rational::{frac, rat};

fn stsys(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_stsys")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn systole_of_a_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("circle3.json");
    stsys::format::write_complex(&library::circle(3), &path).unwrap();
    let o = stsys(&["systole", path.to_str().unwrap(), "-q", "1"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).lines().next(), Some("3"));

    let o = stsys(&["verify", "rescale", path.to_str().unwrap(), "-q", "1", "--t", "2"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("PASS"));
}

#[test]
fn catstsys_reports_provenance() {
    let o = stsys(&["catstsys", "S1 x S3"]);
    assert!(o.status.success());
    let out = stdout(&o);
    assert!(out.contains("lower = 2 ["));
    assert!(out.contains("upper = 2 [sphere-product]"));
    assert!(out.contains("exact: catstsys = 2"));
    let o = stsys(&["catstsys", "S1 x S2", "--partitions"]);
    assert!(stdout(&o).contains("(1,1,1): RuledOut"));
}

#[test]
fn catstsys_accepts_profile_files() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("m.json");
    std::fs::write(&path, r#"{"dim": 4, "betti": [1, 0, 2, 0, 1]}"#).unwrap();
    let o = stsys(&["catstsys", path.to_str().unwrap()]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("gap"));
    let o = stsys(&["lpd", path.to_str().unwrap()]);
    assert_eq!(stdout(&o).trim(), "2");
}

#[test]
fn inapplicable_and_input_errors_exit_2() {
    let o = stsys(&["verify", "projection", "torus:3", "circle:3", "-q", "1"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stdout(&o).contains("INAPPLICABLE"));
    assert_eq!(stsys(&["systole", "no-such-thing", "-q", "1"]).status.code(), Some(2));
    assert_eq!(stsys(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(stsys(&["cup-length", "cubical-sphere:2"]).status.code(), Some(2));
    assert_eq!(stsys(&["deform", "circle:3", "--partition", "1"]).status.code(), Some(2));
    assert_eq!(stsys(&["verify", "rescale", "circle:3", "-q", "1", "--t", "0"]).status.code(), Some(2));

    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.json");
    std::fs::write(&path, r#"{"top_dim": 1, "kind": "general", "cells": [[]]}"#).unwrap();
    assert_eq!(stsys(&["homology", path.to_str().unwrap()]).status.code(), Some(2));
}

#[test]
fn deform_csv_round_trips() {
    let o = stsys(&["deform", "cubical-circle:1*cubical-sphere:2", "--partition", "1,1,1", "--t", "1,2,3", "--format", "csv"]);
    assert!(o.status.success());
    let (p, rows) = read_rows(o.stdout.as_slice()).unwrap();
    assert_eq!(p.parts(), &[1, 1, 1]);
    assert_eq!(rows.len(), 3);
    // t = 3: systoles 3 each, volume 3 * 6
    assert_eq!(rows[2].ratio, frac(27, 18));
    for r in &rows {
        assert_eq!(r.ratio, &r.product / &r.volume);
    }
}

#[test]
fn decimal_flag_and_stable_norm() {
    let o = stsys(&["--decimal", "stable-norm", "torus:3", "-q", "1", "--class", "1,-1"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).trim(), "6");
    let o = stsys(&["--decimal", "systole", "circle:3*cubical-circle:2", "-q", "2"]);
    assert!(stdout(&o).starts_with('6'));
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("w.json");
    let k = library::circle_with_lengths(&[frac(1, 3), frac(1, 3), frac(1, 3)]).unwrap();
    stsys::format::write_complex(&k.with_uniform_weight(1, frac(1, 3)).unwrap(), &path).unwrap();
    let o = stsys(&["--decimal", "systole", path.to_str().unwrap(), "-q", "1"]);
    assert_eq!(stdout(&o).lines().next(), Some("1"));
    let path2 = dir.path().join("v.json");
    stsys::format::write_complex(&library::circle_with_lengths(&[frac(1, 3), rat(1), rat(1)]).unwrap(), &path2).unwrap();
    let o = stsys(&["--decimal", "systole", path2.to_str().unwrap(), "-q", "1"]);
    assert_eq!(stdout(&o).lines().next(), Some("7/3 (~2.333333)"));
}

#[test]
fn other_subcommands() {
    let o = stsys(&["homology", "rp2"]);
    assert!(stdout(&o).contains("H_1: betti 0, torsion [2]"));
    let o = stsys(&["cup-length", "torus9"]);
    assert_eq!(stdout(&o).lines().next(), Some("2"));
    let o = stsys(&["lpd", "S2 x S3"]);
    assert_eq!(stdout(&o).trim(), "2");
    let o = stsys(&["verify", "product", "circle:3", "sphere:2", "-p", "1", "-q", "2"]);
    assert_eq!(o.status.code(), Some(0));
    let o = stsys(&["verify", "degree-sandwich", "circle:6", "circle:3", "--vertex-map", "0,1,2,0,1,2"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("D(g) = 2"));
    let o = stsys(&["export", "torus9"]);
    let k = stsys::format::complex_from_json(&stdout(&o)).unwrap();
    assert_eq!(k, library::torus9());
}
