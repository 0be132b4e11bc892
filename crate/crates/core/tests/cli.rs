mod common;

use std::fs;

use common::*;
use serde_json::Value;

fn run(args: &[&str]) -> (i32, String) {
    let out = oilu_bin().args(args).output().expect("binary runs");
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8(out.stdout).unwrap(),
    )
}

fn golden(name: &str) -> String {
    fs::read_to_string(manifest_dir().join("tests/golden").join(name)).unwrap()
}

#[test]
fn goldens() {
    assert_eq!(run(&["facets", "3172"]), (0, golden("facets_3172.json")));
    assert_eq!(
        run(&["table", "--strategy", "a", "--base", "hex"]),
        (0, golden("table_a_hex.json"))
    );
    assert_eq!(
        run(&["series", "--seed", "8", "--rule", "split:a", "--steps", "4"]),
        (0, golden("series_8_split_a_4.json"))
    );
}

#[test]
fn plain_series() {
    let (code, out) = run(&[
        "--plain",
        "series",
        "--seed",
        "31",
        "--rule",
        "split:a,facet:1",
        "--steps",
        "2",
    ]);
    assert_eq!((code, out.as_str()), (0, "31\n5511\n7711\n"));
}

#[test]
fn join_unknown_pair_exit_code() {
    let (code, out) = run(&["join", "22", "--strategy", "a", "--base", "dec"]);
    assert_eq!(code, 2);
    let doc: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(doc["error"]["code"], "unknown_pair");
}

#[test]
fn render_then_decode() {
    let dir = tempfile::tempdir().unwrap();
    for id in ["3172", "1", "0", "98765432", "10"] {
        let path = dir.path().join(format!("m{id}.pgm"));
        let p = path.to_str().unwrap();
        let (code, _) = run(&["marker", "render", id, "--out", p]);
        assert_eq!(code, 0);
        let levels = id.len().to_string();
        let (code, out) = run(&["marker", "decode", p, "--levels", &levels]);
        assert_eq!(code, 0, "{out}");
        let doc: Value = serde_json::from_str(&out).unwrap();
        assert_eq!(doc["id"], id);
    }
}

#[test]
fn svg_render() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("m.svg");
    let (code, out) = run(&[
        "marker",
        "render",
        "0",
        "--size",
        "128",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(code, 0);
    let doc: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(doc["format"], "svg");
    let svg = fs::read_to_string(&path).unwrap();
    assert_eq!(svg.matches("<rect").count(), 5);
    assert!(svg.contains(r#"width="128""#));
}

#[test]
fn usage_errors_write_no_files() {
    let dir = tempfile::tempdir().unwrap();
    let bad_ext = dir.path().join("m.png");
    assert_eq!(
        run(&["marker", "render", "31", "--out", bad_ext.to_str().unwrap()]).0,
        1
    );
    let small = dir.path().join("m.pgm");
    assert_eq!(
        run(&[
            "marker",
            "render",
            "31",
            "--size",
            "32",
            "--out",
            small.to_str().unwrap()
        ])
        .0,
        1
    );
    let missing_out = run(&["marker", "render", "31"]);
    assert_eq!(missing_out.0, 1);
    let bad_id = dir.path().join("x.svg");
    assert_eq!(
        run(&["marker", "render", "3a", "--out", bad_id.to_str().unwrap()]).0,
        2
    );
    assert_eq!(fs::read_dir(dir.path()).unwrap().count(), 0);
}

#[test]
fn decode_errors() {
    let dir = tempfile::tempdir().unwrap();
    let blank = dir.path().join("blank.pgm");
    let mut bytes = b"P5\n64 64\n255\n".to_vec();
    bytes.extend(std::iter::repeat_n(255u8, 64 * 64));
    fs::write(&blank, bytes).unwrap();
    let (code, out) = run(&["marker", "decode", blank.to_str().unwrap(), "--levels", "1"]);
    assert_eq!(code, 2);
    assert!(out.contains("\"code\":\"unreadable_level\""));

    let junk = dir.path().join("junk.pgm");
    fs::write(&junk, b"hello").unwrap();
    let (code, out) = run(&["marker", "decode", junk.to_str().unwrap(), "--levels", "1"]);
    assert_eq!(code, 2);
    assert!(out.contains("\"code\":\"bad_image\""));

    let (code, out) = run(&["marker", "decode", "/nonexistent/m.pgm", "--levels", "1"]);
    assert_eq!(code, 1);
    assert!(out.contains("\"code\":\"io\""));
}
