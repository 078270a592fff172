use std::path::PathBuf;
use std::process::{Command, Output};

use oddcycles::doc::{system_doc, SystemDoc, SystemKind};
use oddcycles_core::OddModulus;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_oddcycles"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = run(args);
    assert!(
        out.status.success(),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("oddcycles-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

#[test]
fn mds_text_matches_the_table_rendering() {
    assert_eq!(
        stdout(&["mds", "--b", "17"]),
        "[2, 4, 8, 1], [6, 5, 7, 3]\n"
    );
    assert!(stdout(&["mds", "--b", "63"]).starts_with("[2, 4, 8, 16, 31, 1], "));
}

#[test]
fn coach_text_has_aligned_rows() {
    let text = stdout(&["coach", "--b", "65", "--format", "text"]);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "A: 1 | 3 31 17 | 7 29 9 | 11 27 19 23 21");
    assert_eq!(lines[1], "K: 6 | 1  1  4 | 1  2 3 |  1  1  1  1  2");
}

#[test]
fn icos_text() {
    assert_eq!(
        stdout(&["icos", "--b", "17", "--format", "text"]),
        "[(+,2), (+,4), (+,8), (-,1)], [(+,6), (-,5), (-,7), (-,3)]\n"
    );
}

#[test]
fn csv_and_bfile_layouts() {
    let csv = stdout(&["sbb", "--b", "7", "--format", "csv"]);
    assert_eq!(csv, "cycle,position,value\n1,1,1\n1,2,5\n1,3,3\n");
    let coach = stdout(&["coach", "--b", "7", "--format", "csv"]);
    assert!(coach.starts_with("cycle,position,value,exponent\n1,1,1,"));
    assert_eq!(
        stdout(&["mds", "--b", "9", "--format", "bfile"]),
        "1 2\n2 4\n3 1\n"
    );
    assert_eq!(
        stdout(&["seq", "pes", "--count", "5", "--format", "bfile"]),
        "1 1\n2 2\n3 3\n4 3\n5 5\n"
    );
}

#[test]
fn sequences_accept_names_and_a_numbers() {
    assert_eq!(
        stdout(&["seq", "pes", "--count", "8"]),
        stdout(&["seq", "a003558", "--count", "8"])
    );
    let v: serde_json::Value = serde_json::from_str(&stdout(&[
        "seq",
        "coach-count",
        "--count",
        "4",
        "--format",
        "json",
    ]))
    .unwrap();
    assert_eq!(v["terms"], serde_json::json!([1, 1, 1, 1]));
}

#[test]
fn poly_commands() {
    assert_eq!(stdout(&["poly", "R", "--n", "2"]).trim(), "x² − 2");
    assert_eq!(
        stdout(&["poly", "pstar", "--b", "9"]).trim(),
        "x³ − 2ρx² + (−3 + 2ρ²)x − 1"
    );
    assert_eq!(
        stdout(&["poly", "pstar", "--b", "9", "--compact"]).trim(),
        "x^3-2ρx^2+(-3+2ρ^2)x-1"
    );
}

#[test]
fn json_round_trips_for_every_kind() {
    for kind in ["coach", "sbb", "sbb-signed", "mds", "icos"] {
        for b in ["17", "63", "65", "105"] {
            let text = stdout(&[kind, "--b", b, "--format", "json"]);
            let doc = SystemDoc::from_json(&text).unwrap();
            doc.validate().unwrap();
            assert_eq!(doc.to_json().unwrap(), text, "{kind} {b}");
        }
    }
    let doc = system_doc(SystemKind::Sbb, OddModulus::new(43).unwrap());
    assert_eq!(SystemDoc::from_json(&doc.to_json().unwrap()).unwrap(), doc);
}

#[test]
fn convert_between_systems() {
    let input = scratch("mds65.json");
    std::fs::write(&input, stdout(&["mds", "--b", "65", "--format", "json"])).unwrap();
    let path = input.to_str().unwrap();
    assert_eq!(
        stdout(&["convert", "--input", path, "--to", "coach", "--format", "json"]),
        stdout(&["coach", "--b", "65", "--format", "json"])
    );
    let sbb = SystemDoc::from_json(&stdout(&["convert", "--input", path, "--to", "sbb"])).unwrap();
    assert_eq!(sbb.kind, SystemKind::Sbb);
    sbb.validate().unwrap();
}

#[test]
fn output_is_deterministic() {
    for args in [
        &["coach", "--b", "255", "--format", "json"][..],
        &["tour", "--b", "17", "--cycle", "2", "--format", "svg"],
        &["tour", "--b", "21", "--format", "dot"],
        &["poly", "mpr2", "--n", "65", "--format", "json"],
    ] {
        assert_eq!(run(args).stdout, run(args).stdout, "{args:?}");
    }
}

#[test]
fn tour_text_and_files() {
    let text = stdout(&["tour", "--b", "7"]);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("L=42 N=14 m=14"));
    assert!(lines.next().unwrap().starts_with("0 1 6 9 10 1 4 5 10 13"));

    let dot = stdout(&["tour", "--b", "21", "--format", "dot"]);
    assert!(dot.starts_with("digraph"));
    assert!(dot.contains("style=dashed"));

    let svg_path = scratch("tour17.svg");
    let out = run(&[
        "tour",
        "--b",
        "17",
        "--cycle",
        "2",
        "--format",
        "svg",
        "-o",
        svg_path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    assert!(String::from_utf8_lossy(&out.stderr).contains("L=68"));
    let svg = std::fs::read_to_string(svg_path).unwrap();
    assert!(
        svg.starts_with("<?xml") && svg.contains("<svg ") && svg.trim_end().ends_with("</svg>")
    );
}

#[test]
fn usage_errors_exit_with_two() {
    for args in [
        &["mds", "--b", "4"][..],
        &["mds", "--b", "nine"],
        &["tour", "--b", "17", "--cycle", "3"],
        &["seq", "no-such-sequence"],
        &["frobnicate"],
    ] {
        let out = run(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        let err: serde_json::Value = serde_json::from_slice(&out.stderr).unwrap();
        assert!(err["error"].is_string(), "{args:?}");
    }
}

#[test]
fn malformed_input_files_are_rejected() {
    let input = scratch("broken.json");
    let mut doc = system_doc(SystemKind::Mds, OddModulus::new(17).unwrap());
    doc.cycles[0].swap(0, 1);
    std::fs::write(&input, doc.to_json().unwrap()).unwrap();
    let out = run(&["convert", "--input", input.to_str().unwrap(), "--to", "sbb"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verify_passes_and_reports_each_suite() {
    let out = run(&["verify", "--max-b", "71"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.lines().filter(|l| l.starts_with("PASS")).count() >= 10);
    assert!(!text.contains("FAIL"));
}
