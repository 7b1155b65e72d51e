//! Runs the shipped fixture corpus through the binary and compares each
//! report byte-for-byte with the recorded one in `fixtures/expected`.
//! Set `SIGMACAT_BLESS=1` to re-record.

use std::path::{Path, PathBuf};
use std::process::Command;

fn root() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../..").canonicalize().unwrap()
}

fn run(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_sigmacat"))
        .args(args)
        .current_dir(root())
        .env_remove("SIGMACAT_BUDGET")
        .output()
        .expect("the binary runs");
    (out.status.code().unwrap_or(-1), String::from_utf8(out.stdout).unwrap(), String::from_utf8(out.stderr).unwrap())
}

/// `(report name, arguments, exit code)`.
const CASES: &[(&str, &[&str], i32)] = &[
    ("validate_two", &["validate", "fixtures/two.json"], 0),
    ("validate_diamond", &["validate", "fixtures/diamond.json"], 0),
    ("validate_arrow_category", &["validate", "fixtures/arrow_category.json"], 0),
    ("validate_iso_swap_on_two", &["validate", "fixtures/iso_swap_on_two.json"], 0),
    ("validate_top_in_diamond", &["validate", "fixtures/top_in_diamond.json"], 0),
    ("validate_broken", &["validate", "fixtures/broken.json"], 2),
    ("validate_truncated", &["validate", "fixtures/truncated.json"], 2),
    ("validate_unknown_key", &["validate", "fixtures/unknown_key.json"], 2),
    ("hom_lax", &["hom", "fixtures/representable.json", "fixtures/pick_zero.json", "--flavor", "lax"], 0),
    ("hom_sigma", &["hom", "fixtures/const_two_on_two.json", "fixtures/pick_zero.json", "--flavor", "{\"sigma\": [\"0<1\"]}"], 0),
    ("elements_pick_zero", &["elements", "fixtures/pick_zero.json", "--sigma", "0<1"], 0),
    ("elements_pseudo", &["elements", "fixtures/iso_swap_on_terminal.json"], 0),
    ("limit_strict", &["limit", "fixtures/const_two_on_two.json", "fixtures/pick_zero.json", "--flavor", "s"], 0),
    ("colimit_lax", &["colimit", "fixtures/arrow_category.json", "--sigma="], 0),
    ("colimit_pseudo", &["colimit", "fixtures/const_two_on_two.json", "--sigma", "*"], 0),
    ("colimit_weighted", &["colimit", "fixtures/pick_zero.json", "--sigma", "*", "--weight", "fixtures/const_point_on_two_op.json"], 0),
    ("colimit_integers_cap2", &["colimit", "fixtures/integers.json", "--sigma", "*", "--cap", "2"], 3),
    ("colimit_integers_cap16", &["colimit", "fixtures/integers.json", "--sigma", "*"], 3),
    ("bilimit_biterminal", &["bilimit", "--shape", "biterminal"], 0),
    ("bilimit_biproduct", &["bilimit", "--shape", "biproduct", "fixtures/biproduct.json"], 0),
    ("bilimit_biinserter", &["bilimit", "--shape", "biinserter", "fixtures/biinserter.json"], 0),
    ("bilimit_wrong_arity", &["bilimit", "--shape", "biequifier", "fixtures/biinserter.json"], 2),
    ("filtered_diamond", &["filtered", "fixtures/diamond.json"], 0),
    ("filtered_parallel_pair", &["filtered", "fixtures/parallel_pair.json"], 0),
    ("cofiltered_discrete_pair", &["filtered", "fixtures/discrete_pair.json", "--co"], 0),
    ("filtered_free_cell_no_sigma", &["filtered", "fixtures/free_cell.json"], 2),
    ("filtered_free_cell", &["filtered", "fixtures/free_cell.json", "--sigma", "g"], 0),
    ("cofinal_top", &["cofinal", "fixtures/top_in_diamond.json", "--sigma=", "--sigma-prime=*"], 0),
    ("cofinal_identity", &["cofinal", "fixtures/identity_on_diamond.json", "--sigma", "*", "--sigma-prime", "*"], 0),
    ("flat_representable", &["flat", "fixtures/representable.json"], 0),
    ("flat_canonical", &["flat", "--canonical", "fixtures/rep_bot_diamond.json"], 0),
    ("flat_discrete_pair", &["flat", "fixtures/const_point_on_discrete_pair.json"], 0),
    ("flat_pseudo_swap", &["flat", "fixtures/iso_swap_on_two.json"], 0),
    ("flat_pseudo_split", &["flat", "fixtures/two_isos_on_terminal.json"], 0),
    ("exact_representable", &["exact", "fixtures/rep_top_diamond.json", "--cones", "fixtures/cones.json"], 0),
    ("exact_empty", &["exact", "fixtures/const_empty_on_diamond.json"], 0),
    ("exact_point", &["exact", "fixtures/const_point_on_diamond.json"], 0),
    ("strictify_swap", &["strictify", "fixtures/iso_swap_on_terminal.json"], 0),
    ("yoneda_two", &["yoneda", "fixtures/two_2cat.json", "--object", "0", "--against", "fixtures/pick_zero.json", "--against", "fixtures/const_two_on_two.json"], 0),
];

#[test]
fn corpus_reproduces_recorded_reports() {
    let bless = std::env::var_os("SIGMACAT_BLESS").is_some();
    let dir = root().join("fixtures/expected");
    std::fs::create_dir_all(&dir).unwrap();
    let mut failures = Vec::new();
    for (name, args, code) in CASES {
        let (got, stdout, stderr) = run(args);
        if got != *code {
            failures.push(format!("{name}: exit {got}, expected {code}\n{stderr}"));
            continue;
        }
        let path = dir.join(format!("{name}.json"));
        if bless {
            std::fs::write(&path, &stdout).unwrap();
            continue;
        }
        match std::fs::read_to_string(&path) {
            Ok(want) if want == stdout => {}
            Ok(_) => failures.push(format!("{name}: report differs from {}", path.display())),
            Err(e) => failures.push(format!("{name}: {}: {e}", path.display())),
        }
    }
    assert!(failures.is_empty(), "{}", failures.join("\n"));
}

#[test]
fn every_recorded_report_has_a_case() {
    let dir = root().join("fixtures/expected");
    for entry in std::fs::read_dir(dir).unwrap() {
        let name = entry.unwrap().file_name().into_string().unwrap();
        let stem = name.trim_end_matches(".json");
        assert!(CASES.iter().any(|(n, _, _)| *n == stem), "stale report {name}");
    }
}

#[test]
fn reports_are_deterministic() {
    for args in [&["flat", "fixtures/iso_swap_on_two.json"][..], &["filtered", "fixtures/diamond.json"], &["elements", "fixtures/pick_zero.json"]] {
        assert_eq!(run(args).1, run(args).1);
    }
}

#[test]
fn every_valid_fixture_validates() {
    let bad = ["broken.json", "truncated.json", "unknown_key.json", "biproduct.json", "biinserter.json", "cones.json"];
    for entry in std::fs::read_dir(root().join("fixtures")).unwrap() {
        let p = entry.unwrap().path();
        let name = p.file_name().unwrap().to_str().unwrap().to_string();
        if p.is_dir() || bad.contains(&name.as_str()) {
            continue;
        }
        let (code, out, err) = run(&["validate", &format!("fixtures/{name}")]);
        assert_eq!(code, 0, "{name}: {out}{err}");
    }
}

#[test]
fn strictify_writes_a_strict_diagram() {
    let dir = std::env::temp_dir().join(format!("sigmacat-strictify-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let out = dir.join("strict.json");
    let (code, report, _) = run(&["strictify", "fixtures/iso_swap_on_two.json", "-o", out.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert!(report.contains("\"output\""));
    let (code, report, _) = run(&["validate", out.to_str().unwrap()]);
    assert_eq!(code, 0, "{report}");
    let text = std::fs::read_to_string(&out).unwrap();
    assert!(!text.contains("alpha_obj"));
    let (code, report, _) = run(&["flat", out.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert!(report.contains("\"flat\""));
    std::fs::remove_dir_all(dir).unwrap();
}

#[test]
fn budget_from_flag_and_environment() {
    let (code, report, _) = run(&["--budget", "5", "flat", "fixtures/iso_swap_on_two.json"]);
    assert_eq!(code, 3, "{report}");
    assert!(report.contains("size-limit-exceeded"));
    let out = Command::new(env!("CARGO_BIN_EXE_sigmacat"))
        .args(["flat", "fixtures/iso_swap_on_two.json"])
        .current_dir(root())
        .env("SIGMACAT_BUDGET", "5")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(3));
    let out = Command::new(env!("CARGO_BIN_EXE_sigmacat"))
        .args(["flat", "fixtures/iso_swap_on_two.json"])
        .current_dir(root())
        .env("SIGMACAT_BUDGET", "lots")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(run(&["frobnicate"]).0, 2);
    assert_eq!(run(&["flat"]).0, 2);
    assert_eq!(run(&["flat", "fixtures/does_not_exist.json"]).0, 2);
    assert_eq!(run(&["hom", "fixtures/representable.json", "fixtures/pick_zero.json", "--flavor", "q"]).0, 2);
    assert_eq!(run(&["yoneda", "fixtures/diamond.json", "--object", "nowhere", "--against", "fixtures/rep_top_diamond.json"]).0, 2);
}
