//! Integration tests for the command-line binary: exit codes, output
//! formats, determinism, and the JSON schema round trip.

use flag_hilbert::cli::SeriesReport;
use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_flag-hilbert"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(output: &Output) -> String {
    String::from_utf8(output.stdout.clone()).unwrap()
}

fn stderr(output: &Output) -> String {
    String::from_utf8(output.stderr.clone()).unwrap()
}

#[test]
fn hs_json_has_expected_values() {
    let out = run(&["hs", "A2", "--weight", "1,1", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let report: SeriesReport = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(report.family, "A");
    assert_eq!(report.rank, 2);
    assert_eq!(report.weight, vec![1, 1]);
    assert_eq!(report.d, 3);
    assert_eq!(report.hp_coeffs, vec!["1", "3", "3", "1"]);
    assert_eq!(report.numerator, vec!["1", "4", "1", "0"]);
    assert_eq!(report.denom_exponent, 4);
    assert_eq!(report.degree, "6");
    assert_eq!(report.dims, vec!["1", "8", "27", "64"]);
    assert_eq!(report.checks.len(), 8);
    assert!(report.checks.iter().all(|c| c.status == "PASS"));
}

#[test]
fn json_round_trips_byte_identical() {
    let out = run(&["hs", "B3", "--weight", "w2", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    let report: SeriesReport = serde_json::from_str(&text).unwrap();
    let again = serde_json::to_string_pretty(&report).unwrap() + "\n";
    assert_eq!(again, text);
}

#[test]
fn repeated_runs_are_byte_identical() {
    let first = run(&["hs", "C3", "--weight", "w3", "--format", "json"]);
    let second = run(&["hs", "C3", "--weight", "w3", "--format", "json"]);
    assert_eq!(first.status.code(), Some(0));
    assert_eq!(first.stdout, second.stdout);
}

#[test]
fn weight_grammars_are_equivalent() {
    let coords = run(&["hs", "A3", "--weight", "1,0,1"]);
    let symbols = run(&["hs", "A3", "--weight", "w1+w3"]);
    assert_eq!(coords.status.code(), Some(0));
    assert_eq!(coords.stdout, symbols.stdout);
}

#[test]
fn dim_prints_bare_dimension() {
    let out = run(&["dim", "A2", "--weight", "w1"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "3\n");
}

#[test]
fn dim_kmax_lists_the_ray() {
    let out = run(&["dim", "G2", "--weight", "w2", "--kmax", "3"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    for line in ["k = 0: 1", "k = 1: 14", "k = 2: 77", "k = 3: 273"] {
        assert!(text.contains(line), "missing {line:?} in {text:?}");
    }
}

#[test]
fn hp_text_shows_rational_coefficients() {
    let out = run(&["hp", "A2", "--weight", "w1"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("d = 2"));
    assert!(text.contains("HP(x) = 1 + (3/2)x + (1/2)x^2"));
}

#[test]
fn hs_latex_uses_fraction() {
    let out = run(&["hs", "A2", "--weight", "1,1", "--format", "latex"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("\\frac{1 + 4x + x^{2}}{(1 - x)^{4}}"));
}

#[test]
fn verify_passes_on_consistent_data() {
    let out = run(&["verify", "A3", "--weight", "w2"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("verification: PASS (8/8)"));
}

#[test]
fn verify_detects_corrupted_dimension() {
    let out = run(&["verify", "A3", "--weight", "w2", "--corrupt-d", "2"]);
    assert_eq!(out.status.code(), Some(1));
    let text = stdout(&out);
    assert!(text.contains("FAIL truncated_division_oracle"));
    assert!(text.contains("verification: FAIL"));
}

#[test]
fn roots_text_reports_count() {
    let out = run(&["roots", "G2"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("G2: 6 positive roots"));
    assert!(text.contains("Cartan matrix:"));
}

#[test]
fn table_adjoint_flags_published_rows() {
    let out = run(&["table-adjoint", "A4"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("n = 3  [recomputed]  g(x) = 1 + 9x + 9x^2 + x^3  over (1 - x)^6"));
    assert!(text.contains(
        "n = 3  [paper-printed (unverified)]  g(x) = 1 + 10x + 19x^2 + 20x^3 + 20x^4  over (1 - x)^5"
    ));
}

#[test]
fn table_a1_matches_closed_form() {
    let out = run(&["table-a1", "A4"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("i = 2  C = 10  R = 7  a_1 = 3"));
}

#[test]
fn invalid_rank_exits_2() {
    let out = run(&["roots", "E5"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stdout(&out).is_empty());
    assert!(stderr(&out).contains("invalid rank 5 for family E"));
}

#[test]
fn weight_index_out_of_range_exits_2() {
    let out = run(&["hs", "A2", "--weight", "w5"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("rank mismatch"));
}

#[test]
fn negative_weight_exits_2() {
    let out = run(&["dim", "A2", "--weight", "1,-2"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("negative weight coefficient at position 2"));
}

#[test]
fn missing_required_flag_exits_2() {
    let out = run(&["hs", "A2"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn too_small_depth_exits_2() {
    let out = run(&["hs", "A2", "--weight", "1,1", "--depth", "3"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("depth 3 is too small"));
}
