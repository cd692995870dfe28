//! End-to-end runs of the `tiltwall` binary: output shapes, exit codes, and
//! byte-for-byte determinism.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::Command;

fn tiltwall(args: &[&str]) -> (i32, String, String) {
    let output = Command::new(env!("CARGO_BIN_EXE_tiltwall"))
        .args(args)
        .output()
        .expect("binary runs");
    (
        output.status.code().unwrap_or(-1),
        String::from_utf8(output.stdout).expect("stdout is utf-8"),
        String::from_utf8(output.stderr).expect("stderr is utf-8"),
    )
}

fn expect_ok(args: &[&str]) -> String {
    let (code, out, err) = tiltwall(args);
    assert_eq!(code, 0, "command {args:?} failed:\n{err}");
    out
}

fn tmp_dir(name: &str) -> PathBuf {
    let dir = Path::new(env!("CARGO_TARGET_TMPDIR")).join(name);
    fs::create_dir_all(&dir).unwrap();
    dir
}

#[test]
fn chi_matches_the_worked_pairings() {
    assert_eq!(expect_ok(&["chi", "--genus", "9", "v", "w"]), "-3\n");
    assert_eq!(expect_ok(&["chi", "--genus", "6", "O", "O"]), "1\n");
    assert_eq!(expect_ok(&["chi", "--genus", "8", "sky", "sky"]), "-7\n");
}

/// The lines naming the wall pairs, with the beta-dependent alpha^2 readings
/// stripped.
fn pair_lines(report: &str) -> Vec<String> {
    report
        .lines()
        .filter(|line| line.starts_with("  ("))
        .map(|line| match line.find("  alpha^2") {
            Some(cut) => line[..cut].to_string(),
            None => line.to_string(),
        })
        .collect()
}

#[test]
fn walls_at_both_betas_print_the_same_fifteen_pairs() {
    let base = &["walls", "--genus", "7", "--M", "5,-2,0", "--no-li-filter", "--beta"];
    let first = expect_ok(&[base as &[&str], &["-5/6"]].concat());
    let second = expect_ok(&[base as &[&str], &["-71/84"]].concat());
    assert!(first.contains("15 pairs"), "got:\n{first}");
    assert!(first.contains("  (2, -1, 2) + (3, -1, -2)"));
    assert_eq!(pair_lines(&first).len(), 15);
    assert_eq!(pair_lines(&first), pair_lines(&second));
}

#[test]
fn the_slope_bound_filter_is_on_by_default() {
    let out = expect_ok(&["walls", "--genus", "7", "--M", "5,-2,0", "--beta", "-5/6"]);
    assert!(out.contains("0 pairs (slope-bound filter applied)"), "got:\n{out}");
}

#[test]
fn destab_skyscraper_preset_is_empty_at_genus_ten() {
    let out = expect_ok(&["destab", "--genus", "10", "--preset", "skyscraper"]);
    assert!(out.contains("0 solutions"), "got:\n{out}");
    assert!(out.contains("complete"));
}

#[test]
fn destab_at_genus_six_requires_a_variant() {
    let (code, _, err) = tiltwall(&["destab", "--genus", "6", "--preset", "skyscraper"]);
    assert_eq!(code, 1);
    assert!(err.contains("variant"), "got:\n{err}");

    let out = expect_ok(&[
        "destab", "--genus", "6", "--variant", "special", "--preset", "skyscraper",
    ]);
    assert!(out.contains("2 solutions"), "got:\n{out}");
    assert!(out.contains("A = (-4, 2)  B = (-1, 1)"));
    assert!(out.contains("A = (-2, 1)  B = (-3, 2)"));
}

#[test]
fn named_destabilizer_preset_runs_the_shipped_system() {
    let out = expect_ok(&["destab", "--genus", "8", "--preset", "destab-g8"]);
    assert!(out.contains("2 solutions"), "got:\n{out}");
    assert!(out.contains("(-4, 2, -3, 2)"));
    assert!(out.contains("(-2, 1, -5, 3)"));
}

#[test]
fn constraint_files_and_preset_maps_resolve() {
    let dir = tmp_dir("preset-map");
    let system = "\
# Toy intersection used by the end-to-end tests.
var a in [-2, 2]
var b in [-2, 2]
a + b = 3
a - b = 1
";
    fs::write(dir.join("mini.cst"), system).unwrap();
    fs::write(dir.join("map.toml"), "mini = \"mini.cst\"\n").unwrap();

    let by_file = expect_ok(&[
        "destab",
        "--genus",
        "9",
        "--constraints",
        dir.join("mini.cst").to_str().unwrap(),
    ]);
    assert!(by_file.contains("1 solution"), "got:\n{by_file}");
    assert!(by_file.contains("  (2, 1)"));

    // The same file reached through a TOML preset map with a relative path.
    let by_name = expect_ok(&[
        "destab",
        "--genus",
        "9",
        "--preset",
        "mini",
        "--preset-map",
        dir.join("map.toml").to_str().unwrap(),
    ]);
    assert!(by_name.contains("constraint system preset:mini"), "got:\n{by_name}");
    assert!(by_name.contains("  (2, 1)"));

    let (code, _, err) = tiltwall(&["destab", "--genus", "9", "--preset", "nosuch"]);
    assert_eq!(code, 1);
    assert!(err.contains("unknown preset"), "got:\n{err}");
}

#[test]
fn cone_commands_print_solutions_and_truncations() {
    let a8 = expect_ok(&["cone", "--genus", "7"]);
    assert!(a8.contains("cone system A8"), "got:\n{a8}");
    assert!(a8.contains("(a, b, c) = (-11, 9, 5)  B truncation (3, -1, 1)"));

    let a9 = expect_ok(&["cone", "--genus", "6"]);
    assert!(a9.contains("cone system A9"), "got:\n{a9}");
    assert!(a9.contains("2 solutions (projected to (a, b))"));
    assert!(a9.contains("  (-3, 2)"));
    assert!(a9.contains("  (-1, 1)"));

    let empty = expect_ok(&["cone", "--genus", "12"]);
    assert!(empty.contains("0 solutions"), "got:\n{empty}");
}

#[test]
fn wall_circle_prints_the_locus() {
    let out = expect_ok(&[
        "wall-circle", "--genus", "7", "--A", "1,0,-6", "--M", "5,-2,0",
    ]);
    assert_eq!(out, "circle  center beta = -5/4  radius^2 = 9/16\n");
}

#[test]
fn plot_walls_emits_csv_and_svg() {
    let dir = tmp_dir("plots");
    let svg_path = dir.join("walls.svg");
    let csv = expect_ok(&[
        "plot-walls",
        "--genus",
        "7",
        "--M",
        "5,-2,0",
        "--beta",
        "-5/6",
        "--no-li-filter",
        "--denominator",
        "12",
        "--svg",
        svg_path.to_str().unwrap(),
    ]);
    assert!(csv.starts_with("pair,beta,alpha\n"), "got:\n{csv}");
    assert!(csv.contains(",-5/6,"), "expected a sample at the query beta:\n{csv}");

    let svg = fs::read_to_string(&svg_path).unwrap();
    assert!(svg.starts_with("<svg"), "got:\n{}", &svg[..svg.len().min(120)]);
    assert!(svg.contains("beta = -5/6"));
}

#[test]
fn verify_replays_every_fixture() {
    let (code, out, err) = tiltwall(&["verify"]);
    assert_eq!(code, 0, "verify failed:\n{out}\n{err}");
    assert!(out.contains("12 passed, 0 failed"), "got:\n{out}");

    let only = expect_ok(&["verify", "--only", "lemma-A3", "--json"]);
    let report: serde_json::Value = serde_json::from_str(&only).unwrap();
    let entries = report["entries"].as_array().unwrap();
    assert_eq!(entries.len(), 1);
    assert_eq!(entries[0]["lemma"], "lemma-A3");
    assert_eq!(entries[0]["status"], "pass");
    assert_eq!(report["passed"], 1);
    assert_eq!(report["failed"], 0);
}

#[test]
fn exit_codes_follow_the_contract() {
    let (code, _, _) = tiltwall(&["--definitely-not-a-flag"]);
    assert_eq!(code, 1);

    let (code, _, err) = tiltwall(&["catalog"]);
    assert_eq!(code, 1, "catalog without --genus must be a usage error");
    assert!(err.contains("--genus"), "got:\n{err}");

    let (code, _, err) = tiltwall(&[
        "walls", "--genus", "7", "--M", "2,0,-12", "--beta", "-1", "--require-bounded",
    ]);
    assert_eq!(code, 3, "unbounded search must exit 3:\n{err}");
    assert!(err.contains("unbounded"), "got:\n{err}");

    let (code, out, _) = tiltwall(&["--help"]);
    assert_eq!(code, 0);
    assert!(out.contains("tilt-stability"));
}

#[test]
fn verification_failures_map_to_exit_code_two() {
    let err = tiltwall_cli::CliError::Verification { failed: 1, total: 12 };
    assert_eq!(err.exit_code(), 2);
}

#[test]
fn output_is_byte_deterministic() {
    for args in [
        &["catalog", "--genus", "8", "--json"] as &[&str],
        &["walls", "--genus", "7", "--M", "5,-2,0", "--beta", "-5/6", "--no-li-filter", "--json"],
        &["destab", "--genus", "12", "--preset", "skyscraper", "--json"],
        &["cone", "--genus", "6", "--json"],
    ] {
        let first = expect_ok(args);
        let second = expect_ok(args);
        assert_eq!(first, second, "non-deterministic output for {args:?}");
        assert!(!first.is_empty());
    }
}

#[test]
fn charge_json_reports_exact_values() {
    let out = expect_ok(&[
        "charge", "--genus", "7", "--class", "E", "--alpha-sq", "1/144", "--beta", "-5/6",
        "--json",
    ]);
    let charge: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(charge["z"]["re"], "-5/8");
    assert_eq!(charge["z"]["im"], "26");
    assert_eq!(charge["mu_classical"], "-2/5");
    assert_eq!(charge["discriminant"], "576");
    assert_eq!(charge["normalized_discriminant"], "4");
    assert_eq!(charge["li_bound"], "consistent");
}

#[test]
fn catalog_lists_classes_and_bases() {
    let out = expect_ok(&["catalog", "--genus", "7"]);
    assert!(out.contains("genus 7"), "got:\n{out}");
    assert!(out.contains("classes:"));
    assert!(out.contains("Kuznetsov basis:"));
    assert!(out.contains("[[-6, -5], [-7, -6]]"));

    // Genus 7 has no alternative basis; genus 8 does.
    assert!(!out.contains("alternative basis:"));
    let even = expect_ok(&["catalog", "--genus", "8"]);
    assert!(even.contains("alternative basis:"));
    assert!(even.contains("[[-1, -2], [-3, -7]]"));
}

#[test]
fn threads_flag_is_accepted() {
    let out = expect_ok(&["--threads", "2", "verify", "--only", "lemma-A1"]);
    assert!(out.contains("pass"));
}
