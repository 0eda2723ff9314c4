use assert_cmd::Command;
use predicates::prelude::*;

fn cmd() -> Command {
    Command::cargo_bin("ortaquin").unwrap()
}

fn write(name: &str, text: &str) -> String {
    let path = std::env::temp_dir().join(format!("ortaquin-test-{}-{}", std::process::id(), name));
    std::fs::write(&path, text).unwrap();
    path.to_string_lossy().into_owned()
}

const EXAMPLE: &str = "n 5\ncol 1 2 0 -2\ncol 1 3 -1\ncol 2 0\n";
const PUSHED: &str = "n 5\ncol 1 3 0 -2\ncol 2 0 -1\n";

#[test]
fn push_prints_the_quasistandard_form() {
    let file = write("push.txt", EXAMPLE);
    cmd()
        .args(["push", &file])
        .assert()
        .success()
        .stdout(PUSHED);
}

#[test]
fn unpush_rebuilds_the_preimage() {
    let file = write("unpush.txt", PUSHED);
    cmd()
        .args(["unpush", &file, "--shape", "0,1,1,1,0"])
        .assert()
        .success()
        .stdout(EXAMPLE);
}

#[test]
fn unpush_without_shape_is_a_usage_error() {
    let file = write("noshape.txt", PUSHED);
    cmd().args(["unpush", &file]).assert().code(2);
}

#[test]
fn validate_reports_properties() {
    let file = write("validate.txt", EXAMPLE);
    cmd()
        .args(["validate", &file])
        .assert()
        .success()
        .stdout(predicate::str::contains("semistandard yes"))
        .stdout(predicate::str::contains("shape 0,1,1,1,0"));
}

#[test]
fn validate_rejects_an_entry_out_of_range() {
    let file = write("badentry.txt", "n 2\ncol 3\n");
    cmd().args(["validate", &file]).assert().code(2);
}

#[test]
fn validate_flags_a_bad_column_order() {
    // both columns are admissible but the row 1,1 / 2,1 pair decreases
    let file = write("notss.txt", "n 2\ncol 2\ncol 1\n");
    cmd()
        .args(["validate", &file])
        .assert()
        .code(1)
        .stderr(predicate::str::contains("not semistandard"));
}

#[test]
fn double_splits_every_column_in_two() {
    let file = write("double.txt", "n 2\ncol sp 1 -2\n");
    cmd()
        .args(["double", &file])
        .assert()
        .success()
        .stdout("n 2\ncol 1 2\ncol 1 -2\n");
}

#[test]
fn enumerate_counts_match_verify() {
    cmd()
        .args(["enumerate", "--shape", "1,1", "--count"])
        .assert()
        .success()
        .stdout("16\n");
    cmd()
        .args(["enumerate", "--shape", "1,1", "--quasi", "--count"])
        .assert()
        .success()
        .stdout("8\n");
    cmd()
        .args(["dim", "--shape", "1,1"])
        .assert()
        .success()
        .stdout("16\n");
    cmd()
        .args(["verify", "--shape", "1,1", "--n", "2"])
        .assert()
        .success()
        .stdout(predicate::str::contains("ok"));
}

#[test]
fn rank_flag_must_agree_with_the_shape() {
    cmd()
        .args(["dim", "--shape", "1,1", "--n", "3"])
        .assert()
        .code(2);
}

#[test]
fn sigma_rotates_and_swaps_bars() {
    let file = write("sigma.txt", "n 2\ncol 1 -2\ncol 2\n");
    cmd()
        .args(["sigma", &file])
        .assert()
        .success()
        .stdout("n 2\ncol skip=1 -2\ncol 2 -1\n");
}

#[test]
fn ojdt_slides_the_hole_out() {
    let file = write("ojdt.txt", "n 2\ncol * -2\ncol 2\n");
    cmd()
        .args(["ojdt", &file])
        .assert()
        .success()
        .stdout(predicate::str::contains("exited "));
}

#[test]
fn ojdt_needs_a_hole() {
    let file = write("nohole.txt", "n 2\ncol 1\n");
    cmd().args(["ojdt", &file]).assert().code(2);
}

#[test]
fn missing_file_is_a_usage_error() {
    cmd()
        .args(["push", "/nonexistent/tableau.txt"])
        .assert()
        .code(2);
}
