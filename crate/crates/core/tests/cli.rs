//! End-to-end runs of the installed binary.

use std::process::{Command, Output};

use whitney::egf::Egf;
use whitney::identities::{CheckReport, Status};
use whitney::triangles::Triangle;

fn whitney(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_whitney"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn table_csv_rows() {
    let o = whitney(&[
        "table", "whitney2", "--m", "2", "--r", "3", "--n", "2", "--format", "csv",
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "1\n3,1\n9,8,1\n");
}

#[test]
fn table_json_parses_back() {
    let o = whitney(&[
        "table", "whitney1", "--m", "2", "--r", "3", "--n", "4", "--format", "json",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let t = Triangle::from_json(stdout(&o).trim()).unwrap();
    assert_eq!(t, Triangle::whitney1(2, &whitney::rat::int(3), 4));
}

#[test]
fn rational_r_accepted() {
    let o = whitney(&["table", "whitney2", "--m", "2", "--r", "1/2", "--n", "1"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "1\n1/2,1\n");
}

#[test]
fn poly_family_csv() {
    let o = whitney(&["poly", "dowling", "--m", "1", "--r", "0", "--n", "3"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "1\n0,1\n0,1,1\n0,1,3,1\n");
}

#[test]
fn series_json_is_egf() {
    let o = whitney(&["series", "bell", "--order", "5"]);
    assert_eq!(o.status.code(), Some(0));
    let e = Egf::from_json(stdout(&o).trim()).unwrap();
    assert_eq!(e, Egf::from_ints(&[1, 1, 2, 5, 15, 52]));
}

#[test]
fn verify_single_passes() {
    let o = whitney(&["verify", "whitney-recurrence", "--max-n", "5"]);
    assert_eq!(o.status.code(), Some(0));
    let reports: Vec<CheckReport> = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(reports.len(), 1);
    assert_eq!(reports[0].status, Status::Pass);
}

#[test]
fn verify_all_small_grid() {
    let o = whitney(&[
        "verify", "all", "--max-n", "4", "--max-h", "3", "--m", "1,2", "--r", "0,1",
    ]);
    assert_eq!(
        o.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&o.stderr)
    );
    let reports: Vec<CheckReport> = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(reports.len(), whitney::identities::names().len());
}

#[test]
fn verify_list_names() {
    let o = whitney(&["verify", "list"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(
        stdout(&o).lines().count(),
        whitney::identities::names().len()
    );
}

#[test]
fn oracle_compare_agrees() {
    let o = whitney(&[
        "oracle-compare",
        "--n",
        "4",
        "--k",
        "2",
        "--m",
        "3",
        "--r",
        "1",
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).trim_end().ends_with("AGREE"));
}

#[test]
fn oracle_cap_from_env() {
    let o = Command::new(env!("CARGO_BIN_EXE_whitney"))
        .args([
            "oracle-compare",
            "--n",
            "4",
            "--k",
            "2",
            "--m",
            "1",
            "--r",
            "1",
        ])
        .env("WHITNEY_ORACLE_CAP", "3")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("error"));
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        &["table", "bogus", "--n", "3"][..],
        &["table", "whitney2", "--n", "3", "--r", "x"],
        &["poly", "dowling"],
        &["series", "nope", "--order", "3"],
        &["verify", "no-such-identity"],
        &["frobnicate"],
    ] {
        assert_eq!(whitney(args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn help_exits_zero() {
    let o = whitney(&["--help"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("oracle-compare"));
}
