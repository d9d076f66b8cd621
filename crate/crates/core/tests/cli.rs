use std::process::{Command, Output};

fn epglab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_epglab"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn epglab_threads(threads: &str, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_epglab"))
        .env("EPGLAB_THREADS", threads)
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn dihedral_spectrum_json() {
    let o = epglab(&["report", "d:3", "spectrum", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(
        v["spectrum"],
        serde_json::json!([[0, 1], [1, 3], [3, 1], [6, 1]])
    );
    assert_eq!(v["trees"], "3");
    assert_eq!(v["residual"], serde_json::json!(["1"]));
}

#[test]
fn detour_csv_has_header_and_one_row_per_vertex() {
    let o = epglab(&["report", "sd:2", "detour", "--format", "csv"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).lines().count(), 17);
}

#[test]
fn graph_dot_counts() {
    let o = epglab(&["report", "sd:2", "graph", "--format", "dot"]);
    let text = stdout(&o);
    assert_eq!(text.lines().filter(|l| l.contains("[label=")).count(), 16);
    assert_eq!(text.lines().filter(|l| l.contains(" -- ")).count(), 42);
}

#[test]
fn verify_passes_for_quaternion_with_note() {
    let o = epglab(&["verify", "q:2"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("pass     decomposition"));
    assert!(text.contains("note: the printed form"));
}

#[test]
fn verify_semidihedral_spectrum() {
    let o = epglab(&["verify", "sd:2", "--check", "spectrum"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("{0:1, 1:4, 2:2, 4:2, 8:5, 12:1, 16:1}"));
}

#[test]
fn failing_check_exits_one() {
    // the interior claim does not hold, so this check fails
    let o = epglab(&["verify", "sd:2", "--check", "interior"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).starts_with("FAIL"));
}

#[test]
fn checks_report_in_fixed_order() {
    let o = epglab(&[
        "verify", "sd:2", "--check", "trees", "--check", "nbd", "--check", "closure",
    ]);
    let names: Vec<String> = stdout(&o)
        .lines()
        .filter(|l| !l.starts_with(' '))
        .map(|l| l.split_whitespace().nth(1).unwrap().to_string())
        .collect();
    assert_eq!(names, ["nbd", "closure", "trees"]);
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        &["verify", "sd:1"][..],
        &["verify", "d:3", "--check", "detour"],
        &["report", "d:3", "spectrum", "--format", "dot"],
        &["report", "sd:2", "bogus"],
        &["report", "sd:3", "resolving"],
    ] {
        let o = epglab(args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
    }
    let o = epglab_threads("zero", &["group", "d:3"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn over_cap_checks_are_skipped_not_failed() {
    let o = epglab(&["verify", "sd:2", "--check", "resolving", "--enum-cap", "8"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(
        stdout(&o).contains("skipped  resolving     16 vertices exceed the enumeration cap of 8")
    );
}

#[test]
fn reports_identical_across_thread_counts() {
    for what in ["detour", "resolving", "spectrum", "graph", "distant"] {
        let one = epglab_threads("1", &["report", "sd:2", what]);
        let four = epglab_threads("4", &["report", "sd:2", what]);
        assert_eq!(one.status.code(), Some(0), "{what}");
        assert_eq!(one.stdout, four.stdout, "{what}");
    }
}

#[test]
fn report_to_file() {
    let path = std::env::temp_dir().join(format!("epglab-cli-{}.json", std::process::id()));
    let o = epglab(&["report", "q:2", "graph", "-o", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    std::fs::remove_file(&path).unwrap();
    assert_eq!(v["labels"].as_array().unwrap().len(), 8);
}

#[test]
fn table_file_round_trip() {
    let path = std::env::temp_dir().join(format!("epglab-cli-{}.txt", std::process::id()));
    let table = epglab(&["group", "d:3"]);
    std::fs::write(&path, &table.stdout).unwrap();
    let spec = format!("file:{}", path.display());
    let orders = epglab(&["group", &spec, "--orders"]);
    std::fs::remove_file(&path).unwrap();
    assert_eq!(orders.status.code(), Some(0));
    let text = stdout(&orders);
    assert!(text.starts_with("custom of order 6"));
    let mut ords: Vec<usize> = text
        .lines()
        .skip(1)
        .map(|l| l.split(' ').nth(1).unwrap().parse().unwrap())
        .collect();
    ords.sort_unstable();
    assert_eq!(ords, [1, 2, 2, 2, 3, 3]);
}

#[test]
fn oracle_only_runs_beyond_caps() {
    let o = epglab(&[
        "verify",
        "sd:40",
        "--oracle-only",
        "--check",
        "trees",
        "--check",
        "resolving",
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("skipped  trees         oracle-only"));
}
