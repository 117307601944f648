use std::process::{Command, Output};

fn prolate(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_prolate"))
        .args(args)
        .env_remove("PROLATE_CACHE_DIR")
        .output()
        .unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn zero_bandwidth_basis_has_legendre_eigenvalues() {
    let o = prolate(&["basis", "--c", "0", "--n-max", "10"]);
    assert!(o.status.success());
    let chi: Vec<f64> = stdout(&o)
        .lines()
        .skip(1)
        .map(|l| l.split(',').nth(1).unwrap().parse().unwrap())
        .collect();
    let expected: Vec<f64> = (0..=10).map(|n| (n * (n + 1)) as f64).collect();
    assert_eq!(chi, expected);
}

#[test]
fn eigenvalues_are_ordered_and_in_the_unit_interval() {
    let o = prolate(&["basis", "--c", "10", "--n-max", "30"]);
    assert!(o.status.success());
    let lambda: Vec<f64> = stdout(&o)
        .lines()
        .skip(1)
        .map(|l| l.split(',').nth(2).unwrap().parse().unwrap())
        .collect();
    assert_eq!(lambda.len(), 31);
    assert!(lambda.iter().all(|&l| l > 0.0 && l <= 1.0 + 1e-12));
    assert!(lambda.windows(2).all(|w| w[1] <= w[0] + 1e-12));
}

#[test]
fn cache_dir_round_trip_is_bit_for_bit() {
    let dir = tempfile::tempdir().unwrap();
    let run = || {
        Command::new(env!("CARGO_BIN_EXE_prolate"))
            .args(["basis", "--c", "25", "--n-max", "20"])
            .env("PROLATE_CACHE_DIR", dir.path())
            .output()
            .unwrap()
    };
    let first = run();
    assert!(first.status.success());
    let file = dir.path().join("basis_c25_n20.json");
    let written = std::fs::read(&file).unwrap();
    let second = run();
    assert_eq!(first.stdout, second.stdout);
    assert_eq!(written, std::fs::read(&file).unwrap());
}

#[test]
fn explicit_out_writes_a_loadable_cache() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("nested/b.json");
    let o = prolate(&["basis", "--c", "5", "--n-max", "4", "--out", path.to_str().unwrap()]);
    assert!(o.status.success());
    let b = prolate::PswfBasis::load(&path).unwrap();
    assert_eq!(b.n_max(), 4);
}

#[test]
fn reproduction_csv_is_deterministic() {
    let args = ["reproduce", "example4", "--c", "30", "--N", "20", "--seed", "3"];
    let (a, b) = (prolate(&args), prolate(&args));
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    let text = stdout(&a);
    let mut lines = text.lines();
    assert!(lines.next().unwrap().starts_with("# schema=1"));
    assert_eq!(lines.next().unwrap(), "x,value,approx");
    assert_eq!(lines.count(), 101);
}

#[test]
fn exponential_errors_are_emitted() {
    let o = prolate(&["reproduce", "example1"]);
    assert!(o.status.success());
    let text = stdout(&o);
    let row: Vec<f64> = text.lines().nth(2).unwrap().split(',').map(|v| v.parse().unwrap()).collect();
    assert_eq!(row[..2], [50.0, 50.0]);
    assert!(row[3] < 1e-8 && row[3] < row[2]);
}

#[test]
fn table_spot_cells() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("t.json");
    let o = prolate(&["reproduce", "table1", "--format", "json", "--out", path.to_str().unwrap()]);
    assert!(o.status.success());
    let doc: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    let cells = &doc["data"]["cells"];
    let first = cells[0][0].as_f64().unwrap();
    assert!((first / 4.57329e-1 - 1.0).abs() < 0.05, "{first}");
    assert_eq!(cells.as_array().unwrap().len(), 9);
}

#[test]
fn checks_pass_and_report() {
    let o = prolate(&["check", "--suite", "invariants"]);
    assert!(o.status.success(), "{}", stdout(&o));
    let o = prolate(&["check", "--suite", "wkb"]);
    assert!(stdout(&o).contains("q,n,c,chi,r,r_sqrt_chi"));
}

#[test]
fn strict_mode_promotes_diagnostics() {
    // the WKB residual-decay diagnostic does not meet its 0.6 factor
    assert!(prolate(&["check", "--suite", "wkb"]).status.success());
    assert_eq!(prolate(&["check", "--suite", "wkb", "--strict"]).status.code(), Some(1));
}

#[test]
fn usage_errors_exit_with_two() {
    assert_eq!(prolate(&["check", "--suite", ""]).status.code(), Some(2));
    assert_eq!(prolate(&["check", "--suite", "nope"]).status.code(), Some(2));
    assert_eq!(prolate(&["basis", "--c", "-1", "--n-max", "3"]).status.code(), Some(2));
    assert_eq!(prolate(&["reproduce", "example9"]).status.code(), Some(2));
}
