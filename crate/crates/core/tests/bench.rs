//! The `bench` subcommand, in its own test binary so no other test competes
//! for the CPU while it is timing.

use std::process::Command;

#[test]
fn bench_reports_six_nondecreasing_rows() {
    let out = Command::new(env!("CARGO_BIN_EXE_grundy"))
        .args([
            "--machine",
            "bench",
            "--min-exp",
            "15",
            "--max-exp",
            "20",
            "--repeats",
            "5",
        ])
        .output()
        .unwrap();
    assert!(out.status.success());
    let stdout = String::from_utf8(out.stdout).unwrap();
    let rows: Vec<(usize, f64)> = stdout
        .lines()
        .filter_map(|l| l.strip_prefix("row="))
        .map(|r| {
            let (n, t) = r.split_once(',').unwrap();
            (n.parse().unwrap(), t.parse().unwrap())
        })
        .collect();
    assert_eq!(rows.len(), 6);
    assert!(stdout.contains("repeats=5"));
    for w in rows.windows(2) {
        assert!(w[1].0 > w[0].0);
        assert!(w[1].1 >= w[0].1, "times not monotone: {rows:?}");
    }
}
