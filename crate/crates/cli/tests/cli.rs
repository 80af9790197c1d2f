//! End-to-end tests of the `emission` binary: flags, exit codes, file
//! formats.

use std::path::Path;
use std::process::{Command, Output};

fn emission(dir: &Path, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_emission"))
        .current_dir(dir)
        .args(args)
        .output()
        .expect("binary runs")
}

fn read_csv(dir: &Path, name: &str) -> String {
    std::fs::read_to_string(dir.join(name)).expect("output file exists")
}

fn data_rows(csv: &str) -> Vec<Vec<f64>> {
    csv.lines()
        .skip_while(|l| l.starts_with('#'))
        .skip(1) // header
        .map(|l| {
            l.split(',')
                .map(|v| v.parse::<f64>().expect("numeric field"))
                .collect()
        })
        .collect()
}

#[test]
fn default_run_writes_three_curves_starting_at_one() {
    let tmp = tempfile::tempdir().unwrap();
    let out = emission(tmp.path(), &[]);
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );

    let csv = read_csv(tmp.path(), "decay.csv");
    let header = csv
        .lines()
        .find(|l| l.starts_with("t_seconds"))
        .expect("header present");
    assert_eq!(header, "t_seconds,rho_p0.000e0,rho_p1.000e-3,rho_p1.000e-2");

    let rows = data_rows(&csv);
    assert_eq!(rows.len(), 200);
    assert_eq!(rows[0][0], 0.0);
    assert_eq!(&rows[0][1..], &[1.0, 1.0, 1.0]);

    // Larger momentum decays at least as fast at every t > 0.
    for row in &rows[1..] {
        assert!(row[2] <= row[1]);
        assert!(row[3] <= row[2]);
    }

    // Per-momentum gamma echoes in the comments, in MeV and 1/s.
    assert_eq!(csv.lines().filter(|l| l.starts_with("# gamma[")).count(), 3);
    assert!(csv.contains("1/s"));
}

#[test]
fn two_sample_short_run() {
    let tmp = tempfile::tempdir().unwrap();
    let out = emission(
        tmp.path(),
        &[
            "--samples",
            "2",
            "--tmax-s",
            "1e-9",
            "--momenta-mev",
            "0,0.001",
        ],
    );
    assert!(out.status.success());
    let rows = data_rows(&read_csv(tmp.path(), "decay.csv"));
    assert_eq!(rows.len(), 2);
    assert!(rows[1][1] < 1.0);
    assert!(rows[1][2] < 1.0);
}

#[test]
fn unknown_flag_exits_1_with_one_line() {
    let tmp = tempfile::tempdir().ok().unwrap();
    let out = emission(tmp.path(), &["--bogus"]);
    assert_eq!(out.status.code(), Some(1));
    let stderr = String::from_utf8_lossy(&out.stderr);
    assert!(stderr.contains("--bogus"), "{stderr}");
    assert_eq!(stderr.trim_end().lines().count(), 1, "{stderr}");
}

#[test]
fn negative_mass_exits_1_naming_the_flag() {
    let tmp = tempfile::tempdir().unwrap();
    let out = emission(tmp.path(), &["--mass-mev", "-1"]);
    assert_eq!(out.status.code(), Some(1));
    let stderr = String::from_utf8_lossy(&out.stderr);
    assert!(stderr.contains("--mass-mev"), "{stderr}");
    assert!(!tmp.path().join("decay.csv").exists());
}

#[test]
fn oracle_disagreement_exits_2_and_writes_nothing() {
    // Approx mode far outside its validity: the closed/oracle gate trips.
    let tmp = tempfile::tempdir().unwrap();
    let out = emission(
        tmp.path(),
        &[
            "--mode",
            "approx",
            "--omega-ev",
            "3e5",
            "--momenta-mev",
            "0.4",
        ],
    );
    assert_eq!(out.status.code(), Some(2));
    let stderr = String::from_utf8_lossy(&out.stderr);
    assert!(stderr.contains("closed ="), "{stderr}");
    assert!(stderr.contains("oracle ="), "{stderr}");
    assert!(!tmp.path().join("decay.csv").exists());
}

#[test]
fn unwritable_output_exits_3() {
    let tmp = tempfile::tempdir().unwrap();
    let out = emission(
        tmp.path(),
        &[
            "--out",
            "missing_dir/decay.csv",
            "--samples",
            "2",
            "--tmax-s",
            "1e-9",
        ],
    );
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn plot_script_references_csv_by_name() {
    let tmp = tempfile::tempdir().unwrap();
    let out = emission(
        tmp.path(),
        &[
            "--plot-script",
            "--samples",
            "2",
            "--tmax-s",
            "1e-9",
            "--out",
            "curves.csv",
        ],
    );
    assert!(out.status.success());
    let script = read_csv(tmp.path(), "curves.gnuplot");
    assert!(script.contains("'curves.csv'"), "{script}");
    assert!(script.contains("multiplot layout 3,1"), "{script}");
    assert_eq!(script.matches("plot '").count(), 3);
}

#[test]
fn rate_table_lists_all_components() {
    let tmp = tempfile::tempdir().unwrap();
    let out = emission(
        tmp.path(),
        &["--rate-table", "--samples", "2", "--tmax-s", "1e-9"],
    );
    assert!(out.status.success());
    let table = read_csv(tmp.path(), "decay_rates.csv");
    let mut lines = table.lines();
    assert_eq!(
        lines.next().unwrap(),
        "momentum_mev,gamma_mev,gamma_per_s,i1,i2,i3,i4,mode"
    );
    let rows: Vec<&str> = lines.collect();
    assert_eq!(rows.len(), 3);
    for row in rows {
        assert!(row.ends_with(",exact"));
        let fields: Vec<&str> = row.split(',').collect();
        assert_eq!(fields.len(), 8);
        let gamma: f64 = fields[1].parse().unwrap();
        assert!(gamma > 0.0);
    }
    // I1 and I2 vanish identically at |p| = 0.
    let first = table.lines().nth(1).unwrap();
    let fields: Vec<&str> = first.split(',').collect();
    assert_eq!(fields[3].parse::<f64>().unwrap(), 0.0);
    assert_eq!(fields[4].parse::<f64>().unwrap(), 0.0);
}

#[test]
fn repeated_runs_are_byte_identical() {
    let tmp = tempfile::tempdir().unwrap();
    let args = ["--samples", "50", "--tmax-s", "2e-5"];
    assert!(emission(tmp.path(), &args).status.success());
    let first = std::fs::read(tmp.path().join("decay.csv")).unwrap();
    assert!(emission(tmp.path(), &args).status.success());
    let second = std::fs::read(tmp.path().join("decay.csv")).unwrap();
    assert_eq!(first, second);
}

#[test]
fn approx_mode_matches_exact_at_reference_parameters() {
    let tmp = tempfile::tempdir().unwrap();
    assert!(emission(
        tmp.path(),
        &[
            "--samples",
            "2",
            "--tmax-s",
            "1e-9",
            "--rate-table",
            "--out",
            "exact.csv"
        ]
    )
    .status
    .success());
    assert!(emission(
        tmp.path(),
        &[
            "--samples",
            "2",
            "--tmax-s",
            "1e-9",
            "--rate-table",
            "--mode",
            "approx",
            "--out",
            "approx.csv"
        ]
    )
    .status
    .success());
    let exact = read_csv(tmp.path(), "exact_rates.csv");
    let approx = read_csv(tmp.path(), "approx_rates.csv");
    for (le, la) in exact.lines().skip(1).zip(approx.lines().skip(1)) {
        let ge: f64 = le.split(',').nth(1).unwrap().parse().unwrap();
        let ga: f64 = la.split(',').nth(1).unwrap().parse().unwrap();
        assert!((ge - ga).abs() <= 1e-6 * ge.abs(), "{ge} vs {ga}");
    }
}
