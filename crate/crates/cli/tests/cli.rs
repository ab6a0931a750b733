use std::fs;
use std::path::Path;
use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_dunkl-pauli")).args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).unwrap()
}

/// Data rows of a CSV with `#` comments and one header line.
fn rows(text: &str) -> Vec<Vec<String>> {
    text.lines()
        .filter(|l| !l.starts_with('#'))
        .skip(1)
        .map(|l| l.split(',').map(str::to_owned).collect())
        .collect()
}

fn thermo_values(text: &str) -> Vec<f64> {
    rows(text).iter().map(|r| r[1].parse().unwrap()).collect()
}

fn assert_single_error(out: &Output) {
    assert_eq!(out.status.code(), Some(2));
    let err = stderr(out);
    assert_eq!(err.lines().count(), 1, "{err}");
    assert!(err.starts_with("error: "), "{err}");
}

#[test]
fn spectrum_ground_level_undeformed() {
    let out = run(&["spectrum", "--nu1", "0", "--nu2", "0", "--nmax", "0", "--lmax", "1", "--ms", "1"]);
    assert!(out.status.success());
    let rows = rows(&stdout(&out));
    assert_eq!(rows.len(), 1);
    assert_eq!(rows[0][4], "1");
    assert_eq!(rows[0][10].parse::<f64>().unwrap(), 2.0);
}

#[test]
fn spectrum_deformed_level() {
    let out = run(&["spectrum", "--nu1", "0.4", "--nu2", "0.4", "--nmax", "0", "--ell", "1", "--ms", "1"]);
    assert!(out.status.success());
    let e: f64 = rows(&stdout(&out))[0][10].parse().unwrap();
    assert!((e - 2.341640786499874).abs() < 1e-12, "{e}");
}

#[test]
fn spectrum_rows_sorted_and_zero_mode_optional() {
    let text = stdout(&run(&["spectrum", "--nmax", "1", "--lmax", "2"]));
    let keys: Vec<(u32, String, i8)> = rows(&text).iter().map(|r| (r[3].parse().unwrap(), r[4].clone(), r[5].parse().unwrap())).collect();
    assert_eq!(keys.len(), 8);
    assert!(keys.iter().all(|k| k.1 != "0"));
    let with_zero = stdout(&run(&["spectrum", "--nmax", "1", "--lmax", "2", "--include-zero-mode"]));
    assert_eq!(rows(&with_zero).len(), 12);
}

#[test]
fn spectrum_empty_range_is_header_only() {
    let out = run(&["spectrum", "--sector", "+-", "--lmax", "0"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert_eq!(text.lines().count(), 1);
    assert!(text.starts_with("sector,"));
}

#[test]
fn spectrum_rejects_wrong_parity_ell() {
    assert_single_error(&run(&["spectrum", "--sector", "+-", "--ell", "1"]));
    assert_single_error(&run(&["spectrum", "--nu1", "-0.6"]));
}

#[test]
fn thermo_partition_value() {
    let out = run(&["thermo", "--ell", "0", "--tmin", "0.5", "--tmax", "0.5", "--steps", "1"]);
    assert!(out.status.success(), "{}", stderr(&out));
    let z = thermo_values(&stdout(&out))[0];
    assert!((z - 1.3130352854993315).abs() < 1e-12, "{z}");
}

#[test]
fn thermo_heat_capacity_high_temperature() {
    let out = run(&["thermo", "--quantity", "C", "--tmin", "100", "--tmax", "100", "--steps", "1"]);
    let c = thermo_values(&stdout(&out))[0];
    assert!((c - 1.0).abs() < 1e-3, "{c}");
}

#[test]
fn thermo_mode_shifts_energy_only() {
    let base = ["thermo", "--nu1", "0.2", "--nu2", "0.4", "--steps", "20"];
    let get = |q: &str, mode: &str| {
        let mut args = base.to_vec();
        args.extend(["--quantity", q, "--mode", mode]);
        thermo_values(&stdout(&run(&args)))
    };
    assert_eq!(get("Z", "consistent"), get("Z", "paper-faithful"));
    let mut args = base.to_vec();
    args.extend(["--quantity", "U"]);
    let text = stdout(&run(&args));
    let rho: f64 = text.split_whitespace().find_map(|w| w.strip_prefix("rho=")).unwrap().parse().unwrap();
    let (u, p) = (get("U", "consistent"), get("U", "paper-faithful"));
    for (a, b) in u.iter().zip(&p) {
        assert!((a - b - 2.0 * rho).abs() < 1e-9, "{a} {b} {rho}");
    }
}

#[test]
fn thermo_rejects_nonpositive_temperature() {
    assert_single_error(&run(&["thermo", "--tmin", "0", "--tmax", "1"]));
    assert_single_error(&run(&["thermo", "--tmin", "-1", "--tmax", "1"]));
    assert_single_error(&run(&["thermo", "--quantity", "Q"]));
}

#[test]
fn figure_manifest_lists_existing_files() {
    let dir = tempfile::tempdir().unwrap();
    let out = run(&["figure", "--figure", "2a", "--out", dir.path().to_str().unwrap()]);
    assert!(out.status.success(), "{}", stderr(&out));
    let manifest = fs::read_to_string(dir.path().join("fig2a_manifest.csv")).unwrap();
    let rows = rows(&manifest);
    assert_eq!(rows.len(), 4);
    for r in &rows {
        assert!(dir.path().join(&r[1]).exists(), "{}", r[1]);
    }
}

#[test]
fn figure_five_is_heat_capacity() {
    let dir = tempfile::tempdir().unwrap();
    let out = run(&["figure", "--figure", "5", "--steps", "10", "--out", dir.path().to_str().unwrap()]);
    assert!(out.status.success());
    let manifest = fs::read_to_string(dir.path().join("fig5_manifest.csv")).unwrap();
    assert!(manifest.lines().next().unwrap().contains("quantity=C"));
    assert_eq!(rows(&manifest).len(), 36);
}

#[test]
fn figure_rejects_unknown_id() {
    let dir = tempfile::tempdir().unwrap();
    assert_single_error(&run(&["figure", "--figure", "9", "--out", dir.path().to_str().unwrap()]));
    assert_single_error(&run(&["figure", "--figure", "2e", "--out", dir.path().to_str().unwrap()]));
}

fn figure_file(dir: &Path, name: &str) -> Vec<f64> {
    thermo_values(&fs::read_to_string(dir.join(name)).unwrap())
}

#[test]
fn figure_curve_matches_thermo_command() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().to_str().unwrap();
    assert!(run(&["figure", "--figure", "1a", "--out", path]).status.success());
    let from_figure = figure_file(dir.path(), "fig1a_pp_nu1_0_nu2_0.csv");
    let direct = thermo_values(&stdout(&run(&["thermo", "--quantity", "Z"])));
    assert_eq!(from_figure, direct);
}

#[test]
fn output_is_deterministic() {
    let a = run(&["spectrum", "--nu1", "1/3", "--nu2", "-0.25", "--nmax", "3", "--lmax", "4"]);
    let b = run(&["spectrum", "--nu1", "1/3", "--nu2", "-0.25", "--nmax", "3", "--lmax", "4"]);
    assert_eq!(a.stdout, b.stdout);
    let d1 = tempfile::tempdir().unwrap();
    let d2 = tempfile::tempdir().unwrap();
    for d in [&d1, &d2] {
        assert!(run(&["figure", "--figure", "7b", "--out", d.path().to_str().unwrap()]).status.success());
    }
    for entry in fs::read_dir(d1.path()).unwrap() {
        let name = entry.unwrap().file_name();
        assert_eq!(fs::read(d1.path().join(&name)).unwrap(), fs::read(d2.path().join(&name)).unwrap());
    }
}

#[test]
fn verify_without_oracle_passes() {
    let out = run(&["verify", "--skip-oracle"]);
    assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));
}

#[test]
fn verify_detects_corrupted_eta() {
    let out = run(&["verify", "--skip-oracle", "--inject-eta-flip"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).contains("eta(+1,-1)"), "{}", stdout(&out));
}

#[test]
fn verify_full_passes() {
    let out = run(&["verify"]);
    assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));
}
