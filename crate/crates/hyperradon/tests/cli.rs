//! Black-box tests of the command-line binary: output formats,
//! reproducibility, and the documented exit codes.

use std::path::PathBuf;
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_hyperradon"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf-8 output")
}

fn tmp(name: &str) -> PathBuf {
    let mut p = std::env::temp_dir();
    p.push(format!("hyperradon-cli-{}-{name}", std::process::id()));
    p
}

#[test]
fn eval_emits_csv_with_header_and_fixed_width_floats() {
    let out = run(&[
        "eval", "bessel-k", "--kappa", "1.0", "--xmin", "0.5", "--xmax", "2.0", "--n", "4",
    ]);
    assert!(out.status.success(), "{out:?}");
    let text = stdout(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert!(lines[0].starts_with("# besselK,kappa="), "{}", lines[0]);
    assert_eq!(lines[1], "x,value,err");
    assert_eq!(lines.len(), 6);
    for line in &lines[2..] {
        for cell in line.split(',') {
            // %.12e: d.dddddddddddde[+-]dd
            let mantissa_len = if cell.starts_with('-') { 15 } else { 14 };
            let (m, e) = cell.split_at(mantissa_len);
            assert!(m.contains('.'), "{cell}");
            assert!(e.starts_with("e+") || e.starts_with("e-"), "{cell}");
        }
    }
}

#[test]
fn eval_output_is_byte_reproducible_across_thread_counts() {
    let args = [
        "eval", "conical", "--kappa", "0.7", "--m", "1", "--xmin", "1.1", "--xmax", "3.0",
        "--n", "7",
    ];
    let one = bin().args(args).env("HYPERRADON_THREADS", "1").output().unwrap();
    let four = bin().args(args).env("HYPERRADON_THREADS", "4").output().unwrap();
    assert!(one.status.success());
    assert_eq!(one.stdout, four.stdout);
    let again = bin().args(args).env("HYPERRADON_THREADS", "4").output().unwrap();
    assert_eq!(four.stdout, again.stdout);
}

#[test]
fn bad_grid_and_bad_config_exit_with_code_two() {
    let out = run(&[
        "eval", "bessel-k", "--kappa", "1.0", "--xmin", "0.5", "--xmax", "2.0", "--n", "1",
    ]);
    assert_eq!(out.status.code(), Some(2), "{out:?}");

    let cfg = tmp("badcfg");
    std::fs::write(&cfg, "no_such_key = 1.0\n").unwrap();
    let out = run(&[
        "--config",
        cfg.to_str().unwrap(),
        "eval",
        "bessel-k",
        "--kappa",
        "1.0",
        "--xmin",
        "0.5",
        "--xmax",
        "2.0",
        "--n",
        "3",
    ]);
    std::fs::remove_file(&cfg).ok();
    assert_eq!(out.status.code(), Some(2), "{out:?}");

    // clap's own usage errors also exit 2
    let out = run(&["eval", "no-such-function", "--kappa", "1.0"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn truncated_arc_quadrature_exits_with_code_three() {
    // a cutoff of 10 leaves an integrand tail far above tolerance
    let cfg = tmp("lowcutoff");
    std::fs::write(&cfg, "sigma_cutoff = 10.0\n").unwrap();
    let out = run(&[
        "--config",
        cfg.to_str().unwrap(),
        "radon",
        "--model",
        "disc",
        "--k",
        "1",
        "--nu",
        "1.0",
        "--gmin",
        "0.1",
        "--gmax",
        "0.5",
        "--n",
        "3",
    ]);
    std::fs::remove_file(&cfg).ok();
    assert_eq!(out.status.code(), Some(3), "{out:?}");
}

#[test]
fn verify_geometry_reports_json_and_succeeds() {
    let out = run(&["verify", "geometry"]);
    assert!(out.status.success(), "{out:?}");
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).expect("valid json");
    assert_eq!(v["schema"], 1);
    assert_eq!(v["suite"], "geometry");
    assert_eq!(v["pass"], true);
    assert!(v["checks"].as_array().unwrap().len() >= 3);
}

#[test]
fn verify_rejects_unknown_suite() {
    let out = run(&["verify", "nonsense"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn radon_halfplane_csv_has_closed_form_and_fit_columns() {
    let out = run(&[
        "radon", "--model", "halfplane", "--k", "1", "--nu", "1.2", "--gmin", "8", "--gmax",
        "40", "--n", "80", "--fit-theta",
    ]);
    assert!(out.status.success(), "{out:?}");
    let text = stdout(&out);
    assert!(text.lines().nth(1).unwrap().contains("closed_re"));
    let fit = text
        .lines()
        .find(|l| l.starts_with("# fit_theta,"))
        .expect("fit_theta comment line");
    let theta: f64 = fit.trim_start_matches("# fit_theta,").parse().unwrap();
    assert!((theta - 3.0 * std::f64::consts::PI / 4.0).abs() < 0.05, "{theta}");
}

#[test]
fn radon_disc_antipodal_column_is_small() {
    let out = run(&[
        "radon", "--model", "disc", "--k", "1", "--nu", "1.0", "--gmin", "-0.5", "--gmax",
        "0.5", "--n", "3", "--antipodal-check",
    ]);
    assert!(out.status.success(), "{out:?}");
    let text = stdout(&out);
    assert!(text.lines().nth(1).unwrap().ends_with("antipodal_dev"));
    for line in text.lines().skip(2) {
        let dev: f64 = line.rsplit(',').next().unwrap().parse().unwrap();
        assert!(dev.abs() < 1e-6, "{line}");
    }
}

#[test]
fn incompatible_flag_combinations_exit_with_code_two() {
    let out = run(&[
        "radon", "--model", "halfplane", "--k", "1", "--nu", "1.0", "--gmin", "1", "--gmax",
        "2", "--n", "3", "--antipodal-check",
    ]);
    assert_eq!(out.status.code(), Some(2));
    let out = run(&[
        "radon", "--model", "disc", "--k", "1.5", "--nu", "1.0", "--gmin", "-0.5", "--gmax",
        "0.5", "--n", "3",
    ]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn svg_output_written_to_file() {
    let path = tmp("plot.svg");
    let out = run(&[
        "--output",
        path.to_str().unwrap(),
        "eval",
        "bessel-k",
        "--kappa",
        "1.0",
        "--xmin",
        "0.5",
        "--xmax",
        "2.0",
        "--n",
        "16",
        "--format",
        "svg",
    ]);
    assert!(out.status.success(), "{out:?}");
    let svg = std::fs::read_to_string(&path).unwrap();
    std::fs::remove_file(&path).ok();
    assert!(svg.starts_with("<svg"));
    assert!(svg.contains("<polyline"));
    assert!(svg.ends_with("</svg>\n"));
}

#[test]
fn help_documents_exit_codes() {
    let out = run(&["--help"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("Exit codes"));
    for code in ["0 ", "1 ", "2 ", "3 "] {
        assert!(text.contains(code), "missing exit code {code}");
    }
}
