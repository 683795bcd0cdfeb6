//! Command-line front end: special-function tables, verification
//! suites and Radon-transform profiles.
//!
//! All numeric output is rendered in `%.12e`, so a given invocation is
//! byte-for-byte reproducible regardless of `HYPERRADON_THREADS`.

use clap::{Parser, Subcommand, ValueEnum};
use hyperradon::config::{thread_cap, Tolerances};
use hyperradon::error::Error;
use hyperradon::geometry::{DiscGeodesic, HalfPlaneGeodesic};
use hyperradon::output::{fmt_e, write_output, Table};
use hyperradon::radon::{
    antipodal_check, extract_theta, radon_disc_closed_form, radon_disc_mode,
    radon_halfplane_asymptotic, radon_halfplane_mode,
};
use hyperradon::specfun::conical::conical_p;
use hyperradon::specfun::{bessel_k_imag, ConicalOrder};
use hyperradon::spectral::HalfPlaneMode;
use hyperradon::verify::run_suite;
use std::path::PathBuf;
use std::process::ExitCode;

const EXIT_HELP: &str = "Exit codes:
  0  success (and, for verify, all checks passed)
  1  a verification check failed or output could not be written
  2  invalid parameters or command line
  3  a computation did not converge to tolerance";

#[derive(Parser)]
#[command(name = "hyperradon", version, about = "Hyperbolic-plane Radon transform toolkit", after_help = EXIT_HELP)]
struct Cli {
    /// key=value file overriding the built-in tolerances
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    /// write output here instead of stdout
    #[arg(long, global = true)]
    output: Option<PathBuf>,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Csv,
    Svg,
}

#[derive(Clone, Copy, ValueEnum)]
enum Function {
    /// modified Bessel K of imaginary order i*kappa
    BesselK,
    /// conical Legendre function P^m_{i*kappa - 1/2}
    Conical,
}

#[derive(Clone, Copy, ValueEnum)]
enum Model {
    Halfplane,
    Disc,
}

#[derive(Subcommand)]
enum Cmd {
    /// Tabulate a special function on a uniform grid
    Eval {
        #[arg(value_enum)]
        function: Function,
        /// imaginary part of the order
        #[arg(long)]
        kappa: f64,
        /// integer order of the conical function
        #[arg(long, default_value_t = 0)]
        m: i32,
        #[arg(long)]
        xmin: f64,
        #[arg(long)]
        xmax: f64,
        /// number of grid points (>= 2)
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value = "csv")]
        format: Format,
    },
    /// Run a verification suite and emit a JSON report
    Verify {
        /// geometry, group, specfun, spectral, radon or all
        suite: String,
        /// boundary angle adding an extension-parameter sweep entry to
        /// the spectral suite
        #[arg(long)]
        theta: Option<f64>,
    },
    /// Tabulate the Radon image of a Laplacian eigenmode along a
    /// one-parameter geodesic family, next to its closed form
    Radon {
        #[arg(long, value_enum)]
        model: Model,
        /// angular index of the mode (integer for the disc model)
        #[arg(long)]
        k: f64,
        /// spectral order of the mode
        #[arg(long)]
        nu: f64,
        /// grid start: geodesic radius eta for halfplane, offset xi for disc
        #[arg(long)]
        gmin: f64,
        #[arg(long)]
        gmax: f64,
        /// number of grid points (>= 2)
        #[arg(long)]
        n: usize,
        /// angular position of the disc geodesic
        #[arg(long, default_value_t = 0.0)]
        theta: f64,
        /// append the boundary angle fitted from the asymptotics
        #[arg(long)]
        fit_theta: bool,
        /// add a column with the antipodal-chart deviation (disc model)
        #[arg(long)]
        antipodal_check: bool,
        #[arg(long, value_enum, default_value = "csv")]
        format: Format,
    },
}

/// Evaluate `f` on 0..n in index order, split across up to
/// `HYPERRADON_THREADS` workers; chunking never changes the result.
fn par_map<T, F>(n: usize, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(usize) -> T + Sync,
{
    let threads = thread_cap().min(n.max(1));
    if threads <= 1 {
        return (0..n).map(f).collect();
    }
    let chunk = n.div_ceil(threads);
    let mut out: Vec<Option<T>> = (0..n).map(|_| None).collect();
    std::thread::scope(|s| {
        for (t, slot) in out.chunks_mut(chunk).enumerate() {
            let f = &f;
            s.spawn(move || {
                for (i, cell) in slot.iter_mut().enumerate() {
                    *cell = Some(f(t * chunk + i));
                }
            });
        }
    });
    out.into_iter().map(|o| o.expect("every index computed")).collect()
}

fn grid(lo: f64, hi: f64, n: usize) -> Result<Vec<f64>, Error> {
    if n < 2 || !(hi > lo) {
        return Err(Error::InvalidParameter(format!(
            "grid needs n >= 2 and xmax > xmin, got n = {n}, [{lo}, {hi}]"
        )));
    }
    Ok((0..n).map(|i| lo + (hi - lo) * i as f64 / (n - 1) as f64).collect())
}

fn collect_rows(rows: Vec<Result<Vec<f64>, Error>>) -> Result<Vec<Vec<f64>>, Error> {
    rows.into_iter().collect()
}

fn run_eval(
    function: Function,
    kappa: f64,
    m: i32,
    xmin: f64,
    xmax: f64,
    n: usize,
) -> Result<Table, Error> {
    let xs = grid(xmin, xmax, n)?;
    let (title, rows) = match function {
        Function::BesselK => {
            let rows = par_map(n, |i| {
                let r = bessel_k_imag(kappa, xs[i])?;
                Ok(vec![xs[i], r.re(), r.abs_error])
            });
            (format!("besselK,kappa={}", fmt_e(kappa)), rows)
        }
        Function::Conical => {
            let rows = par_map(n, |i| {
                let r = conical_p(ConicalOrder { kappa, m }, xs[i])?;
                Ok(vec![xs[i], r.re(), r.abs_error])
            });
            (format!("conical,kappa={},m={m}", fmt_e(kappa)), rows)
        }
    };
    Ok(Table {
        title,
        columns: vec!["x".into(), "value".into(), "err".into()],
        rows: collect_rows(rows)?,
    })
}

fn run_radon(
    model: Model,
    k: f64,
    nu: f64,
    gs: &[f64],
    theta: f64,
    antipodal: bool,
    tol: &Tolerances,
) -> Result<Table, Error> {
    if antipodal && matches!(model, Model::Halfplane) {
        return Err(Error::InvalidParameter(
            "--antipodal-check applies to the disc model".into(),
        ));
    }
    let cutoff = tol.sigma_cutoff;
    let mut columns: Vec<String> =
        ["x", "re", "im", "closed_re", "closed_im", "rel_diff"].map(String::from).into();
    let n = gs.len();
    let rows = match model {
        Model::Halfplane => par_map(n, |i| {
            let eta = gs[i];
            if eta <= 0.0 {
                return Err(Error::InvalidParameter(format!(
                    "halfplane model needs a positive radius grid, got {eta}"
                )));
            }
            let g = HalfPlaneGeodesic { t: 0.0, xi: eta.ln(), orientation: 1 };
            let r = radon_halfplane_mode(&HalfPlaneMode { k, kappa: nu }, &g, cutoff)?;
            let c = radon_halfplane_asymptotic(k, nu, 0.0, eta);
            Ok(vec![eta, r.value.re, r.value.im, c.re, c.im, (r.value - c).norm() / c.norm()])
        }),
        Model::Disc => {
            if k.fract() != 0.0 {
                return Err(Error::InvalidParameter(format!(
                    "disc model needs an integer angular index, got {k}"
                )));
            }
            let ki = k as i32;
            par_map(n, |i| {
                let g = DiscGeodesic { theta, xi: gs[i], orientation: 1 };
                let r = radon_disc_mode(ki, nu, &g, cutoff)?;
                let c = radon_disc_closed_form(ki, nu, &g)?;
                let mut row =
                    vec![gs[i], r.value.re, r.value.im, c.re, c.im, (r.value - c).norm() / c.norm()];
                if antipodal {
                    row.push(antipodal_check(ki, nu, &[(theta, gs[i])], cutoff.max(45.0))?);
                }
                Ok(row)
            })
        }
    };
    if antipodal {
        columns.push("antipodal_dev".into());
    }
    Ok(Table {
        title: format!("radon,k={},nu={},theta={}", fmt_e(k), fmt_e(nu), fmt_e(theta)),
        columns,
        rows: collect_rows(rows)?,
    })
}

fn render(table: &Table, format: Format, fit: Option<f64>) -> Result<String, Error> {
    match format {
        Format::Csv => {
            let mut out = table.to_csv();
            if let Some(theta) = fit {
                out.push_str(&format!("# fit_theta,{}\n", fmt_e(theta)));
            }
            Ok(out)
        }
        Format::Svg => table.to_svg(0, 1),
    }
}

fn run(cli: Cli) -> Result<bool, Error> {
    let tol = match &cli.config {
        Some(p) => Tolerances::from_file(p)?,
        None => Tolerances::default(),
    };
    match cli.cmd {
        Cmd::Eval { function, kappa, m, xmin, xmax, n, format } => {
            let table = run_eval(function, kappa, m, xmin, xmax, n)?;
            write_output(cli.output.as_deref(), &render(&table, format, None)?)?;
            Ok(true)
        }
        Cmd::Verify { suite, theta } => {
            let report = run_suite(&suite, &tol, theta)?;
            let mut json = report.to_json();
            json.push('\n');
            write_output(cli.output.as_deref(), &json)?;
            Ok(report.pass)
        }
        Cmd::Radon { model, k, nu, gmin, gmax, n, theta, fit_theta, antipodal_check, format } => {
            let gs = grid(gmin, gmax, n)?;
            let table = run_radon(model, k, nu, &gs, theta, antipodal_check, &tol)?;
            let fit = if fit_theta {
                if !matches!(model, Model::Halfplane) {
                    return Err(Error::InvalidParameter(
                        "--fit-theta applies to the halfplane model".into(),
                    ));
                }
                Some(extract_theta(k, nu, gmin, gmax, n, tol.sigma_cutoff)?)
            } else {
                None
            };
            write_output(cli.output.as_deref(), &render(&table, format, fit)?)?;
            Ok(true)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse(); // clap exits with code 2 on usage errors
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e @ Error::NonConvergence { .. }) => {
            eprintln!("error: {e}");
            ExitCode::from(3)
        }
        Err(e @ Error::Io(_)) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
