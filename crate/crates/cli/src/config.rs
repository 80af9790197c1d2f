//! Flag parsing and validation. Usage problems are reported as a single
//! diagnostic line naming the offending flag and exit with status 1.

use std::ffi::OsString;
use std::path::PathBuf;

use clap::error::ErrorKind;
use clap::{Parser, ValueEnum};
use emission::RadicalMode;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ModeArg {
    Exact,
    Approx,
}

impl ModeArg {
    pub fn as_str(self) -> &'static str {
        match self {
            ModeArg::Exact => "exact",
            ModeArg::Approx => "approx",
        }
    }

    pub fn radical_mode(self) -> RadicalMode {
        match self {
            ModeArg::Exact => RadicalMode::Exact,
            ModeArg::Approx => RadicalMode::Approx,
        }
    }
}

/// Defaults pin the reference parameter point: m = 0.51 MeV,
/// |p| in {0, 0.001, 0.01} MeV, ω = 12.8 eV.
#[derive(Debug, Parser)]
#[command(
    name = "emission",
    version,
    about = "Photon-emission decay rates and density-matrix decay curves",
    disable_help_subcommand = true
)]
struct Cli {
    /// Particle mass in MeV
    #[arg(long, default_value_t = 0.51, allow_negative_numbers = true)]
    mass_mev: f64,

    /// Comma-separated momentum magnitudes in MeV
    #[arg(
        long,
        value_delimiter = ',',
        default_values_t = [0.0, 0.001, 0.01],
        allow_negative_numbers = true
    )]
    momenta_mev: Vec<f64>,

    /// Photon energy in eV
    #[arg(long, default_value_t = 12.8, allow_negative_numbers = true)]
    omega_ev: f64,

    /// Upper end of the time axis in seconds
    #[arg(long = "tmax-s", default_value_t = 6e-5, allow_negative_numbers = true)]
    tmax_s: f64,

    /// Samples per decay curve
    #[arg(long, default_value_t = 200)]
    samples: usize,

    /// Gauss-Legendre order of the angular integration
    #[arg(long = "quad-order", default_value_t = 64)]
    quad_order: usize,

    /// Radical handling in the closed-form integrals
    #[arg(long, value_enum, default_value_t = ModeArg::Exact)]
    mode: ModeArg,

    /// Output CSV path
    #[arg(long, default_value = "decay.csv")]
    out: PathBuf,

    /// Also write a gnuplot script next to the CSV
    #[arg(long, default_value_t = false)]
    plot_script: bool,

    /// Also write a per-momentum rate table next to the CSV
    #[arg(long, default_value_t = false)]
    rate_table: bool,
}

/// Validated run parameters.
#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    pub mass_mev: f64,
    /// Ascending, duplicate-free.
    pub momenta_mev: Vec<f64>,
    pub omega_ev: f64,
    pub t_max_s: f64,
    pub samples: usize,
    pub quadrature_order: usize,
    pub mode: ModeArg,
    pub output_path: PathBuf,
    pub emit_plot_script: bool,
    pub emit_rate_table: bool,
}

#[derive(Debug, Clone, PartialEq)]
pub struct UsageError(pub String);

impl std::fmt::Display for UsageError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Help or version was requested; print the text and exit 0.
pub enum ParseOutcome {
    Run(RunConfig),
    Informational(String),
}

pub fn parse_args<I, T>(argv: I) -> Result<ParseOutcome, UsageError>
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(err)
            if matches!(
                err.kind(),
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion
            ) =>
        {
            return Ok(ParseOutcome::Informational(err.to_string()));
        }
        Err(err) => {
            // First line of the clap rendering names the offending flag.
            let line = err
                .render()
                .to_string()
                .lines()
                .next()
                .unwrap_or("invalid arguments")
                .to_string();
            return Err(UsageError(line));
        }
    };
    validate(cli).map(ParseOutcome::Run)
}

fn validate(cli: Cli) -> Result<RunConfig, UsageError> {
    if !(cli.mass_mev > 0.0 && cli.mass_mev.is_finite()) {
        return Err(UsageError(format!(
            "error: --mass-mev must be positive and finite, got {}",
            cli.mass_mev
        )));
    }
    if !(cli.omega_ev > 0.0 && cli.omega_ev.is_finite()) {
        return Err(UsageError(format!(
            "error: --omega-ev must be positive and finite, got {}",
            cli.omega_ev
        )));
    }
    if !(cli.tmax_s > 0.0 && cli.tmax_s.is_finite()) {
        return Err(UsageError(format!(
            "error: --tmax-s must be positive and finite, got {}",
            cli.tmax_s
        )));
    }
    if cli.samples < 2 {
        return Err(UsageError(format!(
            "error: --samples must be at least 2, got {}",
            cli.samples
        )));
    }
    if cli.quad_order < 8 {
        return Err(UsageError(format!(
            "error: --quad-order must be at least 8, got {}",
            cli.quad_order
        )));
    }
    if cli.momenta_mev.is_empty() {
        return Err(UsageError(
            "error: --momenta-mev needs at least one value".to_string(),
        ));
    }
    for p in &cli.momenta_mev {
        if !(p.is_finite() && *p >= 0.0) {
            return Err(UsageError(format!(
                "error: --momenta-mev entries must be non-negative and finite, got {p}"
            )));
        }
    }
    let mut momenta = cli.momenta_mev;
    momenta.sort_by(|a, b| a.partial_cmp(b).expect("finite momenta"));
    if momenta.windows(2).any(|w| w[0] == w[1]) {
        return Err(UsageError(
            "error: --momenta-mev entries must be distinct".to_string(),
        ));
    }
    Ok(RunConfig {
        mass_mev: cli.mass_mev,
        momenta_mev: momenta,
        omega_ev: cli.omega_ev,
        t_max_s: cli.tmax_s,
        samples: cli.samples,
        quadrature_order: cli.quad_order,
        mode: cli.mode,
        output_path: cli.out,
        emit_plot_script: cli.plot_script,
        emit_rate_table: cli.rate_table,
    })
}
