//! Deterministic renderers for the CSV, the rate table and the gnuplot
//! script. No timestamps; identical configs produce identical bytes.

use std::path::{Path, PathBuf};

use crate::config::RunConfig;
use crate::run::MomentumResult;

/// 17 significant digits, enough to round-trip an f64. Negative zero is
/// folded into plain zero.
pub fn sig17(x: f64) -> String {
    let x = if x == 0.0 { 0.0 } else { x };
    format!("{x:.16e}")
}

/// Fixed scientific rendering of a momentum for column headers.
pub fn momentum_label(p: f64) -> String {
    format!("{p:.3e}")
}

pub fn plot_script_path(out: &Path) -> PathBuf {
    out.with_extension("gnuplot")
}

pub fn rate_table_path(out: &Path) -> PathBuf {
    let stem = out
        .file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_else(|| "decay".to_string());
    out.with_file_name(format!("{stem}_rates.csv"))
}

pub fn render_csv(cfg: &RunConfig, results: &[MomentumResult]) -> String {
    let mut out = String::new();
    out.push_str("# diagonal density-matrix decay: rho(t) = exp(-2*gamma*t/hbar)\n");
    out.push_str(&format!(
        "# config: mass_mev={} omega_ev={} tmax_s={} samples={} quad_order={} mode={} out={} plot_script={} rate_table={}\n",
        sig17(cfg.mass_mev),
        sig17(cfg.omega_ev),
        sig17(cfg.t_max_s),
        cfg.samples,
        cfg.quadrature_order,
        cfg.mode.as_str(),
        cfg.output_path.display(),
        cfg.emit_plot_script,
        cfg.emit_rate_table,
    ));
    out.push_str(&format!(
        "# momenta_mev: {}\n",
        cfg.momenta_mev
            .iter()
            .map(|p| sig17(*p))
            .collect::<Vec<_>>()
            .join(",")
    ));
    for r in results {
        out.push_str(&format!(
            "# gamma[p={} MeV] = {} MeV = {} 1/s\n",
            momentum_label(r.momentum_mev),
            sig17(r.closed.gamma_mev),
            sig17(r.gamma_per_s),
        ));
    }

    out.push_str("t_seconds");
    for r in results {
        out.push_str(&format!(",rho_p{}", momentum_label(r.momentum_mev)));
    }
    out.push('\n');

    let times = results[0].curve.times_s();
    for (i, t) in times.iter().enumerate() {
        out.push_str(&sig17(*t));
        for r in results {
            out.push(',');
            out.push_str(&sig17(r.curve.rho_diag()[i]));
        }
        out.push('\n');
    }
    out
}

pub fn render_rate_table(cfg: &RunConfig, results: &[MomentumResult]) -> String {
    let mut out = String::new();
    out.push_str("momentum_mev,gamma_mev,gamma_per_s,i1,i2,i3,i4,mode\n");
    for r in results {
        out.push_str(&format!(
            "{},{},{},{},{},{},{},{}\n",
            sig17(r.momentum_mev),
            sig17(r.closed.gamma_mev),
            sig17(r.gamma_per_s),
            sig17(r.closed.i1),
            sig17(r.closed.i2),
            sig17(r.closed.i3),
            sig17(r.closed.i4),
            cfg.mode.as_str(),
        ));
    }
    out
}

/// Gnuplot script with one panel per momentum, referencing the CSV by
/// its file name so the pair stays relocatable.
pub fn render_plot_script(cfg: &RunConfig, results: &[MomentumResult], csv_name: &str) -> String {
    let panels = results.len();
    let mut out = String::new();
    out.push_str("# decay curves, one panel per momentum\n");
    out.push_str("set datafile separator ','\n");
    out.push_str(&format!(
        "set terminal pngcairo size 900,{}\n",
        300 * panels.max(1)
    ));
    out.push_str(&format!(
        "set output '{}'\n",
        Path::new(csv_name).with_extension("png").to_string_lossy()
    ));
    out.push_str(&format!("set multiplot layout {panels},1\n"));
    out.push_str("set xlabel 't (seconds)'\n");
    out.push_str("set ylabel 'rho_diag'\n");
    out.push_str("set yrange [0:1.05]\n");
    for (idx, r) in results.iter().enumerate() {
        out.push_str(&format!(
            "plot '{csv_name}' using 1:{} with lines lw 2 title '|p| = {} MeV, mode {}'\n",
            idx + 2,
            momentum_label(r.momentum_mev),
            cfg.mode.as_str(),
        ));
    }
    out.push_str("unset multiplot\n");
    out
}
