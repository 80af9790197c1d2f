//! The run pipeline: momentum points evaluated on worker threads, the
//! closed-form/oracle cross-check gate, then deterministic file output
//! ordered by ascending momentum.

use std::fs;
use std::path::Path;

use emission::{
    build_curve, decay_rate_closed, decay_rate_trace_oracle, DecayCurve, QuadratureRule,
    RateBreakdown, RateError, RatePoint, Spacing, UnitBridge,
};

use crate::config::RunConfig;
use crate::output;

/// Closed form and trace oracle must agree this well before any output
/// is written.
pub const ORACLE_GATE_REL: f64 = 1e-6;

#[derive(Debug)]
pub struct MomentumResult {
    pub momentum_mev: f64,
    pub closed: RateBreakdown,
    pub oracle_gamma_mev: f64,
    pub gamma_per_s: f64,
    pub curve: DecayCurve,
}

pub enum RunError {
    /// A physics invariant (positivity, convergence, oracle agreement)
    /// failed; exit status 2.
    Physics(String),
    /// Output could not be written; exit status 3.
    Io(String),
}

fn compute_point(
    cfg: &RunConfig,
    momentum_mev: f64,
    rule: &QuadratureRule,
) -> Result<MomentumResult, String> {
    let point = RatePoint::new(cfg.mass_mev, momentum_mev, cfg.omega_ev)
        .map_err(|e| format!("p={momentum_mev} MeV: {e}"))?;
    let closed = decay_rate_closed(&point, cfg.mode.radical_mode(), rule)
        .map_err(|e| format!("p={momentum_mev} MeV: {e}"))?;
    let oracle_gamma_mev = decay_rate_trace_oracle(&point, rule)
        .map_err(|e: RateError| format!("p={momentum_mev} MeV: {e}"))?;

    if !closed.gamma_mev.is_finite() || closed.gamma_mev <= 0.0 {
        return Err(format!(
            "p={momentum_mev} MeV: non-positive rate {} MeV",
            closed.gamma_mev
        ));
    }
    let rel = (closed.gamma_mev - oracle_gamma_mev).abs()
        / closed.gamma_mev.abs().max(oracle_gamma_mev.abs());
    if rel > ORACLE_GATE_REL {
        return Err(format!(
            "p={momentum_mev} MeV: closed form and trace oracle disagree: \
             closed = {:e} MeV, oracle = {:e} MeV, relative difference {rel:e}",
            closed.gamma_mev, oracle_gamma_mev
        ));
    }

    let curve = build_curve(closed.gamma_mev, cfg.t_max_s, cfg.samples, Spacing::Linear)
        .map_err(|e| format!("p={momentum_mev} MeV: {e}"))?;
    Ok(MomentumResult {
        momentum_mev,
        closed,
        oracle_gamma_mev,
        gamma_per_s: UnitBridge::default().inverse_seconds(closed.gamma_mev),
        curve,
    })
}

pub fn run(cfg: &RunConfig) -> Result<(), RunError> {
    let rule = QuadratureRule::gauss_legendre(cfg.quadrature_order)
        .map_err(|e| RunError::Physics(e.to_string()))?;

    // One worker per momentum; results land in their slot, so output
    // order is by ascending momentum regardless of completion order.
    let mut slots: Vec<Option<Result<MomentumResult, String>>> =
        cfg.momenta_mev.iter().map(|_| None).collect();
    std::thread::scope(|scope| {
        for (slot, &p) in slots.iter_mut().zip(cfg.momenta_mev.iter()) {
            let rule = &rule;
            scope.spawn(move || {
                *slot = Some(compute_point(cfg, p, rule));
            });
        }
    });

    let mut results = Vec::with_capacity(slots.len());
    for slot in slots {
        match slot.expect("worker filled its slot") {
            Ok(r) => results.push(r),
            Err(msg) => return Err(RunError::Physics(msg)),
        }
    }

    let csv = output::render_csv(cfg, &results);
    write_text(&cfg.output_path, &csv).map_err(RunError::Io)?;

    if cfg.emit_rate_table {
        let table = output::render_rate_table(cfg, &results);
        write_text(&output::rate_table_path(&cfg.output_path), &table).map_err(RunError::Io)?;
    }

    if cfg.emit_plot_script {
        // Best effort: a plotting failure must not gate the exit status.
        let csv_name = cfg
            .output_path
            .file_name()
            .map(|s| s.to_string_lossy().into_owned())
            .unwrap_or_else(|| "decay.csv".to_string());
        let script = output::render_plot_script(cfg, &results, &csv_name);
        if let Err(msg) = write_text(&output::plot_script_path(&cfg.output_path), &script) {
            eprintln!("warning: plot script not written: {msg}");
        }
    }

    for r in &results {
        println!(
            "p = {} MeV: gamma = {:e} MeV ({:e} 1/s), oracle agrees to {:e}",
            output::momentum_label(r.momentum_mev),
            r.closed.gamma_mev,
            r.gamma_per_s,
            (r.closed.gamma_mev - r.oracle_gamma_mev).abs() / r.closed.gamma_mev
        );
    }
    println!("wrote {}", cfg.output_path.display());
    Ok(())
}

fn write_text(path: &Path, text: &str) -> Result<(), String> {
    fs::write(path, text).map_err(|e| format!("{}: {e}", path.display()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::config::{parse_args, ParseOutcome};

    fn config(args: &[&str]) -> RunConfig {
        match parse_args(std::iter::once("emission").chain(args.iter().copied())).unwrap() {
            ParseOutcome::Run(cfg) => cfg,
            ParseOutcome::Informational(_) => panic!("unexpected help"),
        }
    }

    #[test]
    fn default_point_passes_the_gate() {
        let cfg = config(&["--samples", "4", "--tmax-s", "1e-9"]);
        let rule = QuadratureRule::gauss_legendre(cfg.quadrature_order).unwrap();
        let r = compute_point(&cfg, 0.0, &rule).unwrap();
        assert!(r.closed.gamma_mev > 0.0);
        assert_eq!(r.curve.len(), 4);
        assert_eq!(r.curve.rho_diag()[0], 1.0);
    }

    #[test]
    fn approx_mode_fails_the_gate_where_the_expansion_breaks() {
        // |p|ω of order m^2: the approximate radical is several percent
        // off and the cross-check must refuse.
        let cfg = config(&[
            "--mode",
            "approx",
            "--omega-ev",
            "3e5",
            "--momenta-mev",
            "0.4",
        ]);
        let rule = QuadratureRule::gauss_legendre(cfg.quadrature_order).unwrap();
        let err = compute_point(&cfg, 0.4, &rule).unwrap_err();
        assert!(err.contains("disagree"), "{err}");
        assert!(err.contains("closed ="), "{err}");
        assert!(err.contains("oracle ="), "{err}");
    }

    #[test]
    fn render_is_deterministic() {
        let cfg = config(&["--samples", "3", "--tmax-s", "1e-9"]);
        let rule = QuadratureRule::gauss_legendre(cfg.quadrature_order).unwrap();
        let results: Vec<_> = cfg
            .momenta_mev
            .iter()
            .map(|&p| compute_point(&cfg, p, &rule).unwrap())
            .collect();
        let a = output::render_csv(&cfg, &results);
        let b = output::render_csv(&cfg, &results);
        assert_eq!(a, b);
        assert!(a.starts_with('#'));
        let header = a.lines().find(|l| l.starts_with("t_seconds")).unwrap();
        assert_eq!(header, "t_seconds,rho_p0.000e0,rho_p1.000e-3,rho_p1.000e-2");
    }
}
