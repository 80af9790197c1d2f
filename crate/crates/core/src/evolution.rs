//! Time evolution of the diagonal density-matrix element:
//! `ρ_diag(t) = exp(-2γt)`, with γ in MeV and t in seconds bridged by ħ.

use thiserror::Error;

/// Reduced Planck constant in eV·s, CODATA 2018.
pub const HBAR_EV_S: f64 = 6.582119569e-16;

const EV_PER_MEV: f64 = 1e6;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum EvolutionError {
    #[error("decay rate must be non-negative, got {0} MeV")]
    NegativeRate(f64),
    #[error("time must be non-negative, got {0} s")]
    NegativeTime(f64),
    #[error("t_max must be positive, got {0} s")]
    NonPositiveTMax(f64),
    #[error("a curve needs at least 2 samples, got {0}")]
    TooFewSamples(usize),
    #[error("the evolution series needs at least one term")]
    NoTerms,
}

/// Bridge between natural units (ħ = c = 1, energies in MeV) and the
/// seconds of the time axis.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct UnitBridge {
    pub hbar_ev_s: f64,
}

impl Default for UnitBridge {
    fn default() -> Self {
        Self {
            hbar_ev_s: HBAR_EV_S,
        }
    }
}

impl UnitBridge {
    /// An energy in MeV as an inverse time in 1/s.
    pub fn inverse_seconds(&self, energy_mev: f64) -> f64 {
        energy_mev * EV_PER_MEV / self.hbar_ev_s
    }

    /// Decay rate of ρ_diag in 1/s: `2γ/ħ`, so that
    /// `rate_per_second(γ) · ħ = 2γ` in eV.
    pub fn rate_per_second(&self, gamma_mev: f64) -> f64 {
        self.inverse_seconds(2.0 * gamma_mev)
    }

    /// Dimensionless exponent `2γt/ħ`.
    pub fn decay_exponent(&self, gamma_mev: f64, t_s: f64) -> f64 {
        self.rate_per_second(gamma_mev) * t_s
    }
}

fn check_rate_and_time(gamma_mev: f64, t_s: f64) -> Result<(), EvolutionError> {
    if !gamma_mev.is_finite() || gamma_mev < 0.0 {
        return Err(EvolutionError::NegativeRate(gamma_mev));
    }
    if !t_s.is_finite() || t_s < 0.0 {
        return Err(EvolutionError::NegativeTime(t_s));
    }
    Ok(())
}

/// Diagonal density-matrix element `exp(-2γt/ħ)`; equals 1 at t = 0 and
/// decays monotonically for γ > 0. Exponents beyond ~745 underflow to
/// exactly 0 in double precision.
pub fn rho_diag(gamma_mev: f64, t_s: f64) -> Result<f64, EvolutionError> {
    check_rate_and_time(gamma_mev, t_s)?;
    Ok((-UnitBridge::default().decay_exponent(gamma_mev, t_s)).exp())
}

/// Partial sum `Σ_{n < n_terms} (-2γt/ħ)^n / n!` of the evolution series;
/// converges to [`rho_diag`] as the order grows, with the alternating
/// remainder bound `(2γt/ħ)^N / N!` for `2γt/ħ ≤ 1`.
pub fn truncated_series(gamma_mev: f64, t_s: f64, n_terms: usize) -> Result<f64, EvolutionError> {
    check_rate_and_time(gamma_mev, t_s)?;
    if n_terms == 0 {
        return Err(EvolutionError::NoTerms);
    }
    let z = -UnitBridge::default().decay_exponent(gamma_mev, t_s);
    let mut term = 1.0;
    let mut sum = 1.0;
    for n in 1..n_terms {
        term *= z / n as f64;
        sum += term;
    }
    Ok(sum)
}

/// Sample spacing of a decay curve.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Spacing {
    Linear,
    /// Geometric grid from `t_max * 1e-6` to `t_max`.
    Log,
}

/// Sampled decay curve for one parameter point.
#[derive(Debug, Clone, PartialEq)]
pub struct DecayCurve {
    gamma_mev: f64,
    times_s: Vec<f64>,
    rho_diag: Vec<f64>,
}

impl DecayCurve {
    pub fn gamma_mev(&self) -> f64 {
        self.gamma_mev
    }

    pub fn times_s(&self) -> &[f64] {
        &self.times_s
    }

    pub fn rho_diag(&self) -> &[f64] {
        &self.rho_diag
    }

    pub fn len(&self) -> usize {
        self.times_s.len()
    }

    pub fn is_empty(&self) -> bool {
        self.times_s.is_empty()
    }
}

/// Sample `ρ_diag` on a time grid. Linear grids start at t = 0 (where
/// ρ = 1 exactly); log grids start at `t_max * 1e-6`.
pub fn build_curve(
    gamma_mev: f64,
    t_max_s: f64,
    samples: usize,
    spacing: Spacing,
) -> Result<DecayCurve, EvolutionError> {
    if !gamma_mev.is_finite() || gamma_mev < 0.0 {
        return Err(EvolutionError::NegativeRate(gamma_mev));
    }
    if !t_max_s.is_finite() || t_max_s <= 0.0 {
        return Err(EvolutionError::NonPositiveTMax(t_max_s));
    }
    if samples < 2 {
        return Err(EvolutionError::TooFewSamples(samples));
    }
    let steps = (samples - 1) as f64;
    let times_s: Vec<f64> = (0..samples)
        .map(|i| match spacing {
            Spacing::Linear => t_max_s * (i as f64 / steps),
            Spacing::Log => t_max_s * 1e-6f64.powf(1.0 - i as f64 / steps),
        })
        .collect();
    let rho_diag = times_s
        .iter()
        .map(|&t| rho_diag(gamma_mev, t))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(DecayCurve {
        gamma_mev,
        times_s,
        rho_diag,
    })
}
