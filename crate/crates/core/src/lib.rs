//! Photon-emission decay rate of a relativistic spin-1/2 particle and the
//! resulting irreversible relaxation of its diagonal density matrix.
//!
//! The rate γ is computed two independent ways — closed-form angular
//! integrals and a gamma-matrix trace oracle — and the density matrix
//! then follows `ρ_diag(t) = exp(-2γt)`. Everything is pure and
//! deterministic; values are safe to share across threads.
//!
//! ```
//! use emission::{
//!     build_curve, decay_rate_closed, decay_rate_trace_oracle, QuadratureRule, RadicalMode,
//!     RatePoint, Spacing,
//! };
//!
//! let rule = QuadratureRule::gauss_legendre(64)?;
//! // Mass and momentum in MeV, photon energy in eV.
//! let point = RatePoint::new(0.51, 0.0, 12.8)?;
//! let rate = decay_rate_closed(&point, RadicalMode::Exact, &rule)?;
//! let oracle = decay_rate_trace_oracle(&point, &rule)?;
//! assert!((rate.gamma_mev - oracle).abs() <= 1e-8 * rate.gamma_mev);
//!
//! let curve = build_curve(rate.gamma_mev, 6e-5, 200, Spacing::Linear)?;
//! assert_eq!(curve.rho_diag()[0], 1.0);
//! assert!(curve.rho_diag()[199] < 0.01);
//! # Ok::<(), Box<dyn std::error::Error>>(())
//! ```

pub mod dirac;
pub mod evolution;
pub mod kinematics;
pub mod rate;

pub use num_complex::Complex64;

pub use dirac::{
    energy_projector, gamma_matrices, helicity_spinor, slash, trace_product, DiracError,
    DiracMatrix, FourVector, GammaBasis, Helicity, Spinor,
};
pub use evolution::{
    build_curve, rho_diag, truncated_series, DecayCurve, EvolutionError, Spacing, UnitBridge,
    HBAR_EV_S,
};
pub use kinematics::{
    on_shell_energy, photon_direction, polarization_basis, recoil_energy, recoil_energy_shift,
    EmissionConfig, KinematicsError, MEV_PER_EV,
};
pub use rate::{
    decay_rate_closed, decay_rate_trace_oracle, decay_rate_trace_oracle_in_basis,
    fine_structure_alpha, integrand, radical_approx, rest_frame_gamma, trace_factor,
    trace_factor_in_basis, QuadratureRule, RadicalMode, RateBreakdown, RateError, RatePoint,
    RateTerm,
};
