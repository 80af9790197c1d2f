//! On-shell energies, photon polarization bases, and the recoil momentum
//! `p' = p - k'` left after the spatial delta-function integration.
//!
//! The particle momentum points along +z and the photon polar angle is
//! measured from it; every in-scope integrand is azimuthally symmetric,
//! so the photon azimuth is fixed to zero.

use thiserror::Error;

/// Photon energies enter in eV and are converted to MeV internally.
pub const MEV_PER_EV: f64 = 1e-6;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum KinematicsError {
    #[error("mass must be positive, got {0} MeV")]
    NonPositiveMass(f64),
    #[error("momentum magnitude must be non-negative, got {0} MeV")]
    NegativeMomentum(f64),
    #[error("photon energy must be positive, got {0} eV")]
    NonPositiveOmega(f64),
    #[error("cos(theta) must lie in [-1, 1], got {0}")]
    CosThetaOutOfRange(f64),
    #[error("direction must be a unit vector, got norm {0}")]
    NotUnitVector(f64),
}

/// One emission kinematics point: particle mass and momentum (along +z),
/// photon energy, and the photon polar angle.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EmissionConfig {
    mass_mev: f64,
    momentum_mev: f64,
    omega_ev: f64,
    cos_theta: f64,
}

impl EmissionConfig {
    pub fn new(
        mass_mev: f64,
        momentum_mev: f64,
        omega_ev: f64,
        cos_theta: f64,
    ) -> Result<Self, KinematicsError> {
        if !mass_mev.is_finite() || mass_mev <= 0.0 {
            return Err(KinematicsError::NonPositiveMass(mass_mev));
        }
        if !momentum_mev.is_finite() || momentum_mev < 0.0 {
            return Err(KinematicsError::NegativeMomentum(momentum_mev));
        }
        if !omega_ev.is_finite() || omega_ev <= 0.0 {
            return Err(KinematicsError::NonPositiveOmega(omega_ev));
        }
        if !(-1.0..=1.0).contains(&cos_theta) {
            return Err(KinematicsError::CosThetaOutOfRange(cos_theta));
        }
        Ok(Self {
            mass_mev,
            momentum_mev,
            omega_ev,
            cos_theta,
        })
    }

    pub fn mass_mev(&self) -> f64 {
        self.mass_mev
    }

    pub fn momentum_mev(&self) -> f64 {
        self.momentum_mev
    }

    pub fn omega_ev(&self) -> f64 {
        self.omega_ev
    }

    /// Photon energy in MeV.
    pub fn omega_mev(&self) -> f64 {
        self.omega_ev * MEV_PER_EV
    }

    pub fn cos_theta(&self) -> f64 {
        self.cos_theta
    }
}

/// On-shell energy `sqrt(|p|^2 + m^2)`.
pub fn on_shell_energy(momentum_mev: f64, mass_mev: f64) -> Result<f64, KinematicsError> {
    if !mass_mev.is_finite() || mass_mev <= 0.0 {
        return Err(KinematicsError::NonPositiveMass(mass_mev));
    }
    if !momentum_mev.is_finite() || momentum_mev < 0.0 {
        return Err(KinematicsError::NegativeMomentum(momentum_mev));
    }
    Ok(momentum_mev.hypot(mass_mev))
}

/// Recoil energy `E_p' = sqrt(|p|^2 + ω^2 + m^2 - 2|p|ω cosθ)`, the
/// on-shell energy of `p' = p - k'`.
pub fn recoil_energy(cfg: &EmissionConfig) -> f64 {
    let p = cfg.momentum_mev;
    let w = cfg.omega_mev();
    let m = cfg.mass_mev;
    (p * p + w * w + m * m - 2.0 * p * w * cfg.cos_theta).sqrt()
}

/// Energy shift `E_p' - E_p` in difference-quotient form
/// `(ω^2 - 2|p|ω cosθ) / (E_p' + E_p)`.
///
/// The direct subtraction of the two energies loses ~10 digits when
/// ω ≪ m; the rate integrands need this shift at full relative precision.
pub fn recoil_energy_shift(cfg: &EmissionConfig) -> f64 {
    let p = cfg.momentum_mev;
    let w = cfg.omega_mev();
    let e_p = p.hypot(cfg.mass_mev);
    let e_rec = recoil_energy(cfg);
    (w * w - 2.0 * p * w * cfg.cos_theta) / (e_rec + e_p)
}

/// Photon direction `(sinθ, 0, cosθ)` in the frame with p along +z.
pub fn photon_direction(cos_theta: f64) -> [f64; 3] {
    let sin_theta = (1.0 - cos_theta * cos_theta).max(0.0).sqrt();
    [sin_theta, 0.0, cos_theta]
}

/// Two transverse polarization vectors for a photon along `k_direction`:
/// orthonormal, orthogonal to k, and forming a right-handed triad
/// `(e1, e2, k̂)`.
pub fn polarization_basis(k_direction: &[f64; 3]) -> Result<([f64; 3], [f64; 3]), KinematicsError> {
    let norm = (k_direction[0] * k_direction[0]
        + k_direction[1] * k_direction[1]
        + k_direction[2] * k_direction[2])
        .sqrt();
    if (norm - 1.0).abs() > 1e-12 {
        return Err(KinematicsError::NotUnitVector(norm));
    }
    // Reference axis chosen away from k to keep the cross product well
    // conditioned.
    let reference = if k_direction[2].abs() < 0.9 {
        [0.0, 0.0, 1.0]
    } else {
        [1.0, 0.0, 0.0]
    };
    let raw = cross(&reference, k_direction);
    let raw_norm = (raw[0] * raw[0] + raw[1] * raw[1] + raw[2] * raw[2]).sqrt();
    let e1 = [raw[0] / raw_norm, raw[1] / raw_norm, raw[2] / raw_norm];
    let e2 = cross(k_direction, &e1);
    Ok((e1, e2))
}

fn cross(a: &[f64; 3], b: &[f64; 3]) -> [f64; 3] {
    [
        a[1] * b[2] - a[2] * b[1],
        a[2] * b[0] - a[0] * b[2],
        a[0] * b[1] - a[1] * b[0],
    ]
}
