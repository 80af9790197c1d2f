//! Gamma-matrix algebra in the Euclidean (Pauli) metric.
//!
//! Four-vectors are written `A = (**A**, iA0)`, so the contraction is
//! `a·b = **a**·**b** - a0*b0` and an on-shell momentum satisfies
//! `p·p = -m^2`. The four gamma matrices are Hermitian and obey
//! `γ_μ γ_ν + γ_ν γ_μ = 2 δ_μν`.

use num_complex::Complex64;
use thiserror::Error;

/// Errors raised by the spinor/projector constructors.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum DiracError {
    #[error("particle mass must be positive, got {0} MeV")]
    NonPositiveMass(f64),
}

/// Four-vector in the Pauli metric. `time_component` stores the real
/// energy A0; the factor i of the fourth slot lives in [`FourVector::dot`]
/// and in the slash contraction.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FourVector {
    pub spatial: [f64; 3],
    pub time_component: f64,
}

impl FourVector {
    pub const ZERO: FourVector = FourVector {
        spatial: [0.0; 3],
        time_component: 0.0,
    };

    pub fn new(spatial: [f64; 3], time_component: f64) -> Self {
        Self {
            spatial,
            time_component,
        }
    }

    /// Particle four-momentum with the on-shell energy `sqrt(|p|^2 + m^2)`.
    pub fn on_shell(spatial: [f64; 3], mass_mev: f64) -> Result<Self, DiracError> {
        if !mass_mev.is_finite() || mass_mev <= 0.0 {
            return Err(DiracError::NonPositiveMass(mass_mev));
        }
        let p = spatial_norm(&spatial);
        Ok(Self {
            spatial,
            time_component: p.hypot(mass_mev),
        })
    }

    /// Pauli-metric contraction `a·b = **a**·**b** - a0*b0`.
    pub fn dot(&self, rhs: &FourVector) -> f64 {
        self.spatial[0] * rhs.spatial[0]
            + self.spatial[1] * rhs.spatial[1]
            + self.spatial[2] * rhs.spatial[2]
            - self.time_component * rhs.time_component
    }

    pub fn spatial_norm(&self) -> f64 {
        spatial_norm(&self.spatial)
    }
}

fn spatial_norm(v: &[f64; 3]) -> f64 {
    (v[0] * v[0] + v[1] * v[1] + v[2] * v[2]).sqrt()
}

/// Dense 4x4 complex matrix; the arena for gamma matrices, slashed
/// vectors, projectors and spinor dyads.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DiracMatrix {
    entries: [[Complex64; 4]; 4],
}

impl DiracMatrix {
    pub fn zero() -> Self {
        Self {
            entries: [[Complex64::ZERO; 4]; 4],
        }
    }

    pub fn identity() -> Self {
        let mut m = Self::zero();
        for i in 0..4 {
            m.entries[i][i] = Complex64::ONE;
        }
        m
    }

    pub fn from_rows(entries: [[Complex64; 4]; 4]) -> Self {
        Self { entries }
    }

    pub fn from_fn(mut f: impl FnMut(usize, usize) -> Complex64) -> Self {
        let mut m = Self::zero();
        for i in 0..4 {
            for j in 0..4 {
                m.entries[i][j] = f(i, j);
            }
        }
        m
    }

    pub fn trace(&self) -> Complex64 {
        self.entries[0][0] + self.entries[1][1] + self.entries[2][2] + self.entries[3][3]
    }

    /// Conjugate transpose.
    pub fn adjoint(&self) -> Self {
        Self::from_fn(|i, j| self.entries[j][i].conj())
    }

    pub fn scaled(&self, s: Complex64) -> Self {
        Self::from_fn(|i, j| self.entries[i][j] * s)
    }

    /// Largest entrywise absolute difference; the workhorse of the
    /// algebra tests.
    pub fn max_abs_diff(&self, rhs: &Self) -> f64 {
        let mut worst = 0.0f64;
        for i in 0..4 {
            for j in 0..4 {
                worst = worst.max((self.entries[i][j] - rhs.entries[i][j]).norm());
            }
        }
        worst
    }
}

impl std::ops::Index<(usize, usize)> for DiracMatrix {
    type Output = Complex64;

    fn index(&self, (i, j): (usize, usize)) -> &Complex64 {
        &self.entries[i][j]
    }
}

impl std::ops::Add for &DiracMatrix {
    type Output = DiracMatrix;

    fn add(self, rhs: &DiracMatrix) -> DiracMatrix {
        DiracMatrix::from_fn(|i, j| self.entries[i][j] + rhs.entries[i][j])
    }
}

impl std::ops::Sub for &DiracMatrix {
    type Output = DiracMatrix;

    fn sub(self, rhs: &DiracMatrix) -> DiracMatrix {
        DiracMatrix::from_fn(|i, j| self.entries[i][j] - rhs.entries[i][j])
    }
}

impl std::ops::Mul for &DiracMatrix {
    type Output = DiracMatrix;

    fn mul(self, rhs: &DiracMatrix) -> DiracMatrix {
        let mut out = DiracMatrix::zero();
        for i in 0..4 {
            for k in 0..4 {
                let a = self.entries[i][k];
                if a == Complex64::ZERO {
                    continue;
                }
                for j in 0..4 {
                    out.entries[i][j] += a * rhs.entries[k][j];
                }
            }
        }
        out
    }
}

impl std::ops::Mul<&Spinor> for &DiracMatrix {
    type Output = Spinor;

    fn mul(self, rhs: &Spinor) -> Spinor {
        let mut out = [Complex64::ZERO; 4];
        for (slot, row) in out.iter_mut().zip(&self.entries) {
            for (entry, component) in row.iter().zip(&rhs.components) {
                *slot += entry * component;
            }
        }
        Spinor { components: out }
    }
}

/// One concrete representation of the four gamma matrices.
///
/// Only Hermiticity and the anticommutator are fixed by the algebra, so
/// any unitary conjugate of the standard basis is equally valid; every
/// observable built from traces must be independent of that choice.
#[derive(Debug, Clone, PartialEq)]
pub struct GammaBasis {
    gammas: [DiracMatrix; 4],
}

impl GammaBasis {
    /// Standard (Dirac) representation adapted to the Pauli metric:
    /// `γ_k = [[0, -iσ_k], [iσ_k, 0]]`, `γ_4 = diag(1, 1, -1, -1)`.
    pub fn standard() -> Self {
        let o = Complex64::ZERO;
        let one = Complex64::ONE;
        let i = Complex64::I;
        let g1 = DiracMatrix::from_rows([[o, o, o, -i], [o, o, -i, o], [o, i, o, o], [i, o, o, o]]);
        let g2 = DiracMatrix::from_rows([
            [o, o, o, -one],
            [o, o, one, o],
            [o, one, o, o],
            [-one, o, o, o],
        ]);
        let g3 = DiracMatrix::from_rows([[o, o, -i, o], [o, o, o, i], [i, o, o, o], [o, -i, o, o]]);
        let g4 = DiracMatrix::from_rows([
            [one, o, o, o],
            [o, one, o, o],
            [o, o, -one, o],
            [o, o, o, -one],
        ]);
        Self {
            gammas: [g1, g2, g3, g4],
        }
    }

    /// Basis rotated by a unitary: `γ_μ -> U γ_μ U†`.
    pub fn conjugated_by(&self, u: &DiracMatrix) -> Self {
        let udag = u.adjoint();
        Self {
            gammas: [
                &(u * &self.gammas[0]) * &udag,
                &(u * &self.gammas[1]) * &udag,
                &(u * &self.gammas[2]) * &udag,
                &(u * &self.gammas[3]) * &udag,
            ],
        }
    }

    /// `γ_μ` for μ in 0..4 (0..2 spatial, 3 the Euclidean time direction).
    pub fn gamma(&self, mu: usize) -> &DiracMatrix {
        &self.gammas[mu]
    }

    pub fn into_array(self) -> [DiracMatrix; 4] {
        self.gammas
    }

    /// Slashed vector `γ_μ v_μ` with `v_4 = i v_0`, so that
    /// `slash(v)^2 = (v·v) 1`.
    pub fn slash(&self, v: &FourVector) -> DiracMatrix {
        let mut out = DiracMatrix::zero();
        for k in 0..3 {
            if v.spatial[k] != 0.0 {
                out = &out + &self.gammas[k].scaled(Complex64::new(v.spatial[k], 0.0));
            }
        }
        &out + &self.gammas[3].scaled(Complex64::new(0.0, v.time_component))
    }

    /// Positive-energy projector `Λ(p) = (p̂ + im) / (2im)`.
    ///
    /// Idempotent with trace 2 for on-shell `p`, and equal to the
    /// helicity sum `Σ_r u^r(p) ū^r(p)`.
    pub fn energy_projector(
        &self,
        p: &FourVector,
        mass_mev: f64,
    ) -> Result<DiracMatrix, DiracError> {
        if !mass_mev.is_finite() || mass_mev <= 0.0 {
            return Err(DiracError::NonPositiveMass(mass_mev));
        }
        let numerator =
            &self.slash(p) + &DiracMatrix::identity().scaled(Complex64::new(0.0, mass_mev));
        // 1/(2im) = -i/(2m)
        Ok(numerator.scaled(Complex64::new(0.0, -0.5 / mass_mev)))
    }
}

/// The four standard-representation gamma matrices.
pub fn gamma_matrices() -> [DiracMatrix; 4] {
    GammaBasis::standard().into_array()
}

/// `γ_μ v_μ` in the standard representation.
pub fn slash(v: &FourVector) -> DiracMatrix {
    GammaBasis::standard().slash(v)
}

/// `Λ(p)` in the standard representation.
pub fn energy_projector(p: &FourVector, mass_mev: f64) -> Result<DiracMatrix, DiracError> {
    GammaBasis::standard().energy_projector(p, mass_mev)
}

/// Trace of the ordered matrix product. Invariant under cyclic
/// permutations of the list.
///
/// Panics on an empty list.
pub fn trace_product(ms: &[DiracMatrix]) -> Complex64 {
    assert!(!ms.is_empty(), "trace_product needs at least one matrix");
    let mut acc = ms[0];
    for m in &ms[1..] {
        acc = &acc * m;
    }
    acc.trace()
}

/// Helicity label r = ±1.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Helicity {
    Plus,
    Minus,
}

impl Helicity {
    pub fn sign(self) -> f64 {
        match self {
            Helicity::Plus => 1.0,
            Helicity::Minus => -1.0,
        }
    }
}

/// Four-component helicity spinor `u^r(p)` in the standard representation,
/// normalized to `ū u = 1`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Spinor {
    components: [Complex64; 4],
}

impl Spinor {
    pub fn components(&self) -> &[Complex64; 4] {
        &self.components
    }

    /// Dirac adjoint `ū = u† γ_4` (standard representation).
    pub fn dirac_adjoint(&self) -> [Complex64; 4] {
        [
            self.components[0].conj(),
            self.components[1].conj(),
            -self.components[2].conj(),
            -self.components[3].conj(),
        ]
    }

    /// `ū(self) · rhs`.
    pub fn dirac_inner(&self, rhs: &Spinor) -> Complex64 {
        let bar = self.dirac_adjoint();
        bar.iter()
            .zip(rhs.components.iter())
            .map(|(b, c)| b * c)
            .sum()
    }

    /// Dyad `u ū`, the building block of the completeness relation.
    pub fn dirac_dyad(&self) -> DiracMatrix {
        let bar = self.dirac_adjoint();
        DiracMatrix::from_fn(|i, j| self.components[i] * bar[j])
    }
}

/// Helicity spinor `u^r(p)` for an on-shell momentum.
///
/// For `|p| = 0` the helicity axis degenerates; it defaults to +z, which
/// is safe because the completeness relation is phase-insensitive.
pub fn helicity_spinor(p: &FourVector, r: Helicity, mass_mev: f64) -> Result<Spinor, DiracError> {
    if !mass_mev.is_finite() || mass_mev <= 0.0 {
        return Err(DiracError::NonPositiveMass(mass_mev));
    }
    let pnorm = p.spatial_norm();
    let energy = p.time_component;

    // Two-spinor helicity eigenstates of σ·p̂ built from half-angles.
    let (chi0, chi1) = if pnorm == 0.0 {
        match r {
            Helicity::Plus => (Complex64::ONE, Complex64::ZERO),
            Helicity::Minus => (Complex64::ZERO, Complex64::ONE),
        }
    } else {
        let cos_theta = (p.spatial[2] / pnorm).clamp(-1.0, 1.0);
        let half_cos = ((1.0 + cos_theta) / 2.0).sqrt();
        let half_sin = ((1.0 - cos_theta) / 2.0).sqrt();
        let phi = p.spatial[1].atan2(p.spatial[0]);
        let phase = Complex64::from_polar(1.0, phi);
        match r {
            Helicity::Plus => (Complex64::new(half_cos, 0.0), phase * half_sin),
            Helicity::Minus => (-phase.conj() * half_sin, Complex64::new(half_cos, 0.0)),
        }
    };

    let norm = ((energy + mass_mev) / (2.0 * mass_mev)).sqrt();
    let kappa = r.sign() * pnorm / (energy + mass_mev);
    Ok(Spinor {
        components: [
            chi0 * norm,
            chi1 * norm,
            chi0 * norm * kappa,
            chi1 * norm * kappa,
        ],
    })
}
