//! Cross-module invariants: closed form vs trace oracle on a parameter
//! grid, and independence of every observable from the gamma-matrix
//! representation.

use emission::{
    decay_rate_closed, decay_rate_trace_oracle, decay_rate_trace_oracle_in_basis, gamma_matrices,
    trace_product, DiracMatrix, FourVector, GammaBasis, QuadratureRule, RadicalMode, RatePoint,
};
use num_complex::Complex64;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

fn rel_diff(a: f64, b: f64) -> f64 {
    (a - b).abs() / a.abs().max(b.abs())
}

/// Random unitary from the QR factorization of a random complex matrix.
fn random_unitary(seed: u64) -> DiracMatrix {
    let mut rng = StdRng::seed_from_u64(seed);
    let raw = nalgebra::Matrix4::from_fn(|_, _| {
        Complex64::new(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0))
    });
    let q = raw.qr().q();
    DiracMatrix::from_fn(|i, j| q[(i, j)])
}

#[test]
fn random_unitary_is_unitary() {
    let u = random_unitary(7);
    let product = &u * &u.adjoint();
    assert!(product.max_abs_diff(&DiracMatrix::identity()) < 1e-13);
}

#[test]
fn rotated_basis_keeps_the_algebra() {
    let u = random_unitary(42);
    let rotated = GammaBasis::standard().conjugated_by(&u);
    for mu in 0..4 {
        for nu in 0..4 {
            let a = rotated.gamma(mu);
            let b = rotated.gamma(nu);
            let anti = &(a * b) + &(b * a);
            let want = if mu == nu { 2.0 } else { 0.0 };
            let expected = DiracMatrix::identity().scaled(Complex64::new(want, 0.0));
            assert!(anti.max_abs_diff(&expected) < 1e-13, "mu={mu} nu={nu}");
        }
        // Hermiticity survives the rotation.
        let g = rotated.gamma(mu);
        assert!(g.adjoint().max_abs_diff(g) < 1e-13);
    }
}

#[test]
fn slash_traces_are_basis_independent() {
    let u = random_unitary(3);
    let standard = GammaBasis::standard();
    let rotated = standard.conjugated_by(&u);
    let a = FourVector::new([0.3, -0.7, 0.2], 0.9);
    let b = FourVector::new([-1.1, 0.4, 1.3], -0.6);
    let t_std = trace_product(&[standard.slash(&a), standard.slash(&b)]);
    let t_rot = trace_product(&[rotated.slash(&a), rotated.slash(&b)]);
    assert!((t_std - t_rot).norm() < 1e-12 * t_std.norm().max(1.0));
}

#[test]
fn oracle_gamma_is_basis_independent() {
    // Evaluated where the trace factor is O(1) against the matrix-entry
    // scale; at ω ≪ m the float noise floor of any basis exceeds 1e-10.
    let point = RatePoint::new(0.51, 0.3, 2.0e5).unwrap();
    let rule = QuadratureRule::gauss_legendre(32).unwrap();
    let standard = decay_rate_trace_oracle(&point, &rule).unwrap();
    for seed in [1u64, 2, 3] {
        let basis = GammaBasis::standard().conjugated_by(&random_unitary(seed));
        let rotated = decay_rate_trace_oracle_in_basis(&point, &rule, &basis).unwrap();
        assert!(
            rel_diff(standard, rotated) < 1e-10,
            "seed {seed}: {standard} vs {rotated}"
        );
    }
}

#[test]
fn closed_form_and_oracle_agree_on_the_grid() {
    // 10x10 grid over |p| in [0, 0.1] MeV and ω in [1, 100] eV at the
    // reference mass.
    let rule = QuadratureRule::gauss_legendre(64).unwrap();
    let mut worst = 0.0f64;
    for i in 0..10 {
        for j in 0..10 {
            let p = 0.1 * i as f64 / 9.0;
            let w_ev = 1.0 + 99.0 * j as f64 / 9.0;
            let point = RatePoint::new(0.51, p, w_ev).unwrap();
            let closed = decay_rate_closed(&point, RadicalMode::Exact, &rule)
                .unwrap()
                .gamma_mev;
            let oracle = decay_rate_trace_oracle(&point, &rule).unwrap();
            assert!(closed > 0.0 && oracle > 0.0, "p={p} w={w_ev}");
            let diff = rel_diff(closed, oracle);
            assert!(diff < 1e-8, "p={p} w={w_ev}: {closed} vs {oracle}");
            worst = worst.max(diff);
        }
    }
    // The two routes share nodes and stable kinematics, so the agreement
    // should be far inside the gate.
    assert!(worst < 1e-9, "worst grid disagreement {worst}");
}

#[test]
fn standard_gammas_have_unit_entries() {
    // Entries are exactly 0, ±1 or ±i in the standard representation.
    for g in gamma_matrices() {
        for i in 0..4 {
            for j in 0..4 {
                let z = g[(i, j)];
                let ok = (z.re == 0.0 && (z.im == 0.0 || z.im.abs() == 1.0))
                    || (z.im == 0.0 && z.re.abs() == 1.0);
                assert!(ok, "entry ({i},{j}) = {z}");
            }
        }
    }
}
