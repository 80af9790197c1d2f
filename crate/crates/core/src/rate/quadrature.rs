//! Gauss-Legendre quadrature on [-1, 1].

use super::RateError;

/// Nodes and weights of a Gauss-Legendre rule; exact for polynomials up
/// to degree `2n - 1`.
#[derive(Debug, Clone, PartialEq)]
pub struct QuadratureRule {
    nodes: Vec<f64>,
    weights: Vec<f64>,
}

impl QuadratureRule {
    /// Build the rule of the given order by Newton iteration on the
    /// Legendre polynomial, seeded with the Chebyshev-like estimate
    /// `cos(π (i + 3/4) / (n + 1/2))`.
    pub fn gauss_legendre(order: usize) -> Result<Self, RateError> {
        if order == 0 {
            return Err(RateError::ZeroOrder);
        }
        let n = order;
        let mut nodes = vec![0.0; n];
        let mut weights = vec![0.0; n];
        for i in 0..n.div_ceil(2) {
            let mut x = (std::f64::consts::PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
            let mut dpdx = 0.0;
            for _ in 0..100 {
                let (p, dp) = legendre_with_derivative(n, x);
                dpdx = dp;
                let step = p / dp;
                x -= step;
                if step.abs() <= 1e-15 {
                    let (p, dp) = legendre_with_derivative(n, x);
                    dpdx = dp;
                    x -= p / dp;
                    break;
                }
            }
            let w = 2.0 / ((1.0 - x * x) * dpdx * dpdx);
            // Mirror so the rule is exactly symmetric about zero.
            nodes[i] = -x;
            nodes[n - 1 - i] = x;
            weights[i] = w;
            weights[n - 1 - i] = w;
        }
        if n % 2 == 1 {
            nodes[n / 2] = 0.0;
            let (_, dp) = legendre_with_derivative(n, 0.0);
            weights[n / 2] = 2.0 / (dp * dp);
        }
        Ok(Self { nodes, weights })
    }

    pub fn order(&self) -> usize {
        self.nodes.len()
    }

    pub fn nodes(&self) -> &[f64] {
        &self.nodes
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    /// `Σ_k w_k f(x_k)`, the integral of `f` over [-1, 1].
    pub fn integrate(&self, mut f: impl FnMut(f64) -> f64) -> f64 {
        self.nodes
            .iter()
            .zip(self.weights.iter())
            .map(|(&x, &w)| w * f(x))
            .sum()
    }
}

/// `(P_n(x), P_n'(x))` by the three-term recurrence.
fn legendre_with_derivative(n: usize, x: f64) -> (f64, f64) {
    let mut p_prev = 1.0;
    let mut p = x;
    for k in 2..=n {
        let kf = k as f64;
        let p_next = ((2.0 * kf - 1.0) * x * p - (kf - 1.0) * p_prev) / kf;
        p_prev = p;
        p = p_next;
    }
    let dp = if x == 0.0 && n % 2 == 1 {
        (n as f64) * p_prev
    } else {
        (n as f64) * (x * p - p_prev) / (x * x - 1.0)
    };
    (p, dp)
}
