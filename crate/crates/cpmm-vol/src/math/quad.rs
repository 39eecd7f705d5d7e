//! Quadrature rules: Gauss-Hermite (Golub-Welsch) and adaptive Simpson.

use std::f64::consts::PI;

use nalgebra::DMatrix;

use crate::error::{Error, Result};

/// A Gauss-Hermite rule for integrals of the form `∫ e^(-x²) f(x) dx` over
/// the whole real line.
///
/// Nodes and weights come from the eigendecomposition of the symmetric
/// tridiagonal Jacobi matrix (0 on the diagonal, `sqrt(k/2)` off-diagonal);
/// weights are `sqrt(pi)` times the squared first eigenvector components.
#[derive(Debug, Clone)]
pub struct GaussHermite {
    nodes: Vec<f64>,
    weights: Vec<f64>,
}

impl GaussHermite {
    pub fn new(degree: usize) -> Result<Self> {
        if degree < 1 {
            return Err(Error::Config("Gauss-Hermite degree must be >= 1".into()));
        }
        let mut jacobi = DMatrix::<f64>::zeros(degree, degree);
        for k in 0..degree.saturating_sub(1) {
            let off = ((k as f64 + 1.0) * 0.5).sqrt();
            jacobi[(k, k + 1)] = off;
            jacobi[(k + 1, k)] = off;
        }
        let eigen = jacobi.symmetric_eigen();
        let mut pairs: Vec<(f64, f64)> = eigen
            .eigenvalues
            .iter()
            .copied()
            .zip(eigen.eigenvectors.row(0).iter().map(|v| v * v * PI.sqrt()))
            .collect();
        pairs.sort_by(|a, b| a.0.total_cmp(&b.0));
        Ok(Self {
            nodes: pairs.iter().map(|p| p.0).collect(),
            weights: pairs.iter().map(|p| p.1).collect(),
        })
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn nodes(&self) -> &[f64] {
        &self.nodes
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    /// `∫ e^(-x²) f(x) dx`, summed in ascending node order.
    pub fn integrate<F: Fn(f64) -> f64>(&self, f: F) -> f64 {
        self.nodes
            .iter()
            .zip(&self.weights)
            .map(|(&x, &w)| w * f(x))
            .sum()
    }

    /// `E[f(Z)]` for standard normal `Z`, via the substitution `z = sqrt(2) x`.
    pub fn expect_standard_normal<F: Fn(f64) -> f64>(&self, f: F) -> f64 {
        self.integrate(|x| f(std::f64::consts::SQRT_2 * x)) / PI.sqrt()
    }
}

/// Adaptive Simpson integration of `f` over `[a, b]`.
///
/// Classic bisection with the Richardson error estimate `(S_fine - S_coarse)/15`.
/// `max_evals` bounds total work; exhausting it reports a numerical failure so
/// callers can surface quadrature non-convergence instead of a silent bad value.
pub fn adaptive_simpson<F: Fn(f64) -> f64>(
    f: F,
    a: f64,
    b: f64,
    tolerance: f64,
    max_evals: usize,
) -> Result<f64> {
    if !(a.is_finite() && b.is_finite()) {
        return Err(Error::Config("adaptive Simpson needs finite bounds".into()));
    }
    if a == b {
        return Ok(0.0);
    }
    let mut budget = max_evals as isize;
    let fa = f(a);
    let fb = f(b);
    let m = 0.5 * (a + b);
    let fm = f(m);
    budget -= 3;
    let whole = simpson(a, b, fa, fm, fb);
    let value = recurse(&f, a, b, fa, fm, fb, whole, tolerance, 48, &mut budget)?;
    Ok(value)
}

fn simpson(a: f64, b: f64, fa: f64, fm: f64, fb: f64) -> f64 {
    (b - a) / 6.0 * (fa + 4.0 * fm + fb)
}

#[allow(clippy::too_many_arguments)]
fn recurse<F: Fn(f64) -> f64>(
    f: &F,
    a: f64,
    b: f64,
    fa: f64,
    fm: f64,
    fb: f64,
    whole: f64,
    tolerance: f64,
    depth: u32,
    budget: &mut isize,
) -> Result<f64> {
    *budget -= 2;
    if *budget < 0 {
        return Err(Error::Numerical(
            "adaptive Simpson evaluation budget exhausted".into(),
        ));
    }
    let m = 0.5 * (a + b);
    let lm = 0.5 * (a + m);
    let rm = 0.5 * (m + b);
    let flm = f(lm);
    let frm = f(rm);
    let left = simpson(a, m, fa, flm, fm);
    let right = simpson(m, b, fm, frm, fb);
    let delta = left + right - whole;
    if depth == 0 {
        return Err(Error::Numerical(
            "adaptive Simpson recursion depth exhausted".into(),
        ));
    }
    if delta.abs() <= 15.0 * tolerance {
        return Ok(left + right + delta / 15.0);
    }
    let lv = recurse(f, a, m, fa, flm, fm, left, 0.5 * tolerance, depth - 1, budget)?;
    let rv = recurse(f, m, b, fm, frm, fb, right, 0.5 * tolerance, depth - 1, budget)?;
    Ok(lv + rv)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hermite_three_point_rule() {
        // Known nodes/weights for degree 3: +-sqrt(3/2) and 0.
        let rule = GaussHermite::new(3).unwrap();
        let want_nodes = [-1.224_744_871_391_589, 0.0, 1.224_744_871_391_589];
        let want_weights = [
            0.295_408_975_150_919_35,
            1.181_635_900_603_677_4,
            0.295_408_975_150_919_35,
        ];
        for (got, want) in rule.nodes().iter().zip(want_nodes) {
            assert!((got - want).abs() < 1e-13, "node {got} vs {want}");
        }
        for (got, want) in rule.weights().iter().zip(want_weights) {
            assert!((got - want).abs() < 1e-13, "weight {got} vs {want}");
        }
    }

    #[test]
    fn hermite_integrates_gaussian_moments() {
        let rule = GaussHermite::new(32).unwrap();
        assert!((rule.integrate(|_| 1.0) - PI.sqrt()).abs() < 1e-13);
        assert!((rule.integrate(|x| x * x) - PI.sqrt() / 2.0).abs() < 1e-13);
        // E[Z^2] = 1, E[Z^4] = 3 for standard normal Z.
        assert!((rule.expect_standard_normal(|z| z * z) - 1.0).abs() < 1e-13);
        assert!((rule.expect_standard_normal(|z| z.powi(4)) - 3.0).abs() < 1e-12);
    }

    #[test]
    fn hermite_large_rule_stays_accurate() {
        // exp integrand has the closed form E[e^Z] = e^{1/2}.
        let rule = GaussHermite::new(256).unwrap();
        let got = rule.expect_standard_normal(|z| z.exp());
        assert!(((got - 0.5f64.exp()) / 0.5f64.exp()).abs() < 1e-13);
    }

    #[test]
    fn simpson_smooth_integral() {
        let v = adaptive_simpson(|x: f64| x.sin(), 0.0, PI, 1e-12, 1 << 22).unwrap();
        assert!((v - 2.0).abs() < 1e-11, "got {v}");
    }

    #[test]
    fn simpson_budget_exhaustion_reports_failure() {
        let r = adaptive_simpson(|x: f64| (1e6 * x).sin().abs(), 0.0, 1.0, 1e-14, 64);
        assert!(matches!(r, Err(Error::Numerical(_))));
    }

    #[test]
    fn simpson_degenerate_interval() {
        assert_eq!(adaptive_simpson(|x| x, 2.0, 2.0, 1e-12, 100).unwrap(), 0.0);
    }
}
