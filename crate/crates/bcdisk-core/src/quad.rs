//! Quadrature on the unit disk and the singular-node exclusion policy.
//!
//! [`DiskQuadrature`] is a tensor rule in polar coordinates: Gauss-Legendre
//! nodes in the radius (mapped to `(0, 1)` with the polar Jacobian `r`
//! folded into the weights) times uniform angles (trapezoid rule, which is
//! spectrally accurate for periodic integrands). The weights sum to the disk
//! area `pi`. Because the rule is polar and centered at the origin, weakly
//! singular `1/|zeta|` factors at the origin need no special handling: the
//! Jacobian cancels them.
//!
//! Singularities at an interior point `z` are handled by the smooth taper
//! [`taper`]: integrands are multiplied by a C^3 radial factor that vanishes
//! within `eps` of `z` and reaches one at `2 eps`. A smooth taper (rather
//! than a hard cutoff) keeps operator evaluations smooth in `z`, which the
//! finite-difference residual checks rely on. The radius `eps` comes from an
//! [`EpsilonPolicy`]: a multiple of the local cell diameter with a floor for
//! very coarse grids.

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::tolerances::{DEFAULT_N_R, DEFAULT_N_THETA, EPS_FACTOR, EPS_FLOOR};

/// Tensor-product quadrature rule on the unit disk.
#[derive(Clone, Debug)]
pub struct DiskQuadrature {
    radii: Vec<f64>,
    radial_weights: Vec<f64>,
    n_theta: usize,
    cell_diameter: f64,
}

impl DiskQuadrature {
    /// Builds the rule with `n_r` radial Gauss-Legendre nodes and `n_theta`
    /// uniform angles.
    pub fn new(n_r: usize, n_theta: usize) -> Self {
        assert!(n_r >= 2 && n_theta >= 4, "quadrature grid too small");
        let (xs, ws) = gauss_legendre(n_r);
        // Map [-1, 1] -> [0, 1]; fold in dr scale (1/2) and the Jacobian r.
        let radii: Vec<f64> = xs.iter().map(|x| 0.5 * (x + 1.0)).collect();
        let radial_weights: Vec<f64> = ws
            .iter()
            .zip(&radii)
            .map(|(w, r)| 0.5 * w * r)
            .collect();
        let max_dr = radii
            .windows(2)
            .map(|p| p[1] - p[0])
            .fold(radii[0].max(1.0 - radii[n_r - 1]), f64::max);
        let cell_diameter = max_dr.max(2.0 * PI / n_theta as f64);
        DiskQuadrature {
            radii,
            radial_weights,
            n_theta,
            cell_diameter,
        }
    }

    /// The default grid (64 x 256).
    pub fn default_grid() -> Self {
        DiskQuadrature::new(DEFAULT_N_R, DEFAULT_N_THETA)
    }

    /// Number of radial nodes.
    pub fn n_r(&self) -> usize {
        self.radii.len()
    }

    /// Number of angular nodes.
    pub fn n_theta(&self) -> usize {
        self.n_theta
    }

    /// Radial nodes in `(0, 1)`.
    pub fn radii(&self) -> &[f64] {
        &self.radii
    }

    /// Largest cell extent (radial gap or arc length at the rim), used by the
    /// exclusion policy.
    pub fn cell_diameter(&self) -> f64 {
        self.cell_diameter
    }

    /// Sums `f(zeta) * weight` over all nodes; the weights integrate `dA`:
    /// `integrate(|f| 1.0) == pi` up to rounding. Summation order is fixed
    /// (radius-major), so results are bitwise deterministic.
    pub fn integrate(&self, mut f: impl FnMut(Complex64) -> Complex64) -> Complex64 {
        let dtheta = 2.0 * PI / self.n_theta as f64;
        let mut acc = Complex64::new(0.0, 0.0);
        for (r, wr) in self.radii.iter().zip(&self.radial_weights) {
            let mut ring = Complex64::new(0.0, 0.0);
            for l in 0..self.n_theta {
                let zeta = Complex64::from_polar(*r, l as f64 * dtheta);
                ring += f(zeta);
            }
            acc += ring * (wr * dtheta);
        }
        acc
    }

    /// Visits every node as `(zeta, weight)` in deterministic order.
    pub fn for_each_node(&self, mut f: impl FnMut(Complex64, f64)) {
        let dtheta = 2.0 * PI / self.n_theta as f64;
        for (r, wr) in self.radii.iter().zip(&self.radial_weights) {
            let w = wr * dtheta;
            for l in 0..self.n_theta {
                f(Complex64::from_polar(*r, l as f64 * dtheta), w);
            }
        }
    }
}

/// Exclusion radius selection for singular integrands.
#[derive(Clone, Copy, Debug)]
pub struct EpsilonPolicy {
    /// Multiple of the quadrature cell diameter.
    pub factor: f64,
    /// Lower bound on the radius.
    pub floor: f64,
}

impl Default for EpsilonPolicy {
    fn default() -> Self {
        EpsilonPolicy {
            factor: EPS_FACTOR,
            floor: EPS_FLOOR,
        }
    }
}

impl EpsilonPolicy {
    /// The exclusion radius for a given rule (capped at 0.25 so the tapered
    /// ring never dominates the disk).
    pub fn eps_for(&self, quad: &DiskQuadrature) -> f64 {
        (self.factor * quad.cell_diameter()).max(self.floor).min(0.25)
    }
}

/// C^3 radial taper: `0` for `d <= eps`, `1` for `d >= 2 eps`, and the
/// seventh-order smoothstep `35 t^4 - 84 t^5 + 70 t^6 - 20 t^7`
/// (vanishing first-to-third derivatives at both ends) in between.
pub fn taper(d: f64, eps: f64) -> f64 {
    if d <= eps {
        0.0
    } else if d >= 2.0 * eps {
        1.0
    } else {
        let t = (d - eps) / eps;
        ((((-20.0 * t + 70.0) * t - 84.0) * t + 35.0) * t) * t * t * t
    }
}

/// Nodes and weights of the `n`-point Gauss-Legendre rule on `[-1, 1]`,
/// computed by Newton iteration on the Legendre recurrence.
pub fn gauss_legendre(n: usize) -> (Vec<f64>, Vec<f64>) {
    let mut xs = vec![0.0; n];
    let mut ws = vec![0.0; n];
    for k in 0..n {
        // Tricomi-style initial guess, then Newton.
        let mut x = (PI * (k as f64 + 0.75) / (n as f64 + 0.5)).cos();
        for _ in 0..100 {
            let (p, dp) = legendre_and_derivative(n, x);
            let dx = p / dp;
            x -= dx;
            if dx.abs() < 1e-15 {
                break;
            }
        }
        let (_, dp) = legendre_and_derivative(n, x);
        xs[n - 1 - k] = x;
        ws[n - 1 - k] = 2.0 / ((1.0 - x * x) * dp * dp);
    }
    (xs, ws)
}

/// `(P_n(x), P_n'(x))` by the three-term recurrence.
fn legendre_and_derivative(n: usize, x: f64) -> (f64, f64) {
    let (mut p0, mut p1) = (1.0f64, x);
    if n == 0 {
        return (1.0, 0.0);
    }
    for k in 2..=n {
        let kf = k as f64;
        let p2 = ((2.0 * kf - 1.0) * x * p1 - (kf - 1.0) * p0) / kf;
        p0 = p1;
        p1 = p2;
    }
    let dp = n as f64 * (x * p1 - p0) / (x * x - 1.0);
    (p1, dp)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gauss_legendre_integrates_polynomials_exactly() {
        let (xs, ws) = gauss_legendre(8);
        // Degree up to 2n-1 = 15 is exact; check x^14 (integral 2/15).
        let got: f64 = xs.iter().zip(&ws).map(|(x, w)| w * x.powi(14)).sum();
        assert!((got - 2.0 / 15.0).abs() < 1e-14);
        let total: f64 = ws.iter().sum();
        assert!((total - 2.0).abs() < 1e-14);
    }

    #[test]
    fn disk_weights_sum_to_area() {
        let q = DiskQuadrature::new(16, 32);
        let area = q.integrate(|_| Complex64::new(1.0, 0.0));
        assert!((area.re - PI).abs() < 1e-13, "area = {}", area.re);
        assert!(area.im.abs() < 1e-15);
    }

    #[test]
    fn disk_moments_match_closed_forms() {
        // Integral of z^m conj(z)^n over the disk: 0 unless m == n, else
        // pi / (m + 1).
        let q = DiskQuadrature::new(24, 48);
        for (m, n, want) in [
            (1u32, 1u32, PI / 2.0),
            (2, 2, PI / 3.0),
            (3, 1, 0.0),
            (0, 2, 0.0),
        ] {
            let got = q.integrate(|z| z.powu(m) * z.conj().powu(n));
            assert!(
                (got - Complex64::new(want, 0.0)).norm() < 1e-12,
                "moment ({m},{n}) = {got}"
            );
        }
    }

    #[test]
    fn origin_singularity_is_benign_in_polar_coordinates() {
        // Integral of 1/|zeta| over D is 2 pi; the polar Jacobian makes the
        // integrand regular.
        let q = DiskQuadrature::new(32, 64);
        let got = q.integrate(|z| Complex64::new(1.0 / z.norm(), 0.0));
        assert!((got.re - 2.0 * PI).abs() < 1e-10);
    }

    #[test]
    fn taper_is_smooth_and_clamped() {
        let eps = 0.1;
        assert_eq!(taper(0.05, eps), 0.0);
        assert_eq!(taper(0.3, eps), 1.0);
        assert!((taper(0.15, eps) - 0.5).abs() < 1e-12); // midpoint symmetry
        // C^1 at the seams: difference quotients stay small.
        let h = 1e-6;
        for d in [eps, 2.0 * eps] {
            let slope = (taper(d + h, eps) - taper(d - h, eps)) / (2.0 * h);
            assert!(slope.abs() < 1e-3, "slope {slope} at seam {d}");
        }
    }

    #[test]
    fn epsilon_policy_scales_with_grid() {
        let coarse = DiskQuadrature::new(16, 64);
        let fine = DiskQuadrature::new(128, 512);
        let pol = EpsilonPolicy::default();
        assert!(pol.eps_for(&coarse) > pol.eps_for(&fine));
        assert!(pol.eps_for(&fine) >= pol.floor);
        let tiny = EpsilonPolicy { factor: 0.1, floor: 0.05 };
        assert_eq!(tiny.eps_for(&fine), 0.05);
    }

    #[test]
    fn deterministic_summation() {
        let q = DiskQuadrature::default_grid();
        let a = q.integrate(|z| z * z.conj());
        let b = q.integrate(|z| z * z.conj());
        assert_eq!(a, b);
    }
}
