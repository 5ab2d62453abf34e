//! Hardy-norm profiling: circle L^p means, Hardy-norm sup estimates,
//! boundary-convergence profiles, and the idempotent comparability checks.
//!
//! All circle means use the uniform (trapezoid) angular rule, which is exact
//! for trigonometric-polynomial integrands of degree below `n_theta / 2`; for
//! `p = 2` and polynomial fields the computed means are therefore exact to
//! rounding. Fields enter as point-evaluable closures so that polynomial
//! fields, solver solutions, and ad-hoc sampled functions all profile through
//! the same code path.
//!
//! The pointwise norm comparisons
//! `max(|w_plus|, |w_minus|)/sqrt(2) <= bc_norm(w) <= (|w_plus| + |w_minus|)/sqrt(2)`
//! integrate (for `p >= 1`, via monotonicity and Minkowski) into the
//! comparability chain between component circle means and the bicomplex
//! circle mean that [`idempotent_hardy_check`] verifies on a shared angular
//! grid.

use num_complex::Complex64;

use crate::algebra::Bicomplex;
use crate::error::{Error, Result};
use crate::fields::BoundaryData;
use crate::quad::DiskQuadrature;

/// Default radii ladder spanning the boundary-convergence regime.
pub const DEFAULT_RADII: [f64; 4] = [0.5, 0.9, 0.99, 0.999];

/// A per-radius profile of circle means (and optionally boundary gaps).
#[derive(Clone, Debug)]
pub struct RadialProfile {
    /// Exponent of the means.
    pub p: f64,
    /// Radii, in the order supplied.
    pub radii: Vec<f64>,
    /// Circle L^p means of the field's bicomplex norm at each radius.
    pub means: Vec<f64>,
    /// L^p distances to the supplied boundary data, when requested.
    pub gaps: Option<Vec<f64>>,
}

fn check_radius(r: f64) -> Result<()> {
    if !(r > 0.0 && r < 1.0) {
        return Err(Error::Invalid(format!("radius {r} not in (0, 1)")));
    }
    Ok(())
}

fn check_exponent(p: f64) -> Result<()> {
    if !(p > 0.0) {
        return Err(Error::Invalid(format!("exponent p = {p} must be positive")));
    }
    Ok(())
}

/// Raises nonnegative samples to the p-mean: `(avg x_i^p)^(1/p)`, with
/// `p = +inf` giving the maximum.
fn p_mean(samples: impl Iterator<Item = f64>, p: f64, n: usize) -> f64 {
    if p.is_infinite() {
        return samples.fold(0.0, f64::max);
    }
    let acc: f64 = samples.map(|x| x.powf(p)).sum();
    (acc / n as f64).powf(1.0 / p)
}

/// Circle L^p mean `((1/2 pi) ∫ bc_norm(w(r e^{i theta}))^p dtheta)^(1/p)`.
pub fn circle_mean(
    w: impl Fn(Complex64) -> Bicomplex,
    p: f64,
    r: f64,
    n_theta: usize,
) -> Result<f64> {
    check_radius(r)?;
    check_exponent(p)?;
    let vals = (0..n_theta).map(|l| {
        let th = 2.0 * std::f64::consts::PI * l as f64 / n_theta as f64;
        w(Complex64::from_polar(r, th)).bc_norm()
    });
    Ok(p_mean(vals, p, n_theta))
}

/// Sup of circle means over the sampled radii — a lower bound of the true
/// Hardy norm that is monotone under radii-set refinement.
pub fn hardy_norm_estimate(
    w: impl Fn(Complex64) -> Bicomplex + Copy,
    p: f64,
    radii: &[f64],
    n_theta: usize,
) -> Result<f64> {
    let mut sup: f64 = 0.0;
    for &r in radii {
        sup = sup.max(circle_mean(w, p, r, n_theta)?);
    }
    Ok(sup)
}

/// Per-radius circle means of `w` together with the L^p distance to the
/// prescribed boundary values — the discretized boundary-convergence
/// statement `gap(r) -> 0` as `r -> 1`.
pub fn boundary_gap_profile(
    w: impl Fn(Complex64) -> Bicomplex + Copy,
    w_nt: &BoundaryData,
    p: f64,
    radii: &[f64],
    n_theta: usize,
) -> Result<RadialProfile> {
    check_exponent(p)?;
    let mut means = Vec::with_capacity(radii.len());
    let mut gaps = Vec::with_capacity(radii.len());
    for &r in radii {
        check_radius(r)?;
        means.push(circle_mean(w, p, r, n_theta)?);
        let diffs = (0..n_theta).map(|l| {
            let th = 2.0 * std::f64::consts::PI * l as f64 / n_theta as f64;
            (w(Complex64::from_polar(r, th)) - w_nt.eval(th)).bc_norm()
        });
        gaps.push(p_mean(diffs, p, n_theta));
    }
    Ok(RadialProfile {
        p,
        radii: radii.to_vec(),
        means,
        gaps: Some(gaps),
    })
}

/// Outcome of the idempotent comparability check at each radius:
/// `lower <= mean <= upper` where `lower = max(M_p(w+), M_p(w-))/sqrt(2)`,
/// `mean` is the bicomplex circle mean, and
/// `upper = (M_p(w+) + M_p(w-))/sqrt(2)`.
#[derive(Clone, Debug)]
pub struct IdempotentHardyReport {
    pub radii: Vec<f64>,
    pub lower: Vec<f64>,
    pub mean: Vec<f64>,
    pub upper: Vec<f64>,
    /// Whether the chain held (up to rounding slack) at every radius.
    pub holds: bool,
}

/// Verifies the integrated idempotent norm-comparability chain on a shared
/// angular grid. Requires `p >= 1` (the upper bound integrates via
/// Minkowski's inequality).
pub fn idempotent_hardy_check(
    w: impl Fn(Complex64) -> Bicomplex + Copy,
    p: f64,
    radii: &[f64],
    n_theta: usize,
) -> Result<IdempotentHardyReport> {
    if !(p >= 1.0) {
        return Err(Error::Invalid(format!(
            "idempotent comparability requires p >= 1, got {p}"
        )));
    }
    let inv_sqrt2 = std::f64::consts::FRAC_1_SQRT_2;
    let mut report = IdempotentHardyReport {
        radii: radii.to_vec(),
        lower: Vec::new(),
        mean: Vec::new(),
        upper: Vec::new(),
        holds: true,
    };
    for &r in radii {
        check_radius(r)?;
        let samples: Vec<Bicomplex> = (0..n_theta)
            .map(|l| {
                let th = 2.0 * std::f64::consts::PI * l as f64 / n_theta as f64;
                w(Complex64::from_polar(r, th))
            })
            .collect();
        let mp_plus = p_mean(samples.iter().map(|v| v.plus().norm()), p, n_theta);
        let mp_minus = p_mean(samples.iter().map(|v| v.minus().norm()), p, n_theta);
        let mean = p_mean(samples.iter().map(|v| v.bc_norm()), p, n_theta);
        let lower = inv_sqrt2 * mp_plus.max(mp_minus);
        let upper = inv_sqrt2 * (mp_plus + mp_minus);
        let slack = 1e-12 * (1.0 + upper);
        if lower > mean + slack || mean > upper + slack {
            report.holds = false;
        }
        report.lower.push(lower);
        report.mean.push(mean);
        report.upper.push(upper);
    }
    Ok(report)
}

/// Area L^m norm `(∬ bc_norm(w)^m dA)^(1/m)` over the unit disk, by the
/// supplied quadrature. Diagnostic only.
pub fn disk_lm_norm(
    w: impl Fn(Complex64) -> Bicomplex,
    m: f64,
    quad: &DiskQuadrature,
) -> Result<f64> {
    check_exponent(m)?;
    let mut acc = 0.0;
    quad.for_each_node(|zeta, weight| {
        acc += w(zeta).bc_norm().powf(m) * weight;
    });
    Ok(acc.powf(1.0 / m))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::bicomplexify;
    use crate::fields::PolyField;

    const N: usize = 256;

    #[test]
    fn circle_mean_of_constant_is_one() {
        let one = |_z: Complex64| Bicomplex::ONE;
        for p in [1.0, 2.0, 3.5, f64::INFINITY] {
            assert!((circle_mean(one, p, 0.4, N).unwrap() - 1.0).abs() < 1e-14);
        }
    }

    #[test]
    fn circle_mean_of_zhat_equals_radius() {
        let w = |z: Complex64| bicomplexify(z);
        for r in [0.25, 0.5, 0.9] {
            assert!((circle_mean(w, 2.0, r, N).unwrap() - r).abs() < 1e-13);
        }
    }

    #[test]
    fn circle_mean_of_plus_idempotent() {
        let w = |_z: Complex64| Bicomplex::P_PLUS;
        let got = circle_mean(w, 2.0, 0.7, N).unwrap();
        assert!((got - std::f64::consts::FRAC_1_SQRT_2).abs() < 1e-14);
    }

    #[test]
    fn circle_mean_rejects_bad_inputs() {
        let one = |_z: Complex64| Bicomplex::ONE;
        assert!(circle_mean(one, 2.0, 1.0, N).is_err());
        assert!(circle_mean(one, 2.0, -0.1, N).is_err());
        assert!(circle_mean(one, 0.0, 0.5, N).is_err());
    }

    #[test]
    fn hardy_estimate_is_monotone_under_refinement() {
        let w = |z: Complex64| bicomplexify(z * z * z);
        let coarse = hardy_norm_estimate(w, 2.0, &[0.5, 0.9], N).unwrap();
        let fine = hardy_norm_estimate(w, 2.0, &[0.5, 0.7, 0.9, 0.95], N).unwrap();
        assert!(fine >= coarse);
    }

    #[test]
    fn holomorphic_means_increase_with_radius() {
        let w = |z: Complex64| Bicomplex::P_MINUS * Bicomplex::from_complex(z * z * z);
        let mut last = 0.0;
        for r in [0.3, 0.5, 0.7, 0.9, 0.99] {
            let m = circle_mean(w, 2.0, r, N).unwrap();
            assert!(m > last);
            last = m;
        }
    }

    #[test]
    fn gap_profile_of_zhat_is_one_minus_r() {
        let field = PolyField::zhat();
        let w = |z: Complex64| field.eval(z);
        let trace = BoundaryData::trace_of_poly(&field);
        let prof = boundary_gap_profile(w, &trace, 2.0, &DEFAULT_RADII, N).unwrap();
        let gaps = prof.gaps.unwrap();
        for (i, &r) in DEFAULT_RADII.iter().enumerate() {
            assert!((prof.means[i] - r).abs() < 1e-13);
            assert!((gaps[i] - (1.0 - r)).abs() < 1e-13, "gap at r = {r}");
        }
        assert!(gaps.windows(2).all(|g| g[1] < g[0]));
    }

    #[test]
    fn gap_profile_of_constant_is_zero() {
        let w = |_z: Complex64| Bicomplex::ONE;
        let mut nt = BoundaryData::zero();
        nt.insert(0, Bicomplex::ONE);
        let prof = boundary_gap_profile(w, &nt, 2.0, &[0.5, 0.9], N).unwrap();
        for g in prof.gaps.unwrap() {
            assert!(g < 1e-14);
        }
    }

    #[test]
    fn idempotent_chain_for_minus_component_field() {
        // w = p_minus * z: component means (0, r), bicomplex mean r/sqrt(2);
        // here lower = mean = upper = r/sqrt(2) (one component vanishes).
        let w = |z: Complex64| Bicomplex::P_MINUS * Bicomplex::from_complex(z);
        let rep = idempotent_hardy_check(w, 2.0, &[0.6], N).unwrap();
        assert!(rep.holds);
        let want = 0.6 * std::f64::consts::FRAC_1_SQRT_2;
        assert!((rep.lower[0] - want).abs() < 1e-13);
        assert!((rep.mean[0] - want).abs() < 1e-13);
        assert!((rep.upper[0] - want).abs() < 1e-13);
    }

    #[test]
    fn idempotent_chain_for_mixed_field() {
        let field = {
            let mut f = PolyField::zhat();
            f.add_monomial(2, 1, Bicomplex::new(Complex64::new(0.3, -0.2), Complex64::new(0.1, 0.4)));
            f.add_monomial(0, 0, Bicomplex::J);
            f
        };
        let w = |z: Complex64| field.eval(z);
        let rep = idempotent_hardy_check(w, 2.0, &[0.3, 0.6, 0.9, 0.99], N).unwrap();
        assert!(rep.holds);
        for i in 0..rep.radii.len() {
            assert!(rep.lower[i] <= rep.mean[i] + 1e-12);
            assert!(rep.mean[i] <= rep.upper[i] + 1e-12);
        }
    }

    #[test]
    fn disk_norms_match_hand_values() {
        let quad = DiskQuadrature::default_grid();
        let one = |_z: Complex64| Bicomplex::ONE;
        assert!(
            (disk_lm_norm(one, 2.0, &quad).unwrap() - std::f64::consts::PI.sqrt()).abs() < 1e-10
        );
        let w = |z: Complex64| bicomplexify(z);
        let want = (std::f64::consts::PI / 2.0).sqrt();
        assert!((disk_lm_norm(w, 2.0, &quad).unwrap() - want).abs() < 1e-10);
        let zero = |_z: Complex64| Bicomplex::ZERO;
        assert!(disk_lm_norm(zero, 2.0, &quad).unwrap() == 0.0);
    }
}
