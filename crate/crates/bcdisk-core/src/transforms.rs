//! The algebraic link between the conjugate Beltrami equation and the Vekua
//! equation, plus residual checking for the general first-order equation.
//!
//! With a real dilatation `mu` (`|mu| <= c < 1`), a function `f` solves the
//! conjugate Beltrami equation `delbar f = mu conj(del f)` exactly when
//!
//! ```text
//! w = (f - mu conj(f)) / sqrt(1 - mu^2)
//! ```
//!
//! solves the Vekua equation `delbar w = alpha conj(w)` with
//! `alpha = -delbar(mu) / (1 - mu^2)`; the transform is an involution-style
//! pair with inverse `f = (w + mu conj(w)) / sqrt(1 - mu^2)`, and the two
//! residuals are proportional pointwise:
//!
//! ```text
//! delbar w - alpha conj(w) = (delbar f - mu conj(del f)) / sqrt(1 - mu^2).
//! ```
//!
//! In the bicomplex setting the conjugation is the star conjugation and the
//! identities hold per idempotent component. All pointwise builders validate
//! that `1 - mu^2` is invertible (no zero-divisor division is ever attempted:
//! inversion happens componentwise after an explicit check).
//!
//! The coefficient `alpha` is offered on two paths, matching its two uses:
//! an exact pointwise rational evaluation, and a truncated geometric series
//! `-delbar(mu) sum_k mu^{2k}` in exact polynomial arithmetic for polynomial
//! `mu`, with the truncation-error bound reported alongside.
//!
//! The general first-order equation (GFOE)
//! `delbar w = mu1 del w + mu2 delbar(w*) + A w + B w* + f` has no solution
//! formula in scope; this module checks residuals of candidate solutions,
//! exactly on polynomial fields and by finite differences on sampled ones.

use num_complex::Complex64;

use crate::algebra::Bicomplex;
use crate::error::{Error, Result};
use crate::fields::{fd_bc_del, fd_bc_delbar, PolyField};

/// Componentwise reciprocal, refusing zero divisors and near-singular values.
fn invert(w: Bicomplex, what: &str) -> Result<Bicomplex> {
    let (p, m) = (w.plus(), w.minus());
    if p.norm() < 1e-14 || m.norm() < 1e-14 {
        return Err(Error::Invalid(format!(
            "{what} is a zero divisor or numerically singular (components {p}, {m})"
        )));
    }
    Ok(Bicomplex::from_idempotent(1.0 / p, 1.0 / m))
}

/// Componentwise principal square root.
fn sqrt_bicomplex(w: Bicomplex) -> Bicomplex {
    w.map(|c| c.sqrt())
}

/// Validates that `mu` is an admissible dilatation value: star-self-conjugate
/// (both idempotent components real, so `mu* = mu` and the normalizer is its
/// own star conjugate — this is what makes the forward and inverse transforms
/// exact inverses) with components strictly inside `(-1, 1)`.
pub fn validate_dilatation(mu: Bicomplex) -> Result<()> {
    let imag = mu.plus().im.abs().max(mu.minus().im.abs());
    if imag > 1e-12 * (1.0 + mu.bc_norm()) {
        return Err(Error::Invalid(format!(
            "dilatation must be star-self-conjugate (real idempotent components), got {mu}"
        )));
    }
    if mu.plus().re.abs() >= 1.0 || mu.minus().re.abs() >= 1.0 {
        return Err(Error::Invalid(format!(
            "dilatation components must lie strictly inside (-1, 1), got {mu}"
        )));
    }
    Ok(())
}

/// `1/sqrt(1 - mu^2)` with invertibility validation.
fn normalizer(mu: Bicomplex) -> Result<Bicomplex> {
    validate_dilatation(mu)?;
    let one_minus = Bicomplex::ONE - mu * mu;
    invert(sqrt_bicomplex(one_minus), "sqrt(1 - mu^2)")
}

/// Pointwise transform of a conjugate-Beltrami solution value into the
/// corresponding Vekua solution value: `w = (f - mu f*) / sqrt(1 - mu^2)`.
pub fn vekua_from_conjbel(f: Bicomplex, mu: Bicomplex) -> Result<Bicomplex> {
    Ok((f - mu * f.star_conj()) * normalizer(mu)?)
}

/// Pointwise inverse transform: `f = (w + mu w*) / sqrt(1 - mu^2)`.
pub fn conjbel_from_vekua(w: Bicomplex, mu: Bicomplex) -> Result<Bicomplex> {
    Ok((w + mu * w.star_conj()) * normalizer(mu)?)
}

/// Field-level transform for constant `mu` (exact polynomial arithmetic).
pub fn vekua_field_from_conjbel(f: &PolyField, mu: Bicomplex) -> Result<PolyField> {
    let s = normalizer(mu)?;
    Ok(f.sub(&f.star_conj().scale(mu)).scale(s))
}

/// Field-level inverse transform for constant `mu`.
pub fn conjbel_field_from_vekua(w: &PolyField, mu: Bicomplex) -> Result<PolyField> {
    let s = normalizer(mu)?;
    Ok(w.add(&w.star_conj().scale(mu)).scale(s))
}

/// Exact pointwise Vekua coefficient `alpha = -dbar_mu / (1 - mu^2)` from the
/// values of `mu` and its bicomplex delbar at a point.
pub fn alpha_at(mu: Bicomplex, dbar_mu: Bicomplex) -> Result<Bicomplex> {
    Ok(-dbar_mu * invert(Bicomplex::ONE - mu * mu, "1 - mu^2")?)
}

/// Truncated-series Vekua coefficient for polynomial `mu`:
/// `alpha = -delbar(mu) sum_{k=0}^{terms-1} mu^{2k}` together with the
/// geometric truncation-error bound `sup_bound(mu)^(2 terms) / (1 - sup_bound(mu)^2)`
/// scaled by the bound of `delbar(mu)`.
pub fn alpha_series(mu: &PolyField, terms: usize) -> Result<(PolyField, f64)> {
    let c = mu.sup_norm_bound();
    if c >= 1.0 {
        return Err(Error::Invalid(format!(
            "alpha series requires sup bound of mu below 1, got {c}"
        )));
    }
    let dbar = mu.bc_delbar();
    let mu2 = mu.mul(mu);
    let mut series = PolyField::constant(Bicomplex::ONE);
    let mut power = PolyField::constant(Bicomplex::ONE);
    for _ in 1..terms {
        power = power.mul(&mu2);
        series = series.add(&power);
    }
    let alpha = dbar.mul(&series).neg();
    let tail = if c > 0.0 {
        dbar.sup_norm_bound() * c.powi(2 * terms as i32) / (1.0 - c * c)
    } else {
        0.0
    };
    Ok((alpha, tail))
}

/// Coefficients of the general first-order equation
/// `delbar w = mu1 del w + mu2 delbar(w*) + A w + B w* + f`.
#[derive(Clone, Debug, Default)]
pub struct GfoeProblem {
    pub mu1: PolyField,
    pub mu2: PolyField,
    pub a: PolyField,
    pub b: PolyField,
    pub f: PolyField,
}

/// Exact GFOE residual `delbar w - mu1 del w - mu2 delbar(w*) - A w - B w* - f`
/// for polynomial data.
pub fn gfoe_residual(w: &PolyField, prob: &GfoeProblem) -> PolyField {
    let ws = w.star_conj();
    w.bc_delbar()
        .sub(&prob.mu1.mul(&w.bc_del()))
        .sub(&prob.mu2.mul(&ws.bc_delbar()))
        .sub(&prob.a.mul(w))
        .sub(&prob.b.mul(&ws))
        .sub(&prob.f)
}

/// Finite-difference GFOE residual at a point for sampled (non-polynomial)
/// candidate solutions; coefficient fields are evaluated exactly.
pub fn gfoe_residual_fd(
    w: impl Fn(Complex64) -> Bicomplex + Copy,
    prob: &GfoeProblem,
    z: Complex64,
    h: f64,
) -> Bicomplex {
    let ws = move |q: Complex64| w(q).star_conj();
    fd_bc_delbar(w, z, h)
        - prob.mu1.eval(z) * fd_bc_del(w, z, h)
        - prob.mu2.eval(z) * fd_bc_delbar(ws, z, h)
        - prob.a.eval(z) * w(z)
        - prob.b.eval(z) * ws(z)
        - prob.f.eval(z)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::bicomplexify;
    use crate::fields::fd_dzbar;
    use crate::tolerances::FD_STEP;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    /// The real dilatation mu(z) = 0.2 x as a bicomplex value.
    fn mu_var(z: Complex64) -> Bicomplex {
        Bicomplex::from_real(0.2 * z.re)
    }

    /// Manufactured conjugate-Beltrami solution for mu = 0.2 x:
    /// the classical complex solution f_cl = u(x) + i y with
    /// u'(x) = (1 + mu)/(1 - mu), so u(x) = -x - 10 ln(1 - 0.2 x),
    /// embedded as a bicomplex field (idempotent components conj(f_cl), f_cl).
    fn f_manufactured(z: Complex64) -> Bicomplex {
        let u = -z.re - 10.0 * (1.0 - 0.2 * z.re).ln();
        bicomplexify(Complex64::new(u, z.im))
    }

    #[test]
    fn pointwise_round_trip_is_exact() {
        // An admissible dilatation has real idempotent components; the
        // solution value is unrestricted.
        let mu = Bicomplex::from_idempotent(c(0.35, 0.0), c(-0.6, 0.0));
        let f = Bicomplex::new(c(1.3, -0.4), c(0.2, 2.0));
        let w = vekua_from_conjbel(f, mu).unwrap();
        let back = conjbel_from_vekua(w, mu).unwrap();
        assert!((back - f).bc_norm() < 1e-13);
    }

    #[test]
    fn round_trip_requires_star_self_conjugate_mu() {
        let mu = Bicomplex::new(c(0.2, 0.05), c(-0.1, 0.15));
        assert!(vekua_from_conjbel(Bicomplex::ONE, mu).is_err());
    }

    #[test]
    fn field_round_trip_is_exact() {
        let mu = Bicomplex::from_idempotent(c(0.3, 0.0), c(-0.45, 0.0));
        let mut f = PolyField::zhat();
        f.add_monomial(2, 1, Bicomplex::J);
        f.add_monomial(0, 2, Bicomplex::new(c(0.5, 0.5), c(-0.25, 0.0)));
        let w = vekua_field_from_conjbel(&f, mu).unwrap();
        let back = conjbel_field_from_vekua(&w, mu).unwrap();
        let diff = back.sub(&f);
        assert!(diff.plus().l1_norm() + diff.minus().l1_norm() < 1e-12);
    }

    #[test]
    fn constant_mu_maps_linear_solution_to_scaled_zhat() {
        // f = zh + mu0 zh* solves the conjugate Beltrami equation with
        // constant real mu0; its Vekua partner is sqrt(1 - mu0^2) zh.
        let mu0 = 0.4;
        let mu = Bicomplex::from_real(mu0);
        let f = PolyField::zhat().add(&PolyField::zhat_star().scale(mu));
        let w = vekua_field_from_conjbel(&f, mu).unwrap();
        let want = PolyField::zhat().scale(Bicomplex::from_real((1.0 - mu0 * mu0).sqrt()));
        let diff = w.sub(&want);
        assert!(diff.plus().l1_norm() + diff.minus().l1_norm() < 1e-12);
        // And it is delbar-free (alpha = 0 for constant mu).
        assert!(w.bc_delbar().plus().l1_norm() + w.bc_delbar().minus().l1_norm() < 1e-14);
    }

    #[test]
    fn transform_rejects_singular_normalizer() {
        // mu with a component equal to 1 makes 1 - mu^2 a zero divisor; the
        // transform rejects it at validation, and the rational alpha path
        // rejects the zero divisor itself.
        let mu = Bicomplex::from_idempotent(c(1.0, 0.0), c(0.3, 0.0));
        assert!(vekua_from_conjbel(Bicomplex::ONE, mu).is_err());
        assert!(alpha_at(mu, Bicomplex::ONE).is_err());
    }

    #[test]
    fn variable_mu_manufactured_solution_transforms_to_vekua_solution() {
        // Check both residuals by finite differences at interior points:
        // the conjugate-Beltrami residual of f and the Vekua residual of the
        // transformed w (with the exact rational alpha) both vanish.
        let h = FD_STEP;
        let pts = [c(0.1, 0.2), c(-0.3, 0.4), c(0.5, -0.1), c(-0.6, -0.5), c(0.0, 0.7)];
        for &z in &pts {
            // Conjugate-Beltrami residual of f: delbar f - mu conj(del f).
            // For scalar (complexified) fields this is the classical
            // statement; check it on the minus component.
            let fm = |q: Complex64| f_manufactured(q).minus();
            let dfbar = fd_dzbar(fm, z, h);
            let df = crate::fields::fd_dz(fm, z, h);
            let resid_cb = dfbar - mu_var(z).minus() * df.conj();
            assert!(resid_cb.norm() < 1e-6, "conj-Beltrami residual {resid_cb} at {z}");

            // Vekua residual of w = transform(f).
            let w = |q: Complex64| vekua_from_conjbel(f_manufactured(q), mu_var(q)).unwrap();
            // delbar mu for mu = 0.2 x: 0.1 (both components).
            let alpha = alpha_at(mu_var(z), Bicomplex::from_real(0.1)).unwrap();
            let resid = fd_bc_delbar(w, z, h) - alpha * w(z).star_conj();
            assert!(resid.bc_norm() < 1e-4, "Vekua residual {} at {z}", resid.bc_norm());

            // Proportionality of the two residuals.
            let s = (1.0 - mu_var(z).minus().re.powi(2)).sqrt();
            let lifted = resid_cb / s;
            assert!((resid.minus() - lifted).norm() < 1e-4);
        }
    }

    #[test]
    fn alpha_series_matches_pointwise_rational() {
        // mu = 0.2 x as a polynomial field.
        let mut mu = PolyField::zero();
        mu.add_monomial(1, 0, Bicomplex::from_real(0.1));
        mu.add_monomial(0, 1, Bicomplex::from_real(0.1));
        let (alpha, tail) = alpha_series(&mu, 12).unwrap();
        assert!(tail < 1e-10, "tail bound {tail:e}");
        for &z in &[c(0.3, 0.1), c(-0.5, 0.6), c(0.0, -0.8)] {
            let exact = alpha_at(mu_var(z), Bicomplex::from_real(0.1)).unwrap();
            assert!(
                (alpha.eval(z) - exact).bc_norm() < 1e-9,
                "series alpha mismatch at {z}"
            );
        }
    }

    #[test]
    fn gfoe_residual_vanishes_on_manufactured_data() {
        let mu1 = Bicomplex::new(c(0.2, 0.1), c(0.0, -0.1));
        let mu2 = Bicomplex::new(c(-0.1, 0.0), c(0.1, 0.05));
        let a = Bicomplex::new(c(0.3, -0.3), c(0.2, 0.0));
        let b = Bicomplex::new(c(0.0, 0.4), c(-0.3, 0.1));
        // w = zh: delbar w = 0, del w = 1, w* = zh*, delbar(w*) = 1, so the
        // matching source is f = -mu1 - mu2 - A zh - B zh*.
        let w = PolyField::zhat();
        let f = PolyField::constant(-mu1 - mu2)
            .sub(&PolyField::zhat().scale(a))
            .sub(&PolyField::zhat_star().scale(b));
        let prob = GfoeProblem {
            mu1: PolyField::constant(mu1),
            mu2: PolyField::constant(mu2),
            a: PolyField::constant(a),
            b: PolyField::constant(b),
            f,
        };
        let resid = gfoe_residual(&w, &prob);
        assert!(resid.plus().l1_norm() + resid.minus().l1_norm() < 1e-14);
        // FD path agrees at sample points.
        for &z in &[c(0.2, 0.3), c(-0.4, 0.1)] {
            let r = gfoe_residual_fd(|q| bicomplexify(q), &prob, z, FD_STEP);
            assert!(r.bc_norm() < 1e-6);
        }
    }

    #[test]
    fn gfoe_residual_detects_wrong_candidate() {
        let prob = GfoeProblem {
            f: PolyField::constant(Bicomplex::ONE),
            ..Default::default()
        };
        // delbar(zh) = 0 != 1: residual has norm 1.
        let resid = gfoe_residual(&PolyField::zhat(), &prob);
        assert!((resid.eval(c(0.3, 0.3)).bc_norm() - 1.0).abs() < 1e-14);
    }
}
