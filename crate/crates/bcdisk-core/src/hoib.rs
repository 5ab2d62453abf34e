//! Higher-order iterated Beltrami (HOIB) fields: solutions of
//! `(delbar - mu del)^n w = 0` for constant bicomplex `mu`.
//!
//! Writing `L = delbar - mu del` and `zh*` for the star-conjugated coordinate
//! field (which satisfies `L(zh*) = 1` and is the bicomplex stand-in for the
//! anti-holomorphic coordinate of classical polyanalytic theory), every HOIB
//! field of order `n` decomposes uniquely as
//!
//! ```text
//! w = sum_{k=0}^{n-1} (zh*)^k w_k,        L(w_k) = 0  for every k,
//! ```
//!
//! and the components are recovered by the closed formula
//!
//! ```text
//! w_k = (1/k!) sum_{j=0}^{n-1-k} ((-1)^j / j!) (zh*)^j L^{k+j}(w),
//! ```
//!
//! which this module implements with exact polynomial arithmetic (`L` is a
//! derivation and `L^j((zh*)^m h) = m!/(m-j)! (zh*)^{m-j} h` for
//! `L`-annihilated `h`, so the double sum telescopes to a Kronecker delta).
//! Finite differences are deliberately not offered here: the extraction
//! applies `L` up to `n - 1` times and would compound FD error unacceptably.
//!
//! First-order (`mu`-holomorphic) fields are spanned per idempotent component
//! by polynomials in the characteristic linear combinations `z + mu^- conj(z)`
//! (minus component) and `conj(z) + mu^+ z` (plus component);
//! [`random_mu_holomorphic`] draws such fields for round-trip testing.

use num_complex::Complex64;
use rand::Rng;

use crate::algebra::Bicomplex;
use crate::cpoly::CPoly;
use crate::error::{Error, Result};
use crate::fields::PolyField;
use crate::hardy::circle_mean;
use crate::tolerances::HOIB_EXTRACT_TOL;

/// One application of the Beltrami operator `L = delbar - mu del`.
pub fn beltrami_operator(w: &PolyField, mu: Bicomplex) -> PolyField {
    w.beltrami_apply(&PolyField::constant(mu))
}

/// `L^n w` by repeated exact differentiation.
pub fn beltrami_iterate(w: &PolyField, mu: Bicomplex, n: usize) -> PolyField {
    let mut out = w.clone();
    for _ in 0..n {
        out = beltrami_operator(&out, mu);
    }
    out
}

/// Largest bicomplex norm among the coefficients of `w` (the coefficient
/// metric used by annihilation checks).
pub fn max_coeff_norm(w: &PolyField) -> f64 {
    w.bicomplex_coeffs()
        .values()
        .map(|c| c.bc_norm())
        .fold(0.0, f64::max)
}

/// Assembles `sum_k (zh*)^k components[k]`.
pub fn assemble_bundle(components: &[PolyField]) -> PolyField {
    let zs = PolyField::zhat_star();
    let mut power = PolyField::constant(Bicomplex::ONE);
    let mut out = PolyField::zero();
    for (k, comp) in components.iter().enumerate() {
        if k > 0 {
            power = power.mul(&zs);
        }
        out = out.add(&power.mul(comp));
    }
    out
}

/// Extracts the `n` first-order components of an order-`n` HOIB field.
///
/// Errors unless the input is actually annihilated by `L^n` (coefficient
/// tolerance [`HOIB_EXTRACT_TOL`]). For valid input,
/// `assemble_bundle(&extract_components(w, mu, n)?) == w` up to rounding and
/// every returned component is `mu`-holomorphic.
pub fn extract_components(w: &PolyField, mu: Bicomplex, n: usize) -> Result<Vec<PolyField>> {
    if n == 0 {
        return Err(Error::Invalid("HOIB order n must be at least 1".into()));
    }
    let annihilated = beltrami_iterate(w, mu, n);
    let resid = max_coeff_norm(&annihilated);
    if resid > HOIB_EXTRACT_TOL {
        return Err(Error::Invalid(format!(
            "input is not an order-{n} iterated-Beltrami field: \
             n-th iterate has coefficient norm {resid:.3e} (tolerance {HOIB_EXTRACT_TOL:.0e})"
        )));
    }

    // Precompute L^m w for m = 0..n-1 and powers of zh*.
    let mut iterates = Vec::with_capacity(n);
    iterates.push(w.clone());
    for m in 1..n {
        let next = beltrami_operator(&iterates[m - 1], mu);
        iterates.push(next);
    }
    let zs = PolyField::zhat_star();
    let mut zs_pow = Vec::with_capacity(n);
    zs_pow.push(PolyField::constant(Bicomplex::ONE));
    for j in 1..n {
        let next = zs_pow[j - 1].mul(&zs);
        zs_pow.push(next);
    }

    let scale = max_coeff_norm(w).max(1.0);
    let mut components = Vec::with_capacity(n);
    let mut k_factorial = 1.0f64;
    for k in 0..n {
        if k > 0 {
            k_factorial *= k as f64;
        }
        let mut acc = PolyField::zero();
        let mut j_factorial = 1.0f64;
        for j in 0..(n - k) {
            if j > 0 {
                j_factorial *= j as f64;
            }
            let sign = if j % 2 == 0 { 1.0 } else { -1.0 };
            let coeff = Bicomplex::from_real(sign / (k_factorial * j_factorial));
            acc = acc.add(&zs_pow[j].mul(&iterates[k + j]).scale(coeff));
        }
        components.push(acc.pruned(1e-14 * scale));
    }
    Ok(components)
}

/// Coefficient-level residual of the first-order equation `L w = 0`; zero
/// exactly when `w` is `mu`-holomorphic.
pub fn mu_holomorphic_residual(w: &PolyField, mu: Bicomplex) -> f64 {
    max_coeff_norm(&beltrami_operator(w, mu))
}

/// Draws a random `mu`-holomorphic polynomial field of degree `<= max_degree`
/// with coefficients uniform in the unit box, per idempotent component.
pub fn random_mu_holomorphic(mu: Bicomplex, max_degree: u32, rng: &mut impl Rng) -> PolyField {
    let mut draw = |_dim: ()| -> Vec<Complex64> {
        (0..=max_degree)
            .map(|_| Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)))
            .collect()
    };
    let minus_coeffs = draw(());
    let plus_coeffs = draw(());
    let one = Complex64::new(1.0, 0.0);
    let minus = CPoly::from_univariate_in_linear(&minus_coeffs, one, mu.minus());
    let plus = CPoly::from_univariate_in_linear(&plus_coeffs, mu.plus(), one);
    PolyField::from_components(plus, minus)
}

/// Draws an order-`n` bundle: `n` random `mu`-holomorphic components and the
/// assembled HOIB field.
pub fn random_bundle(
    mu: Bicomplex,
    n: usize,
    max_degree: u32,
    rng: &mut impl Rng,
) -> (Vec<PolyField>, PolyField) {
    let components: Vec<PolyField> = (0..n)
        .map(|_| random_mu_holomorphic(mu, max_degree, rng))
        .collect();
    let assembled = assemble_bundle(&components);
    (components, assembled)
}

/// The `n` per-order Hardy seminorm estimates of an HOIB field: for each
/// `k = 0..n-1`, the sup over the sampled radii of the circle L^p mean of
/// `bc_norm(L^k w)`. A lower bound of the true sup over `r < 1`, monotone
/// under radii refinement.
pub fn hoib_hardy_seminorms(
    w: &PolyField,
    mu: Bicomplex,
    n: usize,
    p: f64,
    radii: &[f64],
    n_theta: usize,
) -> Result<Vec<f64>> {
    let mut out = Vec::with_capacity(n);
    let mut iterate = w.clone();
    for k in 0..n {
        if k > 0 {
            iterate = beltrami_operator(&iterate, mu);
        }
        let mut sup: f64 = 0.0;
        for &r in radii {
            sup = sup.max(circle_mean(|z| iterate.eval(z), p, r, n_theta)?);
        }
        out.push(sup);
    }
    Ok(out)
}
