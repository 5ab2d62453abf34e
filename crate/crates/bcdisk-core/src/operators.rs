//! Singular integral operators on the unit disk.
//!
//! Every operator has two implementations:
//!
//! * an **exact path** acting on polynomial densities through closed-form
//!   monomial images (these are algebraic identities on the disk, verified in
//!   the test suite against quadrature and finite differences), and
//! * a **quadrature path** acting on arbitrary smooth densities through the
//!   polar rule of [`crate::quad`], with singularities handled by smooth
//!   tapering plus local-model subtraction.
//!
//! Operators (densities `g`, evaluation point `z` in the open disk, area
//! measure `dA`):
//!
//! * Cauchy/Pompeiu transform `C(g)(z) = -(1/pi) ∬ g(zeta)/(zeta - z) dA`,
//!   the right inverse of `d/dconj(z)`; monomial image
//!   `C(z^m zbar^n) = z^m zbar^{n+1}/(n+1) - [n<m] z^{m-n-1}/(n+1)`.
//! * Beurling-type operator
//!   `Pi(g)(z) = -(1/pi) ∬ [ g/(zeta-z)^2 + conj(g)/(1 - z conj(zeta))^2 ] dA`
//!   (principal value in the first kernel). Its holomorphic part is
//!   `d/dz C(g)`; the conjugate part keeps `Re` of certain boundary traces
//!   neutral. `Pi` is real-linear but only R-linear in `g` (the second term
//!   conjugates), which matters for Neumann iterations.
//! * Schwarz-type area operator
//!   `S(g)(z) = -(1/2 pi) ∬ [ g K1 + conj(g) K2 ] dA` with
//!   `K1 = (zeta + z)/(zeta (zeta - z))` and
//!   `K2 = (1 + z conj(zeta))/(conj(zeta)(1 - z conj(zeta)))`.
//!   It satisfies `d/dconj(z) S(g) = g`, `d/dz S(g) = Pi(g)`,
//!   `Re S(g) = 0` on the boundary circle and `Im S(g)(0) = 0`.
//! * Schwarz boundary integral `phi(z) = (1/2 pi i) ∮ gamma (zeta + z)/
//!   (zeta - z) dzeta/zeta + i a` for real boundary data `gamma`, with the
//!   spectral form `phi = gamma_hat(0) + 2 sum_{k>=1} gamma_hat(k) z^k + i a`.
//! * Poisson and conjugate Poisson kernels and the harmonic extension of
//!   boundary data.
//! * The bicomplex area operator [`t_bicomplex_exact`], acting per idempotent
//!   component with a conjugated plus side so that `delbar T_B(f) = f`.

use std::collections::BTreeMap;
use std::f64::consts::PI;

use num_complex::Complex64;

use crate::algebra::Bicomplex;
use crate::cpoly::CPoly;
use crate::fields::{BoundaryData, PolyField};
use crate::quad::{taper, DiskQuadrature, EpsilonPolicy};
use crate::tolerances::FD_STEP;

// ---------------------------------------------------------------------------
// Exact path: monomial closed forms
// ---------------------------------------------------------------------------

/// Exact Cauchy/Pompeiu transform of a polynomial density.
///
/// Term rule: `C(c z^m zbar^n) = c (z^m zbar^{n+1} - [n<m] z^{m-n-1})/(n+1)`.
/// Satisfies `d/dconj(z) C(g) = g` identically.
pub fn cauchy_exact(g: &CPoly) -> CPoly {
    let mut out = CPoly::zero();
    for (m, n, c) in g.terms() {
        let inv = 1.0 / (n as f64 + 1.0);
        out.add_term(m, n + 1, c * inv);
        if n < m {
            out.add_term(m - n - 1, 0, -c * inv);
        }
    }
    out
}

/// Exact holomorphic (strong) part of the Beurling-type operator:
/// `Pi_1(g) = d/dz C(g)`, i.e. the principal-value integral against
/// `1/(zeta - z)^2`.
pub fn pi1_exact(g: &CPoly) -> CPoly {
    cauchy_exact(g).d_z()
}

/// Exact conjugate (compensating) part of the Beurling-type operator:
/// `Pi_2(c z^m zbar^n) = -conj(c) [n>=m] ((n-m+1)/(n+1)) z^{n-m}`.
pub fn pi2_exact(g: &CPoly) -> CPoly {
    let mut out = CPoly::zero();
    for (m, n, c) in g.terms() {
        if n >= m {
            let coeff = (n as f64 - m as f64 + 1.0) / (n as f64 + 1.0);
            out.add_term(n - m, 0, -c.conj() * coeff);
        }
    }
    out
}

/// Exact Beurling-type operator `Pi = Pi_1 + Pi_2` on polynomial densities.
///
/// `Pi(1)(0) = -1`; constants map to `-conj(c)`; total degree is preserved.
/// Note `Pi` is only R-linear: `Pi(c g) != c Pi(g)` for non-real scalars.
pub fn pi_operator_exact(g: &CPoly) -> CPoly {
    pi1_exact(g).add(&pi2_exact(g))
}

/// Exact Schwarz-type area operator on polynomial densities.
///
/// Term rule for `g = c z^m zbar^n` (writing `d = [m == n+1]` for the
/// diagonal constant):
///
/// ```text
/// S(g) = c    * ( d/(2(n+1)) + z^m zbar^{n+1}/(n+1) - [n<m] z^{m-n-1}/(n+1) )
///      + c^*  * ( -d/(2(n+1)) - [n>=m] z^{n-m+1}/(n+1) )
/// ```
///
/// The two diagonal constants cancel only for real `c`, and make
/// `Im S(g)(0) = 0` exact.
pub fn schwarz_area_exact(g: &CPoly) -> CPoly {
    let mut out = CPoly::zero();
    for (m, n, c) in g.terms() {
        let inv = 1.0 / (n as f64 + 1.0);
        if m == n + 1 {
            out.add_term(0, 0, c * (0.5 * inv));
            out.add_term(0, 0, -c.conj() * (0.5 * inv));
        }
        out.add_term(m, n + 1, c * inv);
        if n < m {
            out.add_term(m - n - 1, 0, -c * inv);
        }
        if n >= m {
            out.add_term(n - m + 1, 0, -c.conj() * inv);
        }
    }
    out
}

/// Exact bicomplex area operator: `T_B(f)` has minus component `S(f^-)` and
/// plus component `conj(S(conj(f^+)))`, so that `delbar T_B(f) = f` holds
/// componentwise and `Re` of both components vanishes on the boundary circle.
pub fn t_bicomplex_exact(f: &PolyField) -> PolyField {
    let minus = schwarz_area_exact(f.minus());
    let plus = schwarz_area_exact(&f.plus().conj_poly()).conj_poly();
    PolyField::from_components(plus, minus)
}

// ---------------------------------------------------------------------------
// Schwarz boundary integral and Poisson kernels
// ---------------------------------------------------------------------------

/// Schwarz integral of real boundary data given by complex Fourier
/// coefficients (`gamma_hat(-k) = conj(gamma_hat(k))`), as the holomorphic
/// polynomial `gamma_hat(0) + 2 sum_{k>=1} gamma_hat(k) z^k + i a`.
pub fn schwarz_integral_fourier(gamma_hat: &BTreeMap<i64, Complex64>, a: f64) -> CPoly {
    let mut out = CPoly::zero();
    out.add_term(0, 0, Complex64::new(0.0, a));
    for (&k, &c) in gamma_hat {
        match k.cmp(&0) {
            std::cmp::Ordering::Equal => out.add_term(0, 0, c),
            std::cmp::Ordering::Greater => out.add_term(k as u32, 0, 2.0 * c),
            std::cmp::Ordering::Less => {}
        }
    }
    out
}

/// Schwarz integral by trapezoid contour quadrature:
/// `(1/2 pi) sum_l gamma(theta_l) (zeta_l + z)/(zeta_l - z) dtheta + i a`.
/// Spectrally accurate for trigonometric-polynomial data and `|z| < 1`.
pub fn schwarz_integral_contour(
    gamma: impl Fn(f64) -> f64,
    a: f64,
    n_theta: usize,
    z: Complex64,
) -> Complex64 {
    let dtheta = 2.0 * PI / n_theta as f64;
    let mut acc = Complex64::new(0.0, 0.0);
    for l in 0..n_theta {
        let th = l as f64 * dtheta;
        let zeta = Complex64::from_polar(1.0, th);
        acc += gamma(th) * (zeta + z) / (zeta - z);
    }
    acc * (dtheta / (2.0 * PI)) + Complex64::new(0.0, a)
}

/// Poisson kernel `P_r(t) = (1 - r^2) / (1 - 2 r cos t + r^2)`.
pub fn poisson_kernel(r: f64, t: f64) -> f64 {
    (1.0 - r * r) / (1.0 - 2.0 * r * t.cos() + r * r)
}

/// Conjugate Poisson kernel `Q_r(t) = 2 r sin t / (1 - 2 r cos t + r^2)`.
pub fn conj_poisson_kernel(r: f64, t: f64) -> f64 {
    2.0 * r * t.sin() / (1.0 - 2.0 * r * t.cos() + r * r)
}

/// Harmonic (Poisson) extension of boundary Fourier data to `|z| < 1`, via
/// the spectral form `sum_k c_k r^{|k|} e^{i k theta}`.
pub fn poisson_extend(gamma: &BoundaryData, z: Complex64) -> Bicomplex {
    let (r, theta) = z.to_polar();
    let mut acc = Bicomplex::ZERO;
    for (k, c) in gamma.terms() {
        let scale = r.powi(k.unsigned_abs() as i32);
        acc += c * Complex64::from_polar(scale, k as f64 * theta);
    }
    acc
}

// ---------------------------------------------------------------------------
// Quadrature path
// ---------------------------------------------------------------------------

/// Local second-order model of `g` at `z`:
/// `Q(zeta) = sum_{p+q<=2} c[p][q] (zeta-z)^p (conj(zeta)-conj(z))^q`
/// with coefficients from central finite differences.
struct LocalModel {
    z: Complex64,
    c: [[Complex64; 3]; 3],
}

impl LocalModel {
    fn build(g: &impl Fn(Complex64) -> Complex64, z: Complex64) -> Self {
        let h = FD_STEP;
        let ih = Complex64::new(0.0, h);
        let g0 = g(z);
        let (gpr, gmr) = (g(z + h), g(z - h));
        let (gpi, gmi) = (g(z + ih), g(z - ih));
        let gx = (gpr - gmr) / (2.0 * h);
        let gy = (gpi - gmi) / (2.0 * h);
        let gxx = (gpr - 2.0 * g0 + gmr) / (h * h);
        let gyy = (gpi - 2.0 * g0 + gmi) / (h * h);
        let gxy = (g(z + h + ih) - g(z + h - ih) - g(z - h + ih) + g(z - h - ih)) / (4.0 * h * h);
        let i = Complex64::i();
        let gz = 0.5 * (gx - i * gy);
        let gzb = 0.5 * (gx + i * gy);
        let gzz = 0.25 * (gxx - gyy) - 0.5 * i * gxy;
        let gzbzb = 0.25 * (gxx - gyy) + 0.5 * i * gxy;
        let gzzb = 0.25 * (gxx + gyy);
        let zero = Complex64::new(0.0, 0.0);
        let mut c = [[zero; 3]; 3];
        c[0][0] = g0;
        c[1][0] = gz;
        c[0][1] = gzb;
        c[2][0] = 0.5 * gzz;
        c[0][2] = 0.5 * gzbzb;
        c[1][1] = gzzb;
        LocalModel { z, c }
    }

    fn eval(&self, zeta: Complex64) -> Complex64 {
        let u = zeta - self.z;
        let ub = u.conj();
        let mut acc = Complex64::new(0.0, 0.0);
        for p in 0..3usize {
            for q in 0..3usize {
                if p + q > 2 {
                    continue;
                }
                let c = self.c[p][q];
                if c != Complex64::new(0.0, 0.0) {
                    acc += c * u.powu(p as u32) * ub.powu(q as u32);
                }
            }
        }
        acc
    }

    /// Exact integral of the model against the given kernel over the whole
    /// disk (principal value for the strong kernel).
    fn model_integral(&self, kernel: Kernel) -> Complex64 {
        let mut acc = Complex64::new(0.0, 0.0);
        for p in 0..3usize {
            for q in 0..3usize {
                if p + q > 2 {
                    continue;
                }
                let c = self.c[p][q];
                if c != Complex64::new(0.0, 0.0) {
                    acc += c * shifted_monomial_integral(kernel, p as u32, q as u32, self.z);
                }
            }
        }
        acc
    }
}

#[derive(Clone, Copy)]
enum Kernel {
    /// `1/(zeta - z)`.
    Weak,
    /// `1/(zeta - z)^2`, principal value.
    Strong,
}

/// `∬_D zeta^a conj(zeta)^b k(zeta, z) dA` for the two singular kernels,
/// from the closed-form monomial images (`∬ g k dA = -pi * image`).
fn monomial_kernel_integral(kernel: Kernel, a: u32, b: u32, z: Complex64) -> Complex64 {
    let g = CPoly::monomial(a, b, Complex64::new(1.0, 0.0));
    let img = match kernel {
        Kernel::Weak => cauchy_exact(&g),
        Kernel::Strong => pi1_exact(&g),
    };
    -PI * img.eval(z)
}

/// `∬_D (zeta-z)^p (conj(zeta)-conj(z))^q k(zeta, z) dA` by binomial
/// expansion into disk monomials.
fn shifted_monomial_integral(kernel: Kernel, p: u32, q: u32, z: Complex64) -> Complex64 {
    let zb = z.conj();
    let mut acc = Complex64::new(0.0, 0.0);
    for s in 0..=p {
        for t in 0..=q {
            let coeff = binom(p, s) * binom(q, t)
                * (-z).powu(p - s)
                * (-zb).powu(q - t);
            acc += coeff * monomial_kernel_integral(kernel, s, t, z);
        }
    }
    acc
}

fn binom(n: u32, k: u32) -> Complex64 {
    let k = k.min(n - k);
    let mut acc = 1.0f64;
    for j in 0..k {
        acc = acc * (n - j) as f64 / (j + 1) as f64;
    }
    Complex64::new(acc, 0.0)
}

/// Core of the singular quadrature: evaluates
/// `∬_D g(zeta) k(zeta, z) dA` with the taper + local-model subtraction
/// scheme, using the supplied exclusion radius.
fn singular_integral_with_eps(
    g: &impl Fn(Complex64) -> Complex64,
    kernel: Kernel,
    z: Complex64,
    quad: &DiskQuadrature,
    eps: f64,
) -> Complex64 {
    let model = LocalModel::build(g, z);
    let mut node_sum = Complex64::new(0.0, 0.0);
    quad.for_each_node(|zeta, w| {
        let d = (zeta - z).norm();
        let s = taper(d, eps);
        if s > 0.0 {
            let k = match kernel {
                Kernel::Weak => 1.0 / (zeta - z),
                Kernel::Strong => {
                    let u = zeta - z;
                    1.0 / (u * u)
                }
            };
            node_sum += (g(zeta) - model.eval(zeta)) * k * (w * s);
        }
    });
    node_sum + model.model_integral(kernel)
}

/// Quadrature-path Cauchy/Pompeiu transform with explicit exclusion radius.
pub fn cauchy_quad_with_eps(
    g: &impl Fn(Complex64) -> Complex64,
    z: Complex64,
    quad: &DiskQuadrature,
    eps: f64,
) -> Complex64 {
    -singular_integral_with_eps(g, Kernel::Weak, z, quad, eps) / PI
}

/// Quadrature-path Cauchy/Pompeiu transform `C(g)(z)` for a smooth density.
pub fn cauchy_quad(
    g: &impl Fn(Complex64) -> Complex64,
    z: Complex64,
    quad: &DiskQuadrature,
    policy: &EpsilonPolicy,
) -> Complex64 {
    cauchy_quad_with_eps(g, z, quad, policy.eps_for(quad))
}

/// Quadrature-path Beurling-type operator with explicit exclusion radius.
pub fn pi_operator_quad_with_eps(
    g: &impl Fn(Complex64) -> Complex64,
    z: Complex64,
    quad: &DiskQuadrature,
    eps: f64,
) -> Complex64 {
    let strong = singular_integral_with_eps(g, Kernel::Strong, z, quad, eps);
    // Conjugate part: kernel 1/(1 - z conj(zeta))^2 is smooth inside the disk.
    let compensating = quad.integrate(|zeta| {
        let d = Complex64::new(1.0, 0.0) - z * zeta.conj();
        g(zeta).conj() / (d * d)
    });
    -(strong + compensating) / PI
}

/// Quadrature-path Beurling-type operator `Pi(g)(z)` (principal value).
pub fn pi_operator_quad(
    g: &impl Fn(Complex64) -> Complex64,
    z: Complex64,
    quad: &DiskQuadrature,
    policy: &EpsilonPolicy,
) -> Complex64 {
    pi_operator_quad_with_eps(g, z, quad, policy.eps_for(quad))
}

/// Quadrature-path Schwarz-type area operator, via the kernel split
/// `K1 = -1/zeta + 2/(zeta - z)` and
/// `K2 = 1/conj(zeta) + 2 z/(1 - z conj(zeta))`:
///
/// ```text
/// S(g)(z) = (1/2 pi) ∬ g/zeta dA - (1/2 pi) ∬ conj(g)/conj(zeta) dA
///           + C(g)(z) - (z/pi) ∬ conj(g)/(1 - z conj(zeta)) dA .
/// ```
///
/// The `1/zeta` pieces are regular in polar coordinates; only the Cauchy
/// piece needs the singular machinery.
pub fn schwarz_area_quad_with_eps(
    g: &impl Fn(Complex64) -> Complex64,
    z: Complex64,
    quad: &DiskQuadrature,
    eps: f64,
) -> Complex64 {
    let origin_part = quad.integrate(|zeta| g(zeta) / zeta - (g(zeta) / zeta).conj());
    let cauchy = cauchy_quad_with_eps(g, z, quad, eps);
    let reflected = quad.integrate(|zeta| {
        g(zeta).conj() / (Complex64::new(1.0, 0.0) - z * zeta.conj())
    });
    origin_part / (2.0 * PI) + cauchy - z * reflected / PI
}

/// Quadrature-path Schwarz-type area operator `S(g)(z)`.
pub fn schwarz_area_quad(
    g: &impl Fn(Complex64) -> Complex64,
    z: Complex64,
    quad: &DiskQuadrature,
    policy: &EpsilonPolicy,
) -> Complex64 {
    schwarz_area_quad_with_eps(g, z, quad, policy.eps_for(quad))
}

/// Self-convergence diagnostic for the principal-value quadrature: evaluates
/// at the policy radius and at 1.5x that radius and reports both values with
/// their difference, an a-posteriori error indicator.
#[derive(Clone, Copy, Debug)]
pub struct PvDiagnostic {
    /// Value at the policy exclusion radius.
    pub value: Complex64,
    /// Value at 1.5x the exclusion radius.
    pub value_coarser: Complex64,
    /// `|value - value_coarser|`.
    pub discrepancy: f64,
}

/// Runs the exclusion-radius self-convergence check for `Pi(g)(z)`.
pub fn pi_operator_diagnostic(
    g: &impl Fn(Complex64) -> Complex64,
    z: Complex64,
    quad: &DiskQuadrature,
    policy: &EpsilonPolicy,
) -> PvDiagnostic {
    let eps = policy.eps_for(quad);
    let value = pi_operator_quad_with_eps(g, z, quad, eps);
    let value_coarser = pi_operator_quad_with_eps(g, z, quad, 1.5 * eps);
    PvDiagnostic {
        value,
        value_coarser,
        discrepancy: (value - value_coarser).norm(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fields::fd_dzbar;
    use crate::tolerances::{QUAD_STRONG_TOL, QUAD_WEAK_TOL};

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    /// A generic low-degree polynomial density with complex coefficients.
    fn sample_density() -> CPoly {
        let mut g = CPoly::constant(c(0.4, -0.3));
        g.add_term(1, 0, c(1.0, 0.5));
        g.add_term(0, 1, c(-0.7, 0.2));
        g.add_term(2, 1, c(0.3, -0.6));
        g.add_term(1, 2, c(-0.2, 0.1));
        g
    }

    #[test]
    fn cauchy_exact_inverts_dzbar() {
        let g = sample_density();
        assert_eq!(cauchy_exact(&g).d_zbar(), g);
        // C(1) = zbar.
        assert_eq!(
            cauchy_exact(&CPoly::constant(c(1.0, 0.0))),
            CPoly::var_zbar()
        );
        // C(zbar) = zbar^2 / 2.
        assert_eq!(
            cauchy_exact(&CPoly::var_zbar()),
            CPoly::monomial(0, 2, c(0.5, 0.0))
        );
    }

    #[test]
    fn pi_reference_values() {
        // Pi(constant c) = -conj(c) everywhere; in particular Pi(1)(0) = -1.
        let one = CPoly::constant(c(1.0, 0.0));
        let img = pi_operator_exact(&one);
        assert!((img.eval(c(0.0, 0.0)) - c(-1.0, 0.0)).norm() < 1e-15);
        let k = CPoly::constant(c(0.3, -0.8));
        assert_eq!(pi_operator_exact(&k), CPoly::constant(c(-0.3, -0.8)));
        // Pi(zeta) = zbar.
        assert_eq!(pi_operator_exact(&CPoly::var_z()), CPoly::var_zbar());
        // Degree preservation.
        let g = sample_density();
        assert!(pi_operator_exact(&g).total_degree() <= g.total_degree());
    }

    #[test]
    fn schwarz_area_reference_values() {
        // S(c) = c zbar - conj(c) z.
        let k = c(0.3, -0.8);
        let img = schwarz_area_exact(&CPoly::constant(k));
        let mut want = CPoly::monomial(0, 1, k);
        want.add_term(1, 0, -k.conj());
        assert_eq!(img, want);
        // S(i zeta) = i |z|^2.
        let img = schwarz_area_exact(&CPoly::monomial(1, 0, c(0.0, 1.0)));
        assert_eq!(img, CPoly::monomial(1, 1, c(0.0, 1.0)));
    }

    #[test]
    fn schwarz_area_solves_dbar_and_dz_identities() {
        let g = sample_density();
        let s = schwarz_area_exact(&g);
        // d/dconj(z) S(g) = g as polynomials.
        assert_eq!(s.d_zbar(), g);
        // d/dz S(g) = Pi(g) as polynomials.
        assert_eq!(s.d_z(), pi_operator_exact(&g));
    }

    #[test]
    fn schwarz_area_trace_has_zero_real_part() {
        let g = sample_density();
        let s = schwarz_area_exact(&g);
        // On |z| = 1 the function sum c_{MN} z^M zbar^N is the Laurent series
        // sum c e^{i(M-N)t}; Re f = 0 iff L(k) + conj(L(-k)) = 0 for all k.
        let mut laurent: BTreeMap<i64, Complex64> = BTreeMap::new();
        for (m, n, cc) in s.terms() {
            *laurent.entry(m as i64 - n as i64).or_insert(c(0.0, 0.0)) += cc;
        }
        for (&k, &lk) in &laurent {
            let lmk = laurent.get(&-k).copied().unwrap_or(c(0.0, 0.0));
            assert!(
                (lk + lmk.conj()).norm() < 1e-14,
                "Re trace mode {k} = {}",
                (lk + lmk.conj()).norm()
            );
        }
        // Im S(g)(0) = 0.
        assert!(s.eval(c(0.0, 0.0)).im.abs() < 1e-15);
    }

    #[test]
    fn t_bicomplex_solves_delbar() {
        let mut f = PolyField::monomial(1, 1, Bicomplex::new(c(0.3, 0.2), c(-0.1, 0.4)));
        f.add_monomial(0, 0, Bicomplex::J * 0.5);
        f.add_monomial(2, 0, Bicomplex::from_complex(c(0.0, -0.6)));
        let t = t_bicomplex_exact(&f);
        assert_eq!(t.bc_delbar(), f);
        // Boundary: Re of both idempotent components vanishes on |z| = 1.
        let tr = BoundaryData::trace_of_poly(&t);
        for theta in [0.0, 0.9, 2.2, 4.4] {
            let v = tr.eval(theta);
            assert!(v.plus().re.abs() < 1e-13, "plus Re = {}", v.plus().re);
            assert!(v.minus().re.abs() < 1e-13);
        }
    }

    #[test]
    fn schwarz_integral_paths_agree() {
        // gamma = cos t + 0.3 sin 2t, a = 0.25.
        let mut gh = BTreeMap::new();
        gh.insert(1i64, c(0.5, 0.0));
        gh.insert(-1i64, c(0.5, 0.0));
        gh.insert(2i64, c(0.0, -0.15));
        gh.insert(-2i64, c(0.0, 0.15));
        let phi = schwarz_integral_fourier(&gh, 0.25);
        let gamma = |t: f64| t.cos() + 0.3 * (2.0 * t).sin();
        for &z in &[c(0.0, 0.0), c(0.5, 0.2), c(-0.3, -0.8)] {
            let via_contour = schwarz_integral_contour(gamma, 0.25, 256, z);
            assert!(
                (phi.eval(z) - via_contour).norm() < 1e-12,
                "mismatch at {z}"
            );
        }
        // For gamma = cos t alone, phi = z.
        let mut gh1 = BTreeMap::new();
        gh1.insert(1i64, c(0.5, 0.0));
        gh1.insert(-1i64, c(0.5, 0.0));
        assert_eq!(schwarz_integral_fourier(&gh1, 0.0), CPoly::var_z());
    }

    #[test]
    fn poisson_extension_spectral_vs_kernel() {
        let gamma = BoundaryData::cos(1);
        let z = Complex64::from_polar(0.7, 1.234);
        // Spectral: r cos theta.
        let want = 0.7 * 1.234f64.cos();
        let got = poisson_extend(&gamma, z);
        assert!((got.sc().re - want).abs() < 1e-14);
        // Kernel quadrature: (1/2pi) ∫ P_r(theta - t) gamma(t) dt.
        let n = 512;
        let mut acc = 0.0;
        for l in 0..n {
            let t = 2.0 * PI * l as f64 / n as f64;
            acc += poisson_kernel(0.7, 1.234 - t) * t.cos();
        }
        acc /= n as f64;
        assert!((acc - want).abs() < 1e-12);
    }

    #[test]
    fn quadrature_paths_match_exact_images() {
        let g = sample_density();
        let gf = |z: Complex64| g.eval(z);
        let quad = DiskQuadrature::default_grid();
        let policy = EpsilonPolicy::default();
        let probes = [c(0.0, 0.0), c(0.3, 0.1), c(-0.5, 0.4), c(0.1, -0.7)];
        for &z in &probes {
            let exact = cauchy_exact(&g).eval(z);
            let quadv = cauchy_quad(&gf, z, &quad, &policy);
            assert!(
                (exact - quadv).norm() < QUAD_WEAK_TOL,
                "cauchy at {z}: exact {exact}, quad {quadv}"
            );

            let exact = schwarz_area_exact(&g).eval(z);
            let quadv = schwarz_area_quad(&gf, z, &quad, &policy);
            assert!(
                (exact - quadv).norm() < QUAD_WEAK_TOL,
                "schwarz area at {z}: exact {exact}, quad {quadv}"
            );

            let exact = pi_operator_exact(&g).eval(z);
            let quadv = pi_operator_quad(&gf, z, &quad, &policy);
            assert!(
                (exact - quadv).norm() < QUAD_STRONG_TOL,
                "pi at {z}: exact {exact}, quad {quadv}"
            );
        }
    }

    #[test]
    fn quadrature_cauchy_keeps_dzbar_identity() {
        // The taper keeps z -> C(g)(z) smooth, so the finite-difference
        // dbar of the quadrature path recovers g to modest accuracy.
        let g = sample_density();
        let gf = |z: Complex64| g.eval(z);
        let quad = DiskQuadrature::default_grid();
        let policy = EpsilonPolicy::default();
        let z = c(0.25, -0.15);
        let fd = fd_dzbar(
            |w| cauchy_quad(&gf, w, &quad, &policy),
            z,
            1e-3,
        );
        assert!(
            (fd - g.eval(z)).norm() < 5e-2,
            "fd dbar of quadrature Cauchy = {fd}, want {}",
            g.eval(z)
        );
    }

    #[test]
    fn pv_diagnostic_reports_small_discrepancy() {
        let g = sample_density();
        let gf = |z: Complex64| g.eval(z);
        let quad = DiskQuadrature::default_grid();
        let policy = EpsilonPolicy::default();
        let d = pi_operator_diagnostic(&gf, c(0.2, 0.3), &quad, &policy);
        assert!(d.discrepancy < QUAD_STRONG_TOL, "discrepancy {}", d.discrepancy);
    }
}
