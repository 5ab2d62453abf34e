//! Schwarz and Dirichlet boundary value problems for the nonhomogeneous
//! Beltrami-type equation `delbar w = mu del w + f` on the unit disk, with a
//! constant bicomplex coefficient `mu` (`bc_norm(mu) < 1`).
//!
//! Both problems decouple into two complex problems along the idempotent
//! components. The **plus** component is solved in conjugated variables: with
//! `v = conj(w_plus)`, the equation becomes the complex Beltrami equation
//! `dv/dconj(z) = conj(mu_plus) dv/dz + conj(f_plus)`, the Schwarz data
//! `(gamma_1, a_1)` turn into `(gamma_1, -a_1)` (the real part is invariant
//! under conjugation, the imaginary part flips), and Dirichlet data become
//! `conj(gamma_plus)`. The **minus** component is solved directly.
//!
//! # Schwarz problem
//!
//! `Re w_plus = gamma_1`, `Re w_minus = gamma_2` on the circle,
//! `Im w_plus(0) = a_1`, `Im w_minus(0) = a_2`. Each complex solve uses the
//! Neumann iteration
//!
//! ```text
//! h_0 = f + mu phi',   h_{k+1} = mu * Pi(h_k),   w = phi + S(sum_k h_k),
//! ```
//!
//! where `phi` is the Schwarz integral of the boundary data and `Pi`, `S` the
//! operators of [`crate::operators`]. Because `d/dconj(z) S = id` and
//! `d/dz S = Pi` hold exactly on polynomials, the residual after truncation
//! at `K` terms is exactly `-h_{K+1}`; the iteration is stopped when the
//! geometric tail estimate drops below the requested tolerance. The scalar
//! factor `mu` is applied **after** each application of `Pi`: `Pi` is only
//! R-linear (its second kernel conjugates the density), so the order matters
//! for complex `mu`; for real `mu` this ordering coincides with the classical
//! alternating-sign series.
//!
//! # Dirichlet problem
//!
//! `w = gamma` on the circle. Solvability is not automatic: the data must be
//! compatible with the equation. Writing `c` for the (per-component) kernel
//! constant, the substitution `Z = z + c conj(z)` maps the disk onto an
//! ellipse `E` in which the homogeneous equation reads
//! `(1 - |c|^2) dW/dconj(Z) = 0` — homogeneous solutions are exactly the
//! holomorphic functions of `Z`. A particular solution `w_p` of the
//! inhomogeneous equation is obtained in closed form by rewriting the
//! polynomial source in `(Z, conj(Z))` coordinates and integrating once in
//! `conj(Z)` ([`particular_solution`]); any two particular solutions differ
//! by a holomorphic function of `Z`, and both the solvability functional and
//! the final solution below are invariant under that choice.
//!
//! With `gamma_tilde = gamma - w_p|circle` (an exact Laurent polynomial in
//! `e^{it}`), solvability means that `gamma_tilde` is the boundary trace of a
//! function holomorphic in `Z` on `E`. This is measured by pairing against
//! the reflected exterior point `What(z) = 1/conj(z) + c conj(z)`:
//!
//! ```text
//! gap(z) = | (1/2 pi) ∫ gamma_tilde(t) (e^{it} - c e^{-it})
//!            / (e^{it} + c e^{-it} - What(z)) dt |,
//! ```
//!
//! which at `mu = 0` reduces to `|sum_{m>=1} gamma_hat(-m) conj(z)^m|` — the
//! classical anti-analytic obstruction. If the gap exceeds the solvability
//! tolerance anywhere on the probe set the solver refuses to produce a
//! solution (`Verdict::CheckFailed`). When the data pass, the solution is the
//! Cauchy integral over the ellipse boundary (parametrized by
//! `zeta = e^{it} + c e^{-it}`) of `gamma_tilde`, evaluated at `Z`, plus
//! `w_p`. Contour sums are trapezoid rules whose resolution is chosen from
//! the moduli of the kernel poles (the roots of `eta^2 - T eta + c` for
//! target `T`), so the geometric aliasing error is pushed below the gate
//! tolerances even when the ellipse preimage of an evaluation point sits much
//! closer to the unit circle than the point itself. A deliberately wrong
//! kernel constant does not silently corrupt results: the residual gate (or
//! the solvability check) fails the solve.
//!
//! All reported metrics are post-hoc and independent of the construction:
//! residuals are sampled (exactly for polynomial solutions, by finite
//! differences for contour-integral solutions), the boundary error is the L2
//! distance at radius 0.99 between the computed trace and the harmonic
//! extension of the data, and constraints are evaluated directly.

use std::collections::BTreeMap;
use std::f64::consts::PI;

use num_complex::Complex64;

use crate::algebra::Bicomplex;
use crate::cpoly::CPoly;
use crate::error::{Error, Result};
use crate::fields::{fd_dz, fd_dzbar, BoundaryData, PolyField};
use crate::operators::{poisson_extend, schwarz_area_exact, schwarz_integral_fourier, pi_operator_exact};
use crate::report::{SampleRow, SideMetrics, SolveReport, Verdict};
use crate::tolerances::{
    BOUNDARY_RADIUS, DIRICHLET_RESIDUAL_TOL, FD_STEP, RESIDUAL_GATE_FACTOR, SERIES_CAP,
    SERIES_TOL, SOLVABILITY_TOL,
};

// ---------------------------------------------------------------------------
// Problems, options, outputs
// ---------------------------------------------------------------------------

/// The bicomplex Schwarz problem for `delbar w = mu del w + f`.
#[derive(Clone, Debug)]
pub struct SchwarzProblem {
    /// Constant coefficient, `bc_norm(mu) < 1`.
    pub mu: Bicomplex,
    /// Polynomial source term.
    pub f: PolyField,
    /// Real boundary data for `Re w_plus` (validated to be real-valued).
    pub gamma1: BoundaryData,
    /// Real boundary data for `Re w_minus`.
    pub gamma2: BoundaryData,
    /// Normalization `Im w_plus(0) = a1`.
    pub a1: f64,
    /// Normalization `Im w_minus(0) = a2`.
    pub a2: f64,
}

/// Options for the Schwarz solver.
#[derive(Clone, Copy, Debug)]
pub struct SchwarzOptions {
    /// Target tail tolerance for the Neumann series.
    pub series_tol: f64,
    /// Hard cap on series terms; hitting it unconverged fails the solve.
    pub series_cap: usize,
}

impl Default for SchwarzOptions {
    fn default() -> Self {
        SchwarzOptions {
            series_tol: SERIES_TOL,
            series_cap: SERIES_CAP,
        }
    }
}

/// Result of a bicomplex Schwarz solve: the report plus (when converged) the
/// polynomial solution field.
#[derive(Clone, Debug)]
pub struct SchwarzOutput {
    pub report: SolveReport,
    pub solution: Option<PolyField>,
}

/// The bicomplex Dirichlet problem for `delbar w = mu del w + f`.
#[derive(Clone, Debug)]
pub struct DirichletProblem {
    /// Constant coefficient, `bc_norm(mu) < 1`.
    pub mu: Bicomplex,
    /// Polynomial source term.
    pub f: PolyField,
    /// Bicomplex boundary trace data.
    pub gamma: BoundaryData,
}

/// Options for the Dirichlet solver.
#[derive(Clone, Copy, Debug)]
pub struct DirichletOptions {
    /// Kernel constant for the ellipse substitution and the particular
    /// solution; `None` selects the per-component coefficient of `mu` (the
    /// value for which the construction solves the stated equation). Other
    /// choices are accepted but will trip the residual gate or the
    /// solvability check unless the data conspire.
    pub kernel_constant: Option<Bicomplex>,
    /// Base contour resolution (upscaled automatically from kernel-pole
    /// moduli when an evaluation point demands it).
    pub n_theta: usize,
    /// Solvability threshold for the reflected-pairing gap.
    pub solvability_tol: f64,
}

impl Default for DirichletOptions {
    fn default() -> Self {
        DirichletOptions {
            kernel_constant: None,
            n_theta: 256,
            solvability_tol: SOLVABILITY_TOL,
        }
    }
}

/// Result of a bicomplex Dirichlet solve.
#[derive(Clone, Debug)]
pub struct DirichletOutput {
    pub report: SolveReport,
    pub solution: Option<DirichletSolution>,
}

/// A point-evaluable solution from either solver.
#[derive(Clone, Debug)]
pub enum SolutionField {
    /// Polynomial solution (Schwarz path).
    Poly(PolyField),
    /// Contour-integral solution (Dirichlet path).
    Dirichlet(DirichletSolution),
}

impl SolutionField {
    /// Evaluates the solution at `z` in the open disk.
    pub fn eval(&self, z: Complex64) -> Bicomplex {
        match self {
            SolutionField::Poly(p) => p.eval(z),
            SolutionField::Dirichlet(d) => d.eval(z),
        }
    }
}

// ---------------------------------------------------------------------------
// Complex Schwarz solve (one idempotent component)
// ---------------------------------------------------------------------------

/// Outcome of one complex Schwarz solve.
#[derive(Clone, Debug)]
pub struct ComplexSchwarzOutcome {
    /// The solution polynomial.
    pub w: CPoly,
    /// Number of Neumann terms summed (including `h_0`).
    pub terms_used: usize,
    /// Final geometric tail estimate.
    pub tail_bound: f64,
    /// Whether the tail estimate met the tolerance.
    pub converged: bool,
}

/// Solves the complex Schwarz problem
/// `dw/dconj(z) = mu dw/dz + f`, `Re w = gamma` on the circle,
/// `Im w(0) = a`, for polynomial `f` and trigonometric-polynomial `gamma`
/// (complex Fourier coefficients with Hermitian symmetry).
pub fn solve_schwarz_complex(
    mu: Complex64,
    f: &CPoly,
    gamma_hat: &BTreeMap<i64, Complex64>,
    a: f64,
    opts: &SchwarzOptions,
) -> ComplexSchwarzOutcome {
    let phi = schwarz_integral_fourier(gamma_hat, a);
    let g0 = f.add(&phi.d_z().scale(mu));
    let c = mu.norm();

    let mut h = g0.clone();
    let mut total = g0.clone();
    let mut terms_used = usize::from(!g0.is_zero());
    let mut tail_bound = if c < 1.0 {
        h.l1_norm() * c / (1.0 - c)
    } else {
        f64::INFINITY
    };
    let mut converged = tail_bound < opts.series_tol || h.is_zero();

    if !converged {
        let planned = if c > 0.0 && c < 1.0 {
            ((opts.series_tol.ln() / c.ln()).ceil().max(1.0) as usize).min(opts.series_cap)
        } else {
            opts.series_cap
        };
        for _ in 0..planned {
            // R-linearity: scale by mu after applying Pi.
            h = pi_operator_exact(&h).scale(mu);
            total = total.add(&h);
            terms_used += 1;
            tail_bound = if c < 1.0 {
                h.l1_norm() * c / (1.0 - c)
            } else {
                f64::INFINITY
            };
            if tail_bound < opts.series_tol {
                converged = true;
                break;
            }
        }
    }

    let w = phi.add(&schwarz_area_exact(&total));
    ComplexSchwarzOutcome {
        w,
        terms_used,
        tail_bound,
        converged,
    }
}

// ---------------------------------------------------------------------------
// Bicomplex Schwarz solve
// ---------------------------------------------------------------------------

/// Extracts the Hermitian (real-data) Fourier coefficients of a real scalar
/// boundary function.
fn real_fourier(gamma: &BoundaryData) -> BTreeMap<i64, Complex64> {
    gamma.terms().map(|(k, c)| (k, c.sc())).collect()
}

/// Probe points for residual sampling: polar grid up to `r_max`.
pub fn probe_points(r_max: f64, n_r: usize, n_theta: usize) -> Vec<Complex64> {
    let mut pts = Vec::with_capacity(n_r * n_theta);
    for j in 0..n_r {
        let r = r_max * j as f64 / (n_r - 1) as f64;
        for l in 0..n_theta {
            let th = 2.0 * PI * l as f64 / n_theta as f64;
            pts.push(Complex64::from_polar(r, th));
        }
    }
    pts
}

/// Solution samples for reports: three rings, eight angles.
fn sample_rows(eval: impl Fn(Complex64) -> Bicomplex) -> Vec<SampleRow> {
    let mut rows = Vec::new();
    for &r in &[0.3, 0.6, 0.9] {
        for l in 0..8 {
            let theta = 2.0 * PI * l as f64 / 8.0;
            rows.push(SampleRow::new(r, theta, eval(Complex64::from_polar(r, theta))));
        }
    }
    rows
}

/// L2(dtheta/2pi) distance on the circle of radius `r` between `trace` and
/// `reference`, both complex-valued.
fn l2_circle_distance(
    r: f64,
    n: usize,
    trace: impl Fn(f64) -> Complex64,
    reference: impl Fn(f64) -> Complex64,
) -> f64 {
    let mut acc = 0.0;
    for l in 0..n {
        let th = 2.0 * PI * l as f64 / n as f64;
        let _ = r;
        acc += (trace(th) - reference(th)).norm_sqr();
    }
    (acc / n as f64).sqrt()
}

/// Solves the bicomplex Schwarz problem on the exact polynomial path.
///
/// Errors when the boundary data are not real-valued. The output report is
/// always produced; the solution field is present unless the series failed
/// to converge.
pub fn solve_schwarz(prob: &SchwarzProblem, opts: &SchwarzOptions) -> Result<SchwarzOutput> {
    for (name, g) in [("gamma1", &prob.gamma1), ("gamma2", &prob.gamma2)] {
        if !g.is_real_scalar(1e-9) {
            return Err(Error::Invalid(format!(
                "{name} must be a real-valued scalar boundary function"
            )));
        }
    }
    let g1 = real_fourier(&prob.gamma1);
    let g2 = real_fourier(&prob.gamma2);

    // Plus component in conjugated variables; minus directly.
    let plus_out = solve_schwarz_complex(
        prob.mu.plus().conj(),
        &prob.f.plus().conj_poly(),
        &g1,
        -prob.a1,
        opts,
    );
    let minus_out = solve_schwarz_complex(prob.mu.minus(), prob.f.minus(), &g2, prob.a2, opts);
    let w = PolyField::from_components(plus_out.w.conj_poly(), minus_out.w.clone());

    // Post-hoc metrics from the assembled field.
    let residual = w
        .bc_delbar()
        .sub(&PolyField::constant(prob.mu).mul(&w.bc_del()))
        .sub(&prob.f);
    let probes = probe_points(0.9, 10, 16);
    let (mut res_plus, mut res_minus) = (0.0f64, 0.0f64);
    for &z in &probes {
        res_plus = res_plus.max(residual.plus().eval(z).norm());
        res_minus = res_minus.max(residual.minus().eval(z).norm());
    }

    let n_b = 256;
    let boundary_err = |comp: &CPoly, gh: &BTreeMap<i64, Complex64>| {
        l2_circle_distance(
            BOUNDARY_RADIUS,
            n_b,
            |th| {
                let z = Complex64::from_polar(BOUNDARY_RADIUS, th);
                Complex64::new(comp.eval(z).re, 0.0)
            },
            |th| {
                let mut acc = Complex64::new(0.0, 0.0);
                for (&k, &c) in gh {
                    acc += c * Complex64::from_polar(
                        BOUNDARY_RADIUS.powi(k.unsigned_abs() as i32),
                        k as f64 * th,
                    );
                }
                Complex64::new(acc.re, 0.0)
            },
        )
    };
    let b_plus = boundary_err(w.plus(), &g1);
    let b_minus = boundary_err(w.minus(), &g2);

    let origin = w.eval(Complex64::new(0.0, 0.0));
    let c_plus = (origin.plus().im - prob.a1).abs();
    let c_minus = (origin.minus().im - prob.a2).abs();

    let plus = SideMetrics {
        pde_residual_max: res_plus,
        boundary_error: b_plus,
        constraint_error: c_plus,
        series_terms_used: plus_out.terms_used,
    };
    let minus = SideMetrics {
        pde_residual_max: res_minus,
        boundary_error: b_minus,
        constraint_error: c_minus,
        series_terms_used: minus_out.terms_used,
    };

    let gate = RESIDUAL_GATE_FACTOR * opts.series_tol;
    let converged =
        plus_out.converged && minus_out.converged && res_plus.max(res_minus) <= gate;
    let verdict = if converged {
        Verdict::Converged
    } else {
        Verdict::Failed
    };
    let samples = sample_rows(|z| w.eval(z));
    let report = SolveReport::from_sides(verdict, plus, minus, samples);
    Ok(SchwarzOutput {
        solution: (verdict == Verdict::Converged).then_some(w),
        report,
    })
}

// ---------------------------------------------------------------------------
// Dirichlet: per-component machinery
// ---------------------------------------------------------------------------

/// Exact polynomial particular solution of `dw/dconj(z) - c dw/dz = f` for
/// polynomial `f` and constant `|c| < 1`.
///
/// In the coordinates `Z = z + c conj(z)` the operator becomes
/// `(1 - |c|^2) d/dconj(Z)`, so the construction is: substitute the inverse
/// change of variables into `f`, integrate once termwise in `conj(Z)`, scale
/// by `1/(1 - |c|^2)`, and substitute back. The result is one particular
/// solution; any other differs by a holomorphic function of `Z`.
pub fn particular_solution(c: Complex64, f: &CPoly) -> CPoly {
    if f.is_zero() {
        return CPoly::zero();
    }
    let d = 1.0 - c.norm_sqr();
    let inv_d = Complex64::new(1.0 / d, 0.0);
    // z  = (Z - c conj(Z)) / d,   conj(z) = (conj(Z) - conj(c) Z) / d.
    let in_ellipse = f.substitute_linear((inv_d, -c * inv_d), (-c.conj() * inv_d, inv_d));
    // Termwise antiderivative in the second variable, with the 1/d factor
    // from the transformed operator.
    let mut integrated = CPoly::zero();
    for (a, b, coeff) in in_ellipse.terms() {
        integrated.add_term(a, b + 1, coeff / (d * (b + 1) as f64));
    }
    // Back to (z, conj(z)): Z = z + c conj(z), conj(Z) = conj(z) + conj(c) z.
    let one = Complex64::new(1.0, 0.0);
    integrated
        .substitute_linear((one, c), (c.conj(), one))
        .pruned(1e-15 * f.l1_norm().max(1.0))
}

/// Boundary Laurent spectrum of a polynomial: the term `z^m conj(z)^n`
/// contributes its coefficient to mode `m - n` on the unit circle.
fn laurent_trace(p: &CPoly) -> BTreeMap<i64, Complex64> {
    let mut out: BTreeMap<i64, Complex64> = BTreeMap::new();
    for (m, n, c) in p.terms() {
        *out.entry(m as i64 - n as i64).or_insert(Complex64::new(0.0, 0.0)) += c;
    }
    out.retain(|_, v| v.norm() > 0.0);
    out
}

/// Aliasing target for contour trapezoid sums: resolution is chosen so that
/// the geometric tail of the kernel's pole expansion is below this.
const CONTOUR_ALIAS_TARGET: f64 = 1e-11;

/// One idempotent component of a Dirichlet solution: the pulled-back ellipse
/// Cauchy integral plus the exact polynomial particular solution.
#[derive(Clone, Debug)]
pub struct ComponentDirichlet {
    /// Kernel constant (per-component, already conjugated for the plus side).
    c: Complex64,
    /// Source polynomial for this component (kept for residual checks).
    f: CPoly,
    /// Particular solution of this component's equation.
    wp: CPoly,
    /// Laurent coefficients of `gamma_tilde = gamma - wp|circle`.
    gamma_tilde: BTreeMap<i64, Complex64>,
    /// Base contour resolution.
    n_theta: usize,
}

fn eval_fourier(coeffs: &BTreeMap<i64, Complex64>, t: f64) -> Complex64 {
    let mut acc = Complex64::new(0.0, 0.0);
    for (&k, &c) in coeffs {
        acc += c * Complex64::from_polar(1.0, k as f64 * t);
    }
    acc
}

impl ComponentDirichlet {
    fn new(
        c: Complex64,
        f: &CPoly,
        gamma: &BTreeMap<i64, Complex64>,
        opts: &DirichletOptions,
    ) -> Self {
        let wp = particular_solution(c, f);
        let mut gamma_tilde = gamma.clone();
        for (k, v) in laurent_trace(&wp) {
            *gamma_tilde.entry(k).or_insert(Complex64::new(0.0, 0.0)) -= v;
        }
        gamma_tilde.retain(|_, v| v.norm() > 1e-15);
        ComponentDirichlet {
            c,
            f: f.clone(),
            wp,
            gamma_tilde,
            n_theta: opts.n_theta,
        }
    }

    /// Contour resolution for a pairing against `target`: the integrand's
    /// poles in the `e^{it}` plane are the roots of `eta^2 - T eta + c`; the
    /// trapezoid aliasing decays like `rho^n` with `rho` the largest root
    /// modulus reflected into the unit disk.
    fn n_for(&self, target: Complex64) -> usize {
        let s = (target * target - 4.0 * self.c).sqrt();
        let mut rho: f64 = 0.0;
        for root in [(target + s) / 2.0, (target - s) / 2.0] {
            let m = root.norm();
            rho = rho.max(if m < 1.0 { m } else { 1.0 / m });
        }
        let rho = rho.clamp(0.05, 0.9995);
        let needed = (CONTOUR_ALIAS_TARGET.ln() / rho.ln()).ceil() as usize;
        let modes = 4 * (self.gamma_tilde.keys().map(|k| k.unsigned_abs()).max().unwrap_or(0) as usize + 1);
        self.n_theta
            .max(needed)
            .max(modes)
            .next_power_of_two()
            .min(16384)
    }

    /// `(1/2 pi) ∫ gamma_tilde(t) (e^{it} - c e^{-it}) /
    /// (e^{it} + c e^{-it} - target) dt` by trapezoid.
    fn contour_pairing(&self, target: Complex64, n: usize) -> Complex64 {
        let mut acc = Complex64::new(0.0, 0.0);
        for l in 0..n {
            let t = 2.0 * PI * l as f64 / n as f64;
            let e = Complex64::from_polar(1.0, t);
            let em = e.conj();
            acc += eval_fourier(&self.gamma_tilde, t) * (e - self.c * em)
                / (e + self.c * em - target);
        }
        acc / n as f64
    }

    /// Solvability gap at `z` (reflected exterior pairing).
    fn gap(&self, z: Complex64) -> f64 {
        let what = 1.0 / z.conj() + self.c * z.conj();
        self.contour_pairing(what, self.n_for(what)).norm()
    }

    /// Full solution value at `z`.
    fn eval(&self, z: Complex64) -> Complex64 {
        let zz = z + self.c * z.conj();
        self.contour_pairing(zz, self.n_for(zz)) + self.wp.eval(z)
    }
}

/// A point-evaluable bicomplex Dirichlet solution.
#[derive(Clone, Debug)]
pub struct DirichletSolution {
    /// Conjugated plus-component problem (`v = conj(w_plus)`).
    plus: ComponentDirichlet,
    /// Minus component.
    minus: ComponentDirichlet,
}

impl DirichletSolution {
    /// Evaluates `w(z)` (plus component un-conjugated on the way out).
    pub fn eval(&self, z: Complex64) -> Bicomplex {
        Bicomplex::from_idempotent(self.plus.eval(z).conj(), self.minus.eval(z))
    }
}

/// Probe set for the solvability check: three rings, sixteen angles.
fn gap_probes() -> Vec<Complex64> {
    let mut pts = Vec::new();
    for &r in &[0.3, 0.6, 0.9] {
        for l in 0..16 {
            pts.push(Complex64::from_polar(r, 2.0 * PI * l as f64 / 16.0));
        }
    }
    pts
}

/// Solves the bicomplex Dirichlet problem.
///
/// The report's `constraint_error` is the maximum solvability gap over the
/// probe set; if it exceeds the tolerance the verdict is
/// [`Verdict::CheckFailed`] and no solution is returned.
pub fn solve_dirichlet(prob: &DirichletProblem, opts: &DirichletOptions) -> Result<DirichletOutput> {
    let kc = opts.kernel_constant.unwrap_or(prob.mu);
    if prob.mu.bc_norm() >= 1.0 {
        return Err(Error::Invalid(
            "Dirichlet solver requires bc_norm(mu) < 1".into(),
        ));
    }

    // Plus side in conjugated variables: coefficient conj(mu_plus), source
    // conj(f_plus), data conj(gamma_plus) (k -> -k with conjugated values).
    let gamma_plus: BTreeMap<i64, Complex64> = prob
        .gamma
        .plus_coeffs()
        .into_iter()
        .map(|(k, c)| (-k, c.conj()))
        .collect();
    let plus = ComponentDirichlet::new(
        kc.plus().conj(),
        &prob.f.plus().conj_poly(),
        &gamma_plus,
        opts,
    );
    let minus = ComponentDirichlet::new(
        kc.minus(),
        prob.f.minus(),
        &prob.gamma.minus_coeffs(),
        opts,
    );

    // Solvability check on both components.
    let (mut gap_plus, mut gap_minus) = (0.0f64, 0.0f64);
    for z in gap_probes() {
        gap_plus = gap_plus.max(plus.gap(z));
        gap_minus = gap_minus.max(minus.gap(z));
    }

    let mut side_plus = SideMetrics {
        constraint_error: gap_plus,
        ..Default::default()
    };
    let mut side_minus = SideMetrics {
        constraint_error: gap_minus,
        ..Default::default()
    };

    if gap_plus.max(gap_minus) > opts.solvability_tol {
        let report = SolveReport::from_sides(Verdict::CheckFailed, side_plus, side_minus, vec![]);
        return Ok(DirichletOutput {
            report,
            solution: None,
        });
    }

    let solution = DirichletSolution { plus, minus };

    // Residuals of the two complex equations by finite differences on the
    // contour-integral evaluations (plus side checked in its own conjugated
    // variables, where it is literally a complex Beltrami equation).
    let probes = probe_points(0.85, 6, 8);
    let mu_v = prob.mu.plus().conj();
    for &z in probes.iter().filter(|z| z.norm() > 1e-12) {
        let vp = |w: Complex64| solution.plus.eval(w);
        let rp = fd_dzbar(vp, z, FD_STEP) - mu_v * fd_dz(vp, z, FD_STEP)
            - solution.plus.f.eval(z);
        side_plus.pde_residual_max = side_plus.pde_residual_max.max(rp.norm());
        let vm = |w: Complex64| solution.minus.eval(w);
        let rm = fd_dzbar(vm, z, FD_STEP) - prob.mu.minus() * fd_dz(vm, z, FD_STEP)
            - solution.minus.f.eval(z);
        side_minus.pde_residual_max = side_minus.pde_residual_max.max(rm.norm());
    }

    // Boundary error: trace at 0.99 vs harmonic extension of gamma.
    let n_b = 256;
    let pe = |th: f64| poisson_extend(&prob.gamma, Complex64::from_polar(BOUNDARY_RADIUS, th));
    side_plus.boundary_error = l2_circle_distance(
        BOUNDARY_RADIUS,
        n_b,
        |th| {
            solution
                .eval(Complex64::from_polar(BOUNDARY_RADIUS, th))
                .plus()
        },
        |th| pe(th).plus(),
    );
    side_minus.boundary_error = l2_circle_distance(
        BOUNDARY_RADIUS,
        n_b,
        |th| {
            solution
                .eval(Complex64::from_polar(BOUNDARY_RADIUS, th))
                .minus()
        },
        |th| pe(th).minus(),
    );

    let converged = side_plus
        .pde_residual_max
        .max(side_minus.pde_residual_max)
        <= DIRICHLET_RESIDUAL_TOL;
    let verdict = if converged {
        Verdict::Converged
    } else {
        Verdict::Failed
    };
    let samples = sample_rows(|z| solution.eval(z));
    let report = SolveReport::from_sides(verdict, side_plus, side_minus, samples);
    Ok(DirichletOutput {
        report,
        solution: (verdict == Verdict::Converged).then_some(solution),
    })
}

// ---------------------------------------------------------------------------
// Manufactured problems (shared by tests, the verification suite, the CLI)
// ---------------------------------------------------------------------------

/// Hermitian-symmetrizes a Laurent spectrum into the Fourier data of its
/// real part: `re_hat(k) = (L(k) + conj(L(-k))) / 2`.
pub fn real_part_fourier(laurent: &BTreeMap<i64, Complex64>) -> BTreeMap<i64, Complex64> {
    let mut out = BTreeMap::new();
    let keys: Vec<i64> = laurent.keys().flat_map(|&k| [k, -k]).collect();
    for k in keys {
        let lk = laurent.get(&k).copied().unwrap_or(Complex64::new(0.0, 0.0));
        let lmk = laurent.get(&-k).copied().unwrap_or(Complex64::new(0.0, 0.0));
        let v = 0.5 * (lk + lmk.conj());
        if v.norm() > 0.0 {
            out.insert(k, v);
        }
    }
    out
}

/// Builds the Schwarz data whose unique solution is the given polynomial
/// field, for coefficient `mu`: the source is the exact Beltrami image and
/// the boundary/normalization data are read off the field.
pub fn schwarz_data_from_solution(w_star: &PolyField, mu: Bicomplex) -> SchwarzProblem {
    let f = w_star.beltrami_apply(&PolyField::constant(mu));
    let trace = BoundaryData::trace_of_poly(w_star);
    let gamma1 = BoundaryData::from_complex_fourier(&real_part_fourier(&trace.plus_coeffs()));
    let gamma2 = BoundaryData::from_complex_fourier(&real_part_fourier(&trace.minus_coeffs()));
    let origin = w_star.eval(Complex64::new(0.0, 0.0));
    SchwarzProblem {
        mu,
        f,
        gamma1,
        gamma2,
        a1: origin.plus().im,
        a2: origin.minus().im,
    }
}

/// The reference manufactured Schwarz problem: exact solution
/// `w* = zh + mu zh*` (source term `f = 0`, since `delbar w* = mu` and
/// `del w* = 1` cancel in the equation).
pub fn manufactured_schwarz(mu: Bicomplex) -> (SchwarzProblem, PolyField) {
    let w_star = PolyField::zhat().add(&PolyField::zhat_star().scale(mu));
    (schwarz_data_from_solution(&w_star, mu), w_star)
}

/// A second manufactured Schwarz problem with nonconstant source:
/// `w* = zh + mu (zh*)^2`, `f = mu (2 zh* - 1)`.
pub fn manufactured_schwarz_quadratic(mu: Bicomplex) -> (SchwarzProblem, PolyField) {
    let zs = PolyField::zhat_star();
    let w_star = PolyField::zhat().add(&zs.mul(&zs).scale(mu));
    (schwarz_data_from_solution(&w_star, mu), w_star)
}

/// The manufactured Dirichlet problem: exact solution `w* = zh`
/// (`gamma = trace of zh`, `f = -mu`).
pub fn manufactured_dirichlet(mu: Bicomplex) -> (DirichletProblem, PolyField) {
    let w_star = PolyField::zhat();
    let prob = DirichletProblem {
        mu,
        f: PolyField::constant(-mu),
        gamma: BoundaryData::trace_of_poly(&w_star),
    };
    (prob, w_star)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::bicomplexify;
    use crate::operators::cauchy_exact;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn probe_ring() -> Vec<Complex64> {
        probe_points(0.9, 5, 8)
    }

    #[test]
    fn schwarz_mu_zero_cosine_gives_identity() {
        // mu = 0, f = 0, gamma1 = gamma2 = cos t, a = 0 -> w = zh.
        let prob = SchwarzProblem {
            mu: Bicomplex::ZERO,
            f: PolyField::zero(),
            gamma1: BoundaryData::cos(1),
            gamma2: BoundaryData::cos(1),
            a1: 0.0,
            a2: 0.0,
        };
        let out = solve_schwarz(&prob, &SchwarzOptions::default()).unwrap();
        assert_eq!(out.report.verdict, Verdict::Converged);
        let w = out.solution.unwrap();
        for &z in &probe_ring() {
            assert!((w.eval(z) - bicomplexify(z)).bc_norm() < 1e-14);
        }
        assert!(out.report.pde_residual_max < 1e-14);
        assert!(out.report.boundary_error < 1e-13);
        assert!(out.report.constraint_error < 1e-14);
    }

    #[test]
    fn schwarz_manufactured_bicomplex_mu() {
        let mu = bicomplexify(Complex64::from_polar(0.3, PI / 6.0));
        assert!((mu.bc_norm() - 0.3).abs() < 1e-14);
        let (prob, w_star) = manufactured_schwarz(mu);
        assert!(prob.f.is_zero(), "source should vanish for w* = zh + mu zh*");
        let out = solve_schwarz(&prob, &SchwarzOptions::default()).unwrap();
        assert_eq!(out.report.verdict, Verdict::Converged);
        let w = out.solution.unwrap();
        // Accuracy is limited by the series tail (target 1e-10), not machine
        // epsilon: the gate-level tolerance is the honest bound.
        for &z in &probe_ring() {
            assert!(
                (w.eval(z) - w_star.eval(z)).bc_norm() < 1e-9,
                "mismatch at {z}: {} vs {}",
                w.eval(z),
                w_star.eval(z)
            );
        }
        assert!(out.report.pde_residual_max < RESIDUAL_GATE_FACTOR * SERIES_TOL);
        assert!(out.report.boundary_error < 1e-9);
    }

    #[test]
    fn schwarz_manufactured_nonconstant_source() {
        let mu = Bicomplex::new(c(0.25, 0.1), c(-0.05, 0.08));
        assert!(mu.bc_norm() < 0.5);
        let (prob, w_star) = manufactured_schwarz_quadratic(mu);
        assert!(!prob.f.is_zero());
        let out = solve_schwarz(&prob, &SchwarzOptions::default()).unwrap();
        assert_eq!(out.report.verdict, Verdict::Converged);
        let w = out.solution.unwrap();
        for &z in &probe_ring() {
            assert!(
                (w.eval(z) - w_star.eval(z)).bc_norm() < 1e-10,
                "mismatch at {z}"
            );
        }
    }

    #[test]
    fn schwarz_near_critical_contraction_fails_cleanly() {
        let mu = Bicomplex::from_real(0.999);
        let (prob, _) = manufactured_schwarz_quadratic(mu);
        let out = solve_schwarz(&prob, &SchwarzOptions::default()).unwrap();
        assert_eq!(out.report.verdict, Verdict::Failed);
        assert!(out.solution.is_none());
        assert_eq!(out.report.series_terms_used, SERIES_CAP + 1);
    }

    #[test]
    fn schwarz_rejects_non_real_boundary_data() {
        let mut gamma = BoundaryData::zero();
        gamma.insert(1, Bicomplex::from_complex(c(1.0, 0.0))); // e^{it}: not real
        let prob = SchwarzProblem {
            mu: Bicomplex::ZERO,
            f: PolyField::zero(),
            gamma1: gamma,
            gamma2: BoundaryData::cos(1),
            a1: 0.0,
            a2: 0.0,
        };
        assert!(solve_schwarz(&prob, &SchwarzOptions::default()).is_err());
    }

    #[test]
    fn neumann_ordering_matches_printed_series_for_real_mu() {
        // For real mu the implemented ordering mu * Pi(h) coincides with the
        // alternating-sign series sum (-1)^{k+1} ... term by term; check the
        // solved field against the manufactured solution for real mu.
        let mu = Bicomplex::from_real(0.4);
        let (prob, w_star) = manufactured_schwarz_quadratic(mu);
        let out = solve_schwarz(&prob, &SchwarzOptions::default()).unwrap();
        let w = out.solution.unwrap();
        for &z in &probe_ring() {
            assert!((w.eval(z) - w_star.eval(z)).bc_norm() < 1e-10);
        }
    }

    #[test]
    fn dirichlet_gate_passes_analytic_trace() {
        // gamma = trace of zh, mu = 0, f = 0: compatible, solution w = zh.
        let prob = DirichletProblem {
            mu: Bicomplex::ZERO,
            f: PolyField::zero(),
            gamma: BoundaryData::trace_of_poly(&PolyField::zhat()),
        };
        let out = solve_dirichlet(&prob, &DirichletOptions::default()).unwrap();
        assert_eq!(out.report.verdict, Verdict::Converged);
        assert!(out.report.constraint_error < 1e-7, "gap {}", out.report.constraint_error);
        let sol = out.solution.unwrap();
        for &z in &probe_ring() {
            if z.norm() < 1e-12 {
                continue;
            }
            assert!(
                (sol.eval(z) - bicomplexify(z)).bc_norm() < 1e-8,
                "mismatch at {z}: {}",
                (sol.eval(z) - bicomplexify(z)).bc_norm()
            );
        }
        assert!(out.report.boundary_error < 1e-6);
    }

    #[test]
    fn dirichlet_gate_rejects_antianalytic_trace() {
        // gamma = trace of zh*: the classical obstruction, gap ~ r.
        let prob = DirichletProblem {
            mu: Bicomplex::ZERO,
            f: PolyField::zero(),
            gamma: BoundaryData::trace_of_poly(&PolyField::zhat_star()),
        };
        let out = solve_dirichlet(&prob, &DirichletOptions::default()).unwrap();
        assert_eq!(out.report.verdict, Verdict::CheckFailed);
        assert!(out.solution.is_none());
        assert!(
            out.report.constraint_error > 0.5,
            "expected gap near 0.9, got {}",
            out.report.constraint_error
        );
    }

    #[test]
    fn dirichlet_manufactured_with_bicomplex_mu() {
        let mu = Bicomplex::new(c(0.2, 0.1), c(0.05, -0.1));
        assert!(mu.bc_norm() < 0.5);
        let (prob, w_star) = manufactured_dirichlet(mu);
        let out = solve_dirichlet(&prob, &DirichletOptions::default()).unwrap();
        assert_eq!(out.report.verdict, Verdict::Converged);
        assert!(out.report.constraint_error < 1e-8, "gap {}", out.report.constraint_error);
        let sol = out.solution.unwrap();
        for &z in &probe_ring() {
            if z.norm() < 1e-12 {
                continue;
            }
            assert!(
                (sol.eval(z) - w_star.eval(z)).bc_norm() < 1e-8,
                "mismatch at {z}: {}",
                (sol.eval(z) - w_star.eval(z)).bc_norm()
            );
        }
        assert!(out.report.pde_residual_max < DIRICHLET_RESIDUAL_TOL);
        assert!(out.report.boundary_error < 1e-6);
    }

    #[test]
    fn particular_solution_satisfies_equation_exactly() {
        let cs = [c(0.0, 0.0), c(0.3, 0.0), c(0.25, -0.4), c(-0.1, 0.55)];
        let mut f = CPoly::zero();
        f.add_term(0, 0, c(0.7, -0.2));
        f.add_term(1, 0, c(-1.0, 0.5));
        f.add_term(0, 2, c(0.3, 0.9));
        f.add_term(2, 1, c(0.1, -0.6));
        for cc in cs {
            let wp = particular_solution(cc, &f);
            let resid = wp.d_zbar().sub(&wp.d_z().scale(cc)).sub(&f);
            assert!(
                resid.l1_norm() < 1e-12,
                "residual {} for c = {cc}",
                resid.l1_norm()
            );
        }
    }

    #[test]
    fn dirichlet_polynomial_source_matches_cauchy_transform() {
        // mu = 0, f = zeta (in both components), gamma = 0. The Cauchy
        // transform C(zeta) = |z|^2 - 1 solves delbar w = zeta with zero
        // trace, so the data are compatible and w = C(zeta); the solver's
        // own particular solution differs from C by a holomorphic term that
        // the boundary correction removes again.
        let f_minus = CPoly::var_z();
        let f = PolyField::from_components(f_minus.conj_poly(), f_minus.clone());
        let prob = DirichletProblem {
            mu: Bicomplex::ZERO,
            f,
            gamma: BoundaryData::zero(),
        };
        let out = solve_dirichlet(&prob, &DirichletOptions::default()).unwrap();
        assert_eq!(out.report.verdict, Verdict::Converged);
        assert!(out.report.constraint_error < 1e-9);
        let sol = out.solution.unwrap();
        let want = cauchy_exact(&f_minus);
        for &z in &[c(0.3, 0.2), c(-0.4, 0.5), c(0.0, -0.6)] {
            let got = sol.eval(z).minus();
            assert!(
                (got - want.eval(z)).norm() < 1e-8,
                "minus at {z}: got {got}, want {}",
                want.eval(z)
            );
        }
    }

    #[test]
    fn wrong_kernel_constant_trips_residual_gate() {
        let mu = Bicomplex::from_real(0.3);
        let (prob, _) = manufactured_dirichlet(mu);
        let opts = DirichletOptions {
            kernel_constant: Some(-mu),
            ..Default::default()
        };
        let out = solve_dirichlet(&prob, &opts).unwrap();
        // With c = -mu the constructed function no longer satisfies the PDE;
        // the honest residual gate must notice.
        assert_ne!(out.report.verdict, Verdict::Converged);
    }

    #[test]
    fn real_part_fourier_is_hermitian() {
        let mut l = BTreeMap::new();
        l.insert(1i64, c(1.0, 0.0));
        l.insert(-1i64, c(0.25, -0.5));
        let re = real_part_fourier(&l);
        for (&k, &v) in &re {
            let m = re.get(&-k).copied().unwrap_or(c(0.0, 0.0));
            assert!((v - m.conj()).norm() < 1e-15, "mode {k} not Hermitian");
        }
    }
}
