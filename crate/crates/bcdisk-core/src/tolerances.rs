//! Centralized numerical tolerances and discretization defaults.
//!
//! Every tolerance used by the verification suite (and by the residual gates
//! inside the solvers) lives here with a short justification, so no ad-hoc
//! magic numbers appear at call sites.

// ---------------------------------------------------------------------------
// Algebra
// ---------------------------------------------------------------------------

/// Relative error allowed for ring identities (associativity, commutativity,
/// distributivity) on random triples. Componentwise complex arithmetic incurs
/// a handful of ulps per operation; 1e-14 leaves two orders of headroom over
/// f64 rounding while still catching any formula error.
pub const ALGEBRA_REL_TOL: f64 = 1e-14;

// ---------------------------------------------------------------------------
// Derivatives
// ---------------------------------------------------------------------------

/// Step for central finite-difference Wirtinger derivatives. Total error is
/// O(h^2) truncation + O(eps/h) rounding; h = 1e-4 balances both near 1e-8
/// for fields with O(1) third derivatives.
pub const FD_STEP: f64 = 1e-4;

/// Agreement required between exact polynomial derivatives and the
/// finite-difference oracle on moderate-degree fields: two orders above the
/// 1e-8 error floor of [`FD_STEP`].
pub const FD_MATCH_TOL: f64 = 1e-6;

// ---------------------------------------------------------------------------
// Quadrature
// ---------------------------------------------------------------------------

/// Default radial Gauss-Legendre point count for disk quadrature.
pub const DEFAULT_N_R: usize = 64;

/// Default uniform angle count for disk quadrature (power of two).
pub const DEFAULT_N_THETA: usize = 256;

/// Singular-kernel exclusion radius = `EPS_FACTOR` x local cell diameter.
/// The smooth taper spans `[eps, 2 eps]`; a handful of cells keeps the
/// taper resolved by the grid.
pub const EPS_FACTOR: f64 = 6.0;

/// Lower bound for the exclusion radius, guarding very coarse grids.
pub const EPS_FLOOR: f64 = 0.05;

/// Agreement demanded between the quadrature path and the exact polynomial
/// path for weakly singular operators (Cauchy/Pompeiu and Schwarz-type area
/// operators) at the default grid.
pub const QUAD_WEAK_TOL: f64 = 1e-3;

/// Agreement for the strongly singular Beurling-type operator at the default
/// grid (principal value; one order looser than the weak kernels).
pub const QUAD_STRONG_TOL: f64 = 1e-2;

// ---------------------------------------------------------------------------
// Solvers
// ---------------------------------------------------------------------------

/// Default target tolerance for Neumann-series truncation in the Schwarz
/// solver: the planned term count is `ceil(ln tol / ln c)` for contraction
/// factor `c`.
pub const SERIES_TOL: f64 = 1e-10;

/// Hard cap on Neumann-series length; reaching it with the tail bound unmet
/// marks the solve as failed (e.g. contraction factor 0.999).
pub const SERIES_CAP: usize = 40;

/// A solver report passes its residual gate when the sampled PDE residual is
/// below `RESIDUAL_GATE_FACTOR x` the requested series tolerance.
pub const RESIDUAL_GATE_FACTOR: f64 = 10.0;

/// Radius at which boundary agreement is measured.
pub const BOUNDARY_RADIUS: f64 = 0.99;

/// Dirichlet solvability threshold: the reflected-pairing gap must stay below
/// this on the probe set for the data to count as compatible. Incompatible
/// one-mode data produces gaps of order `r` at radius `r`, several orders
/// above this threshold.
pub const SOLVABILITY_TOL: f64 = 1e-6;

/// Coefficient tolerance under which an input counts as annihilated by the
/// `n`-th Beltrami iterate, gating HOIB component extraction.
pub const HOIB_EXTRACT_TOL: f64 = 1e-10;

/// Residual gate for the Dirichlet solver. Its residuals are measured by
/// central finite differences on contour-integral evaluations, whose floor
/// (step `1e-4`, second-order) sits near `1e-8`; this gate leaves a margin
/// above that floor while still catching genuinely wrong solutions, whose
/// residuals are `O(1)`.
pub const DIRICHLET_RESIDUAL_TOL: f64 = 1e-6;

// ---------------------------------------------------------------------------
// Verification suite
// ---------------------------------------------------------------------------

/// Exact-path error allowed for the homogeneous Schwarz reference solution.
pub const SUITE_SCHWARZ_MU0_TOL: f64 = 1e-6;

/// Sup-norm error allowed for the manufactured inhomogeneous Schwarz solve.
pub const SUITE_MANUFACTURED_TOL: f64 = 1e-4;

/// L2 boundary mismatch allowed at radius [`BOUNDARY_RADIUS`].
pub const SUITE_BOUNDARY_TOL: f64 = 1e-3;

/// Slack added to the contraction factor when checking measured series decay.
pub const SUITE_DECAY_SLACK: f64 = 0.05;

/// Compatible Dirichlet data must show a gap below this.
pub const SUITE_GATE_PASS: f64 = 1e-6;

/// Incompatible Dirichlet data must show a gap above this.
pub const SUITE_GATE_FAIL: f64 = 1e-2;

/// Factorization-bundle reconstruction error (roundtrip through extraction).
pub const SUITE_HOIB_ROUNDTRIP_TOL: f64 = 1e-10;

/// Residual of the order-`n` operator applied to an order-`n` bundle.
pub const SUITE_HOIB_ANNIHILATION_TOL: f64 = 1e-12;

/// Pointwise transform roundtrip error at probe points.
pub const SUITE_TRANSFORM_ROUNDTRIP_TOL: f64 = 1e-12;

/// Residual of the transformed equation for a constant-coefficient
/// manufactured solution (exact path).
pub const SUITE_TRANSFORM_CONST_TOL: f64 = 1e-8;

/// Residual of the transformed equation for a variable-coefficient
/// manufactured solution (finite-difference path; limited by [`FD_STEP`]).
pub const SUITE_TRANSFORM_VAR_TOL: f64 = 1e-4;

/// Error allowed on closed-form circle means.
pub const SUITE_HARDY_MEAN_TOL: f64 = 1e-12;

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tolerances_are_positive_and_ordered() {
        assert!(ALGEBRA_REL_TOL > 0.0);
        assert!(FD_STEP > 0.0 && FD_MATCH_TOL > FD_STEP * FD_STEP);
        assert!(QUAD_STRONG_TOL > QUAD_WEAK_TOL);
        assert!(SUITE_GATE_FAIL > SUITE_GATE_PASS);
        assert!(SERIES_CAP >= 1);
        assert!((0.0..1.0).contains(&BOUNDARY_RADIUS) && BOUNDARY_RADIUS > 0.9);
        assert!(SUITE_TRANSFORM_CONST_TOL < SUITE_TRANSFORM_VAR_TOL);
    }
}
