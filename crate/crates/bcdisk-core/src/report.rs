//! Serializable solver reports.
//!
//! A [`SolveReport`] carries the verdict and the honest post-hoc error
//! metrics of a boundary-value solve, plus a grid of solution samples. The
//! top-level metric fields are maxima over the two idempotent components;
//! the per-component breakdown sits in `plus` / `minus`. JSON field order
//! follows struct order, and summation/sampling orders are fixed upstream,
//! so serialization is byte-deterministic for identical inputs.

use serde::Serialize;

use crate::algebra::Bicomplex;

/// Outcome of a solve.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    /// Series/iteration converged and the residual gate passed.
    Converged,
    /// A precondition (e.g. Dirichlet solvability) failed; no solution is
    /// returned.
    CheckFailed,
    /// Iteration hit its cap without meeting the tail bound, or the residual
    /// gate failed.
    Failed,
}

/// Error metrics for one idempotent component.
#[derive(Clone, Copy, Debug, Default, Serialize)]
pub struct SideMetrics {
    /// Max sampled residual of the PDE over the probe set.
    pub pde_residual_max: f64,
    /// L2 boundary mismatch at the reporting radius.
    pub boundary_error: f64,
    /// Constraint mismatch (normalization constraint for Schwarz problems,
    /// solvability gap for Dirichlet problems).
    pub constraint_error: f64,
    /// Series terms actually used by this component's solve.
    pub series_terms_used: usize,
}

/// One sampled solution value in polar coordinates.
#[derive(Clone, Copy, Debug, Serialize)]
pub struct SampleRow {
    pub r: f64,
    pub theta: f64,
    pub sc_re: f64,
    pub sc_im: f64,
    pub vec_re: f64,
    pub vec_im: f64,
}

impl SampleRow {
    /// Builds a row from a polar location and a bicomplex value.
    pub fn new(r: f64, theta: f64, w: Bicomplex) -> Self {
        let (s, v) = (w.sc(), w.vec());
        SampleRow {
            r,
            theta,
            sc_re: s.re,
            sc_im: s.im,
            vec_re: v.re,
            vec_im: v.im,
        }
    }
}

/// Full report for a boundary-value solve.
#[derive(Clone, Debug, Serialize)]
pub struct SolveReport {
    pub verdict: Verdict,
    /// Max over components of [`SideMetrics::pde_residual_max`].
    pub pde_residual_max: f64,
    /// Max over components of [`SideMetrics::boundary_error`].
    pub boundary_error: f64,
    /// Max over components of [`SideMetrics::constraint_error`].
    pub constraint_error: f64,
    /// Max over components of [`SideMetrics::series_terms_used`].
    pub series_terms_used: usize,
    pub plus: SideMetrics,
    pub minus: SideMetrics,
    pub samples: Vec<SampleRow>,
}

impl SolveReport {
    /// Assembles a report, filling the top-level fields with per-component
    /// maxima.
    pub fn from_sides(
        verdict: Verdict,
        plus: SideMetrics,
        minus: SideMetrics,
        samples: Vec<SampleRow>,
    ) -> Self {
        SolveReport {
            verdict,
            pde_residual_max: plus.pde_residual_max.max(minus.pde_residual_max),
            boundary_error: plus.boundary_error.max(minus.boundary_error),
            constraint_error: plus.constraint_error.max(minus.constraint_error),
            series_terms_used: plus.series_terms_used.max(minus.series_terms_used),
            plus,
            minus,
            samples,
        }
    }

    /// Pretty JSON representation (deterministic for identical inputs).
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialization cannot fail")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn report_maxima_and_json_shape() {
        let plus = SideMetrics {
            pde_residual_max: 1e-12,
            boundary_error: 2e-10,
            constraint_error: 0.0,
            series_terms_used: 3,
        };
        let minus = SideMetrics {
            pde_residual_max: 5e-11,
            boundary_error: 1e-10,
            constraint_error: 1e-15,
            series_terms_used: 7,
        };
        let row = SampleRow::new(0.5, 0.0, Bicomplex::J);
        let rep = SolveReport::from_sides(Verdict::Converged, plus, minus, vec![row]);
        assert_eq!(rep.pde_residual_max, 5e-11);
        assert_eq!(rep.series_terms_used, 7);
        let json = rep.to_json();
        for key in [
            "\"verdict\"",
            "\"pde_residual_max\"",
            "\"boundary_error\"",
            "\"constraint_error\"",
            "\"series_terms_used\"",
            "\"samples\"",
            "\"sc_re\"",
            "\"vec_im\"",
        ] {
            assert!(json.contains(key), "missing {key} in {json}");
        }
        assert!(json.contains("\"converged\""));
        // Byte determinism.
        assert_eq!(json, rep.to_json());
    }
}
