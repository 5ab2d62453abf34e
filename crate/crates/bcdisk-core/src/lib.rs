//! Numerical toolkit for bicomplex-valued function theory on the complex unit
//! disk.
//!
//! The crate provides, in dependency order:
//!
//! * [`algebra`] — the commutative bicomplex algebra (two imaginary units
//!   `i`, `j`), idempotent decomposition, conjugations, and the hyperbolic
//!   norm;
//! * [`fields`] — polynomial and sampled function fields on the disk in the
//!   bicomplexified variable, boundary data on the unit circle, and
//!   finite-difference Wirtinger oracles;
//! * [`operators`] — the disk quadrature rule and the singular integral
//!   operators (Cauchy/Pompeiu, Beurling-type `T`, Schwarz-type area operator
//!   `S`, Schwarz boundary integral), each with an exact polynomial path and a
//!   quadrature path;
//! * [`bvp`] — Schwarz and Dirichlet boundary value problems for the
//!   nonhomogeneous Beltrami-type equation `dbar w = mu dw + f` with
//!   bicomplex constant coefficient, with residual-gated reports;
//! * [`hoib`] — higher-order equations `(dbar - mu d)^n w = 0`: assembly of
//!   solution bundles, component extraction, and radial seminorms;
//! * [`transforms`] — equivalences between conjugate-Beltrami, Vekua-type,
//!   and generalized first-order systems;
//! * [`hardy`] — circle means, growth profiles toward the boundary, and
//!   norm-comparability diagnostics;
//! * [`config`], [`report`], [`suite`] — run configuration, serialized
//!   reports, and the end-to-end verification suite used by the acceptance
//!   tests and the CLI.
//!
//! The most commonly used types are re-exported at the crate root.

pub mod algebra;
pub mod bvp;
pub mod config;
pub mod cpoly;
pub mod error;
pub mod fields;
pub mod hardy;
pub mod hoib;
pub mod operators;
pub mod quad;
pub mod report;
pub mod suite;
pub mod tolerances;
pub mod transforms;

pub use algebra::{bicomplexify, parse_complex, Bicomplex};
pub use bvp::{
    DirichletOptions, DirichletProblem, DirichletSolution, SchwarzOptions, SchwarzProblem,
    SolutionField,
};
pub use config::RunConfig;
pub use cpoly::CPoly;
pub use error::{Error, Result};
pub use fields::{BoundaryData, GridField, PolyField};
pub use quad::{DiskQuadrature, EpsilonPolicy};
pub use report::{SampleRow, SideMetrics, SolveReport, Verdict};
