//! Closed-form Laplacian polynomials and spanning-tree counts of `G^{xyz}`,
//! with numeric and exact evaluation.

mod closed;
mod evaluate;
pub mod expr;
mod registry;
mod series;

use thiserror::Error;

use crate::algebra::AlgebraError;

pub use closed::{
    fixed_eigenvalue_claims, trees_line_graph, trees_subdivision, trees_zero_plus_plus,
    FixedEigenvalue,
};
pub use evaluate::{
    eval_l_exact, eval_trees, predict_spectrum, EigenRoots, PredictedSpectrum, CANCELLATION_TOL,
    DISCRIMINANT_SNAP,
};
pub use expr::{Params, SymPoly, Var};
pub use registry::{
    all_entries, export_json, registry, EntryRecord, FormulaEntry, ScalarFactor, ScalarRecord,
    TreeFormula, TreeRecord,
};
pub use series::{apply_operation_series, SeriesOp, SeriesState};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum FormulaError {
    #[error("formula parse error: {0}")]
    Parse(String),
    #[error("evaluation at the pole λ = {root}")]
    PoleEvaluation { root: i64 },
    #[error("non-integral result {0}")]
    NonIntegerResult(String),
    #[error("root {root} with multiplicity -{missing} is not covered by per-eigenvalue roots")]
    CancellationFailure { root: f64, missing: usize },
    #[error("F(λ, {lambda_i}) has complex roots (discriminant {discriminant})")]
    ComplexRoots { lambda_i: f64, discriminant: f64 },
    #[error("operation {step} produces degree {degree} < 1")]
    DegenerateDegree { step: usize, degree: i64 },
    #[error("invalid base spectrum: {0}")]
    InvalidSpectrum(String),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}
