//! Operator images of sequences, predicted-bound arithmetic, and the
//! factorization of a family through the canonical basis.

mod factorize;
mod predict;

pub use factorize::{factorize_via_onb, FactorizationReport, PropertyCheck};
pub use predict::{
    apply_operator, predict_bounds, verify_transform, TransformPrediction, TransformReport,
    TransformRule, SANDWICH_SLACK,
};
