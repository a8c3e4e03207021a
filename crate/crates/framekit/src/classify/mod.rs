//! Classification of sequences into the taxonomy via the four operator
//! characterizations, with optimal bounds and the Gram-sections test.

mod finite;
mod labels;
mod sections;
mod structured;

pub use finite::{classify_finite, cross_check, CrossCheckReport, Disagreement};
pub use labels::{
    ClassLabel, ClassificationReport, ClassificationReportJson, FrameBounds, LabelVerdict, Route,
    ALL_LABELS, ALL_ROUTES,
};
pub use sections::{riesz_fischer_via_sections, SectionsResult};
pub use structured::classify_structured;
