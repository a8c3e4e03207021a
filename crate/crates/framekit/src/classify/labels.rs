//! Class labels, bounds, and the classification report.

use serde::Serialize;

use crate::ext_real::ExtReal;
use crate::linalg::Tolerance;
use crate::report;

/// The sequence taxonomy.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum ClassLabel {
    Bessel,
    LowerFrameSequence,
    FrameSequence,
    Frame,
    RieszBasis,
    RieszFischer,
    Complete,
}

/// All labels in report order.
pub const ALL_LABELS: [ClassLabel; 7] = [
    ClassLabel::Bessel,
    ClassLabel::LowerFrameSequence,
    ClassLabel::FrameSequence,
    ClassLabel::Frame,
    ClassLabel::RieszBasis,
    ClassLabel::RieszFischer,
    ClassLabel::Complete,
];

impl ClassLabel {
    pub fn as_str(&self) -> &'static str {
        match self {
            ClassLabel::Bessel => "Bessel",
            ClassLabel::LowerFrameSequence => "LowerFrameSequence",
            ClassLabel::FrameSequence => "FrameSequence",
            ClassLabel::Frame => "Frame",
            ClassLabel::RieszBasis => "RieszBasis",
            ClassLabel::RieszFischer => "RieszFischer",
            ClassLabel::Complete => "Complete",
        }
    }

    /// Labels implied by this one: a Riesz basis is a frame; a frame is a
    /// Bessel, lower frame, frame sequence, and complete.
    pub fn implies(&self) -> &'static [ClassLabel] {
        match self {
            ClassLabel::RieszBasis => &[ClassLabel::Frame, ClassLabel::RieszFischer],
            ClassLabel::Frame => &[
                ClassLabel::Bessel,
                ClassLabel::LowerFrameSequence,
                ClassLabel::FrameSequence,
                ClassLabel::Complete,
            ],
            _ => &[],
        }
    }
}

impl std::fmt::Display for ClassLabel {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Which operator characterization produced a verdict.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Route {
    C,
    D,
    S,
    G,
}

pub const ALL_ROUTES: [Route; 4] = [Route::C, Route::D, Route::S, Route::G];

impl Route {
    pub fn as_str(&self) -> &'static str {
        match self {
            Route::C => "C",
            Route::D => "D",
            Route::S => "S",
            Route::G => "G",
        }
    }
}

/// Lower/upper bounds attached to a verdict. Either side may be absent
/// (a Bessel verdict has no lower bound); `optimal` marks bounds that are
/// extreme squared singular values or attained annotation limits.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct FrameBounds {
    pub lower: Option<ExtReal>,
    pub upper: Option<ExtReal>,
    pub optimal: bool,
}

impl FrameBounds {
    pub fn none() -> FrameBounds {
        FrameBounds {
            lower: None,
            upper: None,
            optimal: false,
        }
    }

    pub fn both(lower: ExtReal, upper: ExtReal, optimal: bool) -> FrameBounds {
        debug_assert!(lower <= upper, "bounds out of order: {lower} > {upper}");
        FrameBounds {
            lower: Some(lower),
            upper: Some(upper),
            optimal,
        }
    }

    pub fn lower_only(lower: ExtReal, optimal: bool) -> FrameBounds {
        FrameBounds {
            lower: Some(lower),
            upper: None,
            optimal,
        }
    }

    pub fn upper_only(upper: ExtReal, optimal: bool) -> FrameBounds {
        FrameBounds {
            lower: None,
            upper: Some(upper),
            optimal,
        }
    }

    pub fn lower_f64(&self) -> Option<f64> {
        self.lower.and_then(|x| x.value())
    }

    pub fn upper_f64(&self) -> Option<f64> {
        self.upper.and_then(|x| x.value())
    }
}

/// One label through one characterization. `holds == None` means this
/// operator genuinely does not characterize the label (the frame operator
/// cannot see Riesz–Fischer; the Gram cannot see completeness or the lower
/// frame condition).
#[derive(Debug, Clone, Serialize)]
pub struct LabelVerdict {
    pub label: ClassLabel,
    pub holds: Option<bool>,
    pub bounds: FrameBounds,
    /// The criterion that decided the verdict.
    pub anchor: String,
    /// Relative distance of the nearest singular value to the rank cutoff,
    /// for diagnosing tolerance pathologies on disagreement.
    pub margin: Option<f64>,
}

impl LabelVerdict {
    pub fn decided(
        label: ClassLabel,
        holds: bool,
        bounds: FrameBounds,
        anchor: impl Into<String>,
    ) -> LabelVerdict {
        LabelVerdict {
            label,
            holds: Some(holds),
            bounds,
            anchor: anchor.into(),
            margin: None,
        }
    }

    pub fn undecided(label: ClassLabel, anchor: impl Into<String>) -> LabelVerdict {
        LabelVerdict {
            label,
            holds: None,
            bounds: FrameBounds::none(),
            anchor: anchor.into(),
            margin: None,
        }
    }

    pub fn with_margin(mut self, margin: Option<f64>) -> LabelVerdict {
        self.margin = margin;
        self
    }
}

/// Verdicts from the four characterizations plus their consensus.
#[derive(Debug, Clone)]
pub struct ClassificationReport {
    pub via_c: Vec<LabelVerdict>,
    pub via_d: Vec<LabelVerdict>,
    pub via_s: Vec<LabelVerdict>,
    pub via_g: Vec<LabelVerdict>,
    pub consensus: Vec<LabelVerdict>,
    /// True when no two characterizations decide a label differently.
    pub agreement: bool,
    /// True when some deciding singular value sat within 10% of the rank
    /// cutoff, i.e. verdicts near the threshold are genuinely ambiguous.
    pub borderline: bool,
    pub tol: Tolerance,
}

impl ClassificationReport {
    pub fn route(&self, route: Route) -> &[LabelVerdict] {
        match route {
            Route::C => &self.via_c,
            Route::D => &self.via_d,
            Route::S => &self.via_s,
            Route::G => &self.via_g,
        }
    }

    fn lookup(verdicts: &[LabelVerdict], label: ClassLabel) -> Option<&LabelVerdict> {
        verdicts.iter().find(|v| v.label == label)
    }

    /// Consensus answer for a label.
    pub fn holds(&self, label: ClassLabel) -> Option<bool> {
        Self::lookup(&self.consensus, label).and_then(|v| v.holds)
    }

    /// Consensus bounds for a label.
    pub fn bounds(&self, label: ClassLabel) -> FrameBounds {
        Self::lookup(&self.consensus, label)
            .map(|v| v.bounds)
            .unwrap_or_else(FrameBounds::none)
    }

    /// The set of labels the consensus asserts.
    pub fn held_labels(&self) -> Vec<ClassLabel> {
        self.consensus
            .iter()
            .filter(|v| v.holds == Some(true))
            .map(|v| v.label)
            .collect()
    }

    /// External JSON schema: route-tagged label entries plus the agreement
    /// and borderline flags.
    pub fn to_json(&self) -> String {
        report::to_json_string(&ClassificationReportJson::from(self))
    }
}

/// Serde shape of the classification report wire format.
#[derive(Debug, Serialize)]
pub struct ClassificationReportJson {
    pub labels: Vec<LabelEntryJson>,
    pub agreement: bool,
    pub borderline: bool,
}

#[derive(Debug, Serialize)]
pub struct LabelEntryJson {
    pub label: &'static str,
    pub holds: bool,
    #[serde(rename = "A")]
    pub a: Option<ExtReal>,
    #[serde(rename = "B")]
    pub b: Option<ExtReal>,
    pub via: &'static str,
    pub anchor: String,
}

impl From<&ClassificationReport> for ClassificationReportJson {
    fn from(report: &ClassificationReport) -> ClassificationReportJson {
        let mut labels = Vec::new();
        for route in ALL_ROUTES {
            for verdict in report.route(route) {
                if let Some(holds) = verdict.holds {
                    labels.push(LabelEntryJson {
                        label: verdict.label.as_str(),
                        holds,
                        a: verdict.bounds.lower,
                        b: verdict.bounds.upper,
                        via: route.as_str(),
                        anchor: verdict.anchor.clone(),
                    });
                }
            }
        }
        ClassificationReportJson {
            labels,
            agreement: report.agreement,
            borderline: report.borderline,
        }
    }
}

/// Builds the consensus verdicts and agreement flag from the four routes.
pub(crate) fn build_consensus(
    via_c: &[LabelVerdict],
    via_d: &[LabelVerdict],
    via_s: &[LabelVerdict],
    via_g: &[LabelVerdict],
) -> (Vec<LabelVerdict>, bool) {
    let mut consensus = Vec::with_capacity(ALL_LABELS.len());
    let mut agreement = true;
    for label in ALL_LABELS {
        let decided: Vec<&LabelVerdict> = [via_c, via_d, via_s, via_g]
            .iter()
            .filter_map(|route| {
                route
                    .iter()
                    .find(|v| v.label == label && v.holds.is_some())
            })
            .collect();
        if decided.is_empty() {
            consensus.push(LabelVerdict::undecided(label, "no characterization applies"));
            continue;
        }
        let first = decided[0].holds;
        if decided.iter().any(|v| v.holds != first) {
            agreement = false;
        }
        // The synthesis route is the canonical bound carrier; fall back to
        // the first deciding route otherwise.
        let canonical = via_d
            .iter()
            .find(|v| v.label == label && v.holds.is_some())
            .unwrap_or(decided[0]);
        consensus.push(canonical.clone());
    }
    (consensus, agreement)
}
