//! Images of sequences under operators, with predicted-bound arithmetic.
//!
//! When a bounded operator `F` acts on a family with known bounds, the image
//! family's bounds follow from `‖F‖` and the inverse-side norm: a Bessel
//! bound scales by `‖F‖²`, a lower bound divides by `‖F†‖²` (or `‖F⁻¹‖²`,
//! or the inverse bound `K²`, depending on the rule's hypothesis). The
//! predictions sandwich the image's optimal bounds, which `verify_transform`
//! checks against the classifier.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::ext_real::ExtReal;
use crate::linalg::{pseudo_inverse_norm, svd, Matrix, Tolerance};
use crate::sequence::FiniteSequence;

use crate::classify::{classify_finite, ClassLabel, ClassificationReport, FrameBounds};

/// The five transform rules and their operator hypotheses.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum TransformRule {
    /// Any bounded operator preserves Bessel, bound `B·‖F‖²`.
    Bessel,
    /// Surjective `F` maps frames to frames, bounds `A/‖F†‖²`, `B·‖F‖²`.
    Frame,
    /// Bijective `F` maps Riesz bases to Riesz bases, bounds `A/‖F⁻¹‖²`,
    /// `B·‖F‖²`.
    RieszBasis,
    /// Surjective `F` preserves the lower frame condition, bound
    /// `A/‖(F*)⁻¹‖²`.
    LowerFrame,
    /// `F` with a bounded inverse on its range (inverse bound `K`) preserves
    /// Riesz–Fischer, bound `A/K²`.
    RieszFischer,
}

impl TransformRule {
    pub fn as_str(&self) -> &'static str {
        match self {
            TransformRule::Bessel => "bessel",
            TransformRule::Frame => "frame",
            TransformRule::RieszBasis => "riesz_basis",
            TransformRule::LowerFrame => "lower_frame",
            TransformRule::RieszFischer => "riesz_fischer",
        }
    }

    pub fn parse(text: &str) -> Result<TransformRule> {
        match text {
            "bessel" => Ok(TransformRule::Bessel),
            "frame" => Ok(TransformRule::Frame),
            "riesz_basis" => Ok(TransformRule::RieszBasis),
            "lower_frame" => Ok(TransformRule::LowerFrame),
            "riesz_fischer" => Ok(TransformRule::RieszFischer),
            other => Err(Error::InvalidInput(format!("unknown rule {other:?}"))),
        }
    }

    /// The label the rule consumes and produces.
    pub fn label(&self) -> ClassLabel {
        match self {
            TransformRule::Bessel => ClassLabel::Bessel,
            TransformRule::Frame => ClassLabel::Frame,
            TransformRule::RieszBasis => ClassLabel::RieszBasis,
            TransformRule::LowerFrame => ClassLabel::LowerFrameSequence,
            TransformRule::RieszFischer => ClassLabel::RieszFischer,
        }
    }

    fn hypothesis(&self) -> &'static str {
        match self {
            TransformRule::Bessel => "F bounded",
            TransformRule::Frame => "F surjective",
            TransformRule::RieszBasis => "F bijective",
            TransformRule::LowerFrame => "F surjective",
            TransformRule::RieszFischer => "F injective with bounded inverse on ran(F)",
        }
    }
}

/// Predicted bounds for the image family.
#[derive(Debug, Clone, Serialize)]
pub struct TransformPrediction {
    pub input_bounds: FrameBounds,
    /// `‖F‖ = σ_max(F)`.
    pub operator_norm: f64,
    /// `‖F†‖ = 1/σ_r(F)` (reciprocal of the smallest retained singular
    /// value); equals `‖F⁻¹‖` for bijective `F` and the inverse bound `K`
    /// for injective `F`.
    pub pinv_norm: f64,
    pub predicted: FrameBounds,
    pub rule: TransformRule,
    /// Human-readable statement of the arithmetic that was applied.
    pub citation: String,
}

/// Applies `F` to every vector of the family: `(ψ_k) ↦ (F ψ_k)` in the
/// codomain dimension `F.rows()`.
pub fn apply_operator(f: &Matrix, seq: &FiniteSequence) -> Result<FiniteSequence> {
    if f.cols() != seq.dimension() {
        return Err(Error::InvalidInput(format!(
            "operator expects dimension {}, sequence lives in dimension {}",
            f.cols(),
            seq.dimension()
        )));
    }
    if f.rows() == 0 {
        return Err(Error::InvalidInput("operator has no rows".into()));
    }
    let vectors = seq.vectors().iter().map(|v| f.mat_vec(v)).collect();
    FiniteSequence::new(f.rows(), vectors, seq.label().map(|l| format!("F({l})")))
        .map_err(|e| Error::InvalidInput(e.to_string()))
}

/// Checks the rule's hypothesis on `F` and returns the predicted bounds for
/// an input family with bounds `input`.
pub fn predict_bounds(
    input: &FrameBounds,
    f: &Matrix,
    rule: TransformRule,
    tol: &Tolerance,
) -> Result<TransformPrediction> {
    let res = svd(f)?;
    let cutoff = tol.rank_cutoff(res.sigma_max());
    let rank = res.rank_above(cutoff);
    let surjective = rank == f.rows();
    let injective = rank == f.cols();

    let hypothesis_ok = match rule {
        TransformRule::Bessel => true,
        TransformRule::Frame | TransformRule::LowerFrame => surjective,
        TransformRule::RieszBasis => f.is_square() && rank == f.rows(),
        TransformRule::RieszFischer => injective,
    };
    if !hypothesis_ok {
        return Err(Error::Hypothesis(format!(
            "rule {} requires {}; rank is {rank} for a {}x{} operator",
            rule.as_str(),
            rule.hypothesis(),
            f.rows(),
            f.cols()
        )));
    }

    let operator_norm = res.sigma_max();
    let pinv_norm = pseudo_inverse_norm(f, tol)?;
    let gain_up = operator_norm * operator_norm;
    let gain_down = if pinv_norm > 0.0 {
        1.0 / (pinv_norm * pinv_norm)
    } else {
        0.0
    };

    let scale_ext = |x: ExtReal, factor: f64| match x {
        ExtReal::Finite(v) => ExtReal::finite(v * factor),
        ExtReal::Infinite => ExtReal::Infinite,
    };

    let (predicted, citation) = match rule {
        TransformRule::Bessel => {
            let upper = input
                .upper
                .ok_or_else(|| Error::InvalidInput("bessel rule needs an upper bound".into()))?;
            (
                FrameBounds::upper_only(scale_ext(upper, gain_up), false),
                "B ↦ B·‖F‖²".to_string(),
            )
        }
        TransformRule::Frame => {
            let lower = input
                .lower
                .ok_or_else(|| Error::InvalidInput("frame rule needs a lower bound".into()))?;
            let upper = input
                .upper
                .ok_or_else(|| Error::InvalidInput("frame rule needs an upper bound".into()))?;
            (
                FrameBounds::both(
                    scale_ext(lower, gain_down),
                    scale_ext(upper, gain_up),
                    false,
                ),
                "A ↦ A·‖F†‖⁻², B ↦ B·‖F‖²".to_string(),
            )
        }
        TransformRule::RieszBasis => {
            let lower = input
                .lower
                .ok_or_else(|| Error::InvalidInput("riesz_basis rule needs a lower bound".into()))?;
            let upper = input
                .upper
                .ok_or_else(|| Error::InvalidInput("riesz_basis rule needs an upper bound".into()))?;
            (
                FrameBounds::both(
                    scale_ext(lower, gain_down),
                    scale_ext(upper, gain_up),
                    false,
                ),
                "A ↦ A·‖F⁻¹‖⁻², B ↦ B·‖F‖²".to_string(),
            )
        }
        TransformRule::LowerFrame => {
            let lower = input
                .lower
                .ok_or_else(|| Error::InvalidInput("lower_frame rule needs a lower bound".into()))?;
            (
                FrameBounds::lower_only(scale_ext(lower, gain_down), false),
                "A ↦ A·‖(F*)⁻¹‖⁻²".to_string(),
            )
        }
        TransformRule::RieszFischer => {
            let lower = input.lower.ok_or_else(|| {
                Error::InvalidInput("riesz_fischer rule needs a lower bound".into())
            })?;
            (
                FrameBounds::lower_only(scale_ext(lower, gain_down), false),
                "A ↦ A·K⁻²".to_string(),
            )
        }
    };

    Ok(TransformPrediction {
        input_bounds: *input,
        operator_norm,
        pinv_norm,
        predicted,
        rule,
        citation,
    })
}

/// Sandwich report: the image family's classification, with its optimal
/// bounds checked against the prediction.
#[derive(Debug, Clone)]
pub struct TransformReport {
    pub classification: ClassificationReport,
    pub prediction: TransformPrediction,
    /// Optimal bounds of the image, from the classifier.
    pub actual: FrameBounds,
    /// The image carries the rule's label.
    pub label_holds: bool,
    /// `predicted.A ≤ A*` and `B* ≤ predicted.B`, within slack.
    pub sandwich: bool,
}

/// Absolute slack allowed on each side of the sandwich.
pub const SANDWICH_SLACK: f64 = 1e-6;

/// Applies `F`, classifies the image, and checks that its optimal bounds sit
/// inside the prediction. A violated sandwich is a structured result, not an
/// error.
pub fn verify_transform(
    seq: &FiniteSequence,
    f: &Matrix,
    rule: TransformRule,
    tol: &Tolerance,
) -> Result<TransformReport> {
    let input_report = classify_finite(seq, *tol);
    if input_report.holds(rule.label()) != Some(true) {
        return Err(Error::Hypothesis(format!(
            "input family does not hold the {} label",
            rule.label()
        )));
    }
    let input_bounds = input_report.bounds(rule.label());
    let prediction = predict_bounds(&input_bounds, f, rule, tol)?;

    let image = apply_operator(f, seq)?;
    let classification = classify_finite(&image, Tolerance::for_dims(image.dimension(), image.len()));
    let label_holds = classification.holds(rule.label()) == Some(true);
    let actual = classification.bounds(rule.label());

    let lower_ok = match (prediction.predicted.lower_f64(), actual.lower_f64()) {
        (Some(pred), Some(act)) => pred <= act + SANDWICH_SLACK,
        (None, _) => true,
        (Some(_), None) => false,
    };
    let upper_ok = match (prediction.predicted.upper_f64(), actual.upper_f64()) {
        (Some(pred), Some(act)) => act <= pred + SANDWICH_SLACK,
        (None, _) => true,
        (Some(_), None) => false,
    };

    Ok(TransformReport {
        classification,
        prediction,
        actual,
        label_holds,
        sandwich: label_holds && lower_ok && upper_ok,
    })
}
