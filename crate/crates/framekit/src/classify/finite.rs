//! Classification of finite families through each operator independently.
//!
//! Every characterization reduces to rank and spectrum questions in finite
//! dimension: the analysis route via the singular values of `C`, the
//! synthesis route via `D`, the frame-operator route via the eigenvalues of
//! `S`, and the Gram route via the eigenvalues of `G` plus the sections
//! test. The four verdict sets must coincide; `cross_check` reports any
//! conflict together with the threshold margins that produced it.

use serde::Serialize;

use crate::ext_real::ExtReal;
use crate::linalg::{hermitian_eigen, pseudo_inverse, svd, Matrix, Tolerance};
use crate::operators::{build_suite, OperatorSuite};
use crate::sequence::FiniteSequence;

use super::labels::{
    build_consensus, ClassLabel, ClassificationReport, FrameBounds, LabelVerdict, Route,
    ALL_ROUTES,
};

/// A descending spectrum with its rank decision.
struct Spectrum {
    values: Vec<f64>,
    rank: usize,
    margin: Option<f64>,
    borderline: bool,
}

impl Spectrum {
    fn from_values(values: Vec<f64>, tol: &Tolerance) -> Spectrum {
        let top = values.first().copied().unwrap_or(0.0);
        let cutoff = tol.rank_cutoff(top);
        let rank = values.iter().filter(|&&v| v > cutoff).count();
        let margin = if cutoff > 0.0 {
            values
                .iter()
                .map(|&v| (v - cutoff).abs() / cutoff)
                .fold(None, |acc: Option<f64>, m| {
                    Some(acc.map_or(m, |a| a.min(m)))
                })
        } else {
            None
        };
        let borderline = values.iter().any(|&v| tol.is_borderline(v, top));
        Spectrum {
            values,
            rank,
            margin,
            borderline,
        }
    }

    fn top(&self) -> f64 {
        self.values.first().copied().unwrap_or(0.0)
    }

    /// Smallest retained value; `None` for rank zero.
    fn smallest_retained(&self) -> Option<f64> {
        if self.rank == 0 {
            None
        } else {
            Some(self.values[self.rank - 1])
        }
    }

    fn value_at(&self, index: usize) -> f64 {
        self.values[index]
    }
}

fn singular_spectrum(m: &Matrix, tol: &Tolerance) -> Spectrum {
    let res = svd(m).expect("classification inputs have positive dimensions");
    Spectrum::from_values(res.singular_values().to_vec(), tol)
}

/// Eigenvalue spectrum of a Hermitian PSD matrix, clamped at zero.
fn psd_spectrum(m: &Matrix, tol: &Tolerance) -> Spectrum {
    let eig = hermitian_eigen(m).expect("classification inputs are square");
    Spectrum::from_values(eig.values().iter().map(|&v| v.max(0.0)).collect(), tol)
}

fn fin(x: f64) -> ExtReal {
    ExtReal::finite(x)
}

/// Analysis-operator route: verdicts from the singular values of `C`
/// (squared, so they are directly comparable to frame bounds).
fn via_c_verdicts(spec: &Spectrum, d: usize, n: usize) -> Vec<LabelVerdict> {
    let injective = spec.rank == d;
    let surjective = spec.rank == n;
    let nonzero = spec.rank > 0;
    let b_upper = fin(spec.top() * spec.top());
    let mut out = Vec::with_capacity(7);

    out.push(LabelVerdict::decided(
        ClassLabel::Bessel,
        true,
        FrameBounds::upper_only(b_upper, true),
        "dom(C) is the whole space and C is bounded with ‖C‖² = B",
    ));
    out.push(LabelVerdict::decided(
        ClassLabel::LowerFrameSequence,
        injective,
        if injective {
            FrameBounds::lower_only(fin(square(spec.value_at(d - 1))), true)
        } else {
            FrameBounds::none()
        },
        "C injective with closed range",
    ));
    out.push(LabelVerdict::decided(
        ClassLabel::FrameSequence,
        nonzero,
        if let Some(s) = spec.smallest_retained() {
            FrameBounds::both(fin(square(s)), b_upper, true)
        } else {
            FrameBounds::none()
        },
        "dom(C) is the whole space and ran(C) is closed",
    ));
    out.push(LabelVerdict::decided(
        ClassLabel::Frame,
        injective,
        if injective {
            FrameBounds::both(fin(square(spec.value_at(d - 1))), b_upper, true)
        } else {
            FrameBounds::none()
        },
        "ran(C) closed and C injective",
    ));
    out.push(LabelVerdict::decided(
        ClassLabel::RieszBasis,
        injective && surjective,
        if injective && surjective {
            FrameBounds::both(fin(square(spec.value_at(d - 1))), b_upper, true)
        } else {
            FrameBounds::none()
        },
        "C bijective",
    ));
    out.push(LabelVerdict::decided(
        ClassLabel::RieszFischer,
        surjective,
        if surjective {
            FrameBounds::lower_only(fin(square(spec.value_at(n - 1))), true)
        } else {
            FrameBounds::none()
        },
        "C surjective",
    ));
    out.push(LabelVerdict::decided(
        ClassLabel::Complete,
        injective,
        FrameBounds::none(),
        "C injective",
    ));
    out.into_iter().map(|v| v.with_margin(spec.margin)).collect()
}

/// Synthesis-operator route: verdicts from the singular values of `D`.
fn via_d_verdicts(spec: &Spectrum, d: usize, n: usize) -> Vec<LabelVerdict> {
    let surjective = spec.rank == d;
    let injective = spec.rank == n;
    let nonzero = spec.rank > 0;
    let b_upper = fin(spec.top() * spec.top());
    let mut out = Vec::with_capacity(7);

    out.push(LabelVerdict::decided(
        ClassLabel::Bessel,
        true,
        FrameBounds::upper_only(b_upper, true),
        "dom(D) is all of ℓ² and D is bounded with ‖D‖² = B",
    ));
    out.push(LabelVerdict::decided(
        ClassLabel::LowerFrameSequence,
        surjective,
        if surjective {
            FrameBounds::lower_only(fin(square(spec.value_at(d - 1))), true)
        } else {
            FrameBounds::none()
        },
        "ran(D) dense and ran(D*) closed",
    ));
    out.push(LabelVerdict::decided(
        ClassLabel::FrameSequence,
        nonzero,
        if let Some(s) = spec.smallest_retained() {
            FrameBounds::both(fin(square(s)), b_upper, true)
        } else {
            FrameBounds::none()
        },
        "dom(D) is all of ℓ² and ran(D) is closed",
    ));
    out.push(LabelVerdict::decided(
        ClassLabel::Frame,
        surjective,
        if surjective {
            FrameBounds::both(fin(square(spec.value_at(d - 1))), b_upper, true)
        } else {
            FrameBounds::none()
        },
        "D surjective",
    ));
    out.push(LabelVerdict::decided(
        ClassLabel::RieszBasis,
        surjective && injective,
        if surjective && injective {
            FrameBounds::both(fin(square(spec.value_at(d - 1))), b_upper, true)
        } else {
            FrameBounds::none()
        },
        "D bijective",
    ));
    out.push(LabelVerdict::decided(
        ClassLabel::RieszFischer,
        injective,
        if injective {
            FrameBounds::lower_only(fin(square(spec.value_at(n - 1))), true)
        } else {
            FrameBounds::none()
        },
        "D injective with bounded inverse on ran(D)",
    ));
    out.push(LabelVerdict::decided(
        ClassLabel::Complete,
        surjective,
        FrameBounds::none(),
        "ran(D) dense",
    ));
    out.into_iter().map(|v| v.with_margin(spec.margin)).collect()
}

/// Frame-operator route: verdicts from the eigenvalues of `S`, plus the
/// biorthogonality test for the Riesz-basis case. `S` cannot distinguish
/// Riesz–Fischer sequences (an orthonormal basis and a redundant Parseval
/// frame share the identity frame operator), so that label is undecided.
fn via_s_verdicts(spec: &Spectrum, suite: &OperatorSuite, d: usize, n: usize) -> Vec<LabelVerdict> {
    let bijective = spec.rank == d;
    let nonzero = spec.rank > 0;
    let b_upper = fin(spec.top());
    let mut out = Vec::with_capacity(7);

    out.push(LabelVerdict::decided(
        ClassLabel::Bessel,
        true,
        FrameBounds::upper_only(b_upper, true),
        "dom(S) is the whole space and S is bounded with ‖S‖ = B",
    ));
    out.push(LabelVerdict::decided(
        ClassLabel::LowerFrameSequence,
        bijective,
        if bijective {
            FrameBounds::lower_only(fin(spec.value_at(d - 1)), true)
        } else {
            FrameBounds::none()
        },
        "S injective and ran(C) closed",
    ));
    out.push(LabelVerdict::decided(
        ClassLabel::FrameSequence,
        nonzero,
        if let Some(s) = spec.smallest_retained() {
            FrameBounds::both(fin(s), b_upper, true)
        } else {
            FrameBounds::none()
        },
        "dom(S) is the whole space and ran(S) is closed",
    ));
    out.push(LabelVerdict::decided(
        ClassLabel::Frame,
        bijective,
        if bijective {
            FrameBounds::both(fin(spec.value_at(d - 1)), b_upper, true)
        } else {
            FrameBounds::none()
        },
        "S surjective",
    ));

    // Riesz basis: S bijective and (S⁻¹ψ_k) biorthogonal to (ψ_k), checked
    // as Dᴴ S† D = I.
    let riesz_basis = if bijective && n == d {
        let pinv = pseudo_inverse(suite.frame_op(), suite.tol())
            .expect("frame operator has positive dimensions");
        let cross = suite.synthesis().adjoint().mul(&pinv.mul(suite.synthesis()));
        cross.sub(&Matrix::identity(n)).frobenius_norm() <= suite.tol().residual_abs()
    } else {
        false
    };
    out.push(LabelVerdict::decided(
        ClassLabel::RieszBasis,
        riesz_basis,
        if riesz_basis {
            FrameBounds::both(fin(spec.value_at(d - 1)), b_upper, true)
        } else {
            FrameBounds::none()
        },
        "S bijective and (S⁻¹ψ_k) biorthogonal to (ψ_k)",
    ));
    out.push(LabelVerdict::undecided(
        ClassLabel::RieszFischer,
        "S does not distinguish Riesz–Fischer sequences",
    ));
    out.push(LabelVerdict::decided(
        ClassLabel::Complete,
        bijective,
        FrameBounds::none(),
        "S injective",
    ));
    out.into_iter().map(|v| v.with_margin(spec.margin)).collect()
}

/// Gram route: verdicts from the eigenvalues of `G`. The Riesz–Fischer
/// bound `min_n σ_min(G_n)` equals `σ_min(G)` by interlacing, so the full
/// Gram spectrum decides it; the dedicated sections sweep
/// (`riesz_fischer_via_sections`) recomputes it section by section and the
/// two must agree. Completeness is read off against the known ambient
/// dimension; the lower frame condition has no Gram characterization and
/// stays undecided.
fn via_g_verdicts(spec: &Spectrum, d: usize, n: usize) -> Vec<LabelVerdict> {
    let complete = spec.rank == d;
    let invertible = spec.rank == n;
    let nonzero = spec.rank > 0;
    let b_upper = fin(spec.top());
    let mut out = Vec::with_capacity(7);

    out.push(LabelVerdict::decided(
        ClassLabel::Bessel,
        true,
        FrameBounds::upper_only(b_upper, true),
        "dom(G) is all of ℓ² and G is bounded with ‖G‖ = B",
    ));
    out.push(LabelVerdict::undecided(
        ClassLabel::LowerFrameSequence,
        "no Gram criterion for the lower frame condition is known",
    ));
    out.push(LabelVerdict::decided(
        ClassLabel::FrameSequence,
        nonzero,
        if let Some(s) = spec.smallest_retained() {
            FrameBounds::both(fin(s), b_upper, true)
        } else {
            FrameBounds::none()
        },
        "G restricted to ran(C) is boundedly invertible",
    ));
    out.push(LabelVerdict::decided(
        ClassLabel::Frame,
        complete,
        if complete {
            FrameBounds::both(
                fin(spec.smallest_retained().unwrap_or(0.0)),
                b_upper,
                true,
            )
        } else {
            FrameBounds::none()
        },
        "complete (rank G = dim) with G invertible on ran(C)",
    ));
    out.push(LabelVerdict::decided(
        ClassLabel::RieszBasis,
        complete && invertible,
        if complete && invertible {
            FrameBounds::both(fin(spec.value_at(n - 1)), b_upper, true)
        } else {
            FrameBounds::none()
        },
        "complete and G boundedly invertible on ℓ²",
    ));
    out.push(LabelVerdict::decided(
        ClassLabel::RieszFischer,
        invertible,
        if invertible {
            FrameBounds::lower_only(fin(spec.value_at(n - 1)), true)
        } else {
            FrameBounds::none()
        },
        "every Gram section G_n satisfies A‖c‖ ≤ ‖G_n c‖",
    ));
    out.push(LabelVerdict::decided(
        ClassLabel::Complete,
        complete,
        FrameBounds::none(),
        "rank of G equals the ambient dimension",
    ));
    out.into_iter().map(|v| v.with_margin(spec.margin)).collect()
}

fn square(x: f64) -> f64 {
    x * x
}

/// Classifies a finite family through all four operator routes.
pub fn classify_finite(seq: &FiniteSequence, tol: Tolerance) -> ClassificationReport {
    let suite = build_suite(seq, tol);
    let d = seq.dimension();
    let n = seq.len();

    let c_spec = singular_spectrum(suite.analysis(), &tol);
    let d_spec = singular_spectrum(suite.synthesis(), &tol);
    let s_spec = psd_spectrum(suite.frame_op(), &tol);
    let g_spec = psd_spectrum(suite.gram(), &tol);

    let via_c = via_c_verdicts(&c_spec, d, n);
    let via_d = via_d_verdicts(&d_spec, d, n);
    let via_s = via_s_verdicts(&s_spec, &suite, d, n);
    let via_g = via_g_verdicts(&g_spec, d, n);

    let (consensus, agreement) = build_consensus(&via_c, &via_d, &via_s, &via_g);
    let borderline =
        c_spec.borderline || d_spec.borderline || s_spec.borderline || g_spec.borderline;

    ClassificationReport {
        via_c,
        via_d,
        via_s,
        via_g,
        consensus,
        agreement,
        borderline,
        tol,
    }
}

/// One conflicting pair of verdicts, with the threshold margins of the two
/// routes that disagree.
#[derive(Debug, Clone, Serialize)]
pub struct Disagreement {
    pub label: ClassLabel,
    pub route_a: Route,
    pub holds_a: bool,
    pub margin_a: Option<f64>,
    pub route_b: Route,
    pub holds_b: bool,
    pub margin_b: Option<f64>,
}

/// Cross-characterization agreement report.
#[derive(Debug, Clone, Serialize)]
pub struct CrossCheckReport {
    pub agreement: bool,
    pub borderline: bool,
    pub disagreements: Vec<Disagreement>,
    /// Relative spread of the four Bessel bounds, a sanity measure of the
    /// spectra used by the routes.
    pub upper_bound_spread: f64,
}

/// Runs the four characterizations and reports every conflict; a
/// disagreement is a structured result, never a panic.
pub fn cross_check(seq: &FiniteSequence, tol: Tolerance) -> CrossCheckReport {
    let report = classify_finite(seq, tol);
    let mut disagreements = Vec::new();

    for label in super::labels::ALL_LABELS {
        let decided: Vec<(Route, &LabelVerdict)> = ALL_ROUTES
            .iter()
            .filter_map(|&route| {
                report
                    .route(route)
                    .iter()
                    .find(|v| v.label == label && v.holds.is_some())
                    .map(|v| (route, v))
            })
            .collect();
        for i in 0..decided.len() {
            for j in (i + 1)..decided.len() {
                let (ra, va) = decided[i];
                let (rb, vb) = decided[j];
                if va.holds != vb.holds {
                    disagreements.push(Disagreement {
                        label,
                        route_a: ra,
                        holds_a: va.holds.unwrap(),
                        margin_a: va.margin,
                        route_b: rb,
                        holds_b: vb.holds.unwrap(),
                        margin_b: vb.margin,
                    });
                }
            }
        }
    }

    let uppers: Vec<f64> = ALL_ROUTES
        .iter()
        .filter_map(|&route| {
            report
                .route(route)
                .iter()
                .find(|v| v.label == ClassLabel::Bessel)
                .and_then(|v| v.bounds.upper_f64())
        })
        .collect();
    let spread = match (
        uppers.iter().copied().fold(f64::INFINITY, f64::min),
        uppers.iter().copied().fold(0.0, f64::max),
    ) {
        (lo, hi) if hi > 0.0 => (hi - lo) / hi,
        _ => 0.0,
    };

    CrossCheckReport {
        agreement: report.agreement,
        borderline: report.borderline,
        disagreements,
        upper_bound_spread: spread,
    }
}
