//! Domain membership for structured sequences.
//!
//! For `ψ_k = w_k e_{σ(k)}` the four operator domains reduce to questions
//! about fiber sums `s_n = Σ_{σ(k)=n} w_k²`:
//!
//! - `f ∈ dom(C)`  iff  `Σ_n s_n |⟨f, e_n⟩|² < ∞`;
//! - `f ∈ dom(S)`  iff  `Σ_n s_n² |⟨f, e_n⟩|² < ∞` (within a fiber every
//!   term is a nonnegative multiple of the same vector, so no cancellation
//!   can occur);
//! - `c ∈ dom(D)` asks for convergence of `Σ c_k ψ_k` in sequence order,
//!   which is genuinely order-sensitive and decided analytically only for
//!   finitely supported `c`;
//! - `c ∈ dom(G)` asks for per-row convergence plus `ℓ²`-ness of the row
//!   sums `w_k · t_{σ(k)}` with `t_n = Σ_{σ(l)=n} c_l w_l`.
//!
//! Analytic verdicts are issued only when the sequence annotations and the
//! coefficient closed form decide the question; everything else is probed
//! numerically at increasing truncation levels and assessed by a heuristic
//! that reports evidence, never proof. Summation always follows sequence
//! order; no reordering is applied anywhere.

use std::collections::BTreeMap;

use num_complex::Complex64;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::ext_real::ExtReal;
use crate::sequence::{CoefficientSequence, StructuredSequence};

/// How far the analytic rules scan for an infinite fiber meeting a nonzero
/// closed-form coordinate.
const FIBER_SCAN_LIMIT: u64 = 64;

/// Outcome of a membership question.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum MembershipStatus {
    /// Decided by annotations: the vector belongs to the domain.
    InDomain,
    /// Decided by annotations: the vector does not belong to the domain.
    NotInDomain,
    /// Partial quantities behave like a convergent series.
    NumericEvidenceConverges,
    /// Partial quantities behave like a divergent series.
    NumericEvidenceDiverges,
    /// The probe could not tell.
    Inconclusive,
}

impl MembershipStatus {
    pub fn as_str(&self) -> &'static str {
        match self {
            MembershipStatus::InDomain => "InDomain",
            MembershipStatus::NotInDomain => "NotInDomain",
            MembershipStatus::NumericEvidenceConverges => "NumericEvidenceConverges",
            MembershipStatus::NumericEvidenceDiverges => "NumericEvidenceDiverges",
            MembershipStatus::Inconclusive => "Inconclusive",
        }
    }

    /// True for `InDomain` and `NumericEvidenceConverges`.
    pub fn leans_in(&self) -> bool {
        matches!(
            self,
            MembershipStatus::InDomain | MembershipStatus::NumericEvidenceConverges
        )
    }
}

/// A membership answer with its probe trace.
#[derive(Debug, Clone, Serialize)]
pub struct MembershipVerdict {
    pub status: MembershipStatus,
    /// `(truncation level, partial norm/sum)` samples, in level order.
    pub evidence: Vec<(u64, f64)>,
    /// The deciding statement, present exactly for analytic statuses.
    pub anchor: Option<String>,
}

impl MembershipVerdict {
    fn analytic(status: MembershipStatus, evidence: Vec<(u64, f64)>, anchor: String) -> Self {
        MembershipVerdict {
            status,
            evidence,
            anchor: Some(anchor),
        }
    }

    fn numeric(status: MembershipStatus, evidence: Vec<(u64, f64)>) -> Self {
        MembershipVerdict {
            status,
            evidence,
            anchor: None,
        }
    }
}

/// Convergence-heuristic thresholds.
///
/// `Converges`: every stage shrinks the increment by at least
/// `shrink_factor` and the final increment (a geometric tail estimate) is
/// below `tail_rel` relative to the observed scale. `Diverges`: the
/// quantity grows monotonically past `growth_factor` times its first
/// sample, or the increments stall — all at least `stall_eps` with no
/// geometric decay (`stall_decay`).
#[derive(Debug, Clone, Copy)]
pub struct ProbeSettings {
    pub shrink_factor: f64,
    pub tail_rel: f64,
    pub growth_factor: f64,
    pub stall_eps: f64,
    pub stall_decay: f64,
}

impl Default for ProbeSettings {
    fn default() -> ProbeSettings {
        ProbeSettings {
            shrink_factor: 2.0,
            tail_rel: 1e-3,
            growth_factor: 1e3,
            stall_eps: 1e-3,
            stall_decay: 0.4,
        }
    }
}

/// Default truncation ladder for probes.
pub const DEFAULT_LEVELS: [u64; 4] = [64, 256, 1024, 4096];

fn validate_levels(levels: &[u64]) -> Result<()> {
    if levels.is_empty() {
        return Err(Error::InvalidInput("levels must be nonempty".into()));
    }
    if levels[0] == 0 {
        return Err(Error::InvalidInput("levels are 1-based".into()));
    }
    if levels.windows(2).any(|w| w[1] <= w[0]) {
        return Err(Error::InvalidInput("levels must be strictly increasing".into()));
    }
    Ok(())
}

/// Product `w · z` with an explicit zero guard so that overflow in one
/// factor never turns a mathematically vanishing term into NaN.
fn safe_mul(w: f64, z: Complex64) -> Complex64 {
    if w == 0.0 || (z.re == 0.0 && z.im == 0.0) {
        Complex64::new(0.0, 0.0)
    } else {
        w * z
    }
}

fn assess(values: &[(u64, f64)], increments: &[f64], settings: &ProbeSettings) -> MembershipStatus {
    if values.len() < 4 {
        return MembershipStatus::Inconclusive;
    }
    let vals: Vec<f64> = values.iter().map(|&(_, v)| v).collect();
    if vals.iter().chain(increments).any(|x| x.is_nan()) {
        return MembershipStatus::Inconclusive;
    }
    if vals.iter().chain(increments).any(|x| x.is_infinite()) {
        return MembershipStatus::NumericEvidenceDiverges;
    }
    let scale = vals.last().unwrap().abs().max(1.0);
    let vanish = 1e-14 * scale;

    let shrinking = increments
        .windows(2)
        .all(|w| w[1] <= w[0] / settings.shrink_factor || w[1] <= vanish);
    let tail = *increments.last().unwrap();
    if shrinking && tail <= settings.tail_rel * scale {
        return MembershipStatus::NumericEvidenceConverges;
    }

    let monotone = vals.windows(2).all(|w| w[1] >= w[0] - vanish);
    let first = vals.first().unwrap().abs().max(1e-12);
    if monotone && vals.last().unwrap().abs() >= settings.growth_factor * first {
        return MembershipStatus::NumericEvidenceDiverges;
    }
    let stalled = increments.iter().all(|&i| i >= settings.stall_eps)
        && *increments.last().unwrap() >= settings.stall_decay * increments[0];
    if monotone && stalled {
        return MembershipStatus::NumericEvidenceDiverges;
    }

    MembershipStatus::Inconclusive
}

/// `Σ_{k≤upto} |⟨f, ψ_k⟩|²` from the generator.
pub fn partial_analysis_sum(s: &StructuredSequence, f: &CoefficientSequence, upto: u64) -> f64 {
    let mut sum = 0.0;
    for k in 1..=upto {
        let (n, w) = s.term(k);
        let term = safe_mul(w, f.value(n));
        sum += term.norm_sqr();
    }
    sum
}

/// Coordinates of `Σ_{k≤upto} ⟨f, ψ_k⟩ ψ_k` as a sparse map `n → value`.
pub fn partial_frame_sum(
    s: &StructuredSequence,
    f: &CoefficientSequence,
    upto: u64,
) -> BTreeMap<u64, Complex64> {
    let mut coords = BTreeMap::new();
    for k in 1..=upto {
        let (n, w) = s.term(k);
        // (w·f_n)·w keeps the product in range even when w² would overflow.
        let contribution = safe_mul(w, safe_mul(w, f.value(n)));
        if contribution != Complex64::new(0.0, 0.0) {
            *coords.entry(n).or_insert(Complex64::new(0.0, 0.0)) += contribution;
        }
    }
    coords
}

/// Coordinates of `Σ_{k≤upto} c_k ψ_k` as a sparse map `n → value`.
pub fn partial_synthesis_sum(
    s: &StructuredSequence,
    c: &CoefficientSequence,
    upto: u64,
) -> BTreeMap<u64, Complex64> {
    let mut coords = BTreeMap::new();
    for k in 1..=upto {
        let (n, w) = s.term(k);
        let contribution = safe_mul(w, c.value(k));
        if contribution != Complex64::new(0.0, 0.0) {
            *coords.entry(n).or_insert(Complex64::new(0.0, 0.0)) += contribution;
        }
    }
    coords
}

/// Truncated Gram application: the row values `(Σ_{l≤upto} G[k,l] c_l)` for
/// `k ≤ upto`, as a map `k → value`.
pub fn partial_gram_rows(
    s: &StructuredSequence,
    c: &CoefficientSequence,
    upto: u64,
) -> BTreeMap<u64, Complex64> {
    // Fiber sums t_n = Σ_{σ(l)=n, l≤upto} c_l w_l, then row k = w_k t_{σ(k)}.
    let mut fibers: BTreeMap<u64, Complex64> = BTreeMap::new();
    for l in 1..=upto {
        let (n, w) = s.term(l);
        let contribution = safe_mul(w, c.value(l));
        if contribution != Complex64::new(0.0, 0.0) {
            *fibers.entry(n).or_insert(Complex64::new(0.0, 0.0)) += contribution;
        }
    }
    let mut rows = BTreeMap::new();
    for k in 1..=upto {
        let (n, w) = s.term(k);
        if let Some(&t) = fibers.get(&n) {
            let value = safe_mul(w, t);
            if value != Complex64::new(0.0, 0.0) {
                rows.insert(k, value);
            }
        }
    }
    rows
}

/// Euclidean norm of a sparse coordinate map.
pub fn map_norm(m: &BTreeMap<u64, Complex64>) -> f64 {
    m.values().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
}

/// Euclidean distance between two sparse coordinate maps.
pub fn map_distance(a: &BTreeMap<u64, Complex64>, b: &BTreeMap<u64, Complex64>) -> f64 {
    let mut sum = 0.0;
    for (k, va) in a {
        let vb = b.get(k).copied().unwrap_or(Complex64::new(0.0, 0.0));
        sum += (va - vb).norm_sqr();
    }
    for (k, vb) in b {
        if !a.contains_key(k) {
            sum += vb.norm_sqr();
        }
    }
    sum.sqrt()
}

/// Analytic answer to `f ∈ dom(C)`, when the annotations decide it.
/// Returns `(belongs, statement)`.
fn analytic_c(s: &StructuredSequence, f: &CoefficientSequence) -> Option<(bool, String)> {
    if f.is_zero() {
        return Some((true, "the zero vector belongs to every domain".into()));
    }
    if let Some(support) = f.support() {
        for &(n, _) in support {
            if s.fiber_sum(n).is_infinite() {
                return Some((
                    false,
                    format!("fiber sum s_{n} is infinite and ⟨f, e_{n}⟩ ≠ 0"),
                ));
            }
        }
        return Some((
            true,
            "finitely supported coordinates meet only finite fiber sums".into(),
        ));
    }
    // Closed form: look for an infinite fiber meeting a nonzero coordinate.
    for n in 1..=FIBER_SCAN_LIMIT {
        if s.fiber_sum(n).is_infinite() && f.value(n) != Complex64::new(0.0, 0.0) {
            return Some((
                false,
                format!("fiber sum s_{n} is infinite and ⟨f, e_{n}⟩ ≠ 0"),
            ));
        }
    }
    if let (Some(decay), Some(bound)) = (f.geometric_decay(), s.fiber_sum_bound()) {
        if bound.ratio * decay.ratio * decay.ratio < 1.0 {
            return Some((
                true,
                "geometric fiber bound certifies Σ s_n·|⟨f,e_n⟩|² < ∞".into(),
            ));
        }
    }
    None
}

/// `f ∈ dom(C)`: is `(⟨f, ψ_k⟩)` square-summable?
pub fn dom_c_membership(
    s: &StructuredSequence,
    f: &CoefficientSequence,
    levels: &[u64],
) -> Result<MembershipVerdict> {
    validate_levels(levels)?;
    let evidence: Vec<(u64, f64)> = levels
        .iter()
        .map(|&n| (n, partial_analysis_sum(s, f, n)))
        .collect();

    if let Some((belongs, statement)) = analytic_c(s, f) {
        let status = if belongs {
            MembershipStatus::InDomain
        } else {
            MembershipStatus::NotInDomain
        };
        return Ok(MembershipVerdict::analytic(status, evidence, statement));
    }

    let increments: Vec<f64> = evidence.windows(2).map(|w| (w[1].1 - w[0].1).abs()).collect();
    let status = assess(&evidence, &increments, &ProbeSettings::default());
    Ok(MembershipVerdict::numeric(status, evidence))
}

/// `f ∈ dom(S)`: does `Σ ⟨f, ψ_k⟩ ψ_k` converge?
pub fn dom_s_membership(
    s: &StructuredSequence,
    f: &CoefficientSequence,
    levels: &[u64],
) -> Result<MembershipVerdict> {
    validate_levels(levels)?;
    let snapshots: Vec<(u64, BTreeMap<u64, Complex64>)> = levels
        .iter()
        .map(|&n| (n, partial_frame_sum(s, f, n)))
        .collect();
    let evidence: Vec<(u64, f64)> = snapshots
        .iter()
        .map(|(n, m)| (*n, map_norm(m)))
        .collect();

    if f.is_zero() {
        return Ok(MembershipVerdict::analytic(
            MembershipStatus::InDomain,
            evidence,
            "the zero vector belongs to every domain".into(),
        ));
    }
    if let Some((false, statement)) = analytic_c(s, f) {
        return Ok(MembershipVerdict::analytic(
            MembershipStatus::NotInDomain,
            evidence,
            format!("{statement}; dom(S) ⊆ dom(C)"),
        ));
    }
    if let Some(support) = f.support() {
        // Finite support with finite fiber sums: the image has coordinates
        // s_n · ⟨f, e_n⟩ over the support, a finite vector.
        if support.iter().all(|&(n, _)| s.fiber_sum(n).is_finite()) {
            return Ok(MembershipVerdict::analytic(
                MembershipStatus::InDomain,
                evidence,
                "finitely supported coordinates meet only finite fiber sums".into(),
            ));
        }
    }
    if let (Some(decay), Some(bound)) = (f.geometric_decay(), s.fiber_sum_bound()) {
        if bound.ratio * bound.ratio * decay.ratio * decay.ratio < 1.0 {
            return Ok(MembershipVerdict::analytic(
                MembershipStatus::InDomain,
                evidence,
                "geometric fiber bound certifies Σ s_n²·|⟨f,e_n⟩|² < ∞".into(),
            ));
        }
    }

    let increments: Vec<f64> = snapshots
        .windows(2)
        .map(|w| map_distance(&w[1].1, &w[0].1))
        .collect();
    let status = assess(&evidence, &increments, &ProbeSettings::default());
    Ok(MembershipVerdict::numeric(status, evidence))
}

/// `c ∈ dom(D)`: does `Σ c_k ψ_k` converge in sequence order?
pub fn dom_d_membership(
    s: &StructuredSequence,
    c: &CoefficientSequence,
    levels: &[u64],
) -> Result<MembershipVerdict> {
    validate_levels(levels)?;
    let snapshots: Vec<(u64, BTreeMap<u64, Complex64>)> = levels
        .iter()
        .map(|&n| (n, partial_synthesis_sum(s, c, n)))
        .collect();
    let evidence: Vec<(u64, f64)> = snapshots
        .iter()
        .map(|(n, m)| (*n, map_norm(m)))
        .collect();

    if c.support().is_some() {
        return Ok(MembershipVerdict::analytic(
            MembershipStatus::InDomain,
            evidence,
            "finitely supported coefficients synthesize a finite sum".into(),
        ));
    }

    let increments: Vec<f64> = snapshots
        .windows(2)
        .map(|w| map_distance(&w[1].1, &w[0].1))
        .collect();
    let status = assess(&evidence, &increments, &ProbeSettings::default());
    Ok(MembershipVerdict::numeric(status, evidence))
}

/// `c ∈ dom(G)`: do all row sums converge and form an `ℓ²` sequence?
pub fn dom_g_membership(
    s: &StructuredSequence,
    c: &CoefficientSequence,
    levels: &[u64],
) -> Result<MembershipVerdict> {
    validate_levels(levels)?;
    let snapshots: Vec<(u64, BTreeMap<u64, Complex64>)> = levels
        .iter()
        .map(|&n| (n, partial_gram_rows(s, c, n)))
        .collect();
    let evidence: Vec<(u64, f64)> = snapshots
        .iter()
        .map(|(n, m)| (*n, map_norm(m)))
        .collect();

    if c.is_zero() {
        return Ok(MembershipVerdict::analytic(
            MembershipStatus::InDomain,
            evidence,
            "the zero sequence belongs to every domain".into(),
        ));
    }
    if let Some(support) = c.support() {
        // Exact fiber sums t_n over the support; the row-sum sequence has
        // ℓ²-norm² equal to Σ_n s_n |t_n|².
        let mut fibers: BTreeMap<u64, Complex64> = BTreeMap::new();
        for &(l, value) in support {
            let (n, w) = s.term(l);
            *fibers.entry(n).or_insert(Complex64::new(0.0, 0.0)) += safe_mul(w, value);
        }
        for (&n, &t) in &fibers {
            if t != Complex64::new(0.0, 0.0) && s.fiber_sum(n).is_infinite() {
                return Ok(MembershipVerdict::analytic(
                    MembershipStatus::NotInDomain,
                    evidence,
                    format!("the row sums over fiber n = {n} do not form an ℓ² sequence"),
                ));
            }
        }
        let norm_sq: f64 = fibers
            .iter()
            .map(|(&n, &t)| match s.fiber_sum(n) {
                ExtReal::Finite(sn) => sn * t.norm_sqr(),
                ExtReal::Infinite => 0.0, // unreachable: t = 0 on infinite fibers here
            })
            .sum();
        return Ok(MembershipVerdict::analytic(
            MembershipStatus::InDomain,
            evidence,
            format!("finite support: the row-sum sequence has ℓ² norm² = {norm_sq:.6}"),
        ));
    }

    let increments: Vec<f64> = snapshots
        .windows(2)
        .map(|w| map_distance(&w[1].1, &w[0].1))
        .collect();
    let status = assess(&evidence, &increments, &ProbeSettings::default());
    Ok(MembershipVerdict::numeric(status, evidence))
}
