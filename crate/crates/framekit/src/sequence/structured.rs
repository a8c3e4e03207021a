//! Structured infinite sequences of weighted indexed basis vectors.
//!
//! The structured class consists of sequences `ψ_k = w_k · e_{σ(k)}` against
//! a fixed reference orthonormal basis `(e_n)` of an infinite-dimensional
//! space: an index map `σ` and nonnegative weights `w`. The class is small
//! enough that domain questions reduce to fiber sums
//! `s_n = Σ_{σ(k)=n} w_k²`, yet rich enough to contain every counterexample
//! in the gallery.
//!
//! Analytic annotations (fiber sums, their sup/inf, injectivity and
//! surjectivity of `σ`) are part of each sequence's definition. They are not
//! derived symbolically; instead, prefix computations validate them for
//! consistency (see [`StructuredSequence::check_prefix_consistency`]).

use std::sync::Arc;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::ext_real::ExtReal;

use super::finite::FiniteSequence;

/// Annotation: `s_n ≤ scale · ratio^(n−1)` for every fiber sum. Present only
/// when all fiber sums are finite and such a bound exists; it lets the
/// domain-membership rules certify convergence of weighted sums against
/// geometrically decaying coordinates.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GeometricBound {
    pub scale: f64,
    pub ratio: f64,
}

/// Infinite sequence `ψ_k = w_k · e_{σ(k)}` given by a generator plus
/// analytic annotations.
#[derive(Clone)]
pub struct StructuredSequence {
    generator: Arc<dyn Fn(u64) -> (u64, f64) + Send + Sync>,
    fiber_sum: Arc<dyn Fn(u64) -> ExtReal + Send + Sync>,
    sup_fiber_sum: ExtReal,
    inf_fiber_sum_all: ExtReal,
    sigma_injective: bool,
    sigma_surjective: bool,
    inf_weight_sq: ExtReal,
    fiber_sum_bound: Option<GeometricBound>,
    sup_attained: bool,
    inf_attained: bool,
    inf_weight_attained: bool,
    label: String,
}

impl std::fmt::Debug for StructuredSequence {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("StructuredSequence")
            .field("label", &self.label)
            .field("sup_fiber_sum", &self.sup_fiber_sum)
            .field("inf_fiber_sum_all", &self.inf_fiber_sum_all)
            .field("sigma_injective", &self.sigma_injective)
            .field("sigma_surjective", &self.sigma_surjective)
            .field("inf_weight_sq", &self.inf_weight_sq)
            .finish()
    }
}

/// Builder-style constructor arguments for [`StructuredSequence`].
pub struct StructuredSequenceSpec {
    /// `k ↦ (σ(k), w_k)` with `k ≥ 1`, `σ(k) ≥ 1`, `w_k ≥ 0`.
    pub generator: Arc<dyn Fn(u64) -> (u64, f64) + Send + Sync>,
    /// `n ↦ s_n = Σ_{σ(k)=n} w_k²`, with `s_n = 0` off the range of `σ`.
    pub fiber_sum: Arc<dyn Fn(u64) -> ExtReal + Send + Sync>,
    pub sup_fiber_sum: ExtReal,
    pub inf_fiber_sum_all: ExtReal,
    /// `σ` injective on the indices with nonzero weight.
    pub sigma_injective: bool,
    /// Every basis direction hit by some index with nonzero weight.
    pub sigma_surjective: bool,
    pub inf_weight_sq: ExtReal,
    pub fiber_sum_bound: Option<GeometricBound>,
    pub sup_attained: bool,
    pub inf_attained: bool,
    pub inf_weight_attained: bool,
    pub label: String,
}

impl StructuredSequence {
    pub fn from_spec(spec: StructuredSequenceSpec) -> StructuredSequence {
        StructuredSequence {
            generator: spec.generator,
            fiber_sum: spec.fiber_sum,
            sup_fiber_sum: spec.sup_fiber_sum,
            inf_fiber_sum_all: spec.inf_fiber_sum_all,
            sigma_injective: spec.sigma_injective,
            sigma_surjective: spec.sigma_surjective,
            inf_weight_sq: spec.inf_weight_sq,
            fiber_sum_bound: spec.fiber_sum_bound,
            sup_attained: spec.sup_attained,
            inf_attained: spec.inf_attained,
            inf_weight_attained: spec.inf_weight_attained,
            label: spec.label,
        }
    }

    /// The reference basis itself: `σ(k) = k`, `w_k = 1`.
    pub fn canonical_onb() -> StructuredSequence {
        StructuredSequence::from_spec(StructuredSequenceSpec {
            generator: Arc::new(|k| (k, 1.0)),
            fiber_sum: Arc::new(|_| ExtReal::Finite(1.0)),
            sup_fiber_sum: ExtReal::Finite(1.0),
            inf_fiber_sum_all: ExtReal::Finite(1.0),
            sigma_injective: true,
            sigma_surjective: true,
            inf_weight_sq: ExtReal::Finite(1.0),
            fiber_sum_bound: Some(GeometricBound {
                scale: 1.0,
                ratio: 1.0,
            }),
            sup_attained: true,
            inf_attained: true,
            inf_weight_attained: true,
            label: "canonical ONB".into(),
        })
    }

    /// `(σ(k), w_k)` for 1-based `k`.
    pub fn term(&self, k: u64) -> (u64, f64) {
        assert!(k >= 1, "indices are 1-based");
        (self.generator)(k)
    }

    /// The annotated fiber sum `s_n`.
    pub fn fiber_sum(&self, n: u64) -> ExtReal {
        assert!(n >= 1, "basis directions are 1-based");
        (self.fiber_sum)(n)
    }

    /// Prefix fiber sum `Σ_{k≤N, σ(k)=n} w_k²` computed from the generator.
    pub fn prefix_fiber_sum(&self, n: u64, upto: u64) -> f64 {
        (1..=upto)
            .map(|k| self.term(k))
            .filter(|&(sigma, _)| sigma == n)
            .map(|(_, w)| w * w)
            .sum()
    }

    pub fn sup_fiber_sum(&self) -> ExtReal {
        self.sup_fiber_sum
    }

    pub fn inf_fiber_sum_all(&self) -> ExtReal {
        self.inf_fiber_sum_all
    }

    pub fn sigma_injective(&self) -> bool {
        self.sigma_injective
    }

    pub fn sigma_surjective(&self) -> bool {
        self.sigma_surjective
    }

    pub fn inf_weight_sq(&self) -> ExtReal {
        self.inf_weight_sq
    }

    pub fn fiber_sum_bound(&self) -> Option<GeometricBound> {
        self.fiber_sum_bound
    }

    pub fn sup_attained(&self) -> bool {
        self.sup_attained
    }

    pub fn inf_attained(&self) -> bool {
        self.inf_attained
    }

    pub fn inf_weight_attained(&self) -> bool {
        self.inf_weight_attained
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    /// First `N` vectors embedded in `C^{d(N)}` with
    /// `d(N) = max_{k≤N} σ(k)`: the smallest space containing every touched
    /// basis direction.
    pub fn truncate(&self, n: u64) -> Result<FiniteSequence> {
        if n == 0 {
            return Err(Error::InvalidInput("truncation length must be ≥ 1".into()));
        }
        let terms: Vec<(u64, f64)> = (1..=n).map(|k| self.term(k)).collect();
        let dim = terms.iter().map(|&(sigma, _)| sigma).max().unwrap() as usize;
        let mut vectors = Vec::with_capacity(n as usize);
        for &(sigma, w) in &terms {
            let mut v = vec![Complex64::new(0.0, 0.0); dim];
            v[(sigma - 1) as usize] = Complex64::new(w, 0.0);
            vectors.push(v);
        }
        FiniteSequence::new(dim, vectors, Some(format!("{} [1..{n}]", self.label)))
    }

    /// Validates the annotations against prefix computations: prefix fiber
    /// sums must increase monotonically toward (and never exceed) `s_n`, and
    /// their sup must stay at or below `sup_fiber_sum`. Returns the first
    /// violation as an error.
    pub fn check_prefix_consistency(&self, levels: &[u64]) -> Result<()> {
        let max_level = levels.iter().copied().max().unwrap_or(0);
        let directions: Vec<u64> = {
            let mut seen: Vec<u64> = (1..=max_level)
                .map(|k| self.term(k).0)
                .collect();
            seen.sort_unstable();
            seen.dedup();
            seen
        };
        for &n in &directions {
            let mut previous = 0.0;
            for &level in levels {
                let prefix = self.prefix_fiber_sum(n, level);
                if prefix + 1e-12 < previous {
                    return Err(Error::InvalidInput(format!(
                        "{}: prefix fiber sum at n={n} decreased from {previous} to {prefix}",
                        self.label
                    )));
                }
                previous = prefix;
                match self.fiber_sum(n) {
                    ExtReal::Finite(s) => {
                        if prefix > s + 1e-9 * s.max(1.0) {
                            return Err(Error::InvalidInput(format!(
                                "{}: prefix fiber sum {prefix} at n={n}, N={level} exceeds s_n={s}",
                                self.label
                            )));
                        }
                    }
                    ExtReal::Infinite => {}
                }
                if let ExtReal::Finite(sup) = self.sup_fiber_sum {
                    if prefix > sup + 1e-9 * sup.max(1.0) {
                        return Err(Error::InvalidInput(format!(
                            "{}: prefix fiber sum {prefix} at n={n} exceeds sup {sup}",
                            self.label
                        )));
                    }
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_onb_truncates_to_identity_family() {
        let onb = StructuredSequence::canonical_onb();
        let fin = onb.truncate(3).unwrap();
        assert_eq!(fin.dimension(), 3);
        assert_eq!(fin.len(), 3);
        assert_eq!(fin.vector(1)[1].re, 1.0);
        assert_eq!(fin.vector(1)[0].re, 0.0);
    }

    #[test]
    fn truncation_needs_positive_length() {
        assert!(StructuredSequence::canonical_onb().truncate(0).is_err());
    }

    #[test]
    fn prefix_consistency_of_canonical_onb() {
        let onb = StructuredSequence::canonical_onb();
        onb.check_prefix_consistency(&[16, 64, 256]).unwrap();
        assert_eq!(onb.prefix_fiber_sum(5, 4), 0.0);
        assert_eq!(onb.prefix_fiber_sum(5, 16), 1.0);
    }
}
