//! The fixture gallery: seven structured sequences with pinned ground truth.
//!
//! Each fixture is a weighted indexed basis sequence together with the facts
//! the toolkit must reproduce — domain membership of specific vectors,
//! class verdicts, Gram-matrix properties. The facts are the test oracle for
//! the operator and classifier modules, and the CLI surfaces them as anchors
//! on probe verdicts.

use std::sync::Arc;

use crate::ext_real::ExtReal;

use super::structured::{GeometricBound, StructuredSequence, StructuredSequenceSpec};

/// A checkable pinned fact: which operation, what outcome, and the
/// mathematical statement backing it.
#[derive(Debug, Clone)]
pub struct ExpectedFact {
    /// Machine id, `"<operation>.<probe>"`, e.g. `"dom_g.delta1"`.
    pub id: String,
    /// Rendered expected value, e.g. `"NotInDomain"`, `"A=1"`, `"inf"`.
    pub value: String,
    /// The statement of the fact in mathematical terms.
    pub anchor: String,
}

impl ExpectedFact {
    fn new(id: &str, value: &str, anchor: &str) -> ExpectedFact {
        ExpectedFact {
            id: id.into(),
            value: value.into(),
            anchor: anchor.into(),
        }
    }
}

/// A gallery entry: the sequence plus its pinned facts.
#[derive(Debug, Clone)]
pub struct Fixture {
    pub id: String,
    pub sequence: StructuredSequence,
    pub expected: Vec<ExpectedFact>,
}

impl Fixture {
    /// Looks up a pinned fact by operation name and probe label, as used by
    /// the CLI to attach anchors to matching probe verdicts.
    pub fn find_fact(&self, operation: &str, probe_label: &str) -> Option<&ExpectedFact> {
        let key = format!("{operation}.{probe_label}");
        self.expected.iter().find(|f| f.id == key)
    }
}

/// Triangular number `b(b+1)/2`.
fn triangle(b: u64) -> u64 {
    b * (b + 1) / 2
}

/// Block index of position `k` in the blocked layout (e1 | e1 e2 | e1 e2 e3 | …).
fn block_of(k: u64) -> u64 {
    let mut b = (((8.0 * k as f64 + 1.0).sqrt() - 1.0) / 2.0).ceil() as u64;
    while b > 1 && triangle(b - 1) >= k {
        b -= 1;
    }
    while triangle(b) < k {
        b += 1;
    }
    b
}

fn fixture_r1() -> Fixture {
    let sequence = StructuredSequence::from_spec(StructuredSequenceSpec {
        generator: Arc::new(|k| {
            let b = block_of(k);
            let j = k - triangle(b - 1);
            (j, 1.0)
        }),
        fiber_sum: Arc::new(|_| ExtReal::Infinite),
        sup_fiber_sum: ExtReal::Infinite,
        inf_fiber_sum_all: ExtReal::Infinite,
        sigma_injective: false,
        sigma_surjective: true,
        inf_weight_sq: ExtReal::Finite(1.0),
        fiber_sum_bound: None,
        sup_attained: false,
        inf_attained: false,
        inf_weight_attained: true,
        label: "repeating initial segments (e1, e1, e2, e1, e2, e3, ...)".into(),
    });
    Fixture {
        id: "R1".into(),
        sequence,
        expected: vec![
            ExpectedFact::new(
                "dom_c.any_nonzero_finite",
                "NotInDomain",
                "dom(C) = {0}",
            ),
            ExpectedFact::new(
                "class.Bessel",
                "false",
                "not a Bessel sequence: truncated Bessel bounds grow without bound",
            ),
            ExpectedFact::new(
                "fiber_sum.all",
                "inf",
                "every basis direction recurs infinitely often with unit weight",
            ),
        ],
    }
}

fn fixture_r2() -> Fixture {
    // Odd positions carry weight 2^(−j) on e1, even positions weight 2^j on
    // e_{j+1}. The pairing of small weights with e1 and large weights with
    // fresh directions follows the displayed pattern (1/2·e1, 2·e2, 1/4·e1,
    // 4·e3, ...); see the notes in the guide for this reading.
    let sequence = StructuredSequence::from_spec(StructuredSequenceSpec {
        generator: Arc::new(|k| {
            if k % 2 == 1 {
                let j = ((k + 1) / 2) as i32;
                (1, 0.5f64.powi(j))
            } else {
                let j = (k / 2) as i32;
                (k / 2 + 1, 2.0f64.powi(j))
            }
        }),
        fiber_sum: Arc::new(|n| {
            if n == 1 {
                // Σ_j 4^(−j) = 1/3
                ExtReal::Finite(1.0 / 3.0)
            } else {
                ExtReal::finite(4.0f64.powi(n as i32 - 1))
            }
        }),
        sup_fiber_sum: ExtReal::Infinite,
        inf_fiber_sum_all: ExtReal::Finite(1.0 / 3.0),
        sigma_injective: false,
        sigma_surjective: true,
        inf_weight_sq: ExtReal::Finite(0.0),
        fiber_sum_bound: Some(GeometricBound {
            scale: 1.0,
            ratio: 4.0,
        }),
        sup_attained: false,
        inf_attained: true,
        inf_weight_attained: false,
        label: "interleaved geometric weights (e1/2, 2e2, e1/4, 4e3, ...)".into(),
    });
    Fixture {
        id: "R2".into(),
        sequence,
        expected: vec![
            ExpectedFact::new(
                "dom_c.geometric(0.25)",
                "InDomain",
                "h with coordinates 4^(1−n) belongs to dom(C)",
            ),
            ExpectedFact::new(
                "dom_s.geometric(0.25)",
                "NumericEvidenceDiverges",
                "h does not belong to dom(S): every even-position term has unit norm",
            ),
        ],
    }
}

fn fixture_r3() -> Fixture {
    let sequence = StructuredSequence::from_spec(StructuredSequenceSpec {
        generator: Arc::new(|k| if k % 2 == 1 { (1, 1.0) } else { (k / 2 + 1, 1.0) }),
        fiber_sum: Arc::new(|n| {
            if n == 1 {
                ExtReal::Infinite
            } else {
                ExtReal::Finite(1.0)
            }
        }),
        sup_fiber_sum: ExtReal::Infinite,
        inf_fiber_sum_all: ExtReal::Finite(1.0),
        sigma_injective: false,
        sigma_surjective: true,
        inf_weight_sq: ExtReal::Finite(1.0),
        fiber_sum_bound: None,
        sup_attained: false,
        inf_attained: true,
        inf_weight_attained: true,
        label: "e1 interleaved with fresh directions (e1, e2, e1, e3, ...)".into(),
    });
    Fixture {
        id: "R3".into(),
        sequence,
        expected: vec![
            ExpectedFact::new("dom_d.delta1", "InDomain", "δ1 ∈ dom(D)"),
            ExpectedFact::new("dom_g.delta1", "NotInDomain", "δ1 ∉ dom(G)"),
        ],
    }
}

fn fixture_r4() -> Fixture {
    let sequence = StructuredSequence::from_spec(StructuredSequenceSpec {
        generator: Arc::new(|_| (1, 1.0)),
        fiber_sum: Arc::new(|n| {
            if n == 1 {
                ExtReal::Infinite
            } else {
                ExtReal::Finite(0.0)
            }
        }),
        sup_fiber_sum: ExtReal::Infinite,
        inf_fiber_sum_all: ExtReal::Finite(0.0),
        sigma_injective: false,
        sigma_surjective: false,
        inf_weight_sq: ExtReal::Finite(1.0),
        fiber_sum_bound: None,
        sup_attained: false,
        inf_attained: true,
        inf_weight_attained: true,
        label: "constant repetition (e1, e1, e1, ...)".into(),
    });
    Fixture {
        id: "R4".into(),
        sequence,
        expected: vec![
            ExpectedFact::new(
                "dom_d.harmonic-alt",
                "NumericEvidenceConverges",
                "Σ c_k ψ_k = (ln 2)·e1 for c = (1, −1/2, 1/3, −1/4, ...)",
            ),
            ExpectedFact::new(
                "dom_d.harmonic",
                "NumericEvidenceDiverges",
                "with the signs flipped, Σ (1/k)·e1 diverges like the harmonic series",
            ),
            ExpectedFact::new("class.Bessel", "false", "the fiber sum at e1 is infinite"),
            ExpectedFact::new("class.Complete", "false", "only e1 is ever hit"),
            ExpectedFact::new("class.RieszFischer", "false", "repetition kills injectivity"),
        ],
    }
}

fn fixture_r5() -> Fixture {
    let sequence = StructuredSequence::from_spec(StructuredSequenceSpec {
        generator: Arc::new(|k| (k, k as f64)),
        fiber_sum: Arc::new(|n| ExtReal::finite((n as f64) * (n as f64))),
        sup_fiber_sum: ExtReal::Infinite,
        inf_fiber_sum_all: ExtReal::Finite(1.0),
        sigma_injective: true,
        sigma_surjective: true,
        inf_weight_sq: ExtReal::Finite(1.0),
        // n² ≤ 4 · 2^(n−1)
        fiber_sum_bound: Some(GeometricBound {
            scale: 4.0,
            ratio: 2.0,
        }),
        sup_attained: false,
        inf_attained: true,
        inf_weight_attained: true,
        label: "linearly growing weights (e1, 2e2, 3e3, ...)".into(),
    });
    Fixture {
        id: "R5".into(),
        sequence,
        expected: vec![
            ExpectedFact::new(
                "gram.row_square_sums_finite",
                "true",
                "Σ_l |⟨ψ_l, ψ_k⟩|² = k⁴ < ∞ for every k",
            ),
            ExpectedFact::new("class.Bessel", "false", "fiber sums n² are unbounded"),
            ExpectedFact::new(
                "class.LowerFrameSequence",
                "A=1",
                "fiber sums n² have infimum 1, attained at n = 1",
            ),
            ExpectedFact::new("class.Complete", "true", "every basis direction is hit"),
            ExpectedFact::new(
                "class.RieszFischer",
                "A=1",
                "σ injective with weights bounded below by 1",
            ),
            ExpectedFact::new("dom_g.delta1", "InDomain", "the δ1 row sums form an ℓ² sequence"),
        ],
    }
}

fn fixture_r6() -> Fixture {
    let sequence = StructuredSequence::from_spec(StructuredSequenceSpec {
        generator: Arc::new(|k| (k, 1.0 / k as f64)),
        fiber_sum: Arc::new(|n| ExtReal::finite(1.0 / ((n as f64) * (n as f64)))),
        sup_fiber_sum: ExtReal::Finite(1.0),
        inf_fiber_sum_all: ExtReal::Finite(0.0),
        sigma_injective: true,
        sigma_surjective: true,
        inf_weight_sq: ExtReal::Finite(0.0),
        fiber_sum_bound: Some(GeometricBound {
            scale: 1.0,
            ratio: 1.0,
        }),
        sup_attained: true,
        inf_attained: false,
        inf_weight_attained: false,
        label: "harmonically shrinking weights (e1, e2/2, e3/3, ...)".into(),
    });
    Fixture {
        id: "R6".into(),
        sequence,
        expected: vec![
            ExpectedFact::new(
                "gram.hilbert_schmidt",
                "true",
                "ΣΣ |⟨ψ_l, ψ_k⟩|² = Σ n⁻⁴ < ∞: the Gram operator is Hilbert–Schmidt",
            ),
            ExpectedFact::new(
                "class.Bessel",
                "B=1",
                "sup of the fiber sums 1/n² is 1, attained at n = 1",
            ),
            ExpectedFact::new(
                "class.LowerFrameSequence",
                "false",
                "fiber sums 1/n² tend to zero",
            ),
            ExpectedFact::new("class.Complete", "true", "every basis direction is hit"),
            ExpectedFact::new("sup_fiber_sum", "1", "weights 1/k on disjoint fibers, maximal at k = 1"),
        ],
    }
}

fn fixture_r7() -> Fixture {
    let sequence = StructuredSequence::from_spec(StructuredSequenceSpec {
        generator: Arc::new(|k| (k + 1, 1.0)),
        fiber_sum: Arc::new(|n| {
            if n == 1 {
                ExtReal::Finite(0.0)
            } else {
                ExtReal::Finite(1.0)
            }
        }),
        sup_fiber_sum: ExtReal::Finite(1.0),
        inf_fiber_sum_all: ExtReal::Finite(0.0),
        sigma_injective: true,
        sigma_surjective: false,
        inf_weight_sq: ExtReal::Finite(1.0),
        fiber_sum_bound: Some(GeometricBound {
            scale: 1.0,
            ratio: 1.0,
        }),
        sup_attained: true,
        inf_attained: true,
        inf_weight_attained: true,
        label: "shifted basis (e2, e3, e4, ...)".into(),
    });
    Fixture {
        id: "R7".into(),
        sequence,
        expected: vec![
            ExpectedFact::new(
                "gram.equals_canonical_onb_gram",
                "true",
                "the Gram matrix coincides with that of the reference basis",
            ),
            ExpectedFact::new(
                "class.Complete",
                "false",
                "e1 is orthogonal to every element",
            ),
            ExpectedFact::new(
                "class.RieszFischer",
                "A=1",
                "an orthonormal system is a Riesz–Fischer sequence with bound 1",
            ),
        ],
    }
}

/// The seven fixtures, in id order.
pub fn gallery() -> Vec<Fixture> {
    vec![
        fixture_r1(),
        fixture_r2(),
        fixture_r3(),
        fixture_r4(),
        fixture_r5(),
        fixture_r6(),
        fixture_r7(),
    ]
}

/// Looks up a fixture by its id (`"R1"` … `"R7"`).
pub fn fixture(id: &str) -> Option<Fixture> {
    gallery().into_iter().find(|f| f.id == id)
}
