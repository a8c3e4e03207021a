//! Coefficient sequences.
//!
//! A `CoefficientSequence` plays two roles: the coordinates `(⟨f, e_n⟩)` of a
//! vector `f` against the reference orthonormal basis (for analysis- and
//! frame-operator domains), and an `ℓ²` coefficient family `(c_k)` (for
//! synthesis- and Gram-operator domains). Indices are 1-based throughout.

use std::sync::Arc;

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Shape of a coefficient sequence.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CoeffKind {
    FinitelySupported,
    ClosedForm,
}

/// Annotation for closed-form sequences with geometric decay:
/// `|value(k)| ≤ scale · ratio^(k−1)` for every `k`, with `ratio < 1`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GeometricDecay {
    pub scale: f64,
    pub ratio: f64,
}

#[derive(Clone)]
enum Inner {
    /// Entries `(index, value)` sorted by index; indices unique, values nonzero.
    Finite(Vec<(u64, Complex64)>),
    ClosedForm {
        values: Arc<dyn Fn(u64) -> Complex64 + Send + Sync>,
        decay: Option<GeometricDecay>,
    },
}

#[derive(Clone)]
pub struct CoefficientSequence {
    inner: Inner,
    label: String,
}

impl std::fmt::Debug for CoefficientSequence {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("CoefficientSequence")
            .field("label", &self.label)
            .field("kind", &self.kind())
            .finish()
    }
}

impl CoefficientSequence {
    /// Finitely supported sequence from sparse `(index, value)` entries.
    /// Zero values are dropped; duplicate indices are rejected.
    pub fn finitely_supported(
        entries: Vec<(u64, Complex64)>,
        label: impl Into<String>,
    ) -> Result<CoefficientSequence> {
        let mut cleaned: Vec<(u64, Complex64)> = Vec::with_capacity(entries.len());
        for (k, z) in entries {
            if k == 0 {
                return Err(Error::InvalidInput("indices are 1-based".into()));
            }
            if !z.re.is_finite() || !z.im.is_finite() {
                return Err(Error::InvalidInput(format!("entry {k} is not finite")));
            }
            if z.re != 0.0 || z.im != 0.0 {
                cleaned.push((k, z));
            }
        }
        cleaned.sort_by_key(|&(k, _)| k);
        if cleaned.windows(2).any(|w| w[0].0 == w[1].0) {
            return Err(Error::InvalidInput("duplicate index".into()));
        }
        Ok(CoefficientSequence {
            inner: Inner::Finite(cleaned),
            label: label.into(),
        })
    }

    /// The canonical coordinate vector `δ_k`.
    pub fn delta(k: u64) -> CoefficientSequence {
        CoefficientSequence::finitely_supported(
            vec![(k, Complex64::new(1.0, 0.0))],
            format!("delta{k}"),
        )
        .expect("delta is valid")
    }

    /// The zero sequence.
    pub fn zeros() -> CoefficientSequence {
        CoefficientSequence {
            inner: Inner::Finite(Vec::new()),
            label: "zeros".into(),
        }
    }

    /// Geometric coordinates `value(k) = ratio^(k−1)` with `0 < ratio < 1`.
    pub fn geometric(ratio: f64) -> Result<CoefficientSequence> {
        if !(ratio > 0.0 && ratio < 1.0) {
            return Err(Error::InvalidInput(format!(
                "geometric ratio must be in (0, 1), got {ratio}"
            )));
        }
        Ok(CoefficientSequence {
            inner: Inner::ClosedForm {
                values: Arc::new(move |k| Complex64::new(ratio.powi((k - 1) as i32), 0.0)),
                decay: Some(GeometricDecay { scale: 1.0, ratio }),
            },
            label: format!("geometric({ratio})"),
        })
    }

    /// Alternating harmonic coefficients `c_k = (−1)^(k+1) / k`.
    pub fn harmonic_alternating() -> CoefficientSequence {
        CoefficientSequence {
            inner: Inner::ClosedForm {
                values: Arc::new(|k| {
                    let sign = if k % 2 == 1 { 1.0 } else { -1.0 };
                    Complex64::new(sign / k as f64, 0.0)
                }),
                decay: None,
            },
            label: "harmonic-alt".into(),
        }
    }

    /// Harmonic coefficients `c_k = 1/k` — the alternating sequence with all
    /// signs flipped positive.
    pub fn harmonic() -> CoefficientSequence {
        CoefficientSequence {
            inner: Inner::ClosedForm {
                values: Arc::new(|k| Complex64::new(1.0 / k as f64, 0.0)),
                decay: None,
            },
            label: "harmonic".into(),
        }
    }

    /// General closed form with an optional geometric decay annotation.
    pub fn closed_form(
        values: Arc<dyn Fn(u64) -> Complex64 + Send + Sync>,
        decay: Option<GeometricDecay>,
        label: impl Into<String>,
    ) -> CoefficientSequence {
        CoefficientSequence {
            inner: Inner::ClosedForm { values, decay },
            label: label.into(),
        }
    }

    pub fn kind(&self) -> CoeffKind {
        match &self.inner {
            Inner::Finite(_) => CoeffKind::FinitelySupported,
            Inner::ClosedForm { .. } => CoeffKind::ClosedForm,
        }
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    /// The value at 1-based index `k`.
    pub fn value(&self, k: u64) -> Complex64 {
        assert!(k >= 1, "indices are 1-based");
        match &self.inner {
            Inner::Finite(entries) => entries
                .binary_search_by_key(&k, |&(i, _)| i)
                .map(|pos| entries[pos].1)
                .unwrap_or(Complex64::new(0.0, 0.0)),
            Inner::ClosedForm { values, .. } => values(k),
        }
    }

    /// Sparse support, available exactly for finitely supported sequences.
    pub fn support(&self) -> Option<&[(u64, Complex64)]> {
        match &self.inner {
            Inner::Finite(entries) => Some(entries),
            Inner::ClosedForm { .. } => None,
        }
    }

    /// Largest supported index for finitely supported sequences.
    pub fn support_bound(&self) -> Option<u64> {
        self.support()
            .map(|entries| entries.last().map(|&(k, _)| k).unwrap_or(0))
    }

    pub fn geometric_decay(&self) -> Option<GeometricDecay> {
        match &self.inner {
            Inner::Finite(_) => None,
            Inner::ClosedForm { decay, .. } => *decay,
        }
    }

    pub fn is_zero(&self) -> bool {
        matches!(&self.inner, Inner::Finite(entries) if entries.is_empty())
    }

    /// Parses the sparse JSON form `{"label": ..., "entries": [[k, re, im], ...]}`.
    pub fn from_json(bytes: &[u8]) -> Result<CoefficientSequence> {
        #[derive(serde::Deserialize)]
        struct Raw {
            #[serde(default)]
            label: Option<String>,
            entries: Vec<Vec<f64>>,
        }
        let raw: Raw = serde_json::from_slice(bytes).map_err(|e| Error::Parse(e.to_string()))?;
        let mut entries = Vec::with_capacity(raw.entries.len());
        for row in &raw.entries {
            if row.len() != 3 {
                return Err(Error::Schema(
                    "coefficient entries are [index, re, im] triples".into(),
                ));
            }
            if row[0].fract() != 0.0 || row[0] < 1.0 {
                return Err(Error::Schema(format!("bad coefficient index {}", row[0])));
            }
            entries.push((row[0] as u64, Complex64::new(row[1], row[2])));
        }
        CoefficientSequence::finitely_supported(
            entries,
            raw.label.unwrap_or_else(|| "custom".into()),
        )
        .map_err(|e| Error::Schema(e.to_string()))
    }
}
