//! Finite vector families and their JSON wire format.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::report;

/// An ordered family of `n ≥ 1` vectors in `C^d`. The vectors become the
/// columns of the synthesis matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct FiniteSequence {
    dimension: usize,
    vectors: Vec<Vec<Complex64>>,
    label: Option<String>,
}

impl FiniteSequence {
    pub fn new(
        dimension: usize,
        vectors: Vec<Vec<Complex64>>,
        label: Option<String>,
    ) -> Result<FiniteSequence> {
        if dimension == 0 {
            return Err(Error::Schema("dimension must be positive".into()));
        }
        if vectors.is_empty() {
            return Err(Error::Schema("a sequence needs at least one vector".into()));
        }
        for (k, v) in vectors.iter().enumerate() {
            if v.len() != dimension {
                return Err(Error::Schema(format!(
                    "vector {k} has length {}, expected {dimension}",
                    v.len()
                )));
            }
            if v.iter().any(|z| !z.re.is_finite() || !z.im.is_finite()) {
                return Err(Error::Schema(format!("vector {k} has a non-finite entry")));
            }
        }
        Ok(FiniteSequence {
            dimension,
            vectors,
            label,
        })
    }

    /// The canonical orthonormal basis `(δ_1, …, δ_d)` of `C^d`.
    pub fn canonical_onb(dimension: usize) -> FiniteSequence {
        let mut vectors = Vec::with_capacity(dimension);
        for k in 0..dimension {
            let mut v = vec![Complex64::new(0.0, 0.0); dimension];
            v[k] = Complex64::new(1.0, 0.0);
            vectors.push(v);
        }
        FiniteSequence::new(
            dimension,
            vectors,
            Some(format!("canonical ONB of C^{dimension}")),
        )
        .expect("canonical basis is valid")
    }

    /// Builds a family from real vector entries, one slice per vector.
    pub fn from_real(dimension: usize, vectors: &[&[f64]]) -> Result<FiniteSequence> {
        let converted = vectors
            .iter()
            .map(|v| v.iter().map(|&x| Complex64::new(x, 0.0)).collect())
            .collect();
        FiniteSequence::new(dimension, converted, None)
    }

    pub fn dimension(&self) -> usize {
        self.dimension
    }

    pub fn len(&self) -> usize {
        self.vectors.len()
    }

    /// Always false: a sequence holds at least one vector by construction.
    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn vectors(&self) -> &[Vec<Complex64>] {
        &self.vectors
    }

    pub fn vector(&self, k: usize) -> &[Complex64] {
        &self.vectors[k]
    }

    pub fn label(&self) -> Option<&str> {
        self.label.as_deref()
    }

    pub fn with_label(mut self, label: impl Into<String>) -> FiniteSequence {
        self.label = Some(label.into());
        self
    }

    /// The `d x n` synthesis matrix whose columns are the family vectors.
    pub fn synthesis_matrix(&self) -> Matrix {
        Matrix::from_columns(self.dimension, &self.vectors)
            .expect("vectors validated at construction")
    }

    /// Canonical JSON form; this serializer is the round-trip oracle for
    /// [`parse_finite`].
    pub fn to_json(&self) -> String {
        report::to_json_string(&FiniteSequenceJson::from(self))
    }
}

/// Wire format: `{"dimension": d, "vectors": [[[re,im], ...], ...], "label": ...}`.
/// Complex numbers are always two-element `[re, im]` arrays, never strings.
#[derive(Debug, Serialize, Deserialize)]
struct FiniteSequenceJson {
    dimension: usize,
    vectors: Vec<Vec<Vec<f64>>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    label: Option<String>,
}

impl From<&FiniteSequence> for FiniteSequenceJson {
    fn from(seq: &FiniteSequence) -> FiniteSequenceJson {
        FiniteSequenceJson {
            dimension: seq.dimension,
            vectors: seq
                .vectors
                .iter()
                .map(|v| v.iter().map(|z| vec![z.re, z.im]).collect())
                .collect(),
            label: seq.label.clone(),
        }
    }
}

/// Parses and validates the JSON wire format. Malformed JSON maps to
/// [`Error::Parse`]; structurally valid JSON with bad values (wrong vector
/// length, non-finite entries, zero dimension) maps to [`Error::Schema`].
pub fn parse_finite(bytes: &[u8]) -> Result<FiniteSequence> {
    let raw: FiniteSequenceJson =
        serde_json::from_slice(bytes).map_err(|e| Error::Parse(e.to_string()))?;
    let mut vectors = Vec::with_capacity(raw.vectors.len());
    for (k, v) in raw.vectors.iter().enumerate() {
        let mut vec = Vec::with_capacity(v.len());
        for pair in v {
            if pair.len() != 2 {
                return Err(Error::Schema(format!(
                    "vector {k}: complex entries are [re, im] pairs, got {} components",
                    pair.len()
                )));
            }
            vec.push(Complex64::new(pair[0], pair[1]));
        }
        vectors.push(vec);
    }
    FiniteSequence::new(raw.dimension, vectors, raw.label)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_canonical_basis() {
        let json = br#"{"dimension":2,"vectors":[[[1,0],[0,0]],[[0,0],[1,0]]]}"#;
        let seq = parse_finite(json).unwrap();
        let onb = FiniteSequence::canonical_onb(2);
        assert_eq!(seq.dimension(), onb.dimension());
        assert_eq!(seq.vectors(), onb.vectors());
    }

    #[test]
    fn rejects_vector_length_mismatch() {
        let json = br#"{"dimension":2,"vectors":[[[1,0],[0,0],[0,0]]]}"#;
        assert!(matches!(parse_finite(json), Err(Error::Schema(_))));
    }

    #[test]
    fn rejects_malformed_json() {
        assert!(matches!(parse_finite(b"{"), Err(Error::Parse(_))));
        assert!(matches!(
            parse_finite(br#"{"dimension":"two","vectors":[]}"#),
            Err(Error::Parse(_))
        ));
    }

    #[test]
    fn rejects_empty_family_and_zero_dimension() {
        assert!(matches!(
            parse_finite(br#"{"dimension":2,"vectors":[]}"#),
            Err(Error::Schema(_))
        ));
        assert!(matches!(
            parse_finite(br#"{"dimension":0,"vectors":[[]]}"#),
            Err(Error::Schema(_))
        ));
    }

    #[test]
    fn rejects_triple_component_entry() {
        let json = br#"{"dimension":1,"vectors":[[[1,0,5]]]}"#;
        assert!(matches!(parse_finite(json), Err(Error::Schema(_))));
    }

    #[test]
    fn canonical_serialization_round_trips() {
        let seq = FiniteSequence::new(
            2,
            vec![
                vec![Complex64::new(0.5, -1.5), Complex64::new(0.0, 0.25)],
                vec![Complex64::new(2.0, 0.0), Complex64::new(-3.0, 1.0)],
            ],
            Some("sample".into()),
        )
        .unwrap();
        let json = seq.to_json();
        let back = parse_finite(json.as_bytes()).unwrap();
        assert_eq!(seq, back);
        assert_eq!(json, back.to_json());
    }

    #[test]
    fn synthesis_matrix_columns_are_vectors() {
        let seq = FiniteSequence::from_real(2, &[&[1.0, 0.0], &[1.0, 0.0], &[0.0, 1.0]]).unwrap();
        let d = seq.synthesis_matrix();
        assert_eq!((d.rows(), d.cols()), (2, 3));
        assert_eq!(d[(0, 1)].re, 1.0);
        assert_eq!(d[(1, 2)].re, 1.0);
    }
}
