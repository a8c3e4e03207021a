//! Operator-based analysis of vector sequences.
//!
//! For a sequence of vectors `(ψ_k)` in a complex inner-product space, four
//! operators carry all the structural information: the analysis operator
//! `C : f ↦ (⟨f, ψ_k⟩)`, the synthesis operator `D : (c_k) ↦ Σ c_k ψ_k`, the
//! frame operator `S = DC`, and the Gram operator `G = CD`. This crate builds
//! these operators as concrete matrices for finite families, probes their
//! domains for a structured class of infinite sequences, and classifies
//! sequences into the standard taxonomy (Bessel, frame sequence, frame, Riesz
//! basis, lower frame sequence, Riesz–Fischer, complete) through four
//! independent operator-based routes.
//!
//! The crate is organized around six concerns:
//!
//! - [`linalg`] — dense complex-matrix kernel: one-sided Jacobi SVD,
//!   Hermitian eigendecomposition, pseudo-inverse, numerical rank, and
//!   orthonormal subspace bases. Deterministic, desk-scale.
//! - [`sequence`] — finite families, the structured class of weighted
//!   indexed orthonormal-basis sequences `ψ_k = w_k · e_{σ(k)}`, coefficient
//!   sequences, and a gallery of counterexample fixtures with pinned facts.
//! - [`operators`] — construction of `D`, `C`, `S`, `G` for finite families,
//!   identity and subspace-geometry checks, and domain-membership probing
//!   for structured sequences.
//! - [`classify`] — the four characterizations run independently, optimal
//!   bounds from extreme singular values, and the Gram-sections test for
//!   Riesz–Fischer sequences.
//! - [`transform`] — images of sequences under operators with predicted
//!   bound arithmetic, and the factorization of a family as the image of a
//!   canonical orthonormal basis.
//! - [`report`] — deterministic JSON rendering shared by the CLI.
//!
//! All values are immutable after construction and safe to share across
//! threads; no operation uses randomness or global state.

pub mod classify;
pub mod error;
pub mod ext_real;
pub mod linalg;
pub mod operators;
pub mod report;
pub mod sequence;
pub mod transform;

pub use error::{Error, Result};
pub use ext_real::ExtReal;
pub use linalg::{Matrix, Tolerance};
pub use num_complex::Complex64;
pub use sequence::{CoefficientSequence, FiniteSequence, StructuredSequence};
