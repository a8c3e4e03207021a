pub mod coeff;
pub mod finite;
pub mod gallery;
pub mod structured;

pub use coeff::{CoefficientSequence, CoeffKind, GeometricDecay};
pub use finite::{parse_finite, FiniteSequence};
pub use gallery::{fixture, gallery, ExpectedFact, Fixture};
pub use structured::{GeometricBound, StructuredSequence, StructuredSequenceSpec};
