//! Exact construction and verification of extensions of valuation rings.
//!
//! Valuations are written additively throughout: the multiplicative
//! absolute value `|z|` of the literature corresponds to `v(z)` with
//! `|z| ≤ 1 ⟺ v(z) ≥ 0`. See [`value_group`] for the full dictionary.

pub mod compositum;
pub mod error;
pub mod extension;
pub mod field;
pub mod norms;
pub mod poly;
pub mod sample;
pub mod valuation;
pub mod value_group;

pub use compositum::{tensor_decompose, tensor_decompose_over, CompositumPoint};
pub use error::{Error, Result};
pub use extension::{build, build_general, build_strictly_maximal, BuiltExtension, ExtensionScenario};
pub use field::{Elem, Field, FieldHom, Step, StepKind};
pub use norms::{FreeAlgebra, FreeModule, GaussValuation};
pub use poly::{MPoly, UPoly};
pub use sample::Sampler;
pub use valuation::MonomialValuation;
pub use value_group::{GroupElem, Value, ValueGroup};
