//! Exact computation of left-invariant conformal Killing and Killing k-forms
//! on 2-step nilpotent metric Lie algebras.
//!
//! Everything is computed over arbitrary-precision rationals: an algebra is
//! presented by structure constants and a metric (orthonormal basis or an
//! explicit Gram matrix), the conformal Killing condition is assembled as one
//! exact linear system per degree, and the solution spaces come back as
//! canonical sparse exterior forms together with their codifferentials.
//!
//! Module layout, bottom up:
//!
//! * [`rational`] — the scalar field (`num_rational::BigRational` plus parsing helpers);
//! * [`linalg`] — dense rational matrices, RREF, canonical nullspace bases, inversion;
//! * [`exterior`] — multi-indexed sparse forms, wedge, interior product, Hodge duality,
//!   metric contexts and the derivation extension of skew endomorphisms;
//! * [`nilalg`] — the metric Lie algebra model: validation, center, orthogonal
//!   v ⊕ z splitting and the j-maps;
//! * [`calculus`] — Levi-Civita connection, Lie-algebra differential, codifferential
//!   and the v-degree grading;
//! * [`cksolve`] — the conformal Killing operator, solution spaces and membership checks;
//! * [`catalog`] — named constructions (Heisenberg algebras, trivial extensions,
//!   free 2-step algebras) with their explicit witness forms.

pub mod calculus;
pub mod catalog;
pub mod cksolve;
pub mod error;
pub mod exterior;
pub mod linalg;
pub mod nilalg;
pub mod rational;

pub use error::CkError;
pub use exterior::{Form, Metric, MultiIndex, SkewEndo, Vector};
pub use linalg::{KernelBasis, RatMatrix};
pub use nilalg::{MetricLieAlgebra, Splitting, ValidationReport};
pub use rational::Rational;
