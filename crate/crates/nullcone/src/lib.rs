//! Exact-arithmetic analysis of left-invariant pseudo-Riemannian metrics on
//! Lie groups.
//!
//! Everything is computed over arbitrary-precision rationals; no floating
//! point enters any code path, so equality of tensors, invariants and case
//! labels is decidable and exact.
//!
//! The crate is organised around the pipeline
//!
//! structure constants → curvature/Killing data → boost-weight support →
//! null-cone certificate (or a nonzero invariant refuting membership),
//!
//! plus the constructive frame algorithms for nilpotent and completely
//! solvable algebras and a built-in catalog of regression examples.
//!
//! Indices are 0-based throughout the library; the CLI layer converts to
//! the 1-based labels used in reports.

#![cfg_attr(not(feature = "std"), no_std)]

extern crate alloc;

pub mod algebra;
pub mod boostweight;
pub mod catalog;
pub mod construct;
pub mod error;
pub mod geometry;
pub mod matrix;
pub mod nullcone;
pub mod parampoly;
pub mod scalar;
pub mod tensor;

pub use algebra::{BasisChange, StructureConstants, Subspace};
pub use boostweight::{BoostWeight, WeightVector};
pub use error::Error;
pub use geometry::{CurvaturePack, NullFrameMetric};
pub use matrix::DenseMatrix;
pub use nullcone::{CaseLabel, Certificate, FramePermutation, NecessaryReport};
pub use scalar::Scalar;
pub use tensor::{Slot, Tensor};
