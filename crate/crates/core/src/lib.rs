//! Generalized Paley graphs `Γ(k, q) = Cay(F_q, {x^k : x ∈ F_q*})`.
//!
//! The crate is `no_std` and only needs `alloc`. It provides:
//!
//! * [`field`]: arithmetic in `F_{p^m}` with a deterministic modulus, a
//!   primitive element, discrete logarithm tables and the trace map.
//! * [`cyclotomic`]: exact arithmetic in `Z[ζ_p]`, where every eigenvalue of a
//!   GP-graph lives.
//! * [`graph`]: the graphs themselves, their components, symmetrization,
//!   digraph period and a structural label.
//! * [`spectrum`]: exact spectra from additive character sums, the nature of
//!   the spectrum, `μ`, strongly regular parameters and the boundary spectrum.
//! * [`waring`]: Waring and weak Waring numbers as BFS diameters.
//! * [`families`]: divisor censuses, integrality criteria, cyclotomic
//!   polynomials and infinite integral families.

#![no_std]

extern crate alloc;

pub mod arith;
pub mod cyclotomic;
mod error;
pub mod families;
pub mod field;
mod fp_poly;
pub mod graph;
pub mod spectrum;
pub mod waring;

pub use cyclotomic::{Classification, CyclotomicInteger};
pub use error::{Error, Result};
pub use field::{FieldElement, FiniteField, DEFAULT_MAX_Q};
pub use graph::{ComponentDecomposition, GpGraph, StructureLabel};
pub use spectrum::{Nature, SpectrumReport};
pub use waring::WaringResult;
