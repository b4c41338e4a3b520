//! Exact computational geometry over small finite fields.
//!
//! The crate computes rational points, line-intersection spectra, weight
//! enumerators, projective-equivalence classes and Frobenius/Stöhr-Voloch
//! invariants of plane curves over GF(q) for q up to a configurable cap.
//! Everything is exact: field elements are table-backed indices, linear
//! systems are solved over GF(q) or over exact rationals, and all counts
//! come from exhaustive enumeration.
//!
//! The crate is `no_std` (requires `alloc`); IO, file formats and the CLI
//! live in the companion `curveforge` crate.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod arcs;
pub mod codes;
pub mod curve;
pub mod equiv;
pub mod gf;
pub mod hpoly;
pub mod linsolve;
pub mod projplane;
pub mod svfrob;

pub use gf::{FieldSpec, Felt};
pub use projplane::{PLine, PPoint, Plane, PointSet};
