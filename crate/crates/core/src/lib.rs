// SPDX-License-Identifier: Apache-2.0

//! Exact bounds on the number of threshold Boolean functions.
//!
//! The threshold functions of `n` variables correspond to the chambers of the
//! central arrangement whose normals are the `2^n` vectors `(1, ±1, ..., ±1)`.
//! This crate counts those chambers (Möbius function of the intersection
//! lattice, and deletion–restriction), evaluates the weighted
//! combinatorial-flag sum that gives a lower bound, computes the matching
//! homology rank of the non-spanning complex, and counts threshold functions
//! directly from their definition.

pub mod arrangement;
pub mod error;
pub mod exactlin;
pub mod flags;
pub mod homology;
pub mod threshold;
pub mod verify;

pub use error::{Error, Result};
pub use num_bigint::{BigInt, BigUint};
pub use num_rational::BigRational;
