//! Exact computations with finite-dimensional Hom-Jordan algebras.
//!
//! An algebra is a structure-constant tensor plus a twist matrix over ℚ.
//! On top of that the crate solves for the derivation-type operator spaces
//! (`Der`, `GDer`, `QDer`, `C`, `QC`, `ZDer`) at each power of the twist and
//! checks the structural identities relating them, the embedding of
//! quasiderivations into the degree-two extension, and the behaviour of the
//! centroid under decompositions and quotients.

// Counterexamples are returned by value on the failure path only.
#![allow(clippy::result_large_err)]

pub mod algebra;
pub mod centroid;
pub mod corpus;
pub mod document;
pub mod error;
pub mod exactlin;
pub mod extend;
pub mod solve;
pub mod theorems;
pub mod verdict;

pub use algebra::{Flags, HomAlgebra, QuotientMap};
pub use error::{Error, Result};
pub use exactlin::{Matrix, Scalar, Subspace};
pub use solve::{MapSpace, SpaceKind, SpaceTable};
pub use verdict::{Counterexample, Expectation, Status, Verdict};
