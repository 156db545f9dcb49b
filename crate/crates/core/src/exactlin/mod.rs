//! Exact linear algebra over ℚ: scalars, dense matrices, RREF, nullspaces
//! and the lattice of subspaces.

mod echelon;
mod matrix;
pub mod scalar;
mod subspace;

pub use echelon::{rref, Echelon, RowReducer};
pub use matrix::Matrix;
pub use scalar::{format_scalar, frac, int, one, parse_scalar, zero, Scalar};
pub(crate) use subspace::nullspace_of_echelon;
pub use subspace::{nullspace, solve_homogeneous, unit, Subspace};
