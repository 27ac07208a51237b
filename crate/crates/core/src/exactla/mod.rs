//! Exact rational linear algebra: the substrate every other module computes in.

mod matrix;
mod scalar;
mod subspace;

pub use matrix::{
    axpy, is_zero_vec, rref, rref_with_pivots, unit_vec, vec_add, vec_concat, vec_neg, vec_scale,
    vec_sub, zero_vec, Matrix, Vector,
};
pub use scalar::{ParseScalarError, Scalar};
pub use subspace::{kernel, pullback_subspace, quotient, QuotientPresentation, Subspace};
