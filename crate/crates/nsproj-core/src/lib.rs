//! Exact non-Archimedean arithmetic for projective geometry.
//!
//! The scalar type [`HyperNumber`] is a finite series `c1*eps^q1 + c2*eps^q2 + ...`
//! with strictly increasing rational exponents and exact complex-rational
//! coefficients, where `eps` is a fixed positive infinitesimal. Arithmetic is
//! exact up to a configurable number of significant orders (relative
//! truncation, see [`FieldConfig`]). On top of the scalars the crate provides
//! homogeneous vectors and 3x3 matrices together with the "almost" relations
//! of projective geometry over such a field: almost incidence, almost
//! parallelism, almost collinearity, almost equivalence of points, epsilon
//! kernels, cross-ratios and almost cocircularity.
//!
//! No floating point is used anywhere; every predicate is decided from leading
//! exponents and exact rational coefficients.
//!
//! The crate is `no_std` (it requires `alloc`).

#![cfg_attr(not(test), no_std)]

extern crate alloc;

mod conic;
mod crossratio;
mod error;
mod field;
mod format;
mod projective;
mod transform;

pub use conic::{cocircularity_residual, is_almost_cocircular, points_i_j, ConicForm};
pub use crossratio::{bracket2, cross_ratio, cross_ratio_shadow, PlanarPair};
pub use error::Error;
pub use field::{
    squeeze_extend, ComplexRational, FieldConfig, FieldMode, HyperNumber, NumberClass, Rational,
    SqueezeOutcome, Term,
};
pub use format::{ComplexRationalDisplay, ParseSeriesError};
pub use projective::{
    almost_collinear, almost_incident, almost_linearly_dependent, almost_parallel,
    appreciable_determinant, normalized_determinant, projectively_equal, HyperVector, Role,
    VectorClass,
};
pub use transform::{HyperMatrix, MatrixClass};
