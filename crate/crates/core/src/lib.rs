//! Exact-arithmetic toolkit for Newton-polyhedron invariants of hypersurface
//! singularities: monodromy zeta functions, Milnor numbers, toric chart
//! pullbacks, resolution-graph intersection data and first homology of the
//! plumbed link manifold.
//!
//! Everything is computed over the rationals or a single simple extension
//! `Q(a)`; there is no floating point anywhere. The crate is `no_std`
//! (`alloc` only); IO, file formats and the command line live in the
//! companion `nzeta-cli` crate.

#![no_std]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod almost;
pub mod biv;
pub mod hull;
pub mod intmat;
pub mod modp;
pub mod newton;
pub mod plumbing;
pub mod poly;
pub mod scalar;
pub mod toric;
pub mod upoly;
pub mod zeta;

pub use poly::{ExponentVector, MultiPolynomial, PolyError};
pub use scalar::{Extension, Scalar, ScalarError};
pub use zeta::CyclotomicProduct;
