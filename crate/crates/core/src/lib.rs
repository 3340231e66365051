//! Exact higher-order analysis toolkit over small Galois fields GF(p^r):
//! classical multivariate polynomials, torus-valued polynomials with depth,
//! bias and Gowers norms, polynomial factors with a constructive
//! regularization loop, equidistribution checks, generalized Reed-Muller
//! list-decoding experiments, a recursive structured-decomposition decider,
//! and proximity-oblivious testers for affine-invariant properties.
//!
//! Everything is sized for desk-scale verification: enumeration budgets are
//! explicit, all field and torus arithmetic is exact, and floating point
//! appears only when a complex exponential is finally summed.

pub mod affine;
pub mod budget;
pub mod decomp;
pub mod error;
pub mod factor;
pub mod field;
pub mod norms;
pub mod poly;
pub mod rm;
pub mod rng;
pub mod torus;

pub use budget::Budget;
pub use error::{Error, Result};
pub use field::{Basis, FieldCtx, FieldElem, VecDomain};
pub use rng::Rng;
