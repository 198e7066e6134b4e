//! Exact verification toolkit for additive group actions: locally nilpotent
//! derivations, graded invariant kernels, SAGBI subduction, Roberts'
//! invariants on seven-dimensional affine space, SL2 binary forms and
//! separating sets.

pub mod casebook;
pub mod cli;
pub mod derivation;
pub mod error;
pub mod linalg;
pub mod polyring;
pub mod report;
pub mod roberts;
pub mod sagbi;
pub mod separating;
pub mod sl2;

pub use error::{Error, Result};
pub use polyring::{rat, ratio, Monomial, MultiDegree, Polynomial, Rational, VariableSet, WeightSystem};
