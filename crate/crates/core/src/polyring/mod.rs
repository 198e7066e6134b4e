//! Exact sparse multivariate polynomials over the rationals.

mod monomial;
mod parse;
mod polynomial;
pub(crate) mod variables;
mod weights;

pub use monomial::Monomial;
pub use polynomial::{ArithOp, Homogeneity, Polynomial};
pub use variables::VariableSet;
pub use weights::{MultiDegree, WeightSystem};

/// Reduced fraction of arbitrary-precision integers with positive denominator.
pub type Rational = num_rational::BigRational;

/// Shorthand for an integer-valued [`Rational`].
pub fn rat(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

/// Shorthand for `n / d`; panics on `d == 0`.
pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}
