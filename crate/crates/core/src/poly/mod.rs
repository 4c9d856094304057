//! Exact rational polynomials over the entries of the symbolic matrix.

mod monomial;
mod order;
mod polynomial;
mod text;
mod var;

use std::cmp::Ordering;

pub use monomial::Monomial;
pub use order::TermOrder;
pub use polynomial::Polynomial;
pub use var::VarId;

/// Arbitrary-precision rational coefficients.
pub type Rational = num_rational::BigRational;

pub fn rational(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}

pub fn compare_monomials(a: &Monomial, b: &Monomial, order: TermOrder) -> Ordering {
    order.cmp(a, b)
}
