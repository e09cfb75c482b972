//! Exact multivariate polynomials over the rationals and Groebner bases.

mod groebner;
mod monomial;
mod parse;
mod poly;

pub use groebner::{
    buchberger, buchberger_with, normal_form, normal_form_budgeted, normal_form_with_cofactors,
    spolynomial, Budget, BuchbergerOptions, GroebnerBasis, DEFAULT_BUDGET,
};
pub(crate) use groebner::express_unit;
pub use monomial::{Monomial, MonomialOrder, OrderKind};
pub use parse::parse_polynomial;
pub use poly::{Polynomial, Vars};

/// Arbitrary-precision rational, always kept in lowest terms.
pub type Rational = num_rational::BigRational;

/// Shorthand for an integer-valued rational.
pub fn rat(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

/// Shorthand for `n / d`.
pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}
