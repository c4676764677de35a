//! Prime fields, monomials, monomial orders and sparse polynomials.

mod field;
mod monomial;
mod parse;
mod poly;

pub use field::{PrimeField, MAX_PRIME};
pub use monomial::{order_compare, Monomial, MonomialOrder};
pub use parse::{parse_polynomial, poly, var_names, PolyParseError, PolyParseErrorKind};
pub use poly::{poly_pow_frobenius, PolyDisplay, Polynomial};
