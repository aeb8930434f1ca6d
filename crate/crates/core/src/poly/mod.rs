//! Exact sparse multivariate polynomials.

mod monomial;
mod parse;
mod polynomial;
mod ring;

pub use monomial::{monomials_of_degree, Exponents, Monomial, MonomialOrder};
pub use parse::parse_polynomial;
pub use polynomial::Polynomial;
pub use ring::{PolyRing, Ring};
