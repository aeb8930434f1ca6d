//! Exact computations on secant varieties of curves: polynomial arithmetic,
//! Gröbner bases, Hilbert data, graded Betti tables via Koszul homology,
//! determinantal constructions and closed-form predictions to diff against.

pub mod determinantal;
pub mod error;
pub mod field;
pub mod fixture;
pub mod groebner;
pub mod hilbert;
pub mod io;
pub mod linalg;
pub mod poly;
pub mod predictions;
pub mod quotient;
pub mod resolve;
pub mod secant;

pub use error::{AlgebraError, Result};
pub use field::{Field, PrimeField, Rationals};
pub use poly::{parse_polynomial, Monomial, MonomialOrder, PolyRing, Polynomial, Ring};
