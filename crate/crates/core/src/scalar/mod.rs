//! Exact arithmetic in the ground field.

mod domain;
mod field;
mod monomial;
mod param;
mod parse;
mod poly;
mod quantum;

pub use domain::{DomainPoly, Gauss, Split};
pub use field::{is_zero_divisor, FieldElem};
pub use monomial::Monomial;
pub use param::{Param, ParamKind, ParamSpec, ParamTable};
pub use parse::parse_field_elem;
pub use poly::LaurentPoly;
pub use quantum::{
    quantum_binom, quantum_binom_poly, quantum_factorial, quantum_factorial_poly, quantum_int, quantum_int_poly,
};
