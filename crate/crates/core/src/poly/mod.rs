//! Two-block polynomial rings `R` and their divided-power duals `S`, with the
//! contraction action of `R` on `S`.

mod linear_form;
mod monomial;
mod parse;
mod polynomial;
mod vars;

pub use linear_form::LinearForm;
pub use monomial::{Monomial, MonomialBasis};
pub use parse::{parse_linear_form, parse_polynomial};
pub(crate) use polynomial::same_vars;
pub use polynomial::Polynomial;
pub use vars::{exponent_tuples, Side, VariableKind, VariableSet};
