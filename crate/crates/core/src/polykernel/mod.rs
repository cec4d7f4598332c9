//! Polynomial algebra over the exact domains of [`crate::exactnum`].

mod binary;
mod factored;
mod linalg;
mod mgcd;
mod multipoly;
mod roots;
mod subres;
mod unipoly;

pub use binary::{BinaryForm, P1Point};
pub use factored::{Factor, FactoredForm};
pub use linalg::nullspace;
pub use multipoly::{vars, Monomial, MultiPoly, Vars};
pub use roots::{roots_in_field, FieldRoots};
pub use subres::{determinant, resultant, resultant_formal, subresultant_chain, subresultant_coeff, Subresultants};
pub use unipoly::UniPoly;

