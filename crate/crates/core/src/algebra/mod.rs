//! Exact and numeric algebra over ℚ(i).

pub mod capprox;
pub mod cnum;
pub mod gcd;
pub mod grat;
pub mod mpoly;
pub mod parse;
pub mod resultant;
pub mod roots;
pub mod upoly;

pub use capprox::CApprox;
pub use gcd::{gcd, is_squarefree, primitive_part, squarefree_part};
pub use grat::GRat;
pub use mpoly::{Exp, MPoly};
pub use parse::{format_poly, parse_poly, parse_scalar};
pub use resultant::{discriminant, discriminant_in, resultant, resultant_in};
pub use roots::{complex_roots, Root};
pub use upoly::{UPoly, UniPoly};
