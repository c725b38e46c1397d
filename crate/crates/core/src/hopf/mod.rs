//! Connected graded bialgebras given by structure constants.

pub mod algebra;
pub mod axioms;
pub mod basis;
pub mod build;
pub mod dual;
pub mod free_product;
pub mod parse;
pub mod structure;

pub use algebra::{format_combination, koszul, Bialgebra, GradedAlgebra, GradedCoalgebra, Product, Shape};
pub use axioms::{check_algebra, check_axioms, check_coalgebra, Axiom, AxiomFailure, AxiomReport};
pub use basis::{Basis, Letter, WordBasis, WordStyle};
pub use build::{FreePresentation, MonomialAlgebraPresentation, MonomialRelation, WordTensor};
pub use dual::{dual_algebra, dual_coalgebra, dualize_hopf};
pub use free_product::free_product;
pub use structure::{
    antipode, antipode_map, check_antipode, diagonal, frobenius, frobenius_module, indecomposables, primitives,
    reduced_coproduct, verschiebung, verschiebung_module, Indecomposables,
};
