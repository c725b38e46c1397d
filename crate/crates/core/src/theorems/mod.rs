//! Decision procedures built on the Hopf algebra core.

mod borel;
mod char0;
mod coalgebra;
mod construct;
mod criteria;
mod lift;
mod morphism;
mod split;

pub use borel::{borel_decomposition, factor_series};
pub use char0::{char0_trivialize, square_zero};
pub use coalgebra::{CoalgebraEnumeration, CoalgebraProblem};
pub use construct::{construct_h, construct_h_from};
pub use criteria::{
    is_primitively_generated, iso_test_hopf, iso_test_j, iso_test_jvee, polynomial_criterion,
    polynomial_criterion_integral, Evidence, IsoVerdict, PolynomialVerdict, PrimitivelyGenerated,
};
pub use lift::find_primitive_lift;
pub use morphism::{hopf_morphism_search, q_by_labels, HopfMorphismWitness, DEFAULT_BUDGET};
pub use split::{is_split, split_with, SplitnessCertificate};
