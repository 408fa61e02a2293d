//! Hom-Lie algebras, invariant forms, representations and Hom-associative
//! algebras, together with every axiom check.

mod algebra;
mod checks;
mod form;
mod rep;

pub use algebra::{AssocAlgebra, HomAlgebra};
pub use checks::{
    check_coadjoint_condition, check_hom_associative, check_hom_lie, check_hom_quadratic, check_morphism,
    check_quadratic, check_representation, check_representation_isomorphism, classical_jacobi_witness,
    classical_jacobiator, classify_alpha, coadjoint_witness, commutator_hom_lie, endomorphism_witness,
    hom_associativity_witness, hom_quadratic_witness, is_lie_bracket, is_multiplicative, jacobiator,
    morphism_witness, multiplicativity_witness, representation_witness, AlphaClass, AlphaTag, HomLieReport,
    JacobiWitness, MorphismWitness, QuadraticReport,
};
pub use form::{BilinearForm, QuadraticHomAlgebra};
pub use rep::Representation;

use crate::exactlin::LinAlgError;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HomAlgError {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("index {index} out of range for dimension {dim}")]
    IndexOutOfRange { index: usize, dim: usize },
    #[error("bracket is not skew-symmetric at ({i}, {j})")]
    NotSkew { i: usize, j: usize },
    #[error("bracket ({i}, {j}) given twice")]
    DuplicateBracket { i: usize, j: usize },
    #[error("Gram matrix is not symmetric")]
    NotSymmetric,
    #[error("change of basis is singular")]
    Singular,
    #[error("form is not a quadratic structure: {0:?}")]
    NotQuadratic(Box<QuadraticReport>),
    #[error("product is not Hom-associative at {triple:?}")]
    NotHomAssociative { triple: (usize, usize, usize) },
    #[error(transparent)]
    LinAlg(#[from] LinAlgError),
}
