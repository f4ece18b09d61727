//! Finite rings and the residuated lattice of their two-sided ideals.

pub mod algebra;
pub mod classify;
pub mod construct;
pub mod elemset;
pub mod ideal;
pub mod props;
pub mod report;
pub mod ring;
pub mod spec;

pub use algebra::{AxiomReport, FiniteAlgebra};
pub use construct::{
    direct_product, matrix_ideal, matrix_ring, quotient, zmod, ConstructError, DirectProduct,
    MatrixRing, QuotientRing,
};
pub use elemset::ElemSet;
pub use ideal::{Ideal, IdealLattice};
pub use report::{Document, Report};
pub use ring::{Elem, FiniteRing, RingValidationError};
pub use spec::{RingSpec, SpecError};
