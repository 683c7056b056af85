//! Finite-dimensional modules as quiver representations.

mod decompose;
mod ext1;
mod hom;
mod inventory;
mod representation;

pub use decompose::{
    decompose, decompose_with_locality, indecomposable_locality, is_indecomposable,
    is_isomorphic, iso_indecomposables, Locality, EXHAUSTIVE_LIMIT, RANDOM_TRIALS,
};
pub use ext1::{check_short_exact, ext1_dim, Ext1Space};
pub use hom::{hom_basis, hom_dim, HomSpace};
pub(crate) use hom::{unflatten, BlockSystem, Term};
pub use inventory::{enumerate_indecomposables, Completeness, Inventory};
pub use representation::{Cover, Morphism, Representation};
