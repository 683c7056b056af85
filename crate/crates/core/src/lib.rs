//! Exact relative homological algebra for finite-dimensional bound quiver
//! algebras over prime fields.

pub mod error;
pub mod catalog;
pub mod complexes;
pub mod exactlin;
pub mod formats;
pub mod homalg;
pub mod quiveralg;
pub mod relhom;
pub mod singularity;
pub mod repmod;
pub mod verdict;

pub use error::{Error, Result};
