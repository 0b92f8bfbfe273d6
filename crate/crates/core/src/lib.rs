//! Construction and verification of normal bi-Cayley graphs over small
//! finite groups.

pub mod aut;
pub mod cartesian;
pub mod constructions;
pub mod error;
pub mod graph;
pub mod group;
pub mod perm;
pub mod permgroup;
pub mod pipeline;
mod schreier;

pub use error::{Error, Result};
pub use graph::{BiCayleyTriple, Graph};
pub use group::GroupTable;
pub use perm::Permutation;
pub use permgroup::PermGroup;
