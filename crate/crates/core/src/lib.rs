//! Skew standard immaculate tableaux, their 0-Hecke actions, the associated
//! Hecke posets and quasisymmetric characteristics, with exhaustive checkers
//! for the structural identities relating them.

pub mod error;
pub mod shapes;
pub mod hecke;
pub mod poset;
pub mod qsym;
pub mod tableaux;
pub mod verify;

pub use error::{Error, Result};
