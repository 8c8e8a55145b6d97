//! Finite transformation semigroups, singular wreath products, and
//! machine-checked presentations.

pub mod enumerate;
pub mod error;
pub mod fixtures;
pub mod green;
pub mod io;
pub mod monoid;
pub mod presentation;
pub mod rank;
pub mod semidirect;
pub mod todd_coxeter;
pub mod transformation;
pub mod verify;
pub mod wreath;

pub use error::{Error, Result};
