//! Exact Schubert calculus on ordinary and isotropic Grassmannians, tensor
//! invariants of classical groups, and eigencone inequalities.

pub mod coinvariant;
pub mod eigencone;
pub mod error;
pub mod field;
pub mod flag;
pub mod groebner;
pub mod index;
pub mod parse;
pub mod partition;
pub mod poly;
pub mod rep;
pub mod schubert_a;
pub mod verify;
pub mod weight;
pub mod weyl;

pub use error::{Error, Result};
