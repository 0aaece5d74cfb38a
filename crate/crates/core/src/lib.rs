//! Superization maps and `(q,t)`-hook-content formulas for
//! permutations, binary trees, packed words and plane trees.

mod error;

pub mod combinat;
pub mod fqsym;
pub mod hook;
pub mod lincomb;
pub mod ncsf;
pub mod oracle;
pub mod pbt;
pub mod planetree;
pub mod render;
pub mod wqsym;

pub use error::{Error, Result};
pub use qtarith;
