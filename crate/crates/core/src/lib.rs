pub mod cli;
pub mod codes;
pub mod config;
pub mod error;
pub mod fixtures;
pub mod lattice;
pub mod matrix;
pub mod number_ring;
mod serde_int;
pub mod skew;
pub mod spacetime;

pub use error::{Error, Result};
