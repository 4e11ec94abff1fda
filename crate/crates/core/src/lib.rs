pub mod algebra;
pub mod cli;
pub mod constructions;
pub mod corpus;
pub mod error;
pub mod io;
pub mod linalg;
pub mod module;
pub mod slip;
pub mod suite;
pub mod zpd;

pub use error::{Error, Result};
