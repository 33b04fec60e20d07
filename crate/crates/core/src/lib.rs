//! r-Whitney numbers, r-Dowling polynomials and the exact machinery around them.
#![allow(clippy::needless_range_loop)]

pub mod cli;
pub mod egf;
pub mod error;
pub mod grammar;
pub mod identities;
pub mod linop;
pub mod matrix;
pub mod oracle;
pub mod poly;
pub mod rat;
pub mod riordan;
pub mod triangles;

pub use error::{Error, Result};
pub use rat::Rat;
