pub mod birman_menasco;
pub mod braid3;
pub mod cli;
pub mod counts;
pub mod error;
pub mod laurent;
pub mod quadforms;
pub mod sl2z;

pub use error::{Error, Result};
