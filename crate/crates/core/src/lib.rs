pub mod checks;
pub mod error;
pub mod fusion;
pub mod gf;
pub mod group;
pub mod park;
pub mod permrep;
pub mod qd;
pub mod report;
pub mod wreath_centralizer;

pub use error::{Error, Result};
